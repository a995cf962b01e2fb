#include <dodeca/permutation.hpp>

#include <gtest/gtest.h>

#include <random>

using dodeca::Parity;
using dodeca::Permutation;

namespace {

template <std::size_t N>
Permutation<N> random_permutation(std::mt19937& rng)
{
    std::vector<int> img(N);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation<N>(img);
}

} // namespace

TEST(Permutation, RejectsNonBijections)
{
    const std::vector<int> repeated{0, 0, 1, 2, 3};
    EXPECT_THROW(Permutation<5>{repeated}, std::invalid_argument);
    const std::vector<int> short_input{0, 1, 2};
    EXPECT_THROW(Permutation<5>{short_input}, std::invalid_argument);
    const std::vector<int> out_of_range{0, 1, 2, 3, 5};
    EXPECT_THROW(Permutation<5>{out_of_range}, std::invalid_argument);
}

TEST(Permutation, CompositionIsFunctionComposition)
{
    const auto p = Permutation<5>::from_cycles({{0, 1}});
    const auto q = Permutation<5>::from_cycles({{1, 2}});
    // (p*q)(1) = p(q(1)) = p(2) = 2
    EXPECT_EQ((p * q)(1), 2);
    EXPECT_EQ((p * q)(2), 0);
    EXPECT_EQ((p * q)(0), 1);
}

TEST(Permutation, CyclesParityOrder)
{
    const auto p = Permutation<5>::from_cycles({{0, 1, 2}, {3, 4}});
    EXPECT_EQ(p.cycles(), (std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}}));
    EXPECT_EQ(p.parity(), Parity::Odd);
    EXPECT_EQ(p.order(), 6u);
    EXPECT_EQ(Permutation<5>::identity().parity(), Parity::Even);
    EXPECT_EQ(Permutation<5>::from_cycles({{0, 1, 2, 3, 4}}).parity(), Parity::Even);
    EXPECT_THROW(Permutation<5>::from_cycles({{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST(Permutation, GroupAxiomsOnRandomElements)
{
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = random_permutation<20>(rng);
        const auto q = random_permutation<20>(rng);
        const auto r = random_permutation<20>(rng);
        EXPECT_TRUE((p * p.inverse()).is_identity());
        EXPECT_TRUE((p.inverse() * p).is_identity());
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * Permutation<20>::identity(), p);
        EXPECT_EQ((p * q).sign(), p.sign() * q.sign());
    }
}

TEST(Permutation, AllPermutationsOfFive)
{
    const auto all = dodeca::all_permutations<5>();
    ASSERT_EQ(all.size(), 120u);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    const auto even = std::count_if(all.begin(), all.end(), [](const auto& p) { return p.parity() == Parity::Even; });
    EXPECT_EQ(even, 60);
}
