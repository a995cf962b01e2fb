#ifndef DODECA_PERMUTATION_HPP
#define DODECA_PERMUTATION_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dodeca {

enum class Parity : std::uint8_t { Even, Odd };

constexpr Parity operator*(Parity a, Parity b) noexcept
{
    return a == b ? Parity::Even : Parity::Odd;
}

constexpr int sign_of(Parity p) noexcept { return p == Parity::Even ? 1 : -1; }

/// A bijection on {0, ..., N-1}, stored as an image array: `images()[i]` is
/// the image of i. Composition follows function notation, so `(p * q)(i)`
/// is `p(q(i))`.
template <std::size_t N>
class Permutation {
public:
    using Images = std::array<std::uint8_t, N>;

    constexpr Permutation() noexcept { std::iota(images_.begin(), images_.end(), std::uint8_t{0}); }

    /// Throws std::invalid_argument unless `images` is a bijection.
    explicit Permutation(std::span<const int> images)
    {
        if (images.size() != N)
            throw std::invalid_argument("permutation: expected " + std::to_string(N) + " images, got " +
                                        std::to_string(images.size()));
        std::array<bool, N> seen{};
        for (std::size_t i = 0; i < N; ++i) {
            const int img = images[i];
            if (img < 0 || static_cast<std::size_t>(img) >= N || seen[static_cast<std::size_t>(img)])
                throw std::invalid_argument("permutation: image array is not a bijection");
            seen[static_cast<std::size_t>(img)] = true;
            images_[i] = static_cast<std::uint8_t>(img);
        }
    }

    static constexpr Permutation identity() noexcept { return {}; }

    /// Builds a permutation from disjoint cycles over {0..N-1}.
    static Permutation from_cycles(const std::vector<std::vector<int>>& cycles)
    {
        std::vector<int> img(N);
        std::iota(img.begin(), img.end(), 0);
        std::array<bool, N> touched{};
        for (const auto& cycle : cycles) {
            for (std::size_t k = 0; k < cycle.size(); ++k) {
                const int from = cycle[k];
                if (from < 0 || static_cast<std::size_t>(from) >= N)
                    throw std::invalid_argument("permutation: cycle entry out of range");
                if (touched[static_cast<std::size_t>(from)])
                    throw std::invalid_argument("permutation: cycles are not disjoint");
                touched[static_cast<std::size_t>(from)] = true;
                img[static_cast<std::size_t>(from)] = cycle[(k + 1) % cycle.size()];
            }
        }
        return Permutation(std::span<const int>(img));
    }

    static constexpr std::size_t degree() noexcept { return N; }

    constexpr int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    constexpr const Images& images() const noexcept { return images_; }

    constexpr Permutation operator*(const Permutation& rhs) const noexcept
    {
        Permutation out;
        for (std::size_t i = 0; i < N; ++i)
            out.images_[i] = images_[rhs.images_[i]];
        return out;
    }

    constexpr Permutation inverse() const noexcept
    {
        Permutation out;
        for (std::size_t i = 0; i < N; ++i)
            out.images_[images_[i]] = static_cast<std::uint8_t>(i);
        return out;
    }

    constexpr bool is_identity() const noexcept { return *this == Permutation{}; }

    /// Disjoint cycles of length >= 2, each starting at its smallest point,
    /// ordered by that point.
    std::vector<std::vector<int>> cycles() const
    {
        std::vector<std::vector<int>> out;
        std::array<bool, N> seen{};
        for (std::size_t start = 0; start < N; ++start) {
            if (seen[start] || images_[start] == start)
                continue;
            std::vector<int> cycle;
            for (std::size_t i = start; !seen[i]; i = images_[i]) {
                seen[i] = true;
                cycle.push_back(static_cast<int>(i));
            }
            out.push_back(std::move(cycle));
        }
        return out;
    }

    // parity from cycle type: a k-cycle is a product of k-1 transpositions
    Parity parity() const
    {
        std::size_t transpositions = 0;
        for (const auto& c : cycles())
            transpositions += c.size() - 1;
        return transpositions % 2 == 0 ? Parity::Even : Parity::Odd;
    }

    int sign() const { return sign_of(parity()); }

    /// Smallest k >= 1 with p^k = identity (lcm of cycle lengths).
    std::size_t order() const
    {
        std::size_t result = 1;
        for (const auto& c : cycles())
            result = std::lcm(result, c.size());
        return result;
    }

    constexpr auto operator<=>(const Permutation&) const = default;

private:
    Images images_{};
};

/// Every permutation of degree N, in lexicographic order of image arrays.
template <std::size_t N>
std::vector<Permutation<N>> all_permutations()
{
    std::vector<int> img(N);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation<N>> out;
    do {
        out.emplace_back(std::span<const int>(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace dodeca

#endif // DODECA_PERMUTATION_HPP
