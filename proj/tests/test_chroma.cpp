#include <dodeca/chroma.hpp>
#include <dodeca/compound.hpp>

#include <gtest/gtest.h>

#include <chrono>
#include <random>
#include <set>

using namespace dodeca;

namespace {

const PolytopeModel& model() { return canonical_model(); }

const std::vector<Colouring>& all_colourings()
{
    static const auto all = enumerate_all(model());
    return all;
}

// Plain backtracking with no forward checking: a face is tested only once
// all five of its vertices carry a colour.
std::vector<Colouring> naive_enumeration()
{
    std::vector<Colouring> out;
    std::array<int, kVertexCount> c{};
    auto face_ok_upto = [&](VertexId v) {
        for (FaceId f : model().faces_of(v)) {
            const auto& face = model().faces()[f];
            if (*std::max_element(face.begin(), face.end()) != v)
                continue;
            std::set<int> colours;
            for (VertexId w : face)
                colours.insert(c[w]);
            if (colours.size() != 5)
                return false;
        }
        return true;
    };
    auto extend = [&](auto&& self, VertexId v) -> void {
        if (v == kVertexCount) {
            out.emplace_back(c);
            return;
        }
        for (int colour = 1; colour <= 5; ++colour) {
            c[v] = colour;
            if (face_ok_upto(v))
                self(self, v + 1);
        }
    };
    extend(extend, 0);
    return out;
}

ColourSymmetry symmetry(std::vector<std::vector<int>> cycles, int sign)
{
    return {ColourPermutation::from_cycles(cycles), sign};
}

} // namespace

TEST(Colouring, RejectsMalformedInput)
{
    const std::vector<int> short_input(19, 1);
    EXPECT_THROW(Colouring{short_input}, std::invalid_argument);
    std::vector<int> zero(20, 1);
    zero[3] = 0;
    EXPECT_THROW(Colouring{zero}, std::invalid_argument);
    std::vector<int> six(20, 1);
    six[19] = 6;
    EXPECT_THROW(Colouring{six}, std::invalid_argument);
}

TEST(IsValid, Examples)
{
    EXPECT_FALSE(is_valid(model(), Colouring::constant(1)));
    EXPECT_EQ(first_violated_face(model(), Colouring::constant(1)), 0);

    const auto [a, b] = seed_colourings(model());
    EXPECT_TRUE(is_valid(model(), a));
    EXPECT_TRUE(is_valid(model(), b));

    // recolour one vertex of face 0 with the colour of another vertex on it
    const auto& f0 = model().faces()[0];
    const Colouring broken = a.with(f0[0], a[f0[2]]);
    EXPECT_FALSE(is_valid(model(), broken));
    EXPECT_EQ(first_violated_face(model(), broken), 0);
}

TEST(EnumerateAll, CountSoundnessOrder)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto all = enumerate_all(model());
    const auto elapsed = std::chrono::steady_clock::now() - t0;
    ASSERT_EQ(all.size(), 240u);
    EXPECT_LT(elapsed, std::chrono::seconds(1));
    for (const auto& c : all)
        EXPECT_TRUE(is_valid(model(), c));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::set<Colouring>(all.begin(), all.end()).size(), 240u);
}

TEST(EnumerateAll, MatchesNaiveBacktracking)
{
    EXPECT_EQ(naive_enumeration(), all_colourings());
}

TEST(ProofEnumeration, TwoCompletionsPerFrameAndSameSet)
{
    const auto proof = propagate_proof_enumeration(model());
    ASSERT_EQ(proof.completions_per_frame.size(), 120u);
    for (int n : proof.completions_per_frame)
        EXPECT_EQ(n, 2);
    EXPECT_EQ(proof.colourings.size(), 240u);
    EXPECT_EQ(proof.colourings, all_colourings());
}

TEST(ProofEnumeration, FrameIsRespected)
{
    const std::array<int, 5> frame{3, 5, 1, 2, 4};
    const auto c1 = model().ring(Latitude::C1);
    for (int branch : {0, 1}) {
        const Colouring c = propagate_frame(model(), frame, branch);
        EXPECT_EQ(c[0], 3);
        EXPECT_EQ(c[c1[0]], 5);
        EXPECT_EQ(c[c1[1]], 1);
        EXPECT_EQ(c[c1[2]], 2);
        EXPECT_TRUE(is_valid(model(), c));
    }
    EXPECT_NE(propagate_frame(model(), frame, 0), propagate_frame(model(), frame, 1));
    EXPECT_THROW(propagate_frame(model(), frame, 2), std::invalid_argument);
    EXPECT_THROW(propagate_frame(model(), {1, 1, 2, 3, 4}, 0), std::invalid_argument);
}

TEST(Seeds, TwoDistinctValidRepresentatives)
{
    const auto [a, b] = seed_colourings(model());
    EXPECT_NE(a, b);
    const auto c1 = model().ring(Latitude::C1);
    for (const auto& s : {a, b}) {
        EXPECT_EQ(s[0], 1);
        EXPECT_EQ(s[c1[0]], 2);
        EXPECT_EQ(s[c1[1]], 3);
        EXPECT_EQ(s[c1[2]], 4);
    }
    EXPECT_EQ(classify_colouring(model(), a).compound, CompoundLabel::A);
    EXPECT_EQ(classify_colouring(model(), b).compound, CompoundLabel::B);
}

TEST(Seeds, ColourClassesExchangedByAntipodalMap)
{
    const auto [a, b] = seed_colourings(model());
    std::set<std::set<VertexId>> classes_a, classes_b;
    for (const auto& cls : colour_classes(a).classes) {
        std::set<VertexId> image;
        for (VertexId v : cls)
            image.insert(model().antipode(v));
        classes_a.insert(image);
    }
    for (const auto& cls : colour_classes(b).classes)
        classes_b.insert(std::set<VertexId>(cls.begin(), cls.end()));
    EXPECT_EQ(classes_a, classes_b);
}

TEST(Act, IdentityAndValidity)
{
    for (const auto& c : all_colourings())
        EXPECT_EQ(act(ColourSymmetry::identity(), c, model()), c);
    for (const auto& g : colour_group())
        EXPECT_TRUE(is_valid(model(), act(g, all_colourings()[17], model())));
    EXPECT_THROW(act(ColourSymmetry::identity(), Colouring::constant(2), model()), std::invalid_argument);
}

TEST(Act, RelabelAndAntipodalSwap)
{
    const auto [a, b] = seed_colourings(model());
    const Colouring swapped = act(symmetry({{0, 1}}, 1), a, model());
    for (VertexId v = 0; v < kVertexCount; ++v) {
        const int expected = a[v] == 1 ? 2 : a[v] == 2 ? 1 : a[v];
        EXPECT_EQ(swapped[v], expected);
    }
    const Colouring mirrored = act(symmetry({}, -1), a, model());
    for (VertexId v = 0; v < kVertexCount; ++v)
        EXPECT_EQ(mirrored[v], a[model().antipode(v)]);
}

TEST(Act, ActionAxiomOnRandomTriples)
{
    const auto group = colour_group();
    std::mt19937 rng(314159);
    std::uniform_int_distribution<std::size_t> pick_g(0, group.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_c(0, all_colourings().size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        const auto& g = group[pick_g(rng)];
        const auto& h = group[pick_g(rng)];
        const auto& c = all_colourings()[pick_c(rng)];
        EXPECT_EQ(act(g, act(h, c, model()), model()), act(g * h, c, model()));
    }
}

TEST(Act, OrbitOfAnyColouringIsEverything)
{
    const auto group = colour_group();
    for (std::size_t i = 0; i < all_colourings().size(); i += 23) {
        std::set<Colouring> orbit;
        for (const auto& g : group)
            orbit.insert(act(g, all_colourings()[i], model()));
        EXPECT_EQ(std::vector<Colouring>(orbit.begin(), orbit.end()), all_colourings());
    }
}

TEST(OrbitPartition, NamedSubgroups)
{
    const std::vector<ColourSymmetry> trivial{ColourSymmetry::identity()};
    EXPECT_EQ(orbit_partition(all_colourings(), trivial, model()).size(), 240u);

    std::vector<ColourSymmetry> a5;
    for (const auto& g : colour_group())
        if (g.sign == 1 && g.colour_perm.parity() == Parity::Even)
            a5.push_back(g);
    ASSERT_EQ(a5.size(), 60u);
    const auto a5_orbits = orbit_partition(all_colourings(), a5, model());
    EXPECT_EQ(a5_orbits.size(), 4u);
    for (const auto& orbit : a5_orbits)
        EXPECT_EQ(orbit.size(), 60u);

    const auto full = orbit_partition(all_colourings(), colour_group(), model());
    ASSERT_EQ(full.size(), 1u);
    EXPECT_EQ(full.front(), all_colourings());
}

TEST(OrbitPartition, OrbitCountTimesOrderIs240ForRandomSubgroups)
{
    const auto group = colour_group();
    std::mt19937 rng(2718);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int trial = 0; trial < 25; ++trial) {
        const std::vector<ColourSymmetry> gens{group[pick(rng)], group[pick(rng)]};
        const auto h = generate_subgroup(gens);
        const auto orbits = orbit_partition(all_colourings(), h, model());
        EXPECT_EQ(orbits.size() * h.size(), 240u);
        for (const auto& orbit : orbits)
            EXPECT_EQ(orbit.size(), h.size());
        for (std::size_t k = 1; k < orbits.size(); ++k)
            EXPECT_LT(orbits[k - 1].front(), orbits[k].front());
    }
}

TEST(OrbitPartition, RejectsNonSubgroupAndOpenSets)
{
    const std::vector<ColourSymmetry> not_closed{ColourSymmetry::identity(), symmetry({{0, 1, 2}}, 1)};
    EXPECT_THROW(orbit_partition(all_colourings(), not_closed, model()), std::invalid_argument);

    const std::vector<Colouring> one{all_colourings().front()};
    EXPECT_THROW(orbit_partition(one, colour_group(), model()), std::invalid_argument);
}

TEST(Stabilizer, TrivialForEveryColouring)
{
    const auto group = colour_group();
    for (const auto& c : all_colourings()) {
        const auto stab = stabilizer(c, group, model());
        ASSERT_EQ(stab.size(), 1u);
        EXPECT_TRUE(stab.front().is_identity());
    }
}
