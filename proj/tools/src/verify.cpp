#include <dodeca_cli/commands.hpp>

#include <dodeca/compound.hpp>
#include <dodeca/io.hpp>

#include <Eigen/Geometry>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dodeca::cli {

namespace {

class Report {
public:
    void add(std::string name, bool passed, std::string measured)
    {
        checks_.push_back({std::move(name), passed, std::move(measured)});
    }

    // runs `body`, turning an escaped exception into a failed check
    template <class F>
    void guarded(const std::string& name, F&& body)
    {
        try {
            body();
        } catch (const std::exception& e) {
            add(name, false, std::string("exception: ") + e.what());
        }
    }

    std::vector<Check> take() { return std::move(checks_); }

private:
    std::vector<Check> checks_;
};

template <class Range>
std::string join(const Range& values, const char* sep = " ")
{
    std::ostringstream out;
    bool first = true;
    for (const auto& v : values) {
        if (!first)
            out << sep;
        out << v;
        first = false;
    }
    return out.str();
}

ColourSymmetry relabelling(std::vector<std::vector<int>> cycles, int sign = 1)
{
    return {ColourPermutation::from_cycles(cycles), sign};
}

Tetrahedron image_of(const VertexPermutation& g, const Tetrahedron& t)
{
    Tetrahedron out;
    for (std::size_t k = 0; k < 4; ++k)
        out.members[k] = g(t.members[k]);
    std::sort(out.members.begin(), out.members.end());
    return out;
}

std::set<Tetrahedron> as_set(const Compound& c) { return {c.tetrahedra.begin(), c.tetrahedra.end()}; }

template <class T>
std::size_t orbit_size(const std::vector<VertexPermutation>& group, const T& start,
                       T (*apply)(const VertexPermutation&, const T&))
{
    std::set<T> seen;
    for (const auto& g : group)
        seen.insert(apply(g, start));
    return seen.size();
}

Edge edge_image(const VertexPermutation& g, const Edge& e)
{
    const VertexId a = g(e.first), b = g(e.second);
    return {std::min(a, b), std::max(a, b)};
}

Face face_image(const VertexPermutation& g, const Face& f)
{
    Face out;
    for (std::size_t k = 0; k < 5; ++k)
        out[k] = g(f[k]);
    std::sort(out.begin(), out.end());
    return out;
}

VertexId vertex_image(const VertexPermutation& g, const VertexId& v) { return g(v); }

void polytope_checks(Report& r, const PolytopeModel& m)
{
    const int euler = static_cast<int>(m.vertices().size()) - static_cast<int>(m.edges().size()) +
                      static_cast<int>(m.faces().size());
    r.add("Euler check", euler == 2,
          std::to_string(m.vertices().size()) + " - " + std::to_string(m.edges().size()) + " + " +
              std::to_string(m.faces().size()) + " = " + std::to_string(euler));

    std::vector<std::size_t> sizes;
    for (int k = 0; k < 6; ++k)
        sizes.push_back(m.ring(static_cast<Latitude>(k)).size());
    r.add("latitude circle sizes", std::equal(sizes.begin(), sizes.end(), kLatitudeSizes.begin()), join(sizes));

    double worst = 0.0;
    for (VertexId v = 0; v < kVertexCount; ++v)
        worst = std::max(worst, std::abs((m.position(v) - m.position(m.antipode(v))).norm() - 2.0));
    r.add("distance from every vertex to its antipode is 2", worst <= kTolerance,
          "max deviation " + format_double(worst));

    int outward = 0;
    for (const Face& f : m.faces()) {
        Vec3 centre = Vec3::Zero();
        for (VertexId v : f)
            centre += m.position(v);
        const Vec3 normal = (m.position(f[1]) - m.position(f[0])).cross(m.position(f[2]) - m.position(f[1]));
        outward += normal.dot(centre) > 0.0;
    }
    r.add("faces are positively oriented", outward == kFaceCount,
          std::to_string(outward) + "/" + std::to_string(kFaceCount));

    std::set<VertexId> dual_images;
    for (int i = 0; i < kIcosaFaceCount; ++i)
        dual_images.insert(m.dual_face_of(i));
    r.add("icosahedron faces correspond to vertices", dual_images.size() == kVertexCount,
          std::to_string(dual_images.size()) + " distinct vertices");

    std::vector<std::string> spectrum;
    int pairs = 0;
    for (const auto& d : distance_spectrum(m)) {
        spectrum.push_back(format_double(d.distance) + "x" + std::to_string(d.multiplicity));
        pairs += d.multiplicity;
    }
    const double edge = tetrahedron_edge(m);
    r.add("distance spectrum", spectrum.size() == 5 && pairs == 190 && std::abs(edge - std::sqrt(8.0 / 3.0)) <= kTolerance,
          join(spectrum) + "; tetrahedron edge " + format_double(edge));
}

void symmetry_checks(Report& r, const PolytopeModel& m)
{
    const auto rotations = rotation_group(m);
    const auto full = full_group(m);
    r.add("|I| = 60", rotations.size() == 60, std::to_string(rotations.size()));
    r.add("|I_h| = 120", full.size() == 120, std::to_string(full.size()));

    const auto alt = alternative_rotation_generators(m);
    r.add("rotation group is independent of the generators", rotation_group(m, alt) == rotations,
          "alternative generators give " + std::to_string(rotation_group(m, alt).size()) + " elements");

    const auto nv = orbit_size<VertexId>(rotations, 0, vertex_image);
    const auto ne = orbit_size<Edge>(rotations, m.edges()[0], edge_image);
    Face f0 = m.faces()[0];
    std::sort(f0.begin(), f0.end());
    const auto nf = orbit_size<Face>(rotations, f0, face_image);
    r.add("rotation_group acts transitively on the 20 vertices, on the 30 edges, and on the 12 faces",
          nv == 20 && ne == 30 && nf == 12,
          "orbits " + std::to_string(nv) + "/" + std::to_string(ne) + "/" + std::to_string(nf));

    int sv = 0, se = 0, sf = 0;
    for (const auto& g : rotations) {
        sv += g(0) == 0;
        se += edge_image(g, m.edges()[0]) == m.edges()[0];
        sf += face_image(g, f0) == f0;
    }
    r.add("Stabilizer sizes under rotation_group", sv == 3 && se == 2 && sf == 5,
          "vertex " + std::to_string(sv) + ", edge " + std::to_string(se) + ", face " + std::to_string(sf));

    bool commutes = true;
    for (const auto& g : full)
        for (VertexId v = 0; v < kVertexCount; ++v)
            commutes = commutes && g(m.antipode(v)) == m.antipode(g(v));
    r.add("Every element of full_group preserves the antipode map", commutes, std::to_string(full.size()) + " elements");

    r.guarded("The kernel of tetra_action is trivial", [&] {
        const auto& tetrahedra = compounds(m).first.tetrahedra;
        std::set<Permutation<5>> images;
        int even = 0, kernel = 0;
        for (const auto& g : rotations) {
            const auto p = tetra_action(g, tetrahedra);
            images.insert(p);
            even += p.parity() == Parity::Even;
            kernel += p.is_identity();
        }
        r.add("The kernel of tetra_action is trivial", kernel == 1 && images.size() == 60 && even == 60,
              "kernel " + std::to_string(kernel) + ", image " + std::to_string(images.size()) + ", even " +
                  std::to_string(even));
    });
}

void chroma_checks(Report& r, const PolytopeModel& m, const std::vector<Colouring>& all)
{
    const bool all_valid = std::all_of(all.begin(), all.end(), [&](const Colouring& c) { return is_valid(m, c); });
    r.add("valid colourings", all.size() == 240 && all_valid, std::to_string(all.size()));

    r.guarded("enumerate_all and propagate_proof_enumeration return identical sets", [&] {
        const auto proof = propagate_proof_enumeration(m);
        r.add("enumerate_all and propagate_proof_enumeration return identical sets", proof.colourings == all,
              std::to_string(proof.colourings.size()) + " from propagation");
        const auto [lo, hi] = std::minmax_element(proof.completions_per_frame.begin(), proof.completions_per_frame.end());
        r.add("completions per frame", proof.completions_per_frame.size() == 120 && *lo == 2 && *hi == 2,
              std::to_string(proof.completions_per_frame.size()) + " frames, " + std::to_string(*lo) + ".." +
                  std::to_string(*hi));
    });

    const auto G = colour_group();
    r.guarded("Simple transitivity", [&] {
        std::set<Colouring> orbit;
        for (const auto& g : G)
            orbit.insert(act(g, all.front(), m));
        std::size_t largest = 0;
        for (const auto& c : all)
            largest = std::max(largest, stabilizer(c, G, m).size());
        r.add("Simple transitivity", orbit.size() == 240 && largest == 1,
              "orbit " + std::to_string(orbit.size()) + ", largest stabilizer " + std::to_string(largest));
    });

    r.guarded("orbit counts", [&] {
        const std::vector<std::pair<std::string, std::vector<ColourSymmetry>>> subgroups{
            {"trivial", {}},
            {"A5 x {1}", {relabelling({{0, 1, 2}}), relabelling({{0, 1, 2, 3, 4}})}},
            {"S5 x {1,-1}", {relabelling({{0, 1}}), relabelling({{0, 1, 2, 3, 4}}), relabelling({}, -1)}},
            {"{1} x {1,-1}", {relabelling({}, -1)}},
            {"<(1 2 3 4 5)>", {relabelling({{0, 1, 2, 3, 4}})}},
            {"<(1 2)(3 4), (1 3)(2 4)> x {1,-1}",
             {relabelling({{0, 1}, {2, 3}}), relabelling({{0, 2}, {1, 3}}), relabelling({}, -1)}},
            {"<(1 2),-1>", {relabelling({{0, 1}}, -1)}},
        };
        bool formula = true;
        std::vector<std::string> products;
        for (const auto& [name, gens] : subgroups) {
            const auto H = generate_subgroup(gens);
            const auto orbits = orbit_partition(all, H, m);
            formula = formula && orbits.size() * H.size() == 240;
            products.push_back(std::to_string(orbits.size()) + "x" + std::to_string(H.size()));
            if (name == "trivial" || name == "A5 x {1}" || name == "S5 x {1,-1}") {
                const std::size_t expected = name == "trivial" ? 240 : name == "A5 x {1}" ? 4 : 1;
                r.add("orbits under " + name, orbits.size() == expected, std::to_string(orbits.size()));
            }
        }
        r.add("orbit count x |H| = 240", formula, join(products));
    });

    int rule_hits = 0;
    for (const auto& c : all)
        for (VertexId v = 0; v < kVertexCount; ++v)
            rule_hits += predicted_antipode_colour(m, c, v) == c[m.antipode(v)];
    r.add("Antipodal colour rule", rule_hits == 240 * kVertexCount, std::to_string(rule_hits) + " vertex checks");

    const ColourSymmetry minus_one = relabelling({}, -1);
    const ColourSymmetry swap12 = relabelling({{0, 1}});
    const ColourSymmetry cycle3 = relabelling({{0, 1, 2}});
    int even = 0, odd = 0, mixed = 0, odd_flips = 0, even_keeps = 0, sign_keeps = 0;
    int distinct = 0, opposite_inverse = 0;
    for (const auto& c : all) {
        const auto p = colouring_parity(m, c);
        if (!p) {
            ++mixed;
            continue;
        }
        (*p == Parity::Even ? even : odd)++;
        odd_flips += colouring_parity(m, act(swap12, c, m)) == (*p * Parity::Odd);
        even_keeps += colouring_parity(m, act(cycle3, c, m)) == *p;
        sign_keeps += colouring_parity(m, act(minus_one, c, m)) == *p;

        const auto sig = face_parity_signature(m, c);
        std::set<std::array<int, 5>> orders;
        bool inverse = true;
        for (const auto& fp : sig) {
            orders.insert(fp.cyclic_order);
            inverse = inverse && sig[m.opposite_face(fp.face)].cyclic_order == inverse_cyclic_order(fp.cyclic_order);
        }
        distinct += orders.size() == kFaceCount;
        opposite_inverse += inverse;
    }
    r.add("P2: the 12 face cyclic orders share one parity and are pairwise distinct",
          mixed == 0 && distinct == 240, std::to_string(240 - mixed) + " uniform, " + std::to_string(distinct) + " distinct");
    r.add("P2: opposite faces carry inverse cyclic orders", opposite_inverse == 240, std::to_string(opposite_inverse) + "/240");
    r.add("P2: odd relabelling flips the parity, even relabelling keeps it", odd_flips == 240 && even_keeps == 240,
          std::to_string(odd_flips) + " flipped, " + std::to_string(even_keeps) + " kept");
    r.add("Chirality bipartition", even == 120 && odd == 120 && sign_keeps == 240,
          std::to_string(even) + " even / " + std::to_string(odd) + " odd; (id,-1) keeps parity in " +
              std::to_string(sign_keeps) + "/240");

    int unique = 0, flips = 0;
    for (const auto& c : all) {
        const auto h = working_handedness(m, c);
        if (!h)
            continue;
        bool exact = true;
        for (VertexId v = 0; v < kVertexCount; ++v) {
            const auto cls = colour_classes(c).classes[c[v] - 1];
            exact = exact && zigzag_trace(m, c, v, *h) == cls && zigzag_trace(m, c, v, opposite(*h)) != cls;
        }
        unique += exact;
        flips += working_handedness(m, act(minus_one, c, m)) == opposite(*h);
    }
    r.add("P1: exactly one zigzag handedness reproduces each colour class", unique == 240,
          std::to_string(unique) + "/240");
    r.add("P1: handedness flips under (id,-1)", flips == 240, std::to_string(flips) + "/240");

    r.guarded("Handedness/compound coupling", [&] {
        int coupled = 0;
        for (const auto& c : all)
            coupled += (classify_colouring(m, c).compound == CompoundLabel::A) ==
                       (working_handedness(m, c) == Handedness::LeftRight);
        r.add("Handedness/compound coupling", coupled == 240,
              "compound A <-> " + to_string(Handedness::LeftRight) + " in " + std::to_string(coupled) + "/240");
    });
}

void compound_checks(Report& r, const PolytopeModel& m, const std::vector<Colouring>& all)
{
    const auto tetrahedra = inscribed_tetrahedra(m);
    r.add("inscribed tetrahedra", tetrahedra.size() == 10, std::to_string(tetrahedra.size()));

    r.guarded("compounds", [&] {
        const auto [a, b] = compounds(m);
        const auto inversion = antipodal_permutation(m);
        std::set<Tetrahedron> inverted;
        for (const auto& t : a.tetrahedra)
            inverted.insert(image_of(inversion, t));
        int preserving = 0, exchanging = 0;
        for (const auto& g : rotation_group(m)) {
            std::set<Tetrahedron> moved;
            for (const auto& t : a.tetrahedra)
                moved.insert(image_of(g, t));
            preserving += moved == as_set(a);
            exchanging += moved == as_set(b);
        }
        r.add("compounds exchanged by the antipodal map and by no rotation",
              inverted == as_set(b) && preserving == 60 && exchanging == 0,
              std::to_string(preserving) + " rotations preserve, " + std::to_string(exchanging) + " exchange");

        std::set<Permutation<5>> action;
        for (const auto& g : rotation_group(m))
            action.insert(tetra_action(g, a.tetrahedra));
        const bool all_even = std::all_of(action.begin(), action.end(),
                                          [](const auto& p) { return p.parity() == Parity::Even; });
        r.add("The rotation group I permutes the 5 tetrahedra within each compound as A5",
              action.size() == 60 && all_even, std::to_string(action.size()) + " even permutations");

        int in_a = 0, in_b = 0, matched = 0;
        for (const auto& c : all) {
            const auto cls = classify_colouring(m, c);
            (cls.compound == CompoundLabel::A ? in_a : in_b)++;
            const Compound& comp = cls.compound == CompoundLabel::A ? a : b;
            std::set<int> used(cls.tetrahedron_of_colour.begin(), cls.tetrahedron_of_colour.end());
            bool same = used.size() == 5;
            for (std::size_t k = 0; k < 5 && same; ++k) {
                Tetrahedron t;
                std::copy(cls.partition.classes[k].begin(), cls.partition.classes[k].end(), t.members.begin());
                same = cls.partition.classes[k].size() == 4 &&
                       comp.tetrahedra[static_cast<std::size_t>(cls.tetrahedron_of_colour[k])] == t;
            }
            matched += same;
        }
        r.add("colour classes are the tetrahedra of one compound", matched == 240 && in_a == 120 && in_b == 120,
              std::to_string(in_a) + " A / " + std::to_string(in_b) + " B");
    });

    const auto spread = spread_subsets(m);
    r.add("spread_subsets' 4-element maximal subsets = inscribed_tetrahedra",
          spread.max_size == 4 && spread.spread_four_subsets == tetrahedra && spread.extensions_spread == 0 &&
              spread.four_subsets_scanned == 4845,
          "max " + std::to_string(spread.max_size) + ", " + std::to_string(spread.spread_four_subsets.size()) +
              " of " + std::to_string(spread.four_subsets_scanned) + " four-subsets, " +
              std::to_string(spread.extensions_spread) + "/" + std::to_string(spread.extensions_tried) +
              " extensions");
}

void determinism_checks(Report& r, const PolytopeModel& m, const std::vector<Colouring>& all)
{
    r.guarded("round trips", [&] {
        const auto first = enumeration_to_json(all);
        const auto again = enumeration_to_json(enumerate_all(m));
        r.add("enumeration output is byte-stable", first == again, std::to_string(first.size()) + " bytes");

        bool colour_trip = true;
        for (const auto& c : all)
            colour_trip = colour_trip && colouring_from_json(colouring_to_json(c)) == c;
        r.add("round trips are lossless",
              colour_trip && enumeration_from_json(first) == all &&
                  write_off(read_off(write_off(dodecahedron_mesh(m)))) == write_off(dodecahedron_mesh(m)),
              "colouring JSON, enumeration JSON, OFF");
    });
}

} // namespace

std::vector<Check> run_verification(const PolytopeModel& model)
{
    Report r;
    polytope_checks(r, model);
    symmetry_checks(r, model);
    const auto all = enumerate_all(model);
    chroma_checks(r, model, all);
    compound_checks(r, model, all);
    determinism_checks(r, model, all);
    return r.take();
}

} // namespace dodeca::cli
