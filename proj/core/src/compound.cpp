#include <dodeca/compound.hpp>

#include <algorithm>
#include <bit>
#include <cmath>

namespace dodeca {

std::string to_string(CompoundLabel label)
{
    return label == CompoundLabel::A ? "A" : "B";
}

int Compound::index_of(const Tetrahedron& t) const
{
    const auto it = std::find(tetrahedra.begin(), tetrahedra.end(), t);
    return it == tetrahedra.end() ? -1 : static_cast<int>(it - tetrahedra.begin());
}

namespace {

double dist(const PolytopeModel& model, VertexId a, VertexId b)
{
    return (model.position(a) - model.position(b)).norm();
}

bool disjoint(const Tetrahedron& s, const Tetrahedron& t)
{
    for (VertexId v : s.members)
        if (t.contains(v))
            return false;
    return true;
}

void collect_disjoint_families(const std::vector<Tetrahedron>& all, std::size_t next, std::vector<int>& chosen,
                               std::vector<std::vector<int>>& out)
{
    if (chosen.size() == 5) {
        out.push_back(chosen);
        return;
    }
    for (std::size_t i = next; i < all.size(); ++i) {
        const bool fits = std::all_of(chosen.begin(), chosen.end(),
                                      [&](int j) { return disjoint(all[i], all[j]); });
        if (!fits)
            continue;
        chosen.push_back(static_cast<int>(i));
        collect_disjoint_families(all, i + 1, chosen, out);
        chosen.pop_back();
    }
}

} // namespace

std::vector<Tetrahedron> inscribed_tetrahedra(const PolytopeModel& model)
{
    std::vector<Tetrahedron> out;
    for (const auto& cls : distance_spectrum(model)) {
        auto at = [&](VertexId a, VertexId b) { return std::abs(dist(model, a, b) - cls.distance) < kTolerance; };
        for (VertexId a = 0; a < kVertexCount; ++a)
            for (VertexId b = a + 1; b < kVertexCount; ++b) {
                if (!at(a, b))
                    continue;
                for (VertexId c = b + 1; c < kVertexCount; ++c) {
                    if (!at(a, c) || !at(b, c))
                        continue;
                    for (VertexId d = c + 1; d < kVertexCount; ++d)
                        if (at(a, d) && at(b, d) && at(c, d))
                            out.push_back({{a, b, c, d}});
                }
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Compound, Compound> compounds(const PolytopeModel& model)
{
    const auto all = inscribed_tetrahedra(model);
    if (all.size() != 10)
        throw ConsistencyError("expected 10 inscribed tetrahedra, found " + std::to_string(all.size()));

    std::vector<std::vector<int>> families;
    std::vector<int> chosen;
    collect_disjoint_families(all, 0, chosen, families);
    if (families.size() != 2)
        throw ConsistencyError("expected 2 compounds, found " + std::to_string(families.size()));

    std::array<bool, 10> used{};
    std::array<Compound, 2> out{};
    for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t i = 0; i < 5; ++i) {
            const int idx = families[k][i];
            if (used[idx])
                throw ConsistencyError("compounds share a tetrahedron");
            used[idx] = true;
            out[k].tetrahedra[i] = all[idx];
        }
    }
    // families come out in lexicographic order of indices, so the first holds all[0]
    out[0].label = CompoundLabel::A;
    out[1].label = CompoundLabel::B;
    if (!out[0].tetrahedra[0].contains(0))
        throw ConsistencyError("smallest tetrahedron does not contain vertex 0");
    return {out[0], out[1]};
}

Classification classify_colouring(const PolytopeModel& model, const Colouring& c)
{
    if (const auto bad = first_violated_face(model, c))
        throw std::invalid_argument("classify_colouring: colouring is not valid (face " + std::to_string(*bad) + ")");

    const auto [a, b] = compounds(model);
    Classification out{CompoundLabel::A, colour_classes(c), {}};
    for (std::size_t k = 0; k < kColourCount; ++k) {
        const auto& cls = out.partition.classes[k];
        if (cls.size() != 4)
            throw ConsistencyError("colour class of size " + std::to_string(cls.size()));
        const Tetrahedron t{{cls[0], cls[1], cls[2], cls[3]}};
        const int in_a = a.index_of(t);
        const int in_b = b.index_of(t);
        const CompoundLabel label = in_a >= 0 ? CompoundLabel::A : CompoundLabel::B;
        if (in_a < 0 && in_b < 0)
            throw ConsistencyError("colour class is not an inscribed tetrahedron");
        if (k > 0 && label != out.compound)
            throw ConsistencyError("colour classes span both compounds");
        out.compound = label;
        out.tetrahedron_of_colour[k] = in_a >= 0 ? in_a : in_b;
    }
    return out;
}

SpreadAnalysis spread_subsets(const PolytopeModel& model)
{
    SpreadAnalysis out;
    out.threshold = tetrahedron_edge(model) - kTolerance;

    // too_close[v]: vertices nearer to v than the threshold
    std::array<std::uint32_t, kVertexCount> too_close{};
    for (VertexId a = 0; a < kVertexCount; ++a)
        for (VertexId b = 0; b < kVertexCount; ++b)
            if (a != b && dist(model, a, b) < out.threshold)
                too_close[a] |= 1u << b;

    auto spread = [&](std::uint32_t set) {
        for (std::uint32_t rest = set; rest != 0; rest &= rest - 1)
            if (too_close[std::countr_zero(rest)] & set)
                return false;
        return true;
    };

    std::vector<std::uint32_t> best;
    for (std::uint32_t set = 1; set < (1u << kVertexCount); ++set) {
        const int size = std::popcount(set);
        if (size < out.max_size || !spread(set))
            continue;
        if (size > out.max_size) {
            out.max_size = size;
            best.clear();
        }
        best.push_back(set);
    }
    for (std::uint32_t set : best) {
        std::vector<VertexId> members;
        for (VertexId v = 0; v < kVertexCount; ++v)
            if (set & (1u << v))
                members.push_back(v);
        out.maximal.push_back(std::move(members));
    }
    std::sort(out.maximal.begin(), out.maximal.end());

    // direct scan of the 4845 four-subsets, then every one-vertex extension
    for (VertexId a = 0; a < kVertexCount; ++a)
        for (VertexId b = a + 1; b < kVertexCount; ++b)
            for (VertexId c = b + 1; c < kVertexCount; ++c)
                for (VertexId d = c + 1; d < kVertexCount; ++d) {
                    ++out.four_subsets_scanned;
                    const std::array<VertexId, 4> q{a, b, c, d};
                    bool ok = true;
                    for (std::size_t i = 0; i < 4 && ok; ++i)
                        for (std::size_t j = i + 1; j < 4 && ok; ++j)
                            ok = dist(model, q[i], q[j]) >= out.threshold;
                    if (!ok)
                        continue;
                    out.spread_four_subsets.push_back({q});
                    for (VertexId e = 0; e < kVertexCount; ++e) {
                        if (std::find(q.begin(), q.end(), e) != q.end())
                            continue;
                        ++out.extensions_tried;
                        if (std::all_of(q.begin(), q.end(),
                                        [&](VertexId m) { return dist(model, m, e) >= out.threshold; }))
                            ++out.extensions_spread;
                    }
                }
    return out;
}

} // namespace dodeca
