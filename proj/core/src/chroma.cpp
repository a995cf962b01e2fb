#include <dodeca/chroma.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace dodeca {

Colouring::Colouring(std::span<const int> colours)
{
    if (colours.size() != kVertexCount)
        throw std::invalid_argument("colouring: expected 20 colours, got " + std::to_string(colours.size()));
    for (std::size_t v = 0; v < colours.size(); ++v) {
        if (colours[v] < 1 || colours[v] > kColourCount)
            throw std::invalid_argument("colouring: vertex " + std::to_string(v) + " has colour " +
                                        std::to_string(colours[v]) + ", expected 1..5");
        colours_[v] = static_cast<std::uint8_t>(colours[v]);
    }
}

Colouring Colouring::constant(int colour)
{
    std::array<int, kVertexCount> values;
    values.fill(colour);
    return Colouring(values);
}

std::array<int, kVertexCount> Colouring::to_array() const
{
    std::array<int, kVertexCount> out{};
    std::copy(colours_.begin(), colours_.end(), out.begin());
    return out;
}

Colouring Colouring::with(VertexId v, int colour) const
{
    auto values = to_array();
    values.at(static_cast<std::size_t>(v)) = colour;
    return Colouring(values);
}

ColourClassPartition colour_classes(const Colouring& c)
{
    ColourClassPartition out;
    for (VertexId v = 0; v < kVertexCount; ++v)
        out.classes[c[v] - 1].push_back(v);
    return out;
}

std::optional<FaceId> first_violated_face(const PolytopeModel& model, const Colouring& c)
{
    for (FaceId f = 0; f < kFaceCount; ++f) {
        unsigned seen = 0;
        for (VertexId v : model.faces()[f])
            seen |= 1u << c[v];
        if (std::popcount(seen) != kColourCount)
            return f;
    }
    return std::nullopt;
}

bool is_valid(const PolytopeModel& model, const Colouring& c)
{
    return !first_violated_face(model, c).has_value();
}

std::pair<Colouring, Colouring> seed_colourings(const PolytopeModel& model)
{
    const std::array<int, 5> frame{1, 2, 3, 4, 5};
    Colouring a = propagate_frame(model, frame, 0);
    Colouring b = propagate_frame(model, frame, 1);
    if (colour_classes(b).classes[0] < colour_classes(a).classes[0])
        std::swap(a, b);
    return {a, b};
}

Colouring act(const ColourSymmetry& g, const Colouring& c, const PolytopeModel& model)
{
    if (const auto bad = first_violated_face(model, c))
        throw std::invalid_argument("act: colouring is not valid (face " + std::to_string(*bad) + ")");
    std::array<int, kVertexCount> out{};
    for (VertexId v = 0; v < kVertexCount; ++v) {
        const VertexId source = g.sign < 0 ? model.antipode(v) : v;
        out[v] = g.relabel(c[source]);
    }
    return Colouring(out);
}

namespace {

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

std::vector<Orbit> orbit_partition(std::span<const Colouring> colourings, std::span<const ColourSymmetry> H,
                                   const PolytopeModel& model)
{
    if (!is_subgroup(H))
        throw std::invalid_argument("orbit_partition: H is not closed under composition");

    std::vector<Colouring> sorted(colourings.begin(), colourings.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    auto index_of = [&](const Colouring& c) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
        if (it == sorted.end() || *it != c)
            throw std::invalid_argument("orbit_partition: colouring set is not closed under H");
        return static_cast<int>(it - sorted.begin());
    };

    DisjointSets sets(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (const auto& h : H)
            sets.unite(static_cast<int>(i), index_of(act(h, sorted[i], model)));

    std::map<int, Orbit> by_root;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        by_root[sets.find(static_cast<int>(i))].push_back(sorted[i]);

    // roots are the smallest index of each orbit, so map order is orbit order
    std::vector<Orbit> out;
    out.reserve(by_root.size());
    for (auto& [root, orbit] : by_root)
        out.push_back(std::move(orbit));
    return out;
}

std::vector<ColourSymmetry> stabilizer(const Colouring& c, std::span<const ColourSymmetry> H,
                                       const PolytopeModel& model)
{
    std::vector<ColourSymmetry> out;
    for (const auto& h : H)
        if (act(h, c, model) == c)
            out.push_back(h);
    return out;
}

Parity cyclic_order_parity(const std::array<int, 5>& order)
{
    std::array<int, 5> images{};
    for (std::size_t k = 0; k < 5; ++k)
        images[k] = order[k] - 1;
    return Permutation<5>(images).parity();
}

namespace {

std::array<int, 5> rotate_to_colour_one(std::array<int, 5> order)
{
    const auto it = std::find(order.begin(), order.end(), 1);
    std::rotate(order.begin(), it, order.end());
    return order;
}

} // namespace

std::array<int, 5> inverse_cyclic_order(const std::array<int, 5>& order)
{
    std::array<int, 5> reversed = order;
    std::reverse(reversed.begin(), reversed.end());
    return rotate_to_colour_one(reversed);
}

std::vector<FaceParity> face_parity_signature(const PolytopeModel& model, const Colouring& c)
{
    if (const auto bad = first_violated_face(model, c))
        throw std::invalid_argument("face_parity_signature: colouring is not valid (face " + std::to_string(*bad) +
                                    ")");
    std::vector<FaceParity> out;
    for (FaceId f = 0; f < kFaceCount; ++f) {
        std::array<int, 5> order{};
        for (std::size_t k = 0; k < 5; ++k)
            order[k] = c[model.faces()[f][k]];
        order = rotate_to_colour_one(order);
        out.push_back({f, order, cyclic_order_parity(order)});
    }
    return out;
}

std::optional<Parity> colouring_parity(const PolytopeModel& model, const Colouring& c)
{
    const auto sig = face_parity_signature(model, c);
    for (const auto& fp : sig)
        if (fp.parity != sig.front().parity)
            return std::nullopt;
    return sig.front().parity;
}

std::optional<int> predicted_antipode_colour(const PolytopeModel& model, const Colouring& c, VertexId v)
{
    unsigned seen = 1u << c[v];
    for (VertexId w : model.neighbours(v))
        seen |= 1u << c[w];
    if (std::popcount(seen) != 4)
        return std::nullopt;
    for (int colour = 1; colour <= kColourCount; ++colour)
        if (!(seen & (1u << colour)))
            return colour;
    return std::nullopt;
}

} // namespace dodeca
