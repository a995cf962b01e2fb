#include <dodeca/chroma.hpp>

#include <algorithm>
#include <bit>

namespace dodeca {

namespace {

using Domain = std::uint8_t; // bit k set: colour k+1 still allowed
constexpr Domain kAllColours = 0b11111;

constexpr Domain bit_of(int colour) { return static_cast<Domain>(1u << (colour - 1)); }

int only_colour(Domain d) { return std::countr_zero(static_cast<unsigned>(d)) + 1; }

// vertices sharing at least one face with v, excluding v
std::array<std::vector<VertexId>, kVertexCount> face_mates(const PolytopeModel& model)
{
    std::array<std::vector<VertexId>, kVertexCount> mates;
    for (const auto& face : model.faces())
        for (VertexId a : face)
            for (VertexId b : face)
                if (a != b)
                    mates[a].push_back(b);
    for (auto& m : mates) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
    }
    return mates;
}

class Backtracker {
public:
    explicit Backtracker(const PolytopeModel& model) : mates_(face_mates(model)) {}

    std::vector<Colouring> run()
    {
        std::array<Domain, kVertexCount> domains;
        domains.fill(kAllColours);
        search(0, domains);
        return std::move(found_);
    }

private:
    void search(VertexId v, const std::array<Domain, kVertexCount>& domains)
    {
        if (v == kVertexCount) {
            found_.emplace_back(assigned_);
            return;
        }
        for (int colour = 1; colour <= kColourCount; ++colour) {
            if (!(domains[v] & bit_of(colour)))
                continue;
            auto next = domains;
            next[v] = bit_of(colour);
            bool wiped = false;
            for (VertexId w : mates_[v]) {
                if (w < v)
                    continue;
                next[w] &= static_cast<Domain>(~bit_of(colour));
                wiped = wiped || next[w] == 0;
            }
            if (wiped)
                continue;
            assigned_[v] = colour;
            search(v + 1, next);
        }
    }

    std::array<std::vector<VertexId>, kVertexCount> mates_;
    std::array<int, kVertexCount> assigned_{};
    std::vector<Colouring> found_;
};

// Face propagation restricted to one latitude band at a time.
class FramePropagator {
public:
    FramePropagator(const PolytopeModel& model) : model_(model) { assigned_.fill(0); }

    void commit(VertexId v, int colour)
    {
        if (assigned_[v] != 0 && assigned_[v] != colour)
            throw PropagationError("conflicting assignment at vertex " + std::to_string(v));
        assigned_[v] = colour;
    }

    // Fixes every vertex whose latitude is at most `limit`; a vertex is fixed
    // only when a face forces it (single remaining colour, or the only place
    // in a face left for a missing colour).
    void fill_band(Latitude limit)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (VertexId v = 0; v < kVertexCount; ++v) {
                if (assigned_[v] != 0)
                    continue;
                const Domain d = domain(v);
                if (d == 0)
                    throw PropagationError("empty domain at vertex " + std::to_string(v));
                if (std::popcount(static_cast<unsigned>(d)) == 1 && model_.latitude(v) <= limit) {
                    assigned_[v] = only_colour(d);
                    changed = true;
                }
            }
            for (const auto& face : model_.faces()) {
                for (int colour = 1; colour <= kColourCount; ++colour) {
                    int places = 0;
                    VertexId place = -1;
                    bool present = false;
                    for (VertexId v : face) {
                        if (assigned_[v] == colour)
                            present = true;
                        else if (assigned_[v] == 0 && (domain(v) & bit_of(colour))) {
                            ++places;
                            place = v;
                        }
                    }
                    if (present)
                        continue;
                    if (places == 0)
                        throw PropagationError("colour " + std::to_string(colour) + " has no place in a face");
                    if (places == 1 && model_.latitude(place) <= limit) {
                        assigned_[place] = colour;
                        changed = true;
                    }
                }
            }
        }
        for (VertexId v : model_.ring(limit))
            if (assigned_[v] == 0)
                throw PropagationError("latitude circle " + to_string(limit) + " not determined by propagation");
    }

    Colouring result() const { return Colouring(assigned_); }

private:
    Domain domain(VertexId v) const
    {
        Domain d = kAllColours;
        for (FaceId f : model_.faces_of(v))
            for (VertexId w : model_.faces()[f])
                if (w != v && assigned_[w] != 0)
                    d &= static_cast<Domain>(~bit_of(assigned_[w]));
        return d;
    }

    const PolytopeModel& model_;
    std::array<int, kVertexCount> assigned_{};
};

// The polar face through the north pole and the first two C1 vertices.
const Face& first_polar_face(const PolytopeModel& model)
{
    const auto c1 = model.ring(Latitude::C1);
    for (FaceId f : model.faces_of(0)) {
        const auto& face = model.faces()[f];
        if (std::count(face.begin(), face.end(), c1[0]) && std::count(face.begin(), face.end(), c1[1]))
            return face;
    }
    throw ConsistencyError("no polar face through C1[0] and C1[1]");
}

} // namespace

std::vector<Colouring> enumerate_all(const PolytopeModel& model)
{
    return Backtracker(model).run();
}

Colouring propagate_frame(const PolytopeModel& model, const std::array<int, 5>& frame, int branch)
{
    if (branch != 0 && branch != 1)
        throw std::invalid_argument("propagate_frame: branch must be 0 or 1");
    {
        std::array<int, 5> sorted = frame;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<int, 5>{1, 2, 3, 4, 5})
            throw std::invalid_argument("propagate_frame: frame must list each colour once");
    }

    FramePropagator prop(model);
    const auto c1 = model.ring(Latitude::C1);
    prop.commit(0, frame[0]);
    for (std::size_t k = 0; k < 3; ++k)
        prop.commit(c1[k], frame[k + 1]);

    // the first polar face still needs frame[3] and frame[4] on its two C2
    // vertices; the branch decides which goes next to C1[0]
    const Face& f1 = first_polar_face(model);
    VertexId near_first = -1;
    VertexId near_second = -1;
    for (VertexId v : f1) {
        if (model.latitude(v) != Latitude::C2)
            continue;
        if (model.adjacent(v, c1[0]))
            near_first = v;
        else
            near_second = v;
    }
    if (near_first < 0 || near_second < 0)
        throw ConsistencyError("first polar face lacks two C2 vertices");
    prop.commit(near_first, branch == 0 ? frame[3] : frame[4]);
    prop.commit(near_second, branch == 0 ? frame[4] : frame[3]);

    for (Latitude band : {Latitude::C2, Latitude::C3, Latitude::C4, Latitude::SouthPole})
        prop.fill_band(band);

    Colouring out = prop.result();
    if (const auto bad = first_violated_face(model, out))
        throw PropagationError("propagated colouring violates face " + std::to_string(*bad));
    return out;
}

ProofEnumeration propagate_proof_enumeration(const PolytopeModel& model)
{
    ProofEnumeration out;
    std::array<int, 5> frame{1, 2, 3, 4, 5};
    do {
        int completions = 0;
        for (int branch : {0, 1}) {
            out.colourings.push_back(propagate_frame(model, frame, branch));
            ++completions;
        }
        // distinct branches are distinct completions
        if (out.colourings[out.colourings.size() - 1] == out.colourings[out.colourings.size() - 2])
            --completions;
        out.completions_per_frame.push_back(completions);
    } while (std::next_permutation(frame.begin(), frame.end()));

    std::sort(out.colourings.begin(), out.colourings.end());
    out.colourings.erase(std::unique(out.colourings.begin(), out.colourings.end()), out.colourings.end());
    return out;
}

} // namespace dodeca
