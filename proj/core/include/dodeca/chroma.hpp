#ifndef DODECA_CHROMA_HPP
#define DODECA_CHROMA_HPP

#include <dodeca/permutation.hpp>
#include <dodeca/polytope.hpp>
#include <dodeca/symmetry.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dodeca {

inline constexpr int kColourCount = 5;

/// Colour in 1..5 for each of the 20 vertices, indexed by vertex id.
class Colouring {
public:
    /// Throws std::invalid_argument on wrong length or a value outside 1..5.
    explicit Colouring(std::span<const int> colours);

    static Colouring constant(int colour);

    int operator[](VertexId v) const { return colours_.at(static_cast<std::size_t>(v)); }
    const std::array<std::uint8_t, kVertexCount>& values() const noexcept { return colours_; }
    std::array<int, kVertexCount> to_array() const;

    /// Copy with one vertex recoloured.
    Colouring with(VertexId v, int colour) const;

    auto operator<=>(const Colouring&) const = default;

private:
    Colouring() = default;
    std::array<std::uint8_t, kVertexCount> colours_{};
};

/// Vertex ids holding each colour; `classes[k]` is colour k+1, ascending.
struct ColourClassPartition {
    std::array<std::vector<VertexId>, kColourCount> classes;
};

ColourClassPartition colour_classes(const Colouring& c);

/// First face (by id) whose five vertices are not all distinct colours.
std::optional<FaceId> first_violated_face(const PolytopeModel& model, const Colouring& c);

/// True when every face carries all five colours.
bool is_valid(const PolytopeModel& model, const Colouring& c);

/// Every valid colouring, in lexicographic order, by depth-first search in
/// vertex-id order with forward checking over face-mates. No symmetry
/// assumptions.
std::vector<Colouring> enumerate_all(const PolytopeModel& model);

/// Raised when face propagation stalls or hits an empty domain.
class PropagationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct ProofEnumeration {
    /// All completions over all frames and branches, sorted, unique.
    std::vector<Colouring> colourings;
    /// Completions found per colour frame, frames in lexicographic order of
    /// the colours given to (north pole, C1[0], C1[1], C1[2], unused).
    std::vector<int> completions_per_frame;
};

/// Pins the north pole and its three neighbours to each of the 120 colour
/// frames, branches on the two ways to finish the first polar face, then
/// fills C2, C3, C4 and the south pole one circle at a time by face
/// propagation alone.
ProofEnumeration propagate_proof_enumeration(const PolytopeModel& model);

/// Completion of one frame/branch. `frame` gives the colours of
/// (north pole, C1[0], C1[1], C1[2], unused colour); `branch` is 0 or 1.
Colouring propagate_frame(const PolytopeModel& model, const std::array<int, 5>& frame, int branch);

/// The two colourings with the north pole coloured 1 and C1 coloured
/// 2, 3, 4 in azimuth order. `first` is the one whose colour-1 class is the
/// lexicographically smaller tetrahedron.
std::pair<Colouring, Colouring> seed_colourings(const PolytopeModel& model);

/// Relabels colours by `g.colour_perm`, then for sign -1 gives each vertex
/// the relabelled colour of its antipode. Throws std::invalid_argument for
/// an invalid input colouring.
Colouring act(const ColourSymmetry& g, const Colouring& c, const PolytopeModel& model);

using Orbit = std::vector<Colouring>;

/// Orbits of `H` on `colourings` by union-find over action images. Each
/// orbit is sorted; orbits are ordered by their smallest member. Throws
/// std::invalid_argument when `H` is not a subgroup or an image leaves the
/// given set.
std::vector<Orbit> orbit_partition(std::span<const Colouring> colourings, std::span<const ColourSymmetry> H,
                                   const PolytopeModel& model);

/// Elements of `H` fixing `c`.
std::vector<ColourSymmetry> stabilizer(const Colouring& c, std::span<const ColourSymmetry> H,
                                       const PolytopeModel& model);

// P1: zigzags

/// Turn order of a zigzag: LeftRight turns left at the first vertex after
/// the start, then right.
enum class Handedness : std::uint8_t { LeftRight, RightLeft };

Handedness opposite(Handedness h);
std::string to_string(Handedness h);

/// The neighbour of `at` reached by turning left (or right) after arriving
/// from `from`. The left exit is the one with positive component along
/// (heading x outward normal at `at`).
VertexId turn(const PolytopeModel& model, VertexId from, VertexId at, bool left);

/// Four vertices: `start`, `first_step`, the vertex after the first turn,
/// and the checkpoint after the second turn.
std::array<VertexId, 4> zigzag_path(const PolytopeModel& model, VertexId start, VertexId first_step,
                                    Handedness h);

/// Checkpoints reachable from `v` by repeated zigzags of one handedness,
/// leaving along every edge of every checkpoint, until no new checkpoint
/// appears. Sorted, includes `v`.
std::vector<VertexId> zigzag_trace(const PolytopeModel& model, const Colouring& c, VertexId v, Handedness h);

/// The handedness whose trace from every vertex is exactly that vertex's
/// colour class, if exactly one such handedness exists.
std::optional<Handedness> working_handedness(const PolytopeModel& model, const Colouring& c);

// P2: cyclic orders on faces

struct FaceParity {
    FaceId face;
    /// Colours in positive sense, rotated to start with colour 1.
    std::array<int, 5> cyclic_order;
    Parity parity;
};

/// Parity of the permutation 1->o[0], ..., 5->o[4].
Parity cyclic_order_parity(const std::array<int, 5>& order);

/// The same cyclic order read backwards, rotated to start with colour 1.
std::array<int, 5> inverse_cyclic_order(const std::array<int, 5>& order);

std::vector<FaceParity> face_parity_signature(const PolytopeModel& model, const Colouring& c);

/// Shared parity of all 12 faces, or empty when they disagree.
std::optional<Parity> colouring_parity(const PolytopeModel& model, const Colouring& c);

/// Colour of `v`'s antipode predicted from `v` and its neighbours: the one
/// colour not among them. Empty when those four are not distinct.
std::optional<int> predicted_antipode_colour(const PolytopeModel& model, const Colouring& c, VertexId v);

} // namespace dodeca

#endif // DODECA_CHROMA_HPP
