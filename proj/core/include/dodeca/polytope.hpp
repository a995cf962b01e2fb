#ifndef DODECA_POLYTOPE_HPP
#define DODECA_POLYTOPE_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dodeca {

inline constexpr int kVertexCount = 20;
inline constexpr int kEdgeCount = 30;
inline constexpr int kFaceCount = 12;
inline constexpr int kIcosaVertexCount = 12;
inline constexpr int kIcosaFaceCount = 20;

/// Absolute tolerance for every position and distance comparison.
inline constexpr double kTolerance = 1e-9;

using VertexId = int;
using FaceId = int;
using Vec3 = Eigen::Vector3d;

/// Horizontal circle carrying a vertex, counted from the north pole.
enum class Latitude : std::uint8_t { NorthPole, C1, C2, C3, C4, SouthPole };

inline constexpr std::array<int, 6> kLatitudeSizes{1, 3, 6, 6, 3, 1};

std::string to_string(Latitude lat);

struct Vertex {
    VertexId id;
    Vec3 position;
    Latitude latitude;
};

/// Five vertex ids in positive sense: counterclockwise seen from outside.
using Face = std::array<VertexId, 5>;

/// Unordered edge stored with `first < second`.
using Edge = std::pair<VertexId, VertexId>;

/// Four vertex ids, ascending, forming a regular tetrahedron.
struct Tetrahedron {
    std::array<VertexId, 4> members{};

    bool contains(VertexId v) const noexcept
    {
        for (VertexId m : members)
            if (m == v)
                return true;
        return false;
    }

    auto operator<=>(const Tetrahedron&) const = default;
};

/// Raised when geometric construction produces inconsistent combinatorics.
/// Indicates a construction bug; no partially built model escapes.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The regular icosahedron dual to the model, with vertices at the face
/// centre directions of the dodecahedron.
struct Icosahedron {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
};

/// The labelled regular dodecahedron inscribed in the unit sphere with
/// vertex 0 at the north pole. Vertex ids run pole to pole through the
/// latitude circles, ordered by azimuth inside each circle. Immutable
/// after construction.
class PolytopeModel {
public:
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<Face>& faces() const noexcept { return faces_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const Vec3& position(VertexId v) const { return vertices_.at(checked(v)).position; }
    Latitude latitude(VertexId v) const { return vertices_.at(checked(v)).latitude; }

    /// Vertex ids of one latitude circle in azimuth order.
    std::span<const VertexId> ring(Latitude lat) const;

    /// The 3 vertices joined to `v`, ascending. Throws std::out_of_range.
    const std::array<VertexId, 3>& neighbours(VertexId v) const { return neighbours_.at(checked(v)); }
    bool adjacent(VertexId a, VertexId b) const;

    VertexId antipode(VertexId v) const { return antipode_.at(checked(v)); }
    const std::array<VertexId, kVertexCount>& antipode_map() const noexcept { return antipode_; }

    /// The 3 faces containing `v`, ascending.
    const std::array<FaceId, 3>& faces_of(VertexId v) const { return faces_of_.at(checked(v)); }
    FaceId opposite_face(FaceId f) const;

    const Icosahedron& dual() const noexcept { return dual_; }

    /// Dodecahedron vertex corresponding to an icosahedron face.
    VertexId dual_face_of(int icosa_face) const;

private:
    friend PolytopeModel build_polytope();

    static std::size_t checked(VertexId v);

    std::vector<Vertex> vertices_;
    std::vector<Face> faces_;
    std::vector<Edge> edges_;
    std::array<std::array<VertexId, 3>, kVertexCount> neighbours_{};
    std::array<VertexId, kVertexCount> antipode_{};
    std::array<std::array<FaceId, 3>, kVertexCount> faces_of_{};
    std::array<FaceId, kFaceCount> opposite_face_{};
    std::array<int, 7> ring_offsets_{};
    std::vector<VertexId> ring_order_;
    Icosahedron dual_;
    std::array<VertexId, kIcosaFaceCount> dual_faces_{};
};

/// Deterministic construction; throws ConsistencyError on any internal
/// inconsistency.
PolytopeModel build_polytope();

/// Process-wide model, built on first use.
const PolytopeModel& canonical_model();

/// Rotation taking (1,1,1)/sqrt(3) to the north pole, applied to the
/// textbook coordinate sets.
Eigen::Matrix3d canonical_rotation();

struct DistanceClass {
    double distance;
    int multiplicity;

    bool operator==(const DistanceClass&) const = default;
};

/// Distinct pairwise vertex distances, ascending, with pair counts.
std::vector<DistanceClass> distance_spectrum(const PolytopeModel& model);

/// Third-smallest vertex distance: the edge of an inscribed regular
/// tetrahedron.
double tetrahedron_edge(const PolytopeModel& model);

/// True when all six pairwise distances agree within tolerance.
bool is_regular_tetrahedron(const PolytopeModel& model, const std::array<VertexId, 4>& members);

} // namespace dodeca

#endif // DODECA_POLYTOPE_HPP
