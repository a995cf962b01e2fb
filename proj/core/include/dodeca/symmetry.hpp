#ifndef DODECA_SYMMETRY_HPP
#define DODECA_SYMMETRY_HPP

#include <dodeca/permutation.hpp>
#include <dodeca/polytope.hpp>

#include <Eigen/Core>

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace dodeca {

using VertexPermutation = Permutation<kVertexCount>;

/// Permutation of colour indices 0..4; colour k+1 is index k.
using ColourPermutation = Permutation<5>;

/// Element of S5 x {1,-1}: a colour relabelling together with an optional
/// antipodal exchange. Composition is componentwise.
struct ColourSymmetry {
    ColourPermutation colour_perm;
    int sign = 1;

    static ColourSymmetry identity() noexcept { return {}; }

    ColourSymmetry operator*(const ColourSymmetry& rhs) const noexcept
    {
        return {colour_perm * rhs.colour_perm, sign * rhs.sign};
    }

    ColourSymmetry inverse() const noexcept { return {colour_perm.inverse(), sign}; }

    /// Image of a colour in 1..5.
    int relabel(int colour) const { return colour_perm(colour - 1) + 1; }

    bool is_identity() const noexcept { return sign == 1 && colour_perm.is_identity(); }

    auto operator<=>(const ColourSymmetry&) const = default;
};

/// Closure of `generators` under composition, sorted ascending. For a finite
/// group this is the generated subgroup; the identity is always included.
template <class T>
std::vector<T> generate_group(std::span<const T> generators, const T& identity)
{
    std::set<T> seen{identity};
    std::vector<T> frontier{identity};
    while (!frontier.empty()) {
        std::vector<T> next;
        for (const T& x : frontier)
            for (const T& g : generators) {
                T y = g * x;
                if (seen.insert(y).second)
                    next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

/// Rotation by `angle` radians about `axis` (right-handed).
Eigen::Matrix3d rotation_about(const Vec3& axis, double angle);

/// Vertex permutation induced by an isometry, by nearest-vertex matching.
/// Empty when some image misses every vertex or two images collide.
std::optional<VertexPermutation> permutation_from_isometry(const PolytopeModel& model,
                                                           const Eigen::Matrix3d& isometry);

/// Orthogonal matrix realizing `g` on vertex positions, if one exists.
std::optional<Eigen::Matrix3d> realize_as_isometry(const PolytopeModel& model, const VertexPermutation& g);

/// Order-5 turn about the axis through the centre of face 0 and order-3
/// turn about the north-pole axis.
std::array<Eigen::Matrix3d, 2> default_rotation_generators(const PolytopeModel& model);

/// Order-5 turn about the centre of the face opposite face 0 and a
/// half-turn about the midpoint of edge 0.
std::array<Eigen::Matrix3d, 2> alternative_rotation_generators(const PolytopeModel& model);

/// The 60 rotational symmetries I, as vertex permutations, sorted.
std::vector<VertexPermutation> rotation_group(const PolytopeModel& model);

/// Group generated by rotation matrices. Throws ConsistencyError when a
/// generator does not map the vertex set onto itself.
std::vector<VertexPermutation> rotation_group(const PolytopeModel& model,
                                              std::span<const Eigen::Matrix3d> generators);

/// Central inversion v -> antipode(v).
VertexPermutation antipodal_permutation(const PolytopeModel& model);

/// I_h = I x {id, -id}: 120 permutations, sorted.
std::vector<VertexPermutation> full_group(const PolytopeModel& model);

/// Permutation of the five tetrahedra induced by a rotation. Throws
/// std::invalid_argument when `g` does not stabilize the family setwise.
Permutation<5> tetra_action(const VertexPermutation& g, std::span<const Tetrahedron, 5> tetrahedra);

/// All 240 elements of S5 x {1,-1}, sorted.
std::vector<ColourSymmetry> colour_group();

/// Subgroup of S5 x {1,-1} generated by `generators`, sorted.
std::vector<ColourSymmetry> generate_subgroup(std::span<const ColourSymmetry> generators);

/// True when `elements` contains the identity and is closed under
/// composition (hence a subgroup, being finite).
bool is_subgroup(std::span<const ColourSymmetry> elements);

} // namespace dodeca

#endif // DODECA_SYMMETRY_HPP
