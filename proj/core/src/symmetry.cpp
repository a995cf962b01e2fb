#include <dodeca/symmetry.hpp>

#include <Eigen/Geometry>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace dodeca {

Eigen::Matrix3d rotation_about(const Vec3& axis, double angle)
{
    return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

std::optional<VertexPermutation> permutation_from_isometry(const PolytopeModel& model,
                                                           const Eigen::Matrix3d& isometry)
{
    std::array<int, kVertexCount> images{};
    std::array<bool, kVertexCount> taken{};
    for (VertexId v = 0; v < kVertexCount; ++v) {
        const Vec3 moved = isometry * model.position(v);
        int match = -1;
        for (VertexId w = 0; w < kVertexCount; ++w)
            if ((moved - model.position(w)).norm() < kTolerance) {
                match = w;
                break;
            }
        if (match < 0 || taken[match])
            return std::nullopt;
        taken[match] = true;
        images[v] = match;
    }
    return VertexPermutation(images);
}

std::optional<Eigen::Matrix3d> realize_as_isometry(const PolytopeModel& model, const VertexPermutation& g)
{
    // vertices 0, 1, 2 (north pole and two C1 vertices) span R^3
    Eigen::Matrix3d src;
    Eigen::Matrix3d dst;
    for (int k = 0; k < 3; ++k) {
        src.col(k) = model.position(k);
        dst.col(k) = model.position(g(k));
    }
    const Eigen::Matrix3d m = dst * src.inverse();
    if (!(m.transpose() * m).isApprox(Eigen::Matrix3d::Identity(), kTolerance))
        return std::nullopt;
    for (VertexId v = 0; v < kVertexCount; ++v)
        if ((m * model.position(v) - model.position(g(v))).norm() > kTolerance)
            return std::nullopt;
    return m;
}

namespace {

Vec3 face_centre(const PolytopeModel& model, FaceId f)
{
    Vec3 c = Vec3::Zero();
    for (VertexId v : model.faces()[f])
        c += model.position(v);
    return c.normalized();
}

} // namespace

std::array<Eigen::Matrix3d, 2> default_rotation_generators(const PolytopeModel& model)
{
    return {rotation_about(face_centre(model, 0), 2.0 * std::numbers::pi / 5.0),
            rotation_about(model.position(0), 2.0 * std::numbers::pi / 3.0)};
}

std::array<Eigen::Matrix3d, 2> alternative_rotation_generators(const PolytopeModel& model)
{
    const auto [a, b] = model.edges().front();
    const Vec3 midpoint = model.position(a) + model.position(b);
    return {rotation_about(face_centre(model, model.opposite_face(0)), 2.0 * std::numbers::pi / 5.0),
            rotation_about(midpoint, std::numbers::pi)};
}

std::vector<VertexPermutation> rotation_group(const PolytopeModel& model,
                                              std::span<const Eigen::Matrix3d> generators)
{
    std::vector<VertexPermutation> gens;
    for (const auto& r : generators) {
        if (std::abs(r.determinant() - 1.0) > kTolerance)
            throw ConsistencyError("rotation generator has determinant != +1");
        auto p = permutation_from_isometry(model, r);
        if (!p)
            throw ConsistencyError("rotation generator does not preserve the vertex set");
        gens.push_back(*p);
    }
    return generate_group<VertexPermutation>(gens, VertexPermutation::identity());
}

std::vector<VertexPermutation> rotation_group(const PolytopeModel& model)
{
    const auto gens = default_rotation_generators(model);
    return rotation_group(model, gens);
}

VertexPermutation antipodal_permutation(const PolytopeModel& model)
{
    std::array<int, kVertexCount> images{};
    for (VertexId v = 0; v < kVertexCount; ++v)
        images[v] = model.antipode(v);
    return VertexPermutation(images);
}

std::vector<VertexPermutation> full_group(const PolytopeModel& model)
{
    const auto rotations = rotation_group(model);
    const VertexPermutation inversion = antipodal_permutation(model);
    std::vector<VertexPermutation> out(rotations);
    for (const auto& r : rotations)
        out.push_back(inversion * r);
    std::sort(out.begin(), out.end());
    return out;
}

Permutation<5> tetra_action(const VertexPermutation& g, std::span<const Tetrahedron, 5> tetrahedra)
{
    std::array<int, 5> images{};
    for (std::size_t i = 0; i < 5; ++i) {
        Tetrahedron moved;
        for (std::size_t k = 0; k < 4; ++k)
            moved.members[k] = g(tetrahedra[i].members[k]);
        std::sort(moved.members.begin(), moved.members.end());
        const auto it = std::find(tetrahedra.begin(), tetrahedra.end(), moved);
        if (it == tetrahedra.end())
            throw std::invalid_argument("tetra_action: permutation does not stabilize the compound (tetrahedron " +
                                        std::to_string(i) + ")");
        images[i] = static_cast<int>(it - tetrahedra.begin());
    }
    return Permutation<5>(images);
}

std::vector<ColourSymmetry> colour_group()
{
    std::vector<ColourSymmetry> out;
    for (const auto& p : all_permutations<5>())
        for (int s : {-1, 1})
            out.push_back({p, s});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ColourSymmetry> generate_subgroup(std::span<const ColourSymmetry> generators)
{
    return generate_group<ColourSymmetry>(generators, ColourSymmetry::identity());
}

bool is_subgroup(std::span<const ColourSymmetry> elements)
{
    const std::set<ColourSymmetry> members(elements.begin(), elements.end());
    if (!members.contains(ColourSymmetry::identity()))
        return false;
    for (const auto& a : members)
        for (const auto& b : members)
            if (!members.contains(a * b))
                return false;
    return true;
}

} // namespace dodeca
