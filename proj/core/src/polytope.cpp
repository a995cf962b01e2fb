#include <dodeca/polytope.hpp>

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace dodeca {

namespace {

constexpr double kPhi = std::numbers::phi;

void require(bool condition, const char* what)
{
    if (!condition)
        throw ConsistencyError(std::string("polytope construction: ") + what);
}

std::vector<Vec3> textbook_dodecahedron()
{
    std::vector<Vec3> pts;
    for (double a : {1.0, -1.0})
        for (double b : {1.0, -1.0})
            for (double c : {1.0, -1.0})
                pts.emplace_back(a, b, c);
    for (double s : {1.0, -1.0})
        for (double t : {1.0, -1.0}) {
            pts.emplace_back(0.0, s / kPhi, t * kPhi);
            pts.emplace_back(s / kPhi, t * kPhi, 0.0);
            pts.emplace_back(s * kPhi, 0.0, t / kPhi);
        }
    return pts;
}

// Aligned so that its vertices point at the dodecahedron's face centres.
std::vector<Vec3> textbook_icosahedron()
{
    std::vector<Vec3> pts;
    for (double s : {1.0, -1.0})
        for (double t : {1.0, -1.0}) {
            pts.emplace_back(0.0, s * kPhi, t);
            pts.emplace_back(s * kPhi, t, 0.0);
            pts.emplace_back(t, 0.0, s * kPhi);
        }
    return pts;
}

double azimuth(const Vec3& p)
{
    double a = std::atan2(p.y(), p.x());
    if (a < 0.0)
        a += 2.0 * std::numbers::pi;
    if (a > 2.0 * std::numbers::pi - kTolerance)
        a = 0.0;
    return a;
}

// Normalizes, rotates, then orders by height (descending) and azimuth.
std::vector<Vec3> place_on_sphere(std::vector<Vec3> pts)
{
    const Eigen::Matrix3d rot = canonical_rotation();
    for (auto& p : pts) {
        p = rot * p.normalized();
        for (int k = 0; k < 3; ++k)
            if (std::abs(p[k]) < kTolerance)
                p[k] = 0.0;
    }
    std::sort(pts.begin(), pts.end(), [](const Vec3& a, const Vec3& b) {
        if (std::abs(a.z() - b.z()) > kTolerance)
            return a.z() > b.z();
        return azimuth(a) < azimuth(b);
    });
    return pts;
}

double min_pair_distance(const std::vector<Vec3>& pts)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::min(best, (pts[i] - pts[j]).norm());
    return best;
}

} // namespace

std::string to_string(Latitude lat)
{
    switch (lat) {
    case Latitude::NorthPole: return "NorthPole";
    case Latitude::C1: return "C1";
    case Latitude::C2: return "C2";
    case Latitude::C3: return "C3";
    case Latitude::C4: return "C4";
    case Latitude::SouthPole: return "SouthPole";
    }
    return "?";
}

Eigen::Matrix3d canonical_rotation()
{
    const Vec3 from = Vec3(1.0, 1.0, 1.0).normalized();
    return Eigen::Quaterniond::FromTwoVectors(from, Vec3::UnitZ()).toRotationMatrix();
}

std::size_t PolytopeModel::checked(VertexId v)
{
    if (v < 0 || v >= kVertexCount)
        throw std::out_of_range("vertex id " + std::to_string(v) + " outside 0..19");
    return v;
}

std::span<const VertexId> PolytopeModel::ring(Latitude lat) const
{
    const auto k = static_cast<std::size_t>(lat);
    return std::span<const VertexId>(ring_order_).subspan(ring_offsets_[k], kLatitudeSizes[k]);
}

bool PolytopeModel::adjacent(VertexId a, VertexId b) const
{
    const auto& n = neighbours(a);
    return std::find(n.begin(), n.end(), b) != n.end();
}

FaceId PolytopeModel::opposite_face(FaceId f) const
{
    if (f < 0 || f >= kFaceCount)
        throw std::out_of_range("face id " + std::to_string(f) + " outside 0..11");
    return opposite_face_[f];
}

VertexId PolytopeModel::dual_face_of(int icosa_face) const
{
    if (icosa_face < 0 || icosa_face >= kIcosaFaceCount)
        throw std::out_of_range("icosahedron face id " + std::to_string(icosa_face) + " outside 0..19");
    return dual_faces_[icosa_face];
}

PolytopeModel build_polytope()
{
    PolytopeModel m;

    const std::vector<Vec3> pts = place_on_sphere(textbook_dodecahedron());
    require(pts.size() == kVertexCount, "vertex count");
    require((pts.front() - Vec3::UnitZ()).norm() < kTolerance, "vertex 0 is not the north pole");

    // latitude classes: group consecutive equal heights
    {
        int cls = 0;
        int offset = 0;
        for (int v = 0; v < kVertexCount; ++v) {
            if (v > 0 && std::abs(pts[v].z() - pts[v - 1].z()) > kTolerance) {
                require(v - offset == kLatitudeSizes[cls], "latitude class size");
                ++cls;
                offset = v;
                require(cls < 6, "too many latitude classes");
                m.ring_offsets_[cls] = v;
            }
            require(std::abs(pts[v].norm() - 1.0) < kTolerance, "vertex off the unit sphere");
            m.vertices_.push_back({v, pts[v], static_cast<Latitude>(cls)});
            m.ring_order_.push_back(v);
        }
        require(cls == 5 && kVertexCount - offset == 1, "latitude class layout");
        m.ring_offsets_[6] = kVertexCount;
    }

    // edges: each vertex joined to the vertices at minimal distance
    const double edge_len = min_pair_distance(pts);
    std::array<int, kVertexCount> degree{};
    for (int a = 0; a < kVertexCount; ++a)
        for (int b = a + 1; b < kVertexCount; ++b)
            if (std::abs((m.position(a) - m.position(b)).norm() - edge_len) < kTolerance) {
                require(degree[a] < 3 && degree[b] < 3, "vertex degree exceeds 3");
                m.neighbours_[a][degree[a]++] = b;
                m.neighbours_[b][degree[b]++] = a;
                m.edges_.emplace_back(a, b);
            }
    require(m.edges_.size() == kEdgeCount, "edge count");
    for (int d : degree)
        require(d == 3, "vertex degree is not 3");
    for (auto& n : m.neighbours_)
        std::sort(n.begin(), n.end());

    for (int v = 0; v < kVertexCount; ++v) {
        int found = -1;
        for (int w = 0; w < kVertexCount; ++w)
            if ((m.position(v) + m.position(w)).norm() < kTolerance) {
                require(found < 0, "ambiguous antipode");
                found = w;
            }
        require(found >= 0 && found != v, "missing antipode");
        m.antipode_[v] = found;
    }
    for (int v = 0; v < kVertexCount; ++v)
        require(m.antipode(m.antipode(v)) == v, "antipode is not an involution");

    // faces: the 5-cycles of the graph, each listed once from its smallest vertex
    for (int s = 0; s < kVertexCount; ++s)
        for (int a : m.neighbours(s)) {
            if (a < s)
                continue;
            for (int b : m.neighbours(a)) {
                if (b <= s || b == a)
                    continue;
                for (int c : m.neighbours(b)) {
                    if (c <= s || c == a)
                        continue;
                    for (int d : m.neighbours(c)) {
                        if (d <= s || d == b || d == a || d < a || !m.adjacent(d, s))
                            continue;
                        Face f{s, a, b, c, d};
                        const Vec3 centre = m.position(s) + m.position(a) + m.position(b) + m.position(c) +
                                            m.position(d);
                        const Vec3 turn = (m.position(a) - m.position(s)).cross(m.position(b) - m.position(a));
                        if (turn.dot(centre) < 0.0)
                            f = Face{s, d, c, b, a};
                        m.faces_.push_back(f);
                    }
                }
            }
        }
    std::sort(m.faces_.begin(), m.faces_.end());
    require(m.faces_.size() == kFaceCount, "face count");

    // orientation consistency: every directed edge is used by exactly one face
    std::set<std::pair<int, int>> directed;
    for (const auto& f : m.faces_)
        for (std::size_t k = 0; k < 5; ++k)
            require(directed.emplace(f[k], f[(k + 1) % 5]).second, "inconsistent face orientation");
    require(directed.size() == 2 * kEdgeCount, "faces do not cover every edge twice");

    std::array<int, kVertexCount> face_count{};
    for (int f = 0; f < kFaceCount; ++f)
        for (int v : m.faces_[f]) {
            auto& slot = face_count[v];
            require(slot < 3, "vertex on more than 3 faces");
            m.faces_of_[v][slot++] = f;
        }

    for (int f = 0; f < kFaceCount; ++f) {
        std::array<int, 5> image{};
        std::transform(m.faces_[f].begin(), m.faces_[f].end(), image.begin(),
                       [&](int v) { return m.antipode(v); });
        std::sort(image.begin(), image.end());
        int match = -1;
        for (int g = 0; g < kFaceCount; ++g) {
            std::array<int, 5> members = m.faces_[g];
            std::sort(members.begin(), members.end());
            if (members == image)
                match = g;
        }
        require(match >= 0, "antipodal image of a face is not a face");
        m.opposite_face_[f] = match;
    }

    // dual icosahedron
    m.dual_.vertices = place_on_sphere(textbook_icosahedron());
    require(m.dual_.vertices.size() == kIcosaVertexCount, "icosahedron vertex count");
    const double icosa_edge = min_pair_distance(m.dual_.vertices);
    auto icosa_adjacent = [&](int i, int j) {
        return std::abs((m.dual_.vertices[i] - m.dual_.vertices[j]).norm() - icosa_edge) < kTolerance;
    };
    for (int i = 0; i < kIcosaVertexCount; ++i)
        for (int j = i + 1; j < kIcosaVertexCount; ++j)
            for (int k = j + 1; k < kIcosaVertexCount; ++k)
                if (icosa_adjacent(i, j) && icosa_adjacent(j, k) && icosa_adjacent(i, k))
                    m.dual_.faces.push_back({i, j, k});
    require(m.dual_.faces.size() == kIcosaFaceCount, "icosahedron face count");

    std::array<bool, kVertexCount> hit{};
    for (int f = 0; f < kIcosaFaceCount; ++f) {
        const auto& tri = m.dual_.faces[f];
        const Vec3 dir = (m.dual_.vertices[tri[0]] + m.dual_.vertices[tri[1]] + m.dual_.vertices[tri[2]]).normalized();
        int match = -1;
        for (int v = 0; v < kVertexCount; ++v)
            if ((dir - m.position(v)).norm() < kTolerance)
                match = v;
        require(match >= 0 && !hit[match], "dual correspondence is not a bijection");
        hit[match] = true;
        m.dual_faces_[f] = match;
    }

    return m;
}

const PolytopeModel& canonical_model()
{
    static const PolytopeModel model = build_polytope();
    return model;
}

std::vector<DistanceClass> distance_spectrum(const PolytopeModel& model)
{
    std::vector<double> ds;
    ds.reserve(kVertexCount * (kVertexCount - 1) / 2);
    for (int a = 0; a < kVertexCount; ++a)
        for (int b = a + 1; b < kVertexCount; ++b)
            ds.push_back((model.position(a) - model.position(b)).norm());
    std::sort(ds.begin(), ds.end());

    std::vector<DistanceClass> out;
    for (double d : ds) {
        if (!out.empty() && d - out.back().distance < kTolerance)
            ++out.back().multiplicity;
        else
            out.push_back({d, 1});
    }
    return out;
}

double tetrahedron_edge(const PolytopeModel& model)
{
    const auto spectrum = distance_spectrum(model);
    if (spectrum.size() < 3)
        throw ConsistencyError("distance spectrum has fewer than 3 classes");
    return spectrum[2].distance;
}

bool is_regular_tetrahedron(const PolytopeModel& model, const std::array<VertexId, 4>& members)
{
    const double d0 = (model.position(members[0]) - model.position(members[1])).norm();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (std::abs((model.position(members[i]) - model.position(members[j])).norm() - d0) > kTolerance)
                return false;
    return d0 > kTolerance;
}

} // namespace dodeca
