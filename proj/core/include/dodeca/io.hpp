#ifndef DODECA_IO_HPP
#define DODECA_IO_HPP

#include <dodeca/chroma.hpp>
#include <dodeca/compound.hpp>
#include <dodeca/polytope.hpp>
#include <dodeca/symmetry.hpp>

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dodeca {

/// Malformed or schema-violating input text.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Labelling tag carried by every colouring document.
inline constexpr std::string_view kLabelling = "canonical-v1";

// JSON documents. Output is byte-stable; see docs/formats.md.

std::string colouring_to_json(const Colouring& c);
Colouring colouring_from_json(std::string_view text);

/// One colouring object per line inside a JSON array, in the given order.
std::string enumeration_to_json(std::span<const Colouring> colourings);
std::vector<Colouring> enumeration_from_json(std::string_view text);

std::string polytope_to_json(const PolytopeModel& model);
std::string compound_to_json(const Compound& compound);
std::string group_to_json(std::span<const VertexPermutation> group);
std::string parity_report_json(const PolytopeModel& model, const Colouring& c);
std::string orbit_report_json(std::string_view subgroup, std::size_t order, std::span<const Orbit> orbits);

// OFF meshes

using Rgb = std::array<double, 3>;

struct OffMesh {
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;
    /// empty, or one colour per face (written after the face indices)
    std::vector<Rgb> face_colours;
    /// empty, or one colour per vertex (written as COFF with alpha 1)
    std::vector<Rgb> vertex_colours;
    /// written into the header; OFF readers may ignore it
    int edge_count = 0;
};

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

std::string write_off(const OffMesh& mesh);
OffMesh read_off(std::string_view text);

OffMesh dodecahedron_mesh(const PolytopeModel& model);

/// Four outward triangles per tetrahedron, one face colour per tetrahedron.
OffMesh compound_mesh(const PolytopeModel& model, const Compound& compound);

/// Dodecahedron with vertex colours taken from a fixed five-colour palette.
OffMesh colouring_mesh(const PolytopeModel& model, const Colouring& c);

const std::array<Rgb, kColourCount>& palette();

} // namespace dodeca

#endif // DODECA_IO_HPP
