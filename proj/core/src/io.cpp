#include <dodeca/io.hpp>

#include <Eigen/Geometry>
#include <nlohmann/json.hpp>

#include <charconv>
#include <sstream>

namespace dodeca {

using json = nlohmann::ordered_json;

namespace {

json colouring_object(const Colouring& c)
{
    json doc = json::object();
    doc["labelling"] = kLabelling;
    doc["colours"] = c.to_array();
    return doc;
}

Colouring colouring_from_object(const json& doc)
{
    if (!doc.is_object())
        throw FormatError("colouring: expected a JSON object");
    if (!doc.contains("labelling") || !doc["labelling"].is_string())
        throw FormatError("colouring: missing \"labelling\"");
    if (doc["labelling"].get<std::string>() != kLabelling)
        throw FormatError("colouring: unsupported labelling \"" + doc["labelling"].get<std::string>() + "\"");
    if (!doc.contains("colours") || !doc["colours"].is_array())
        throw FormatError("colouring: missing \"colours\" array");
    std::vector<int> values;
    for (const auto& v : doc["colours"]) {
        if (!v.is_number_integer())
            throw FormatError("colouring: colours must be integers");
        values.push_back(v.get<int>());
    }
    try {
        return Colouring(values);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

json parse(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

} // namespace

std::string colouring_to_json(const Colouring& c)
{
    return colouring_object(c).dump() + "\n";
}

Colouring colouring_from_json(std::string_view text)
{
    return colouring_from_object(parse(text));
}

std::string enumeration_to_json(std::span<const Colouring> colourings)
{
    std::string out = "[\n";
    for (std::size_t i = 0; i < colourings.size(); ++i) {
        out += "  " + colouring_object(colourings[i]).dump();
        out += i + 1 < colourings.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

std::vector<Colouring> enumeration_from_json(std::string_view text)
{
    const json doc = parse(text);
    if (!doc.is_array())
        throw FormatError("enumeration: expected a JSON array");
    std::vector<Colouring> out;
    for (const auto& item : doc)
        out.push_back(colouring_from_object(item));
    return out;
}

std::string polytope_to_json(const PolytopeModel& model)
{
    json doc = json::object();
    json vertices = json::array();
    for (const auto& v : model.vertices())
        vertices.push_back({v.position.x(), v.position.y(), v.position.z()});
    doc["vertices"] = std::move(vertices);
    doc["faces"] = model.faces();
    doc["antipode"] = model.antipode_map();
    return doc.dump(2) + "\n";
}

std::string compound_to_json(const Compound& compound)
{
    json doc = json::object();
    doc["compound"] = to_string(compound.label);
    json tets = json::array();
    for (const auto& t : compound.tetrahedra)
        tets.push_back(t.members);
    doc["tetrahedra"] = std::move(tets);
    return doc.dump(2) + "\n";
}

std::string group_to_json(std::span<const VertexPermutation> group)
{
    json doc = json::array();
    for (const auto& g : group) {
        json images = json::array();
        for (auto i : g.images())
            images.push_back(static_cast<int>(i));
        doc.push_back(std::move(images));
    }
    return doc.dump() + "\n";
}

std::string parity_report_json(const PolytopeModel& model, const Colouring& c)
{
    json faces = json::array();
    for (const auto& fp : face_parity_signature(model, c)) {
        json entry = json::object();
        entry["face"] = fp.face;
        entry["vertices"] = model.faces()[fp.face];
        entry["cyclic_order"] = fp.cyclic_order;
        entry["parity"] = parity_name(fp.parity);
        faces.push_back(std::move(entry));
    }
    json doc = json::object();
    const auto shared = colouring_parity(model, c);
    doc["parity"] = shared ? json(parity_name(*shared)) : json(nullptr);
    doc["faces"] = std::move(faces);
    return doc.dump(2) + "\n";
}

std::string orbit_report_json(std::string_view subgroup, std::size_t order, std::span<const Orbit> orbits)
{
    json doc = json::object();
    doc["subgroup"] = subgroup;
    doc["order"] = order;
    doc["orbit_count"] = orbits.size();
    json sizes = json::array();
    json reps = json::array();
    for (const auto& orbit : orbits) {
        sizes.push_back(orbit.size());
        reps.push_back(orbit.front().to_array());
    }
    doc["orbit_sizes"] = std::move(sizes);
    doc["representatives"] = std::move(reps);
    return doc.dump(2) + "\n";
}

std::string format_double(double x)
{
    if (x == 0.0)
        x = 0.0; // drop the sign of negative zero
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

std::string write_off(const OffMesh& mesh)
{
    std::string out = mesh.vertex_colours.empty() ? "OFF\n" : "COFF\n";
    out += std::to_string(mesh.vertices.size()) + " " + std::to_string(mesh.faces.size()) + " " +
           std::to_string(mesh.edge_count) + "\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const auto& p = mesh.vertices[i];
        out += format_double(p.x()) + " " + format_double(p.y()) + " " + format_double(p.z());
        if (!mesh.vertex_colours.empty()) {
            for (double ch : mesh.vertex_colours.at(i))
                out += " " + format_double(ch);
            out += " 1";
        }
        out += "\n";
    }
    for (std::size_t i = 0; i < mesh.faces.size(); ++i) {
        const auto& f = mesh.faces[i];
        out += std::to_string(f.size());
        for (int v : f)
            out += " " + std::to_string(v);
        if (!mesh.face_colours.empty())
            for (double ch : mesh.face_colours.at(i))
                out += " " + format_double(ch);
        out += "\n";
    }
    return out;
}

namespace {

std::vector<std::string> content_lines(std::string_view text)
{
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            lines.push_back(line);
    }
    return lines;
}

template <class T>
std::vector<T> numbers(const std::string& line)
{
    std::istringstream in(line);
    std::vector<T> out;
    T x;
    while (in >> x)
        out.push_back(x);
    if (!in.eof())
        throw FormatError("OFF: unparseable line \"" + line + "\"");
    return out;
}

} // namespace

OffMesh read_off(std::string_view text)
{
    const auto lines = content_lines(text);
    if (lines.size() < 2)
        throw FormatError("OFF: missing header");
    const std::string header = numbers<std::string>(lines[0]).at(0);
    const bool coloured = header == "COFF";
    if (header != "OFF" && !coloured)
        throw FormatError("OFF: bad magic \"" + header + "\"");

    const auto counts = numbers<long>(lines[1]);
    if (counts.size() != 3 || counts[0] < 0 || counts[1] < 0)
        throw FormatError("OFF: bad count line");
    const auto nv = static_cast<std::size_t>(counts[0]);
    const auto nf = static_cast<std::size_t>(counts[1]);
    if (lines.size() < 2 + nv + nf)
        throw FormatError("OFF: truncated file");

    OffMesh mesh;
    mesh.edge_count = static_cast<int>(counts[2]);
    for (std::size_t i = 0; i < nv; ++i) {
        const auto xs = numbers<double>(lines[2 + i]);
        if (xs.size() != (coloured ? 7u : 3u))
            throw FormatError("OFF: bad vertex line " + std::to_string(i));
        mesh.vertices.emplace_back(xs[0], xs[1], xs[2]);
        if (coloured)
            mesh.vertex_colours.push_back({xs[3], xs[4], xs[5]});
    }
    for (std::size_t i = 0; i < nf; ++i) {
        const auto xs = numbers<double>(lines[2 + nv + i]);
        if (xs.empty())
            throw FormatError("OFF: empty face line");
        const auto n = static_cast<std::size_t>(xs[0]);
        if (xs.size() != 1 + n && xs.size() != 4 + n)
            throw FormatError("OFF: bad face line " + std::to_string(i));
        std::vector<int> face;
        for (std::size_t k = 0; k < n; ++k) {
            const auto idx = static_cast<long>(xs[1 + k]);
            if (idx < 0 || static_cast<std::size_t>(idx) >= nv)
                throw FormatError("OFF: face index out of range");
            face.push_back(static_cast<int>(idx));
        }
        mesh.faces.push_back(std::move(face));
        if (xs.size() == 4 + n)
            mesh.face_colours.push_back({xs[1 + n], xs[2 + n], xs[3 + n]});
    }
    if (!mesh.face_colours.empty() && mesh.face_colours.size() != mesh.faces.size())
        throw FormatError("OFF: face colours given for some faces only");
    return mesh;
}

const std::array<Rgb, kColourCount>& palette()
{
    static const std::array<Rgb, kColourCount> colours{{
        {1.0, 1.0, 1.0},
        {1.0, 0.85, 0.0},
        {0.85, 0.1, 0.1},
        {0.1, 0.3, 0.9},
        {0.1, 0.1, 0.1},
    }};
    return colours;
}

OffMesh dodecahedron_mesh(const PolytopeModel& model)
{
    OffMesh mesh;
    for (const auto& v : model.vertices())
        mesh.vertices.push_back(v.position);
    for (const auto& f : model.faces())
        mesh.faces.emplace_back(f.begin(), f.end());
    mesh.edge_count = kEdgeCount;
    return mesh;
}

OffMesh compound_mesh(const PolytopeModel& model, const Compound& compound)
{
    OffMesh mesh;
    for (const auto& v : model.vertices())
        mesh.vertices.push_back(v.position);
    for (std::size_t t = 0; t < compound.tetrahedra.size(); ++t) {
        const auto& m = compound.tetrahedra[t].members;
        for (std::size_t skip = 0; skip < 4; ++skip) {
            std::vector<int> tri;
            for (std::size_t k = 0; k < 4; ++k)
                if (k != skip)
                    tri.push_back(m[k]);
            const Vec3& a = model.position(tri[0]);
            const Vec3& b = model.position(tri[1]);
            const Vec3& c = model.position(tri[2]);
            // tetrahedra are centred at the origin, so outward means away from it
            if ((b - a).cross(c - a).dot(a + b + c) < 0.0)
                std::swap(tri[1], tri[2]);
            mesh.faces.push_back(std::move(tri));
            mesh.face_colours.push_back(palette()[t]);
        }
    }
    mesh.edge_count = 6 * static_cast<int>(compound.tetrahedra.size());
    return mesh;
}

OffMesh colouring_mesh(const PolytopeModel& model, const Colouring& c)
{
    OffMesh mesh = dodecahedron_mesh(model);
    for (VertexId v = 0; v < kVertexCount; ++v)
        mesh.vertex_colours.push_back(palette()[c[v] - 1]);
    return mesh;
}

} // namespace dodeca
