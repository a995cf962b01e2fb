#include <dodeca_cli/commands.hpp>

#include <dodeca/compound.hpp>
#include <dodeca/io.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace dodeca::cli {

namespace {

using json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size())))
        throw IoError("cannot write " + path.string());
}

std::string colours_text(const Colouring& c)
{
    std::string out = "[";
    for (VertexId v = 0; v < kVertexCount; ++v)
        out += (v ? "," : "") + std::to_string(c[v]);
    return out + "]";
}

template <class Range>
std::string spaced(const Range& values)
{
    std::string out;
    for (const auto& v : values)
        out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

} // namespace

CommandResult cmd_verify(bool as_json)
{
    const auto checks = run_verification(canonical_model());
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
    CommandResult result{failed == 0 ? kSuccess : kDomainFailure, {}};

    if (as_json) {
        json doc{{"passed", failed == 0}, {"checks", json::array()}};
        for (const auto& c : checks)
            doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"measured", c.measured}});
        result.output = doc.dump(2) + "\n";
        return result;
    }
    std::ostringstream out;
    for (const auto& c : checks)
        out << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.measured << "\n";
    if (failed == 0)
        out << "all " << checks.size() << " checks passed\n";
    else
        out << failed << " of " << checks.size() << " checks failed\n";
    result.output = out.str();
    return result;
}

CommandResult cmd_enumerate(const std::filesystem::path& out, std::string_view format)
{
    if (format != "json")
        throw UsageError("enumerate: unsupported format \"" + std::string(format) + "\" (expected json)");
    const auto all = enumerate_all(canonical_model());
    write_file(out, enumeration_to_json(all));
    return {kSuccess, "wrote " + std::to_string(all.size()) + " colourings to " + out.string() + "\n"};
}

CommandResult cmd_orbits(std::string_view subgroup, bool as_json)
{
    const auto spec = parse_subgroup_spec(subgroup);
    const auto H = subgroup_elements(spec);
    const auto& model = canonical_model();
    const auto orbits = orbit_partition(enumerate_all(model), H, model);

    if (as_json)
        return {kSuccess, orbit_report_json(spec.text, H.size(), orbits)};

    std::vector<std::size_t> sizes;
    for (const auto& o : orbits)
        sizes.push_back(o.size());
    std::ostringstream out;
    out << "subgroup: " << spec.text << "\n"
        << "|H|: " << H.size() << "\n"
        << "orbits: " << orbits.size() << "\n"
        << "orbit sizes: " << spaced(sizes) << "\n"
        << "representatives:\n";
    for (const auto& o : orbits)
        out << "  " << colours_text(o.front()) << "\n";
    return {kSuccess, out.str()};
}

CommandResult cmd_classify(const std::filesystem::path& in, bool as_json)
{
    const auto& model = canonical_model();
    const Colouring c = colouring_from_json(read_file(in));

    if (const auto bad = first_violated_face(model, c)) {
        const Face& f = model.faces()[*bad];
        std::vector<int> colours;
        for (VertexId v : f)
            colours.push_back(c[v]);
        if (as_json) {
            json doc{{"valid", false},
                     {"violated_face", {{"face", *bad}, {"vertices", f}, {"colours", colours}}}};
            return {kDomainFailure, doc.dump(2) + "\n"};
        }
        return {kDomainFailure, "INVALID: face " + std::to_string(*bad) + " (vertices " + spaced(f) +
                                    ") has colours " + spaced(colours) + "\n"};
    }

    const auto cls = classify_colouring(model, c);
    const auto [a, b] = compounds(model);
    const Compound& comp = cls.compound == CompoundLabel::A ? a : b;
    const auto parity = colouring_parity(model, c);
    const auto hand = working_handedness(model, c);
    const auto signature = face_parity_signature(model, c);

    if (as_json) {
        json doc{{"valid", true},
                 {"compound", to_string(cls.compound)},
                 {"parity", parity ? parity_name(*parity) : "mixed"},
                 {"zigzag", hand ? to_string(*hand) : "none"},
                 {"colour_classes", json::array()},
                 {"faces", json::array()}};
        for (std::size_t k = 0; k < 5; ++k)
            doc["colour_classes"].push_back({{"colour", k + 1},
                                             {"vertices", cls.partition.classes[k]},
                                             {"tetrahedron", cls.tetrahedron_of_colour[k]}});
        for (const auto& fp : signature)
            doc["faces"].push_back(
                {{"face", fp.face}, {"cyclic_order", fp.cyclic_order}, {"parity", parity_name(fp.parity)}});
        return {kSuccess, doc.dump(2) + "\n"};
    }

    std::ostringstream out;
    out << "valid: yes\n"
        << "compound: " << to_string(cls.compound) << "\n"
        << "parity: " << (parity ? parity_name(*parity) : "mixed") << "\n"
        << "zigzag: " << (hand ? to_string(*hand) : "none") << "\n"
        << "colour classes:\n";
    for (std::size_t k = 0; k < 5; ++k) {
        const auto t = static_cast<std::size_t>(cls.tetrahedron_of_colour[k]);
        out << "  " << k + 1 << ": " << spaced(comp.tetrahedra[t].members) << "  (tetrahedron " << to_string(cls.compound)
            << t << ")\n";
    }
    out << "faces:\n";
    for (const auto& fp : signature)
        out << "  " << fp.face << ": " << spaced(fp.cyclic_order) << "  " << parity_name(fp.parity) << "\n";
    return {kSuccess, out.str()};
}

CommandResult cmd_export(std::string_view what, std::string_view format,
                         const std::optional<std::filesystem::path>& out,
                         const std::optional<std::filesystem::path>& in)
{
    if (format != "off" && format != "json")
        throw UsageError("export: unsupported format \"" + std::string(format) + "\" (expected off or json)");
    const bool off = format == "off";
    const auto& model = canonical_model();

    std::string text;
    if (what == "dodecahedron") {
        text = off ? write_off(dodecahedron_mesh(model)) : polytope_to_json(model);
    } else if (what == "compound-A" || what == "compound-B") {
        const auto [a, b] = compounds(model);
        const Compound& comp = what == "compound-A" ? a : b;
        text = off ? write_off(compound_mesh(model, comp)) : compound_to_json(comp);
    } else if (what == "colouring") {
        const Colouring c = in ? colouring_from_json(read_file(*in)) : seed_colourings(model).first;
        text = off ? write_off(colouring_mesh(model, c)) : colouring_to_json(c);
    } else {
        throw UsageError("export: unknown selector \"" + std::string(what) +
                         "\" (expected dodecahedron, compound-A, compound-B or colouring)");
    }

    if (!out)
        return {kSuccess, text};
    write_file(*out, text);
    return {kSuccess, "wrote " + out->string() + "\n"};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Vertex 5-colourings of the regular dodecahedron", "dodeca"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string path, format = "json", what, subgroup;
    std::string export_out, export_in;

    auto* verify = app.add_subcommand("verify", "Run every invariant and acceptance check");
    verify->add_flag("--json", as_json, "Machine-readable report");

    auto* enumerate = app.add_subcommand("enumerate", "Write all valid colourings");
    enumerate->add_option("--out", path, "Output file")->required();
    enumerate->add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));

    auto* orbits = app.add_subcommand("orbits", "Orbits of a subgroup of S5 x {1,-1}");
    orbits->add_option("--subgroup", subgroup, "trivial|S5|A5|S5xC2|A5xC2|C2 or generators")->required();
    orbits->add_flag("--json", as_json, "Machine-readable report");

    auto* classify = app.add_subcommand("classify", "Classify a colouring file");
    classify->add_option("--in", path, "Colouring JSON file")->required();
    classify->add_flag("--json", as_json, "Machine-readable report");

    auto* exporter = app.add_subcommand("export", "Export meshes and documents");
    exporter->add_option("--what", what, "dodecahedron|compound-A|compound-B|colouring")->required();
    exporter->add_option("--format", format, "off|json")->required();
    exporter->add_option("--out", export_out, "Output file (default: stdout)");
    exporter->add_option("--in", export_in, "Colouring JSON file for --what colouring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        CommandResult result;
        if (*verify)
            result = cmd_verify(as_json);
        else if (*enumerate)
            result = cmd_enumerate(path, format);
        else if (*orbits)
            result = cmd_orbits(subgroup, as_json);
        else if (*classify)
            result = cmd_classify(path, as_json);
        else
            result = cmd_export(what, format, export_out.empty() ? std::nullopt : std::optional<std::filesystem::path>(export_out),
                                export_in.empty() ? std::nullopt : std::optional<std::filesystem::path>(export_in));
        out << result.output;
        return result.exit_code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomainFailure;
    }
}

} // namespace dodeca::cli
