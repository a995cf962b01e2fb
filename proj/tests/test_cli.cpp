#include <dodeca_cli/commands.hpp>

#include <dodeca/io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dodeca;
using namespace dodeca::cli;

namespace {

namespace fs = std::filesystem;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "dodeca");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("dodeca_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path file(const std::string& name) const { return dir_ / name; }

    fs::path write(const std::string& name, const std::string& text) const
    {
        std::ofstream(file(name), std::ios::binary) << text;
        return file(name);
    }

    static std::string slurp(const fs::path& p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    fs::path dir_;
};

const PolytopeModel& model() { return canonical_model(); }

} // namespace

TEST(SubgroupSpecParse, NamedSubgroupOrders)
{
    const std::vector<std::pair<std::string, std::size_t>> expected{
        {"trivial", 1}, {"S5", 120}, {"A5", 60}, {"S5xC2", 240}, {"A5xC2", 120}, {"C2", 2}};
    for (const auto& [name, order] : expected)
        EXPECT_EQ(subgroup_elements(parse_subgroup_spec(name)).size(), order) << name;
}

TEST(SubgroupSpecParse, Generators)
{
    EXPECT_EQ(subgroup_elements(parse_subgroup_spec("(1 2 3 4 5)")).size(), 5u);
    EXPECT_EQ(subgroup_elements(parse_subgroup_spec("(1,2)(3,4) ; (1 3)(2 4)")).size(), 4u);
    EXPECT_EQ(subgroup_elements(parse_subgroup_spec("(1 2):-1")).size(), 2u);
    EXPECT_EQ(subgroup_elements(parse_subgroup_spec("(1 2 3);():-1")).size(), 6u);
    EXPECT_EQ(subgroup_elements(parse_subgroup_spec("id:+1")).size(), 1u);

    const auto spec = parse_subgroup_spec("(1 2):-1");
    ASSERT_EQ(spec.generators.size(), 1u);
    EXPECT_EQ(spec.generators[0].sign, -1);
    EXPECT_EQ(spec.generators[0].relabel(1), 2);
}

TEST(SubgroupSpecParse, RejectsMalformed)
{
    for (const char* bad : {"", "  ", "(1 2", "(1 6)", "(1 2)(2 3)", "(1 2):2", "A6", "(1 2);", "x(1 2)"})
        EXPECT_THROW(parse_subgroup_spec(bad), UsageError) << '"' << bad << '"';
}

TEST(Verify, PassesWithRequiredLines)
{
    const auto r = cmd_verify(false);
    EXPECT_EQ(r.exit_code, kSuccess) << r.output;
    EXPECT_NE(r.output.find("240"), std::string::npos);
    EXPECT_NE(r.output.find("orbits under A5 x {1}: 4"), std::string::npos);
    EXPECT_NE(r.output.find("inscribed tetrahedra: 10"), std::string::npos);
    EXPECT_EQ(r.output.find("FAIL"), std::string::npos);
}

TEST(Verify, JsonReport)
{
    const auto r = cmd_verify(true);
    EXPECT_EQ(r.exit_code, kSuccess);
    EXPECT_EQ(r.output.rfind("{\n  \"passed\": true,", 0), 0u);
}

TEST_F(TempDir, EnumerateIsByteStable)
{
    ASSERT_EQ(invoke({"enumerate", "--out", file("a.json").string()}).code, kSuccess);
    ASSERT_EQ(invoke({"enumerate", "--out", file("b.json").string(), "--format", "json"}).code, kSuccess);
    const auto a = slurp(file("a.json"));
    EXPECT_EQ(a, slurp(file("b.json")));
    const auto all = enumeration_from_json(a);
    EXPECT_EQ(all.size(), 240u);
    for (const auto& c : all)
        EXPECT_TRUE(is_valid(model(), c));
}

TEST_F(TempDir, EnumerateErrors)
{
    const auto unwritable = invoke({"enumerate", "--out", (file("missing") / "x.json").string()});
    EXPECT_EQ(unwritable.code, kDomainFailure);
    EXPECT_NE(unwritable.err.find("missing"), std::string::npos);
    EXPECT_EQ(invoke({"enumerate", "--out", file("x").string(), "--format", "csv"}).code, kUsageError);
    EXPECT_EQ(invoke({"enumerate"}).code, kUsageError);
}

TEST(Orbits, NamedSubgroups)
{
    const auto trivial = cmd_orbits("trivial", false);
    EXPECT_NE(trivial.output.find("orbits: 240\n"), std::string::npos);
    EXPECT_NE(trivial.output.find("|H|: 1\n"), std::string::npos);

    const auto a5 = cmd_orbits("A5", false);
    EXPECT_NE(a5.output.find("orbits: 4\n"), std::string::npos);
    EXPECT_NE(a5.output.find("orbit sizes: 60 60 60 60\n"), std::string::npos);

    const auto g = cmd_orbits("S5xC2", false);
    EXPECT_NE(g.output.find("orbits: 1\n"), std::string::npos);
    EXPECT_NE(g.output.find("orbit sizes: 240\n"), std::string::npos);
}

TEST(Orbits, RepresentativesAreOrbitMinima)
{
    const auto r = cmd_orbits("A5", true);
    EXPECT_EQ(r.exit_code, kSuccess);
    const auto all = enumerate_all(model());
    EXPECT_NE(r.output.find("\"orbit_count\": 4"), std::string::npos);
    // the smallest colouring overall leads the first orbit
    std::string first;
    for (VertexId v = 0; v < kVertexCount; ++v)
        first += (v ? ",\n" : "") + std::string("      ") + std::to_string(all.front()[v]);
    EXPECT_NE(r.output.find(first), std::string::npos) << r.output;
}

TEST(Orbits, UnparseableSpecIsUsageError)
{
    const auto r = invoke({"orbits", "--subgroup", "(1 2"});
    EXPECT_EQ(r.code, kUsageError);
    EXPECT_FALSE(r.err.empty());
}

TEST_F(TempDir, ClassifySeeds)
{
    const auto [a, b] = seed_colourings(model());
    const auto ra = invoke({"classify", "--in", write("a.json", colouring_to_json(a)).string()});
    EXPECT_EQ(ra.code, kSuccess);
    EXPECT_NE(ra.out.find("valid: yes\ncompound: A\nparity: even\nzigzag: left-right\n"), std::string::npos)
        << ra.out;

    const auto rb = invoke({"classify", "--in", write("b.json", colouring_to_json(b)).string(), "--json"});
    EXPECT_EQ(rb.code, kSuccess);
    EXPECT_NE(rb.out.find("\"compound\": \"B\""), std::string::npos);
    EXPECT_NE(rb.out.find("\"parity\": \"odd\""), std::string::npos);
}

TEST_F(TempDir, ClassifyOddRelabelKeepsCompoundFlipsParity)
{
    const auto a = seed_colourings(model()).first;
    const Colouring swapped = act({ColourPermutation::from_cycles({{0, 1}}), 1}, a, model());
    const auto r = invoke({"classify", "--in", write("s.json", colouring_to_json(swapped)).string()});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_NE(r.out.find("compound: A\nparity: odd\n"), std::string::npos) << r.out;
}

TEST_F(TempDir, ClassifyInvalid)
{
    const auto r = invoke({"classify", "--in", write("c.json", colouring_to_json(Colouring::constant(1))).string()});
    EXPECT_EQ(r.code, kDomainFailure);
    EXPECT_EQ(r.out.rfind("INVALID: face 0", 0), 0u) << r.out;

    EXPECT_EQ(invoke({"classify", "--in", write("bad.json", "{\"colours\": 3}").string()}).code, kDomainFailure);
    EXPECT_EQ(invoke({"classify", "--in", file("absent.json").string()}).code, kDomainFailure);
}

TEST_F(TempDir, ExportDodecahedronOff)
{
    const auto r = invoke({"export", "--what", "dodecahedron", "--format", "off"});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_EQ(r.out.rfind("OFF\n20 12 30\n", 0), 0u);
    const auto mesh = read_off(r.out);
    EXPECT_EQ(mesh.vertices.size(), 20u);
    EXPECT_EQ(mesh.faces.size(), 12u);
}

TEST_F(TempDir, ExportCompounds)
{
    for (const char* what : {"compound-A", "compound-B"}) {
        const auto out = file(std::string(what) + ".off");
        ASSERT_EQ(invoke({"export", "--what", what, "--format", "off", "--out", out.string()}).code, kSuccess);
        const auto mesh = read_off(slurp(out));
        EXPECT_EQ(mesh.faces.size(), 20u);
        for (const auto& f : mesh.faces)
            EXPECT_EQ(f.size(), 3u);
    }
    const auto j = invoke({"export", "--what", "compound-B", "--format", "json"});
    EXPECT_EQ(j.out.rfind("{\n  \"compound\": \"B\",", 0), 0u) << j.out;
}

TEST_F(TempDir, ExportColouringRoundTrip)
{
    const auto b = seed_colourings(model()).second;
    const auto in = write("b.json", colouring_to_json(b));
    const auto out = file("copy.json");
    ASSERT_EQ(invoke({"export", "--what", "colouring", "--format", "json", "--in", in.string(), "--out",
                      out.string()})
                  .code,
              kSuccess);
    EXPECT_EQ(slurp(out), slurp(in));
    EXPECT_EQ(colouring_from_json(slurp(out)), b);

    const auto coff = invoke({"export", "--what", "colouring", "--format", "off"});
    EXPECT_EQ(coff.out.rfind("COFF\n", 0), 0u);
}

TEST(Export, BadSelector)
{
    EXPECT_EQ(invoke({"export", "--what", "cube", "--format", "off"}).code, kUsageError);
    EXPECT_EQ(invoke({"export", "--what", "dodecahedron", "--format", "stl"}).code, kUsageError);
    EXPECT_THROW(cmd_export("cube", "json", std::nullopt, std::nullopt), UsageError);
}

TEST(Run, UsageErrors)
{
    EXPECT_EQ(invoke({}).code, kUsageError);
    EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
    EXPECT_EQ(invoke({"--help"}).code, kSuccess);
}
