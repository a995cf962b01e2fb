#ifndef DODECA_CLI_COMMANDS_HPP
#define DODECA_CLI_COMMANDS_HPP

#include <dodeca/chroma.hpp>
#include <dodeca/polytope.hpp>
#include <dodeca/symmetry.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dodeca::cli {

enum ExitCode : int {
    kSuccess = 0,
    kDomainFailure = 1, // invalid colouring, failed verification, I/O
    kUsageError = 2,
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Subgroup of S5 x {1,-1} given by name or by generators.
///
///   trivial | S5 | A5 | S5xC2 | A5xC2 | C2
///   <gen>[;<gen>...]   with  <gen> = <cycles>[:<sign>]
///
/// Cycles use colours 1..5, e.g. "(1 2 3)(4 5)" or "(1,2)"; "()" or "id"
/// is the identity relabelling. Sign is +1 (default) or -1. Example:
/// "(1 2 3 4 5);(1 2):-1".
struct SubgroupSpec {
    std::string text;
    std::vector<ColourSymmetry> generators;
};

/// Throws UsageError on malformed text.
SubgroupSpec parse_subgroup_spec(std::string_view text);

/// Closure of the generators.
std::vector<ColourSymmetry> subgroup_elements(const SubgroupSpec& spec);

struct Check {
    std::string name;
    bool passed;
    std::string measured;
};

/// Every library invariant and acceptance check, in report order.
std::vector<Check> run_verification(const PolytopeModel& model);

struct CommandResult {
    int exit_code = kSuccess;
    std::string output;
};

CommandResult cmd_verify(bool json);
CommandResult cmd_enumerate(const std::filesystem::path& out, std::string_view format);
CommandResult cmd_orbits(std::string_view subgroup, bool json);
CommandResult cmd_classify(const std::filesystem::path& in, bool json);

/// `what` is dodecahedron | compound-A | compound-B | colouring; `format`
/// is off | json. Writes to `out`, or returns the text when `out` is empty.
/// A colouring comes from `in`, defaulting to the first seed colouring.
CommandResult cmd_export(std::string_view what, std::string_view format,
                         const std::optional<std::filesystem::path>& out,
                         const std::optional<std::filesystem::path>& in);

/// Parses arguments and runs one subcommand; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dodeca::cli

#endif // DODECA_CLI_COMMANDS_HPP
