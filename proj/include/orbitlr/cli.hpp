#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "orbitlr/matrixlab.hpp"
#include "orbitlr/serialize.hpp"

namespace orbitlr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;

/// What one invocation produced; rendered as a table or, with --json, as this object.
struct CommandResult {
    std::string command;
    json inputs;
    json payload;
    std::optional<Verdict> verdict;

    json to_json() const;
};

/// Exit code for a result: verdicts map to 0/1/2, plain successes to 0.
int exit_code(const CommandResult& result);

/// Budget from ORBITLR_BUDGET, or kDefaultBudget when unset. Throws InvalidArgument on garbage.
std::uint64_t budget_from_env();

/// Runs the command line `args` (args[0] is the program name). Output goes to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace orbitlr::cli
