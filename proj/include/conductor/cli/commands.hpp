#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conductor/cli/workbench.hpp"
#include "conductor/torus.hpp"

namespace conductor::cli {

enum ExitCode : int { kSuccess = 0, kMismatch = 1, kPrecisionExhausted = 2 };

struct CommandResult {
    Json output;
    int exit_code = kSuccess;
};

Json report_json(const ConductorReport& r);

const std::vector<std::string>& example_names();

// Built-in pipelines comparing computed values with the known ones.
CommandResult run_examples(const std::string& name, std::optional<int> precision = std::nullopt);
CommandResult run_conductor(const Json& doc, const std::string& torus, const std::string& method,
                            std::optional<int> precision = std::nullopt);
CommandResult run_complex(const Json& doc, const std::string& name, std::optional<int> precision = std::nullopt);
CommandResult run_artin(const Json& doc, const std::string& lattice, const std::string& filtration,
                        std::optional<int> precision = std::nullopt);

// Runs `attempt` at `start`; if it runs out of precision, retries at larger
// precisions (doubling up to `ceiling`, then bisecting) and reports the
// least one that succeeds. Validation failures map to exit code 1.
CommandResult with_precision_search(const std::function<CommandResult(int)>& attempt, int start,
                                    int ceiling = 1024);

}  // namespace conductor::cli
