#pragma once

#include "mpj/io.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mpj::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_axiom_failure = 1,
    exit_malformed = 2,
    exit_not_split = 3,
    exit_theorem_failure = 4,
    exit_disagreement = 5,
    exit_hypotheses_unmet = 6,
};

/// Everything that went wrong in one command run.
struct Outcome {
    bool malformed = false;
    bool axiom_failure = false;
    bool split_error = false;
    bool theorem_failure = false;
    bool disagreement = false;
    bool hypotheses_unmet = false;
};

/// Precedence: malformed, axiom failure, split error, theorem failure,
/// disagreement, hypotheses unmet, ok.
int exit_code(const Outcome& o);

/// In-process fault injection, used by the test suite to exercise exit codes
/// that valid inputs cannot reach. Not reachable from the command line.
struct FaultHooks {
    std::function<void(DecompositionReport&)> tamper_decomposition;
    std::function<void(bool& oracle_simple)> tamper_oracle;
};

struct PipelineOptions {
    std::uint64_t seed = kDefaultSmokeSeed;
    Exec exec = Exec::parallel;
    /// Run connections and decomposition after the split checks.
    bool decompose = false;
    const FaultHooks* hooks = nullptr;
};

struct PipelineResult {
    ReportFile report;
    Outcome outcome;
    std::optional<RootDecomposition> rd;
    std::optional<ConnectionContext> ctx;
};

/// verify_axioms, then the split stage, then optionally decomposition. Stops
/// after the first failing stage.
PipelineResult run_pipeline(const AlgebraFile& f, const PipelineOptions& opts);

/// Entry point behind the `mpj` executable. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const FaultHooks* hooks = nullptr);

} // namespace mpj::cli
