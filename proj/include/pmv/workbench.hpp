#pragma once

#include "pmv/algebra.hpp"
#include "pmv/ordered_group.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pmv::workbench {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

struct Caps {
    std::size_t max_carrier = 64;
    int max_dim = 12;
    int sample_bound = 25;
};

struct Diagnostic {
    std::string field;
    std::string message;
};

/// Builds an algebra from its JSON description:
///   {"kind":"chain","k":2}
///   {"kind":"gamma","group":"zn","n":2,"unit":[2,2]}
///   {"kind":"gamma","group":"z2lex","unit":[1,0]}
///   {"kind":"product","factors":[...]}
///   {"kind":"table","carrier":[...],"oplus":[[...]],"neg_minus":[...],
///    "neg_tilde":[...],"zero":"0","one":"1"}
/// Table entries are carrier names. Throws std::invalid_argument with the
/// offending field in the message.
AlgebraPtr algebra_from_json(const Json& spec);

/// Serializes an algebra back to its canonical JSON description.
Json algebra_to_json(const Algebra& algebra);

/// Schema check plus an axiom precheck on finite algebras. Empty result
/// means the job is runnable.
std::vector<Diagnostic> validate(const Json& job);

struct RunResult {
    int exit_code = 0;  // 0 ok, 1 malformed, 2 property failures, 3 cap exceeded
    Json report;
    std::string error;  // set for exit codes 1 and 3
};

/// Executes the analyses named in the job and assembles the deterministic
/// report (same job, byte-identical report). Independent analyses run under
/// a small async fan-out capped by PMV_THREADS.
RunResult run(const Json& job);

/// File-level driver used by the command line: reads the job, runs it,
/// writes the report JSON and optional CSV tables. Output paths given here
/// override the job's "output" block.
int run_files(const std::string& job_path, const std::string& out_path,
              const std::string& csv_dir, std::string& message);

int validate_file(const std::string& job_path, std::string& message);

}  // namespace pmv::workbench
