#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coorbit/json_writer.hpp"

namespace coorbit {

inline constexpr int kSchemaVersion = 1;

// Stable exit codes across all subcommands.
inline constexpr int kExitOk = 0;           // computed / verified
inline constexpr int kExitVerdictFalse = 1; // verification ran and failed
inline constexpr int kExitUsage = 2;        // usage or input error

/// One command's output: canonicalized inputs echoed back, the result
/// payload, and both renderings. The JSON form is deterministic (sorted
/// keys, no timestamps); the text form uses q-degree tables.
struct OutputEnvelope {
    std::string command;
    JsonValue inputs;
    JsonValue result;
    int schema_version = kSchemaVersion;
    std::string text;    // human rendering (not part of the JSON document)
    int exit_code = kExitOk;
};

JsonValue to_json(const OutputEnvelope& envelope);

/// Full command dispatch: `args` is argv without the program name. Results
/// go to `out`, diagnostics to `err`. Returns the process exit code.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace coorbit
