#pragma once

#include "diffmod/json_io.hpp"

namespace diffmod {

struct JobOptions {
    long order = 16;  // truncation order for series expansions
    long window = 12; // tau-exponent window
};

// Dispatch a job object {"cmd": ..., ...} to the analyses. Domain errors
// propagate as DomainError, malformed jobs as ParseError.
Json run_job(const Json& job, const JobOptions& opts = {});

// String-in/string-out wrapper used by the bindings: returns the report and
// an exit code (0 ok, 1 domain error, 2 parse error) without throwing.
std::pair<std::string, int> run_job_text(const std::string& text, const JobOptions& opts = {},
                                         int indent = 2);

} // namespace diffmod
