#pragma once

#include <string>

#include "invkit/jobspec.hpp"

namespace invkit {

/// Executes one job and returns the result document. Identical jobs yield
/// byte-identical documents. Throws ValidationError / InternalError.
std::string run_job(const JobSpec& job);

/// CLI wrapper: prints the result to `out` on success; on error prints a
/// short error document to `err`. Returns the process exit status
/// (0 ok, 1 validation error, 2 internal assertion failure).
int run_cli(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace invkit
