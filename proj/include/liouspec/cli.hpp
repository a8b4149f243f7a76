#pragma once

#include "liouspec/config.hpp"
#include "liouspec/verify.hpp"

namespace liouspec {

/// Subcommand bodies shared by the command-line tool and the test suite.
/// Exit codes: 0 success, 1 parameter/config error (no output file written),
/// 2 truncation failure, 3 failed verification. Human-readable diagnostics go
/// to stderr.
int cmd_spectrum(const RunConfig& config);
int cmd_sweep(const RunConfig& config);
int cmd_correlate(const RunConfig& config);
int cmd_verify(const RunConfig& config, const VerifyHooks* hooks = nullptr);
int cmd_steady(const RunConfig& config);
int cmd_gap(const RunConfig& config);
int cmd_fieldtrace(const RunConfig& config);

}  // namespace liouspec
