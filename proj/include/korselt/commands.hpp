#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "korselt/report.hpp"

namespace korselt {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitViolations = 3;

/// What a subcommand produced: the report, its exit code, and diagnostics
/// meant for stderr (never part of the report body).
struct CommandResult {
    ReportDocument report;
    int exit_code = kExitOk;
    std::vector<std::string> messages;
};

/// Korselt-base predicate with one row per prime factor.
/// Input errors (parse failures, non-squarefree n) become exit code 2.
CommandResult cmd_base_check(std::int64_t n, std::string_view alpha);

/// domain is "z", "qz" or "q".
CommandResult cmd_set(std::int64_t n, std::string_view domain);

/// Runs one claim over p <= p_max, q <= q_max; exit 3 when any row is violated.
CommandResult cmd_verify(std::string_view claim, std::int64_t p_max, std::int64_t q_max, unsigned jobs = 0);

/// which is 1 or 2; exit 0 only on an exact match with the embedded rows.
CommandResult cmd_tables(int which, unsigned jobs = 0);

}  // namespace korselt
