#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/report.hpp"

namespace fbetti::cli {

/// Bad flags or inputs that violate a command's preconditions; exit code 2.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitUsage = 2;

std::string version_string();

/// s, e_HK and beta_i^F (i = 1..max_i) for scroll:2..scroll:max_delta, scroll21, veronese2.
ReportRecord cmd_table1(int max_delta = 10, int max_i = 4);

/// route is "paper", "classes" or "both" ("both" keeps whichever routes are legal).
ReportRecord cmd_decompose(const std::string& ring, std::int64_t p, int e, const std::string& route = "both",
                           int max_i = 4);

/// Suites: counts, iso, relations, syzygy (alias syzygies), colength, convergence,
/// betti, all.
std::vector<std::string> canonical_suites(const std::vector<std::string>& names);

ReportRecord cmd_verify(const std::string& ring, const std::vector<std::int64_t>& q_list,
                        const std::vector<std::string>& suites);

/// 0 iff every check passed.
inline int exit_status(const ReportRecord& record) { return record.passed() ? 0 : 1; }

}  // namespace fbetti::cli
