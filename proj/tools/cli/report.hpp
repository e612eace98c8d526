#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fbetti/arith.hpp"

namespace fbetti::cli {

enum class Format { Text, Json, Csv };

/// Throws std::invalid_argument for anything but "text", "json", "csv".
Format parse_format(const std::string& name);

struct RouteTable {
  std::string route;
  /// Keyed by class tag: "M(l)", "R", "A", "B", "C", "BorC", "D".
  std::map<std::string, Integer> multiplicities;

  friend bool operator==(const RouteTable&, const RouteTable&) = default;
};

struct RouteDiff {
  std::string key;
  Integer paper;
  Integer classes;

  friend bool operator==(const RouteDiff&, const RouteDiff&) = default;
};

struct TableRow {
  std::string ring;
  Rational s;
  Rational ehk;
  std::string fbetti_formula;
  /// Entry i - 1 holds beta_i^F.
  std::vector<Rational> fbetti;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct CheckResult {
  std::string suite;
  std::string name;
  std::int64_t q = 0;  // 0 when the check does not depend on q
  bool passed = false;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ReportRecord {
  std::string version;
  std::string command;
  std::optional<std::string> ring;
  std::optional<std::int64_t> p;
  std::optional<int> e;
  std::optional<std::int64_t> q;
  std::vector<std::int64_t> q_list;
  std::vector<std::string> suites;
  std::vector<RouteTable> decompositions;
  std::vector<RouteDiff> route_diff;
  std::map<std::string, Rational> invariants;
  std::map<std::string, Integer> counts;
  std::vector<TableRow> table;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  /// True iff every check passed.
  bool passed() const;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

std::string to_json(const ReportRecord& record);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
ReportRecord from_json(const std::string& text);

std::string to_text(const ReportRecord& record);
std::string to_csv(const ReportRecord& record);
std::string render(const ReportRecord& record, Format format);

}  // namespace fbetti::cli
