#include "cli/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fbetti::cli {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + name + "' (expected text, json or csv)");
}

bool ReportRecord::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

// Integers that fit in a signed long are JSON numbers, larger ones decimal strings.
json encode(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return to_string(value);
}

json encode(const Rational& value) {
  json out;
  out["num"] = encode(value.num());
  out["den"] = encode(value.den());
  out["approx"] = value.approx();
  return out;
}

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("malformed report: " + what);
}

Integer decode_integer(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) malformed("bad integer string");
    return out;
  }
  malformed("expected integer");
}

Rational decode_rational(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) malformed("expected {num, den}");
  return Rational(decode_integer(j.at("num")), decode_integer(j.at("den")));
}

// Missing keys read as null; never bind to a temporary while iterating.
const json& field(const json& j, const char* key) {
  static const json null_value;
  auto it = j.find(key);
  return it == j.end() ? null_value : *it;
}

template <typename T>
json optional_value(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r.to_string();
  if (!r.is_integer()) os << " (~" << std::setprecision(6) << r.approx() << ")";
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string to_json(const ReportRecord& r) {
  json out;
  out["version"] = r.version;
  out["command"] = r.command;
  out["ring"] = optional_value(r.ring);
  out["p"] = optional_value(r.p);
  out["e"] = optional_value(r.e);
  out["q"] = optional_value(r.q);
  out["q_list"] = r.q_list;
  out["suites"] = r.suites;

  out["decompositions"] = json::array();
  for (const auto& table : r.decompositions) {
    json m = json::object();
    for (const auto& [key, value] : table.multiplicities) m[key] = encode(value);
    out["decompositions"].push_back({{"route", table.route}, {"multiplicities", m}});
  }
  out["route_diff"] = json::array();
  for (const auto& d : r.route_diff) {
    out["route_diff"].push_back({{"key", d.key}, {"paper", encode(d.paper)}, {"classes", encode(d.classes)}});
  }
  out["invariants"] = json::object();
  for (const auto& [key, value] : r.invariants) out["invariants"][key] = encode(value);
  out["counts"] = json::object();
  for (const auto& [key, value] : r.counts) out["counts"][key] = encode(value);

  out["table"] = json::array();
  for (const auto& row : r.table) {
    json fb = json::array();
    for (const auto& v : row.fbetti) fb.push_back(encode(v));
    out["table"].push_back({{"ring", row.ring},
                            {"s", encode(row.s)},
                            {"ehk", encode(row.ehk)},
                            {"fbetti_formula", row.fbetti_formula},
                            {"fbetti", fb}});
  }
  out["checks"] = json::array();
  for (const auto& c : r.checks) {
    out["checks"].push_back(
        {{"suite", c.suite}, {"name", c.name}, {"q", c.q}, {"passed", c.passed}, {"detail", c.detail}});
  }
  out["notes"] = r.notes;
  out["passed"] = r.passed();
  return out.dump(2) + "\n";
}

ReportRecord from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!j.is_object()) malformed("expected an object");
  try {
    ReportRecord r;
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.ring = optional_field<std::string>(j, "ring");
    r.p = optional_field<std::int64_t>(j, "p");
    r.e = optional_field<int>(j, "e");
    r.q = optional_field<std::int64_t>(j, "q");
    r.q_list = j.value("q_list", std::vector<std::int64_t>{});
    r.suites = j.value("suites", std::vector<std::string>{});
    for (const auto& t : field(j, "decompositions")) {
      RouteTable table{t.at("route").get<std::string>(), {}};
      for (const auto& [key, value] : t.at("multiplicities").items()) table.multiplicities[key] = decode_integer(value);
      r.decompositions.push_back(std::move(table));
    }
    for (const auto& d : field(j, "route_diff")) {
      r.route_diff.push_back(
          {d.at("key").get<std::string>(), decode_integer(d.at("paper")), decode_integer(d.at("classes"))});
    }
    for (const auto& [key, value] : field(j, "invariants").items()) {
      r.invariants[key] = decode_rational(value);
    }
    for (const auto& [key, value] : field(j, "counts").items()) r.counts[key] = decode_integer(value);
    for (const auto& row : field(j, "table")) {
      TableRow t{row.at("ring").get<std::string>(), decode_rational(row.at("s")), decode_rational(row.at("ehk")),
                 row.at("fbetti_formula").get<std::string>(), {}};
      for (const auto& v : row.at("fbetti")) t.fbetti.push_back(decode_rational(v));
      r.table.push_back(std::move(t));
    }
    for (const auto& c : field(j, "checks")) {
      r.checks.push_back({c.at("suite").get<std::string>(), c.at("name").get<std::string>(),
                          c.at("q").get<std::int64_t>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
    }
    r.notes = j.value("notes", std::vector<std::string>{});
    return r;
  } catch (const json::exception& e) {
    malformed(e.what());
  }
}

std::string to_text(const ReportRecord& r) {
  std::ostringstream os;
  os << "fbetti " << r.version << " " << r.command << "\n";
  if (r.ring) {
    os << "ring " << *r.ring;
    if (r.p) os << "  p=" << *r.p;
    if (r.e) os << "  e=" << *r.e;
    if (r.q) os << "  q=" << *r.q;
    if (!r.q_list.empty()) {
      os << "  q in {";
      for (std::size_t i = 0; i < r.q_list.size(); ++i) os << (i ? "," : "") << r.q_list[i];
      os << "}";
    }
    os << "\n";
  }

  if (!r.table.empty()) {
    const std::size_t n = r.table.front().fbetti.size();
    os << pad("ring", 12) << pad("s(R)", 8) << pad("e_HK(R)", 10) << pad("beta_i^F", 16);
    for (std::size_t i = 1; i <= n; ++i) os << pad("i=" + std::to_string(i), 10);
    os << "\n";
    for (const auto& row : r.table) {
      os << pad(row.ring, 12) << pad(row.s.to_string(), 8) << pad(row.ehk.to_string(), 10)
         << pad(row.fbetti_formula, 16);
      for (const auto& v : row.fbetti) os << pad(v.to_string(), 10);
      os << "\n";
    }
  }

  if (!r.decompositions.empty()) {
    std::set<std::string> keys;
    for (const auto& t : r.decompositions) {
      for (const auto& [k, v] : t.multiplicities) keys.insert(k);
    }
    os << "multiplicities\n  " << pad("class", 8);
    for (const auto& t : r.decompositions) os << pad(t.route, 12);
    os << "\n";
    for (const auto& k : keys) {
      os << "  " << pad(k, 8);
      for (const auto& t : r.decompositions) {
        auto it = t.multiplicities.find(k);
        os << pad(it == t.multiplicities.end() ? "-" : to_string(it->second), 12);
      }
      os << "\n";
    }
    if (r.decompositions.size() > 1) {
      if (r.route_diff.empty()) {
        os << "routes agree\n";
      } else {
        os << "routes differ:";
        for (const auto& d : r.route_diff) {
          os << " " << d.key << " paper=" << to_string(d.paper) << " classes=" << to_string(d.classes);
        }
        os << "\n";
      }
    }
  }

  if (!r.invariants.empty()) {
    os << "invariants\n";
    for (const auto& [k, v] : r.invariants) os << "  " << pad(k, 16) << rational_text(v) << "\n";
  }
  if (!r.counts.empty()) {
    os << "counts\n";
    for (const auto& [k, v] : r.counts) os << "  " << pad(k, 16) << to_string(v) << "\n";
  }
  if (!r.checks.empty()) {
    std::size_t failed = 0;
    os << "checks\n";
    for (const auto& c : r.checks) {
      failed += c.passed ? 0 : 1;
      os << "  " << (c.passed ? "PASS " : "FAIL ") << c.suite << " " << c.name;
      if (c.q) os << " q=" << c.q;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << "\n";
    }
    os << "result: " << (failed ? "FAIL" : "PASS") << " (" << r.checks.size() - failed << "/" << r.checks.size()
       << " checks passed)\n";
  }
  for (const auto& note : r.notes) os << "note: " << note << "\n";
  return os.str();
}

std::string to_csv(const ReportRecord& r) {
  std::ostringstream os;
  if (!r.table.empty()) {
    const std::size_t n = r.table.front().fbetti.size();
    os << "ring,s,ehk,fbetti_formula";
    for (std::size_t i = 1; i <= n; ++i) os << ",fbetti_" << i;
    os << "\n";
    for (const auto& row : r.table) {
      os << csv_field(row.ring) << "," << row.s.to_string() << "," << row.ehk.to_string() << ","
         << csv_field(row.fbetti_formula);
      for (const auto& v : row.fbetti) os << "," << v.to_string();
      os << "\n";
    }
    return os.str();
  }
  os << "section,name,route,q,value\n";
  for (const auto& t : r.decompositions) {
    for (const auto& [k, v] : t.multiplicities) {
      os << "multiplicity," << csv_field(k) << "," << t.route << "," << r.q.value_or(0) << "," << to_string(v) << "\n";
    }
  }
  for (const auto& d : r.route_diff) {
    os << "route_diff," << csv_field(d.key) << ",paper," << r.q.value_or(0) << "," << to_string(d.paper) << "\n";
    os << "route_diff," << csv_field(d.key) << ",classes," << r.q.value_or(0) << "," << to_string(d.classes) << "\n";
  }
  for (const auto& [k, v] : r.invariants) os << "invariant," << csv_field(k) << ",," << r.q.value_or(0) << "," << v.to_string() << "\n";
  for (const auto& [k, v] : r.counts) os << "count," << csv_field(k) << ",," << r.q.value_or(0) << "," << to_string(v) << "\n";
  for (const auto& c : r.checks) {
    os << "check," << csv_field(c.suite + ":" + c.name) << ",," << c.q << "," << (c.passed ? "PASS" : "FAIL") << "\n";
  }
  return os.str();
}

std::string render(const ReportRecord& record, Format format) {
  switch (format) {
    case Format::Text:
      return to_text(record);
    case Format::Json:
      return to_json(record);
    case Format::Csv:
      return to_csv(record);
  }
  return {};
}

}  // namespace fbetti::cli
