#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncv/algebra/rational_function.hpp"
#include "ncv/check.hpp"

namespace ncv::cli {

using Json = nlohmann::ordered_json;

/// One output line: a value (a number or a polynomial in canonical form) or a
/// check outcome. An empty verdict means the row is a plain value.
struct Row {
  std::string name;
  std::string value;
  std::string latex;
  bool polynomial = false;
  std::string verdict;
};

struct Report {
  std::string subcommand;
  Json inputs = Json::object();
  std::vector<Row> rows;
  std::optional<double> seconds;

  void polynomial(std::string name, const RationalFunction& f) {
    rows.push_back({std::move(name), f.to_string(), f.to_latex(), true, {}});
  }

  void value(std::string name, std::string text, std::string verdict = {}) {
    std::string latex = text;
    rows.push_back({std::move(name), std::move(text), std::move(latex), false, std::move(verdict)});
  }

  void checks(const CheckReport& rep, const std::string& prefix = {}) {
    for (const auto& r : rep.results) {
      std::string verdict = r.passed ? "pass" : (r.notable ? "note" : "fail");
      value(prefix + r.name, r.detail, verdict);
    }
  }

  bool failed() const {
    for (const auto& r : rows)
      if (r.verdict == "fail" || r.verdict == "different") return true;
    return false;
  }
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string latex_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$' || c == '{' || c == '}') out += '\\';
    out += c;
  }
  return out;
}

inline bool single_value(const Report& r) { return r.rows.size() == 1 && r.rows[0].verdict.empty(); }

inline std::string verdict_word(const std::string& v) {
  if (v == "pass") return "PASS";
  if (v == "fail") return "FAIL";
  if (v == "note") return "NOTE";
  if (v == "equal") return "EQUAL";
  if (v == "different") return "DIFFERENT";
  return v;
}

}  // namespace detail

inline Json to_json(const Report& r) {
  Json j;
  j["subcommand"] = r.subcommand;
  j["inputs"] = r.inputs;
  Json results = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["name"] = row.name;
    x[row.polynomial ? "polynomial" : "value"] = row.value;
    x["verdict"] = row.verdict.empty() ? Json(nullptr) : Json(row.verdict);
    results.push_back(std::move(x));
  }
  j["results"] = std::move(results);
  j["timing"] = r.seconds ? Json(*r.seconds) : Json(nullptr);
  return j;
}

inline std::string render(const Report& r, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << to_json(r).dump(2) << "\n";
  } else if (format == "csv") {
    os << "name,value,verdict\n";
    for (const auto& row : r.rows)
      os << detail::csv_field(row.name) << "," << detail::csv_field(row.value) << "," << row.verdict << "\n";
    if (r.seconds) os << "timing," << *r.seconds << ",\n";
  } else if (format == "latex") {
    if (detail::single_value(r)) {
      os << r.rows[0].latex << "\n";
    } else {
      os << "\\begin{tabular}{ll}\n";
      for (const auto& row : r.rows) {
        os << detail::latex_text(row.name) << " & ";
        if (row.polynomial)
          os << "$" << row.latex << "$";
        else if (row.verdict.empty())
          os << detail::latex_text(row.value);
        else
          os << detail::verdict_word(row.verdict);
        os << " \\\\\n";
      }
      os << "\\end{tabular}\n";
    }
  } else {
    if (detail::single_value(r)) {
      os << r.rows[0].value << "\n";
    } else {
      int checks = 0, failed = 0;
      for (const auto& row : r.rows) {
        if (row.verdict.empty()) {
          os << row.name << " = " << row.value << "\n";
          continue;
        }
        ++checks;
        failed += row.verdict == "fail" || row.verdict == "different";
        os << detail::verdict_word(row.verdict) << "  " << row.name;
        if (!row.value.empty()) os << ": " << row.value;
        os << "\n";
      }
      if (checks) os << (failed ? std::to_string(failed) + " of " : "all ") << checks << " checks "
                     << (failed ? "failed" : "passed") << "\n";
    }
    if (r.seconds) os << "time " << *r.seconds << " s\n";
  }
  return os.str();
}

}  // namespace ncv::cli
