#include <sstream>

#include <json.hpp>

#include "connsets/verify.hpp"

namespace connsets {

namespace {

using nlohmann::ordered_json;

ordered_json row_json(const ReportRow& row) {
  ordered_json j;
  j["item"] = row.item;
  j["n"] = row.n;
  j["expected"] = row.expected ? ordered_json(*row.expected) : ordered_json(nullptr);
  j["formula"] = row.formula;
  j["observed"] = row.observed ? ordered_json(*row.observed) : ordered_json(nullptr);
  j["status"] = to_string(row.status);
  ordered_json who = ordered_json::array();
  for (const auto& a : row.attainers) {
    ordered_json x;
    x["certificate"] = a.certificate;
    x["family"] = a.family ? ordered_json(*a.family) : ordered_json(nullptr);
    if (a.vertex) x["vertex"] = *a.vertex;
    who.push_back(x);
  }
  j["attainers"] = who;
  if (!row.note.empty()) j["note"] = row.note;
  return j;
}

ordered_json report_json(const VerificationReport& r, bool with_runtime) {
  ordered_json j;
  j["claim"] = r.claim;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["status"] = to_string(r.status);
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) rows.push_back(row_json(row));
  j["rows"] = rows;
  j["failures"] = r.failures;
  if (with_runtime) j["runtime_ms"] = std::chrono::duration<double, std::milli>(r.runtime).count();
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string opt_count(const std::optional<Count>& c) { return c ? std::to_string(*c) : std::string{}; }

}  // namespace

std::string to_json(const VerificationReport& r, bool with_runtime) {
  return report_json(r, with_runtime).dump(2) + "\n";
}

std::string to_json(const std::vector<VerificationReport>& rs, bool with_runtime) {
  ordered_json all = ordered_json::array();
  for (const auto& r : rs) all.push_back(report_json(r, with_runtime));
  return all.dump(2) + "\n";
}

std::string to_csv(const std::vector<VerificationReport>& rs) {
  std::ostringstream out;
  out << "claim,n,item,expected,observed,status\n";
  for (const auto& r : rs)
    for (const auto& row : r.rows)
      out << csv_field(r.claim) << ',' << row.n << ',' << csv_field(row.item) << ',' << opt_count(row.expected)
          << ',' << opt_count(row.observed) << ',' << to_string(row.status) << '\n';
  return out.str();
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << r.claim << " n=" << r.n_min;
  if (r.n_max != r.n_min) out << ".." << r.n_max;
  out << ": " << to_string(r.status) << '\n';
  for (const auto& row : r.rows) {
    out << "  " << row.item << " (n=" << row.n << "): observed " << (row.observed ? std::to_string(*row.observed) : "-");
    if (row.expected) out << ", expected " << *row.expected;
    if (!row.formula.empty()) out << " [" << row.formula << "]";
    out << " " << to_string(row.status) << '\n';
    if (!row.note.empty()) out << "    " << row.note << '\n';
  }
  for (const auto& f : r.failures) out << "  failure: " << f << '\n';
  return out.str();
}

}  // namespace connsets
