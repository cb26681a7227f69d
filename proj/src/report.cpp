#include "revsurf/report.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"

namespace revsurf {

InequalityReport make_report(const std::string& id, const std::string& surface,
                             double lhs, double rhs, double tolerance, int n,
                             double delta) {
  InequalityReport r;
  r.id = id;
  r.surface = surface;
  r.lhs = lhs;
  r.rhs = rhs;
  r.deficit = lhs - rhs;
  r.tolerance = tolerance;
  r.pass = r.deficit >= -tolerance;
  r.n = n;
  r.delta = delta;
  return r;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string reports_to_csv(const std::vector<InequalityReport>& reports) {
  // Collect the union of note keys so every row has the same columns.
  std::set<std::string> keys;
  for (const auto& r : reports)
    for (const auto& [k, v] : r.notes) keys.insert(k);

  std::ostringstream out;
  out << "id,surface,lhs,rhs,deficit,tolerance,pass,n,delta";
  for (const auto& k : keys) out << "," << k;
  out << "\n";
  for (const auto& r : reports) {
    out << r.id << "," << r.surface << "," << format_double(r.lhs) << ","
        << format_double(r.rhs) << "," << format_double(r.deficit) << ","
        << format_double(r.tolerance) << "," << (r.pass ? 1 : 0) << "," << r.n
        << "," << format_double(r.delta);
    for (const auto& k : keys) {
      auto it = r.notes.find(k);
      out << "," << (it == r.notes.end() ? "" : format_double(it->second));
    }
    out << "\n";
  }
  return out.str();
}

std::string reports_to_json(const std::vector<InequalityReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j;
    j["id"] = r.id;
    j["surface"] = r.surface;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["deficit"] = r.deficit;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["n"] = r.n;
    j["delta"] = r.delta;
    for (const auto& [k, v] : r.notes) j["notes"][k] = v;
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::string records_to_csv(const std::vector<std::pair<std::string, Record>>& rows) {
  std::ostringstream out;
  if (rows.empty()) return "";
  out << "name";
  for (const auto& [k, v] : rows.front().second) out << "," << k;
  out << "\n";
  for (const auto& [name, rec] : rows) {
    out << name;
    for (const auto& [k, v] : rec) out << "," << format_double(v);
    out << "\n";
  }
  return out.str();
}

std::string records_to_json(const std::vector<std::pair<std::string, Record>>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [name, rec] : rows) {
    nlohmann::json j;
    j["name"] = name;
    for (const auto& [k, v] : rec) j[k] = v;
    arr.push_back(j);
  }
  return arr.dump(2);
}

}  // namespace revsurf
