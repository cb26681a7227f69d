#pragma once

#include <map>
#include <string>
#include <vector>

namespace revsurf {

// One verified inequality: lhs >= rhs up to `tolerance`, with the slack
// recorded as `deficit` = lhs - rhs.  `notes` carries auxiliary scalars
// (ratios, constants, sweep parameters) for the CSV/JSON emitters.
struct InequalityReport {
  std::string id;
  std::string surface;
  double lhs = 0.0;
  double rhs = 0.0;
  double deficit = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int n = 0;
  double delta = 0.0;
  std::map<std::string, double> notes;
};

InequalityReport make_report(const std::string& id, const std::string& surface,
                             double lhs, double rhs, double tolerance, int n = 0,
                             double delta = 0.0);

std::string reports_to_csv(const std::vector<InequalityReport>& reports);
std::string reports_to_json(const std::vector<InequalityReport>& reports);

// Generic flat record emitters used by the CLI `quantities`/`flow` commands.
using Record = std::vector<std::pair<std::string, double>>;
std::string records_to_csv(const std::vector<std::pair<std::string, Record>>& rows);
std::string records_to_json(const std::vector<std::pair<std::string, Record>>& rows);

std::string format_double(double v);

}  // namespace revsurf
