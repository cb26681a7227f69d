#include "revsurf/angle_function.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace revsurf {

double AngleFunction::lipschitz_constant() const {
  const double h = spacing();
  double k = 0.0;
  for (std::size_t i = 0; i + 1 < theta.size(); ++i)
    k = std::max(k, std::abs(theta[i + 1] - theta[i]) / h);
  return k;
}

double AngleFunction::sample(double s) const {
  const int n = grid_count();
  const double h = spacing();
  if (s <= 0.0) return theta.front();
  if (s >= length) return theta.back();
  const int i = std::min(n - 1, static_cast<int>(s / h));
  const double t = (s - i * h) / h;
  return theta[i] * (1.0 - t) + theta[i + 1] * t;
}

AngleFunction read_curve(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("curve: empty input");
  double L = 0.0;
  long n = -1;
  {
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("L=", 0) == 0) L = std::stod(tok.substr(2));
      else if (tok.rfind("n=", 0) == 0) n = std::stol(tok.substr(2));
    }
  }
  if (!(L > 0.0) || n < 2)
    throw std::runtime_error("curve: bad header, expected \"L=<value> n=<count>\"");
  AngleFunction a;
  a.length = L;
  a.theta.resize(n + 1);
  for (long i = 0; i <= n; ++i) {
    double s, th;
    if (!(in >> s >> th)) throw std::runtime_error("curve: truncated sample list");
    a.theta[i] = th;
  }
  return a;
}

void write_curve(std::ostream& out, const AngleFunction& a) {
  const int n = a.grid_count();
  char buf[80];
  std::snprintf(buf, sizeof buf, "L=%.17g n=%d\n", a.length, n);
  out << buf;
  for (int i = 0; i <= n; ++i) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", a.grid_point(i), a.theta[i]);
    out << buf;
  }
}

AngleFunction load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file: " + path);
  // Sniff: JSON documents start with '{'.
  int first = in.peek();
  while (first == ' ' || first == '\n' || first == '\t' || first == '\r') {
    in.get();
    first = in.peek();
  }
  if (first == '{') {
    nlohmann::json doc;
    in >> doc;
    AngleFunction a;
    a.length = doc.at("length").get<double>();
    a.theta = doc.at("theta_samples").get<std::vector<double>>();
    if (a.theta.size() < 3 || !(a.length > 0.0))
      throw std::runtime_error("curve: bad structured document: " + path);
    return a;
  }
  return read_curve(in);
}

void save_curve_file(const std::string& path, const AngleFunction& a, bool as_json) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write curve file: " + path);
  if (as_json) {
    nlohmann::json doc;
    doc["length"] = a.length;
    doc["theta_samples"] = a.theta;
    out << doc.dump(2) << "\n";
  } else {
    write_curve(out, a);
  }
}

}  // namespace revsurf
