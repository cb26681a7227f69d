#include "revsurf/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace revsurf {

double trapezoid(const std::vector<double>& f, double h) {
  if (f.size() < 2) return 0.0;
  double acc = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) acc += f[i];
  return acc * h;
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& f, double h) {
  std::vector<double> out(f.size(), 0.0);
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    out[i + 1] = out[i] + 0.5 * h * (f[i] + f[i + 1]);
  return out;
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (!(b > a)) throw std::invalid_argument("tanh_sinh: empty interval");
  const double c = 0.5 * (b - a);
  const double m = 0.5 * (b + a);
  const double pi_half = 1.5707963267948966;

  // x(t) = m + c*tanh(pi/2 sinh t), weight w(t) = c*(pi/2)cosh t / cosh^2(pi/2 sinh t).
  // Evaluates f at x(t); returns 0 when the node has collapsed onto an endpoint.
  auto term = [&](double t) -> double {
    const double u = pi_half * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = c * pi_half * std::cosh(t) / (ch * ch);
    if (w <= 0.0 || !std::isfinite(w)) return 0.0;
    const double x = m + c * std::tanh(u);
    if (!(x > a && x < b)) return 0.0;
    const double v = f(x);
    return std::isfinite(v) ? v * w : 0.0;
  };

  const double t_max = 6.5;
  double h = 1.0;
  double weighted_sum = term(0.0);
  for (double t = h; t <= t_max; t += h) weighted_sum += term(t) + term(-t);
  double integral = h * weighted_sum;

  for (int level = 0; level < 11; ++level) {
    double mid = 0.0;
    for (double t = 0.5 * h; t <= t_max; t += h) mid += term(t) + term(-t);
    weighted_sum += mid;
    h *= 0.5;
    const double next = h * weighted_sum;
    const bool converged =
        level >= 2 && std::abs(next - integral) <= tol * std::max(1.0, std::abs(next));
    integral = next;
    if (converged) break;
  }
  return integral;
}

double log_beta(double x, double y) {
  return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

double beta(double x, double y) { return std::exp(log_beta(x, y)); }

}  // namespace revsurf
