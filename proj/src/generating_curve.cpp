#include "revsurf/generating_curve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "revsurf/quadrature.hpp"

namespace revsurf {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

GeneratingCurve validate_generating_curve(const AngleFunction& a,
                                          const ValidateOptions& opt) {
  if (a.grid_count() < 4 || !(a.length > 0.0))
    throw std::invalid_argument("generating curve: need length > 0 and >= 5 samples");

  const int n = a.grid_count();
  const double L = a.length;

  if (std::abs(a.theta.front()) > opt.pole_angle_tol)
    throw std::invalid_argument("bad pole tangents: theta(0) != 0");
  const double end = a.theta.back();
  const double k = std::round((end - kPi) / (2.0 * kPi));
  if (std::abs(end - kPi - 2.0 * kPi * k) > opt.pole_angle_tol)
    throw std::invalid_argument("bad pole tangents: theta(L) not in pi + 2 pi Z");

  GeneratingCurve g;
  g.angle = a;
  const double h = a.spacing();
  std::vector<double> cs(n + 1), sn(n + 1);
  for (int i = 0; i <= n; ++i) {
    cs[i] = std::cos(a.theta[i]);
    sn[i] = std::sin(a.theta[i]);
  }
  g.x = cumulative_trapezoid(cs, h);
  g.z = cumulative_trapezoid(sn, h);
  g.lipschitz = a.lipschitz_constant();
  g.delta_pole = opt.delta_pole >= 0.0 ? opt.delta_pole : 3.0 * h;

  if (std::abs(g.x.back()) > opt.closure_tol_rel * L)
    throw std::invalid_argument(
        "pinched profile: profile does not return to the axis (|x(L)| = " +
        std::to_string(std::abs(g.x.back())) + ")");
  for (int i = 1; i < n; ++i) {
    // Strictly positive in the open interior; the first and last interior
    // samples sit next to the poles and may only graze zero within rounding.
    const double floor_x = (i <= 1 || i >= n - 1) ? -1e-12 * L : 1e-12 * L;
    if (g.x[i] <= floor_x)
      throw std::invalid_argument("pinched profile: x <= 0 at interior sample " +
                                  std::to_string(i));
  }
  if (g.z.back() < -opt.orientation_tol_rel * L)
    throw std::invalid_argument("orientation violation: z(L) < 0");
  return g;
}

}  // namespace revsurf
