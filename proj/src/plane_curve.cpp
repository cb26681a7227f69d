#include "revsurf/plane_curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "revsurf/constants.hpp"
#include "revsurf/quadrature.hpp"

namespace revsurf {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

PlaneCurve reconstruct(const AngleFunction& a, double closure_tol_rel) {
  if (a.grid_count() < 2 || !(a.length > 0.0))
    throw std::invalid_argument("reconstruct: need length > 0 and at least 3 samples");
  PlaneCurve c;
  c.angle = a;
  const int n = a.grid_count();
  const double h = a.spacing();

  std::vector<double> cs(n + 1), sn(n + 1);
  for (int i = 0; i <= n; ++i) {
    cs[i] = std::cos(a.theta[i]);
    sn[i] = std::sin(a.theta[i]);
  }
  c.x = cumulative_trapezoid(cs, h);
  c.z = cumulative_trapezoid(sn, h);

  const double gap = std::hypot(c.x.back(), c.z.back());
  const double turn = a.theta.back() - a.theta.front();
  const double whole_turns = std::round(turn / (2.0 * kPi));
  c.closed = gap <= closure_tol_rel * a.length &&
             std::abs(turn - 2.0 * kPi * whole_turns) < 1e-3 && whole_turns != 0.0;

  c.kappa.resize(n + 1);
  for (int i = 1; i < n; ++i)
    c.kappa[i] = (a.theta[i + 1] - a.theta[i - 1]) / (2.0 * h);
  if (c.closed) {
    // Periodic wrap: theta continues past the seam shifted by the total turn.
    c.kappa[0] = (a.theta[1] - (a.theta[n - 1] - turn)) / (2.0 * h);
    c.kappa[n] = c.kappa[0];
  } else {
    c.kappa[0] = (a.theta[1] - a.theta[0]) / h;
    c.kappa[n] = (a.theta[n] - a.theta[n - 1]) / h;
  }
  return c;
}

double bending_energy(const PlaneCurve& c, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("bending_energy: p must be >= 1");
  std::vector<double> f(c.kappa.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::pow(std::abs(c.kappa[i]), p);
  return trapezoid(f, c.angle.spacing());
}

double enclosed_area(const PlaneCurve& c) {
  if (!c.closed) throw std::invalid_argument("enclosed_area: curve is not closed");
  double acc = 0.0;
  const std::size_t n = c.x.size() - 1;
  for (std::size_t i = 0; i < n; ++i)
    acc += c.x[i] * c.z[i + 1] - c.x[i + 1] * c.z[i];
  return 0.5 * std::abs(acc);
}

double width(const PlaneCurve& c, double phi) {
  const double ux = std::cos(phi), uz = std::sin(phi);
  double lo = 1e300, hi = -1e300;
  for (std::size_t i = 0; i < c.x.size(); ++i) {
    const double d = ux * c.x[i] + uz * c.z[i];
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return hi - lo;
}

double min_width(const PlaneCurve& c) {
  const int grid = 720;
  int best = 0;
  double best_w = 1e300;
  for (int k = 0; k < grid; ++k) {
    const double w = width(c, kPi * k / grid);
    if (w < best_w) {
      best_w = w;
      best = k;
    }
  }
  // Golden-section refinement over the bracketing neighbors.
  double lo = kPi * (best - 1) / grid, hi = kPi * (best + 1) / grid;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
  double fa = width(c, a), fb = width(c, b);
  for (int it = 0; it < 60; ++it) {
    if (fa < fb) {
      hi = b; b = a; fb = fa;
      a = hi - gr * (hi - lo);
      fa = width(c, a);
    } else {
      lo = a; a = b; fa = fb;
      b = lo + gr * (hi - lo);
      fb = width(c, b);
    }
  }
  return std::min({best_w, fa, fb});
}

bool is_convex(const PlaneCurve& c) {
  const double slack = 1e-9 * std::max(1.0, c.angle.lipschitz_constant());
  for (std::size_t i = 0; i + 1 < c.angle.theta.size(); ++i)
    if (c.angle.theta[i + 1] < c.angle.theta[i] - slack) return false;
  const double turn = c.angle.theta.back() - c.angle.theta.front();
  return std::abs(turn - 2.0 * kPi) <= 1e-6;
}

InequalityReport gage_report(const PlaneCurve& c) {
  if (!c.closed) throw std::invalid_argument("gage_report: curve is not closed");
  if (!is_convex(c)) throw std::invalid_argument("gage_report: curve is not convex");
  const double lhs = bending_energy(c, 2.0);
  const double area = enclosed_area(c);
  const double rhs = kPi * c.angle.length / area;
  auto r = make_report("gage", "plane-curve", lhs, rhs, 1e-9, c.angle.grid_count());
  r.notes["area"] = area;
  r.notes["length"] = c.angle.length;
  return r;
}

InequalityReport strip_energy_bound(const PlaneCurve& c, double p) {
  if (!c.closed) throw std::invalid_argument("strip_energy_bound: curve is not closed");
  const double r_width = min_width(c);
  const double lhs = bending_energy(c, p);
  const ConstantsTable t = constants(p);
  const double rhs = t.c_tilde_p * std::pow(r_width, 1.0 - p);
  auto rep = make_report("strip-energy", "plane-curve", lhs, rhs, 1e-9,
                         c.angle.grid_count());
  rep.notes["p"] = p;
  rep.notes["width"] = r_width;
  rep.notes["c_tilde_p"] = t.c_tilde_p;
  return rep;
}

PlaneCurve extremal_curve(double p, int n) {
  if (!(p > 1.0)) throw std::invalid_argument("extremal_curve: need p > 1");
  if (n < 8 || n % 4 != 0)
    throw std::invalid_argument("extremal_curve: n must be a multiple of 4");

  const double a_limit = 0.5 * beta(0.5, (2.0 * p - 1.0) / (2.0 * p));

  // Quarter-arc table.  With theta = -pi/2 + vartheta the arclength element is
  // ds = (1/a_limit) sin(vartheta)^(-1/p) dvartheta; the substitution
  // vartheta = u^q with q = p/(p-1) removes the junction singularity.
  const double q = p / (p - 1.0);
  const int m = 20000;
  const double u_end = std::pow(0.5 * kPi, 1.0 / q);
  std::vector<double> integrand(m + 1), theta_tab(m + 1);
  for (int j = 0; j <= m; ++j) {
    const double u = u_end * j / m;
    const double vt = std::pow(u, q);
    theta_tab[j] = -0.5 * kPi + vt;
    if (j == 0) {
      integrand[j] = q / a_limit;  // limit of sin(u^q)^(-1/p) q u^(q-1)
    } else {
      integrand[j] =
          q * std::pow(u, q - 1.0) * std::pow(std::sin(vt), -1.0 / p) / a_limit;
    }
  }
  std::vector<double> s_tab = cumulative_trapezoid(integrand, u_end / m);
  const double quarter = s_tab.back();
  const double L = 4.0 * quarter;

  AngleFunction a;
  a.length = L;
  a.theta.resize(n + 1);
  const double h = L / n;
  int j = 0;
  for (int i = 0; i <= n / 4; ++i) {
    const double s = std::min(i * h, quarter);
    while (j + 1 <= m && s_tab[j + 1] < s) ++j;
    if (i == 0) {
      a.theta[i] = -0.5 * kPi;
    } else if (i == n / 4) {
      a.theta[i] = 0.0;
    } else {
      const double t = (s - s_tab[j]) / (s_tab[j + 1] - s_tab[j]);
      a.theta[i] = theta_tab[j] * (1.0 - t) + theta_tab[j + 1] * t;
    }
  }
  // |cos theta| is even about the graph bottom (s = L/4) and about the
  // junction (s = L/2); theta extends by odd reflection and by pi-shift.
  for (int i = n / 4 + 1; i <= n / 2; ++i) a.theta[i] = -a.theta[n / 2 - i + 0];
  for (int i = n / 2 + 1; i <= n; ++i) a.theta[i] = kPi - a.theta[n - i];
  return reconstruct(a);
}

}  // namespace revsurf
