#include "revsurf/families.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "revsurf/quadrature.hpp"

namespace revsurf {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double get_param(const std::map<std::string, double>& p, const std::string& key,
                 double fallback, bool required = false) {
  auto it = p.find(key);
  if (it != p.end()) return it->second;
  if (required) throw std::invalid_argument("make_family: missing parameter " + key);
  return fallback;
}

// ---- segment bodies (mollified polygons of revolution) --------------------

struct Segment {
  double angle = 0.0;
  double len = 0.0;
};

// Exact quantities of the singular (unmollified) revolved polygon.
void segment_targets(const std::vector<Segment>& segs,
                     std::map<std::string, double>& t) {
  double L = 0.0, m_line = 0.0, m_corner = 0.0;
  double iu = 0.0, icos = 0.0, ineg = 0.0;
  std::vector<double> vx{0.0}, vz{0.0};
  double x = 0.0, z = 0.0;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const auto& s = segs[k];
    L += s.len;
    m_line += s.len * std::abs(std::sin(s.angle));
    iu += s.len * std::sqrt(std::max(0.0, 1.0 - std::sin(s.angle)));
    icos += s.len * std::abs(std::cos(s.angle));
    ineg += s.len * std::max(0.0, -std::sin(s.angle));
    x += s.len * std::cos(s.angle);
    z += s.len * std::sin(s.angle);
    vx.push_back(x);
    vz.push_back(z);
    if (k + 1 < segs.size())
      m_corner += std::abs(segs[k + 1].angle - s.angle) * x;
  }
  double d2 = 0.0;
  for (std::size_t i = 0; i < vx.size(); ++i)
    for (std::size_t j = 0; j < vx.size(); ++j) {
      const double sx = vx[i] + vx[j], dz = vz[i] - vz[j];
      d2 = std::max(d2, sx * sx + dz * dz);
    }
  t["total_abs_H"] = kPi * (m_line + m_corner);
  t["diameter"] = std::sqrt(d2);
  t["u_defect"] = (iu / L) * (iu / L);
  t["v_remainder"] = (icos / L) * (icos / L) + ineg / L;
  t["length"] = L;
}

// Mollified sampling: each corner jump becomes a linear ramp of arclength
// `delta`, inserted between the segments; every piece boundary is snapped
// onto the uniform grid so the stored angle function is exactly piecewise
// linear and the mollification error is exactly linear in delta.
AngleFunction build_segments(const std::vector<Segment>& segs, int n, double delta,
                             double end_angle, double* delta_actual) {
  struct Piece {
    double th0, th1, len;
  };
  std::vector<Piece> pieces;
  double prev = 0.0;
  for (const auto& s : segs) {
    if (std::abs(s.angle - prev) > 1e-12)
      pieces.push_back({prev, s.angle, delta});
    pieces.push_back({s.angle, s.angle, s.len});
    prev = s.angle;
  }
  if (std::abs(end_angle - prev) > 1e-12)
    pieces.push_back({prev, end_angle, delta});

  double L_nom = 0.0;
  for (const auto& p : pieces) L_nom += p.len;
  const double h = L_nom / n;

  std::vector<long> cells(pieces.size());
  long total = 0;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    cells[k] = std::max<long>(1, std::lround(pieces[k].len / h));
    total += cells[k];
  }

  AngleFunction a;
  a.length = total * h;
  a.theta.assign(total + 1, 0.0);
  long c = 0;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    for (long j = 0; j <= cells[k]; ++j) {
      const double t = static_cast<double>(j) / cells[k];
      a.theta[c + j] = pieces[k].th0 * (1.0 - t) + pieces[k].th1 * t;
    }
    c += cells[k];
  }
  if (delta_actual) {
    *delta_actual = 0.0;
    for (std::size_t k = 0; k < pieces.size(); ++k)
      if (pieces[k].th0 != pieces[k].th1)
        *delta_actual = std::max(*delta_actual, cells[k] * h);
  }
  return a;
}

// Moves the nearer endpoint of every interval that crosses a fold level
// (multiples of pi) exactly onto that level, so the piecewise linear
// interpolant folds exactly and the first rearrangement preserves the
// total |H| mass at machine precision.
void snap_fold_levels(AngleFunction& a) {
  for (std::size_t i = 0; i + 1 < a.theta.size(); ++i) {
    double lo = std::min(a.theta[i], a.theta[i + 1]);
    double hi = std::max(a.theta[i], a.theta[i + 1]);
    for (long k = std::lround(std::ceil(lo / kPi)); k * kPi < hi; ++k) {
      const double level = k * kPi;
      if (level <= lo || level >= hi) continue;
      if (std::abs(a.theta[i] - level) <= std::abs(a.theta[i + 1] - level) &&
          i != 0)
        a.theta[i] = level;
      else if (i + 1 != a.theta.size() - 1)
        a.theta[i + 1] = level;
    }
  }
}

ValidateOptions family_options(double closure_tol_rel) {
  ValidateOptions o;
  o.closure_tol_rel = closure_tol_rel;
  return o;
}

// ---- smooth analytic families ---------------------------------------------

AngleFunction sphere_angle(double R, int n) {
  AngleFunction a;
  a.length = kPi * R;
  a.theta.resize(n + 1);
  for (int i = 0; i <= n; ++i) a.theta[i] = kPi * i / n;
  return a;
}

AngleFunction spheroid_angle(double ae, double c, int n) {
  if (n % 2 != 0) throw std::invalid_argument("spheroid: n must be even");
  // Meridian ellipse (ae sin t, c (1 - cos t)), t in [0, pi]; resampled to
  // uniform arclength.  The lower half is computed and mirrored so the
  // sampled angles keep the exact symmetry theta(L - s) = pi - theta(s).
  const int m = 64 * n;
  std::vector<double> speed(m + 1);
  for (int j = 0; j <= m; ++j) {
    const double t = kPi * j / m;
    speed[j] = std::hypot(ae * std::cos(t), c * std::sin(t));
  }
  std::vector<double> s_tab = cumulative_trapezoid(speed, kPi / m);
  const double L = s_tab.back();

  AngleFunction a;
  a.length = L;
  a.theta.resize(n + 1);
  int j = 0;
  for (int i = 0; i <= n / 2; ++i) {
    const double s = L * i / n;
    while (j + 1 <= m && s_tab[j + 1] < s) ++j;
    double t;
    if (i == 0) t = 0.0;
    else {
      const double w = (s - s_tab[j]) / (s_tab[j + 1] - s_tab[j]);
      t = kPi * (j + w) / m;
    }
    a.theta[i] = std::atan2(c * std::sin(t), ae * std::cos(t));
  }
  a.theta[n / 2] = 0.5 * kPi;
  for (int i = n / 2 + 1; i <= n; ++i) a.theta[i] = kPi - a.theta[n - i];
  return a;
}

AngleFunction cigar_angle(double eps, int n) {
  AngleFunction a;
  a.length = 1.0 + kPi * eps;
  a.theta.resize(n + 1);
  const double cap = 0.5 * kPi * eps;
  for (int i = 0; i <= n; ++i) {
    const double s = a.length * i / n;
    if (s <= cap) a.theta[i] = s / eps;
    else if (s <= cap + 1.0) a.theta[i] = 0.5 * kPi;
    else a.theta[i] = 0.5 * kPi + (s - cap - 1.0) / eps;
  }
  a.theta[n] = kPi;
  return a;
}

AngleFunction pancake_angle(double eps, int n) {
  AngleFunction a;
  a.length = 2.0 + kPi * eps;
  a.theta.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double s = a.length * i / n;
    if (s <= 1.0) a.theta[i] = 0.0;
    else if (s <= 1.0 + kPi * eps) a.theta[i] = (s - 1.0) / eps;
    else a.theta[i] = kPi;
  }
  a.theta[n] = kPi;
  return a;
}

AngleFunction dumbbell_angle(double neck, double bulge, int n) {
  // theta(t) = pi t + f(t) with f odd about t = 1/2 and vanishing at the
  // ends: the profile closes exactly (the discrete trapezoid closure sum
  // cancels pairwise under the symmetry).  The sin(2 pi t) amplitude digs
  // the sin(theta) < 0 dips near the poles; the sin(4 pi t) amplitude
  // pushes theta past pi/2 before mid-curve, pinching a waist.
  AngleFunction a;
  a.length = 1.0;
  a.theta.resize(n + 1);
  const double a1 = 0.75 * bulge;
  const double a2 = 0.30 + 0.55 * neck;
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    a.theta[i] = kPi * t - a1 * std::sin(2.0 * kPi * t) - a2 * std::sin(4.0 * kPi * t);
  }
  snap_fold_levels(a);
  return a;
}

AngleFunction random_lipschitz_angle(unsigned long long seed, double K, int n) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int modes = 6;

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<double> c(modes + 1, 0.0);
    for (int j = 1; j <= modes; ++j) c[j] = gauss(rng) / j;

    // Scale so the Lipschitz certificate of theta is close to K.
    double fpmax = 0.0;
    for (int i = 0; i <= 512; ++i) {
      const double t = static_cast<double>(i) / 512;
      double fp = 0.0;
      for (int j = 1; j <= modes; ++j)
        fp += c[j] * kPi * j * std::cos(kPi * j * t);
      fpmax = std::max(fpmax, std::abs(fp));
    }
    double lam = K > kPi && fpmax > 0.0 ? (K - kPi) / fpmax : 0.25;
    lam *= std::pow(0.8, attempt);

    auto theta_at = [&](double t, double mu) {
      double f = 0.0;
      for (int j = 1; j <= modes; ++j) f += c[j] * std::sin(kPi * j * t);
      return kPi * t + lam * f + mu * std::sin(kPi * t);
    };

    // Solve the closure sum(trapezoid) cos(theta) = 0 for the correction
    // amplitude mu by the secant rule.
    auto closure = [&](double mu) {
      double acc = 0.5 * (std::cos(theta_at(0.0, mu)) + std::cos(theta_at(1.0, mu)));
      for (int i = 1; i < n; ++i)
        acc += std::cos(theta_at(static_cast<double>(i) / n, mu));
      return acc / n;
    };
    double mu0 = 0.0, mu1 = 0.1;
    double f0 = closure(mu0), f1 = closure(mu1);
    bool solved = false;
    for (int it = 0; it < 80; ++it) {
      if (std::abs(f1 - f0) < 1e-18) break;
      const double mu2 = mu1 - f1 * (mu1 - mu0) / (f1 - f0);
      mu0 = mu1; f0 = f1;
      mu1 = mu2; f1 = closure(mu1);
      if (std::abs(f1) < 1e-15) {
        solved = true;
        break;
      }
    }
    if (!solved || std::abs(mu1) > 1.0) continue;

    AngleFunction a;
    a.length = 1.0;
    a.theta.resize(n + 1);
    for (int i = 0; i <= n; ++i)
      a.theta[i] = theta_at(static_cast<double>(i) / n, mu1);
    a.theta[0] = 0.0;
    a.theta[n] = kPi;
    snap_fold_levels(a);

    // Profile sanity: x > 0 strictly inside, z(L) >= 0.
    const double h = 1.0 / n;
    double x = 0.0, z = 0.0, xmin = 1.0, zend = 0.0;
    for (int i = 0; i < n; ++i) {
      x += 0.5 * h * (std::cos(a.theta[i]) + std::cos(a.theta[i + 1]));
      z += 0.5 * h * (std::sin(a.theta[i]) + std::sin(a.theta[i + 1]));
      if (i < n - 1) xmin = std::min(xmin, x);
    }
    zend = z;
    if (xmin > 1e-4 && zend >= 0.0) return a;
  }
  throw std::runtime_error("random_lipschitz: no admissible profile found");
}

}  // namespace

double SingularRevolvedBody::theta_c() const {
  if (h <= 0.0) return 0.5 * kPi;
  return std::atan2(A - a, 0.5 * h);
}

SingularTargets exact_singular_M(const SingularRevolvedBody& b) {
  SingularTargets t;
  const double tc = b.theta_c();
  t.total_abs_H = kPi * b.h + kPi * kPi * b.a + 2.0 * kPi * tc * (b.A - b.a);
  // Vertex set of the meridian polygon (axis at x = 0, equator at z = h/2).
  const double vx[] = {0.0, b.a, b.A, b.a, 0.0};
  const double vz[] = {0.0, 0.0, 0.5 * b.h, b.h, b.h};
  double d2 = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const double sx = vx[i] + vx[j], dz = vz[i] - vz[j];
      d2 = std::max(d2, sx * sx + dz * dz);
    }
  t.diameter = std::sqrt(d2);
  return t;
}

FamilySurface make_family(const std::string& name,
                          const std::map<std::string, double>& params, int n,
                          double delta) {
  FamilySurface f;
  f.name = name;
  f.params = params;

  if (name == "sphere") {
    const double R = get_param(params, "R", 1.0);
    f.g = validate_generating_curve(sphere_angle(R, n));
    f.targets["area"] = 4.0 * kPi * R * R;
    f.targets["volume"] = 4.0 * kPi * R * R * R / 3.0;
    f.targets["total_H"] = 4.0 * kPi * R;
    f.targets["total_abs_H"] = 4.0 * kPi * R;
    f.targets["willmore"] = 4.0 * kPi;
    f.targets["diameter"] = 2.0 * R;
  } else if (name == "spheroid") {
    const double ae = get_param(params, "a", 1.0, true);
    const double c = get_param(params, "c", 1.0, true);
    f.g = validate_generating_curve(spheroid_angle(ae, c, n));
    f.targets["diameter"] = 2.0 * std::max(ae, c);
  } else if (name == "cigar") {
    const double eps = get_param(params, "eps", 0.1, true);
    f.g = validate_generating_curve(cigar_angle(eps, n));
    f.targets["area"] = 2.0 * kPi * eps + 4.0 * kPi * eps * eps;
    f.targets["volume"] = kPi * eps * eps + 4.0 * kPi * eps * eps * eps / 3.0;
    f.targets["total_H"] = kPi + 4.0 * kPi * eps;
    f.targets["total_abs_H"] = kPi + 4.0 * kPi * eps;
    f.targets["willmore"] = 0.5 * kPi / eps + 4.0 * kPi;
    f.targets["diameter"] = 1.0 + 2.0 * eps;
  } else if (name == "pancake") {
    const double eps = get_param(params, "eps", 0.1, true);
    f.g = validate_generating_curve(pancake_angle(eps, n));
    f.targets["total_H"] = kPi * kPi + 4.0 * kPi * eps;
    f.targets["total_abs_H"] = kPi * kPi + 4.0 * kPi * eps;
    f.targets["diameter"] = 2.0 + 2.0 * eps;
    f.targets["area"] = 2.0 * kPi + 2.0 * kPi * kPi * eps + 4.0 * kPi * eps * eps;
    f.targets["mean_width"] = 0.5 * kPi + 2.0 * eps;
  } else if (name == "gamma") {
    SingularRevolvedBody b;
    b.h = get_param(params, "h", 1.0, true);
    b.a = get_param(params, "a", 0.0, true);
    b.A = get_param(params, "A", 1.0, true);
    if (!(b.A >= b.a) || b.a < 0.0 || b.h <= 0.0)
      throw std::invalid_argument("gamma: need h > 0 and A >= a >= 0");
    const double tc = b.theta_c();
    const double slant = std::hypot(b.A - b.a, 0.5 * b.h);
    std::vector<Segment> segs;
    if (b.a > 0.0) segs.push_back({0.0, b.a});
    segs.push_back({0.5 * kPi - tc, slant});
    segs.push_back({0.5 * kPi + tc, slant});
    if (b.a > 0.0) segs.push_back({kPi, b.a});
    const double L_sing = 2.0 * b.a + 2.0 * slant;
    if (delta <= 0.0) delta = 16.0 * L_sing / n;
    double delta_actual = 0.0;
    AngleFunction a = build_segments(segs, n, delta, kPi, &delta_actual);
    f.g = validate_generating_curve(
        a, family_options(std::max(1e-5, 4.0 * delta_actual / a.length)));
    segment_targets(segs, f.targets);
    const SingularTargets st = exact_singular_M(b);
    f.targets["total_abs_H"] = st.total_abs_H;
    f.targets["diameter"] = st.diameter;
    f.targets["delta"] = delta_actual;
  } else if (name == "broken_line") {
    const double eps = get_param(params, "eps", 0.05, true);
    const double l13 = eps * std::sqrt(1.0 + eps * eps);
    std::vector<Segment> segs;
    segs.push_back({std::atan2(-eps, eps * eps), l13});
    segs.push_back({0.5 * kPi, 1.0 + 2.0 * eps});
    segs.push_back({kPi + std::atan2(eps, eps * eps), l13});
    const double L_sing = 1.0 + 2.0 * eps + 2.0 * l13;
    if (delta <= 0.0) delta = 4.0 * L_sing / n;
    double delta_actual = 0.0;
    AngleFunction a = build_segments(segs, n, delta, kPi, &delta_actual);
    f.g = validate_generating_curve(
        a, family_options(std::max(1e-4, 6.0 * delta_actual / a.length)));
    segment_targets(segs, f.targets);
    f.targets["delta"] = delta_actual;
  } else if (name == "dumbbell") {
    const double neck = get_param(params, "neck", 0.3);
    const double bulge = get_param(params, "bulge", 1.0);
    ValidateOptions o;
    o.closure_tol_rel = 1e-5;
    f.g = validate_generating_curve(dumbbell_angle(neck, bulge, n), o);
  } else if (name == "random_lipschitz") {
    const auto seed =
        static_cast<unsigned long long>(get_param(params, "seed", 1.0));
    const double K = get_param(params, "K", 12.0);
    ValidateOptions o;
    o.closure_tol_rel = 1e-6;
    f.g = validate_generating_curve(random_lipschitz_angle(seed, K, n), o);
  } else {
    throw std::invalid_argument("make_family: unknown family " + name);
  }
  return f;
}

}  // namespace revsurf
