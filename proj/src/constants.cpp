#include "revsurf/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "revsurf/quadrature.hpp"

namespace revsurf {

double barrier_speed(double t) {
  const double u = 0.5 - std::abs(t - 0.5);
  if (u <= 0.0) return 0.0;
  return 1.0 / std::sqrt(1.0 + 1.0 / (u * u));
}

ConstantsTable constants(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("constants: p must be >= 1");
  ConstantsTable t;
  t.p = p;

  // Closed form: a_limit = (1/2) B(1/2, (2p-1)/(2p)).
  t.a_limit = 0.5 * beta(0.5, (2.0 * p - 1.0) / (2.0 * p));
  t.c_tilde_p = 2.0 * std::pow(2.0 * t.a_limit, p);

  // Quadrature route.  Substituting t = tan(phi) turns the improper integral
  // into integral_0^(pi/2) cos(phi)^((p-1)/p) dphi, which tanh-sinh handles
  // including the singular derivative at the right endpoint.
  const double expo = (p - 1.0) / p;
  t.a_limit_quad = tanh_sinh(
      [&](double phi) { return std::pow(std::cos(phi), expo); }, 0.0,
      1.5707963267948966);
  t.c_tilde_quad = 2.0 * std::pow(2.0 * t.a_limit_quad, p);

  // J_p: integrand (1+t^-2)^((1-p)/2) = t^(p-1) (1+t^2)^((1-p)/2) vanishes at
  // t = 0 with a fractional-power approach for non-integer p.
  t.j_p = tanh_sinh(
      [&](double x) { return std::pow(1.0 + 1.0 / (x * x), 0.5 * (1.0 - p)); },
      0.0, 0.5);

  t.c_p = 2.0 * std::pow(t.a_limit, p) * 2.0 * t.j_p;
  t.c_p_quad = 2.0 * std::pow(t.a_limit_quad, p) * 2.0 * t.j_p;

  // Independent form of the same constant through the barrier speed profile:
  // c_p = 2^-p c_tilde_p * integral_0^1 g(t)^(p-1) dt.
  t.barrier_integral = tanh_sinh(
      [&](double x) { return std::pow(barrier_speed(x), p - 1.0); }, 0.0, 1.0);

  return t;
}

}  // namespace revsurf
