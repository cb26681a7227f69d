#pragma once

#include <string>

namespace revsurf {

// Sharp constants governing the bending-energy and mean-curvature bounds for
// exponent p >= 1:
//
//   a_limit    = integral_0^inf (1+t^2)^((1-3p)/(2p)) dt
//              = (1/2) B(1/2, (2p-1)/(2p)),
//   c_tilde_p  = 2 (2 a_limit)^p          (strip bound for plane curves),
//   c_p        = 2 a_limit^p * 2 J_p      (degeneracy bound for surfaces),
//   J_p        = integral_0^(1/2) (1 + t^-2)^((1-p)/2) dt.
//
// Each constant is evaluated twice: by tanh-sinh quadrature and through the
// log-gamma closed form; the table stores both and their discrepancy.
struct ConstantsTable {
  double p = 0.0;
  double a_limit = 0.0;     // closed form
  double c_tilde_p = 0.0;   // closed form
  double c_p = 0.0;         // closed form a_limit, quadrature J_p
  double j_p = 0.0;
  double a_limit_quad = 0.0;
  double c_tilde_quad = 0.0;
  double c_p_quad = 0.0;
  double barrier_integral = 0.0;  // integral_0^1 g(t)^(p-1) dt, g the barrier speed
  std::string method = "log-gamma + tanh-sinh";
};

ConstantsTable constants(double p);

// Barrier speed profile g(t) = (1 + (1/2 - |t - 1/2|)^-2)^(-1/2) on [0, 1].
double barrier_speed(double t);

}  // namespace revsurf
