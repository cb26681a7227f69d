#pragma once

#include <vector>

#include "revsurf/angle_function.hpp"

namespace revsurf {

// Meridian of a closed surface of revolution about the z-axis.  The angle
// function must satisfy: theta(0) = 0, theta(L) in pi + 2 pi Z, profile
// x > 0 strictly inside, x(0) = x(L) = 0 within the closure tolerance, and
// z(L) >= 0 (axis orientation).  Poles are the two endpoints; within
// delta_pole of either pole the mean curvature uses the regular cap limit
// H -> theta_s instead of the 0/0 quotient sin(theta)/x.
struct GeneratingCurve {
  AngleFunction angle;
  std::vector<double> x, z;  // cumulative trapezoid profile
  double delta_pole = 0.0;
  double lipschitz = 0.0;

  int n() const { return angle.grid_count(); }
  double h() const { return angle.spacing(); }
  double length() const { return angle.length; }
};

struct ValidateOptions {
  double closure_tol_rel = 1e-5;   // |x(L)| <= tol * L
  double pole_angle_tol = 1e-8;    // theta(0) = 0 and theta(L) in pi + 2 pi Z
  double orientation_tol_rel = 1e-9;  // z(L) >= -tol * L
  double delta_pole = -1.0;        // < 0: default of 3 grid spacings
};

// Builds profile caches and checks the hypotheses above.  Throws
// std::invalid_argument with one of the diagnostic messages
// "pinched profile", "bad pole tangents", "orientation violation",
// or a closure message.
GeneratingCurve validate_generating_curve(const AngleFunction& a,
                                          const ValidateOptions& opt = {});

}  // namespace revsurf
