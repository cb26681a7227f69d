#pragma once

#include "revsurf/generating_curve.hpp"
#include "revsurf/report.hpp"

namespace revsurf {

// Integral quantities of the revolved surface.  Mean curvature H is the
// average of the two principal curvatures with the inward-positive sign
// convention (H = 1 on the unit sphere):
//   2H = theta_s + sin(theta)/x,   H -> theta_s at the poles.
struct SurfaceQuantities {
  double area = 0.0;          // 2 pi int x ds
  double volume = 0.0;        // pi int x^2 sin(theta) ds
  double total_abs_H = 0.0;   // int |H| dA = pi int |sin(theta) + theta_s x| ds
  double total_H = 0.0;       // int H dA, direct form
  double total_H_gform = 0.0; // pi int (sin(theta) - theta cos(theta)) ds
  double willmore = 0.0;      // int H^2 dA
  double diameter = 0.0;
  double isoperimetric = 0.0; // A^(3/2) / V
  double e_ratio = 0.0;       // (A/V) int H dA / int H^2 dA
  double e_prime = 0.0;       // isoperimetric / int H^2 dA
};

SurfaceQuantities surface_quantities(const GeneratingCurve& g);

// int H^p dA = 2 pi int H^p x ds for p >= 1 (meaningful when H > 0).
double total_H_pow(const GeneratingCurve& g, double p);

struct DiameterResult {
  double value = 0.0;
  double s1 = 0.0, s2 = 0.0;  // arclengths of an attaining pair
};

// Extrinsic diameter of the revolved surface: the farthest pair always sits
// in a common meridian half-plane pair, so it is the max over samples of
// dist((x1, z1), (-x2, z2)).  Exact for the sampled polygon; O(n^2) with a
// bounding-box early exit.
DiameterResult diameter(const GeneratingCurve& g);

// Directional width of the revolved body for a direction at angle alpha to
// the symmetry axis.
double width(const GeneratingCurve& g, double alpha);

// Axial statistics of the generating curve (all arclength integrals):
//   a      = z(L)                    (signed axial end height)
//   a_star = int |sin theta| ds      (total axial variation)
//   a_bar  = max z - min z           (axial width)
//   b_star = (1/2) int |cos theta| ds
//   U      = ( (1/L) int sqrt(1 - sin theta) ds )^2
//   v_rem  = ( (1/L) int |cos theta| ds )^2 + (1/L) int (sin theta)_- ds
struct AxialStats {
  double a = 0.0, a_star = 0.0, a_bar = 0.0, b_star = 0.0;
  double u_defect = 0.0;
  double v_remainder = 0.0;
};

AxialStats axial_stats(const GeneratingCurve& g);

// Sharp axial bound: int |H| dA / d >= pi, with the stable strengthening
// int |H| dA / d >= pi + sigma * U.  The report carries U and
// deficit-over-U in its notes.
InequalityReport topping_deficit(const GeneratingCurve& g);

// Area-energy bound: sqrt(A) sqrt(int H^2 dA) >= (pi/2) d, and the
// pi * d strengthening valid for this axisymmetric class.
InequalityReport simon_report(const GeneratingCurve& g);

// Exact integrals for the piecewise linear angle model (theta linear on each
// grid interval, profile integrated in closed form).  Used by the
// integration-by-parts identity checks; x_end is the exact profile closure
// of the interpolant.
double pl_total_H_direct(const GeneratingCurve& g);
double pl_total_H_gform(const GeneratingCurve& g);
double pl_x_end(const GeneratingCurve& g);

}  // namespace revsurf
