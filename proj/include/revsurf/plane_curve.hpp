#pragma once

#include <vector>

#include "revsurf/angle_function.hpp"
#include "revsurf/report.hpp"

namespace revsurf {

// Positions and curvature samples reconstructed from an angle function.
// Positions use cumulative trapezoid sums of (cos theta, sin theta); the
// curvature samples are centered differences of theta (periodic when the
// reconstruction closes up).
struct PlaneCurve {
  AngleFunction angle;
  std::vector<double> x, z;
  std::vector<double> kappa;
  bool closed = false;
};

PlaneCurve reconstruct(const AngleFunction& a, double closure_tol_rel = 1e-6);

// integral |kappa|^p ds, composite trapezoid over the curvature samples.
double bending_energy(const PlaneCurve& c, double p);

// Signed enclosed area by the shoelace rule (closed curves only).
double enclosed_area(const PlaneCurve& c);

// Directional width max<q,u> - min<q,u> with u = (cos phi, sin phi).
double width(const PlaneCurve& c, double phi);

// Minimal width over all directions: 720-direction grid followed by
// golden-section refinement around the best bracket.
double min_width(const PlaneCurve& c);

// True when theta is nondecreasing (within 1e-9 times the Lipschitz
// certificate) and the total turning is 2 pi within 1e-6.
bool is_convex(const PlaneCurve& c);

// Lower curvature bound for convex closed curves:
//   integral kappa^2 ds >= pi L / A.
InequalityReport gage_report(const PlaneCurve& c);

// Strip bound for closed curves of width r:
//   integral |kappa|^p ds >= c_tilde_p r^(1-p).
InequalityReport strip_energy_bound(const PlaneCurve& c, double p);

// The extremal closed curve of the strip bound for exponent p > 1: the graph
// of the even convex profile u on [-1, 1] together with its vertical
// reflection.  Curvature is a_limit^2-scaled |cos theta|^(1/p); it vanishes
// at the two vertical-tangent junctions.  n must be a multiple of 4 so the
// junctions land on grid nodes.
PlaneCurve extremal_curve(double p, int n);

}  // namespace revsurf
