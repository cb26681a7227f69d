#pragma once

#include <map>
#include <string>
#include <vector>

#include "revsurf/generating_curve.hpp"

namespace revsurf {

// Convex hull of revolution spanned by two radius-a circles at heights
// +-h/2 and a radius-A equatorial circle (A >= a >= 0): two cones (or a
// cylinder when a = A) capped by flat disks.  theta_c is the angle between
// a generating line and the axis, tan(theta_c) = 2(A - a)/h.
struct SingularRevolvedBody {
  double h = 0.0;
  double a = 0.0;
  double A = 0.0;
  double theta_c() const;
};

// Exact total |H| mass and extrinsic diameter of the singular body:
//   M = pi h + pi^2 a + 2 pi theta_c (A - a).
struct SingularTargets {
  double total_abs_H = 0.0;
  double diameter = 0.0;
};
SingularTargets exact_singular_M(const SingularRevolvedBody& b);

// A generating curve with optional exact target quantities attached (for
// mollified families: the quantities of the singular limit body).
struct FamilySurface {
  std::string name;
  std::map<std::string, double> params;
  GeneratingCurve g;
  std::map<std::string, double> targets;
};

// Families:
//   sphere        R
//   spheroid      a (equatorial radius), c (polar semi-axis)
//   cigar         eps  (unit-height cylinder of radius eps, hemisphere caps)
//   pancake       eps  (eps-neighborhood of the unit flat disk)
//   gamma         h, a, A  (mollified singular body above)
//   broken_line   eps  (mollified revolved broken line through
//                  (0,0), (eps^2,-eps), (eps^2,1+eps), (0,1))
//   dumbbell      neck, bulge  (smooth nonconvex profile with a sin(theta)<0 dip)
//   random_lipschitz  seed, K  (seeded random profile; fold levels snapped onto
//                  grid nodes, profile closure solved to machine precision)
//
// `delta` is the corner-mollification arclength for gamma/broken_line
// (<= 0 selects 16 grid spacings); those families also snap every segment
// boundary onto the grid so the mollification error is exactly linear in
// delta and can be extrapolated away.
FamilySurface make_family(const std::string& name,
                          const std::map<std::string, double>& params,
                          int n = 4096, double delta = 0.0);

}  // namespace revsurf
