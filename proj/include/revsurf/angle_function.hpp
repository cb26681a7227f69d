#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revsurf {

// A curve stored as its tangent angle theta against arclength: n+1 samples on
// the uniform grid s_i = i * length / n.  The samples are read as a piecewise
// linear (Lipschitz) angle function; every geometric quantity in the library
// is derived from this representation.
struct AngleFunction {
  double length = 0.0;
  std::vector<double> theta;

  int grid_count() const { return static_cast<int>(theta.size()) - 1; }
  double spacing() const { return length / grid_count(); }
  double grid_point(int i) const { return length * i / grid_count(); }

  // Largest |theta_{i+1} - theta_i| / h: the Lipschitz certificate of the
  // piecewise linear interpolant.
  double lipschitz_constant() const;

  // Piecewise linear evaluation at arbitrary arclength (clamped to [0, L]).
  double sample(double s) const;
};

// Plain-text curve format: a header line "L=<value> n=<count>" followed by
// n+1 lines of "s theta".  The structured variant is a JSON document with
// fields "length" and "theta_samples".
AngleFunction read_curve(std::istream& in);
void write_curve(std::ostream& out, const AngleFunction& a);
AngleFunction load_curve_file(const std::string& path);  // sniffs text vs JSON
void save_curve_file(const std::string& path, const AngleFunction& a,
                     bool as_json = false);

}  // namespace revsurf
