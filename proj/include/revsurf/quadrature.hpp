#pragma once

#include <functional>
#include <vector>

namespace revsurf {

// Composite trapezoid sum of uniformly spaced samples f_0..f_n with spacing h.
double trapezoid(const std::vector<double>& f, double h);

// Cumulative trapezoid sums: out[0] = 0, out[i+1] = out[i] + h*(f[i]+f[i+1])/2.
std::vector<double> cumulative_trapezoid(const std::vector<double>& f, double h);

// Tanh-sinh (double exponential) quadrature on a finite interval [a, b].
// Robust for integrands with integrable endpoint singularities; absolute
// tolerance `tol` is typically reached with a few thousand evaluations.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-13);

// Natural log of the beta function via std::lgamma.
double log_beta(double x, double y);
double beta(double x, double y);

}  // namespace revsurf
