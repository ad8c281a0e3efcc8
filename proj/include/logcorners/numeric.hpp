#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "logcorners/integration.hpp"

namespace logcorners {

using Complex = std::complex<double>;

/// Value of a phantom-free log function at an interior point.
Complex eval_interior(const LogFunction& f, const Point& coords, const Point& params);

struct QuadratureResult {
  Complex value;
  double error = 0;
  bool converged = true;
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b]; a deterministic bisection queue.
QuadratureResult adaptive_gk(const std::function<Complex(double)>& f, double a, double b, double tol,
                             int max_subdivisions);

struct QuadratureSpec {
  std::map<std::string, double> cutoff;  // lower cutoff epsilon per interval (default 0)
  double tolerance = 1e-10;
  int max_subdivisions = 400;
  Point params;
};

/// Numeric integral of the top-degree part of `w` over the interior of `dom`.
/// Near r = 0 the substitution r = a e^{-u} flattens log singularities.
QuadratureResult quadrature(const LogForm& w, const IntegrationDomain& dom, const QuadratureSpec& spec);

struct DivergenceFit {
  std::vector<Complex> coefficients;  // c_k of log(eps)^k
  std::vector<double> eps;
  double residual = 0;
};

/// Least-squares fit of the cutoff integral from eps to a against powers of log(eps).
DivergenceFit divergence_fit(const LogForm& w, const IntegrationDomain& dom, const Point& params,
                             std::vector<double> eps = {}, int degree = -1, double max_residual = 1e-6);

/// Integral over the complex plane of -2i (1/(z-a) - 1/(z-1)) / conj(z) dx dy
/// by a smooth partition of unity with polar patches around 0, 1, a and infinity.
QuadratureResult i2_plane_oracle(double a, double tol = 1e-9);

}  // namespace logcorners
