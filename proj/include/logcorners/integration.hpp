#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logcorners/regularize.hpp"

namespace logcorners {

/// Oriented, regularized product of intervals [0, a], circles and phantom ends.
/// `lower` holds the tangential basepoint lambda * d/dr at 0 of each interval
/// (default 1); `upper` the basepoint -mu * d/dr at its end, which never
/// affects the result because forms are smooth there.
struct IntegrationDomain {
  Chart chart;
  std::vector<std::string> order;  // orientation order; empty means chart order
  int sign = 1;
  std::map<std::string, MonoidElement> lower;
  std::map<std::string, MonoidElement> upper;
  Scale scale;  // on the chart's own phantoms

  static IntegrationDomain of(const Chart& chart);
  /// Underlying coordinates in orientation order.
  std::vector<std::string> orientation() const;
  MonoidElement basepoint_at_zero(const std::string& r) const;
  void validate() const;
};

/// Degree-one integrals on [0, a] and S^1.
Scalar integrate_interval(const LogForm& w, const MonoidElement& a, const MonoidElement& lambda);
Scalar integrate_circle(const LogForm& w);

Scalar integrate(const LogForm& w, const IntegrationDomain& dom);

struct StokesResult {
  Scalar lhs;
  Scalar rhs;
  bool equal = false;
};
StokesResult stokes_check(const LogForm& eta, const IntegrationDomain& dom);

struct Convergence {
  bool convergent = true;
  std::string face;          // coordinate of the offending face
  std::optional<LogForm> certificate;
};
Convergence convergence_classify(const LogForm& w, const IntegrationDomain& dom);

/// Change of variables r = u^2: pullback of a form on the interval domain in
/// r to the interval in u with bound sqrt and basepoint sqrt. Bounds and
/// basepoints must be perfect squares of monoid constants.
struct Reparametrization {
  WeakMorphism morphism;
  IntegrationDomain domain;
};
Reparametrization square_root_reparametrization(const IntegrationDomain& dom, const std::string& r,
                                                const std::string& u);

}  // namespace logcorners
