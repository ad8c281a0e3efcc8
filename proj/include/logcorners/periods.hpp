#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "logcorners/integration.hpp"

namespace logcorners {

/// Integral of dlog(lambda) + i dtheta over the boundary circle of the polar
/// blow-up at 0, with scale t -> lambda(theta) on the phantom normal direction.
Scalar residue_radius_zero(const MonoidElement& profile);

using ScalarMatrix = std::array<std::array<Scalar, 2>, 2>;

/// Rows (path [0, a] with basepoint lambda at 0, circle at radius zero) against
/// columns (dz, dlog z).
ScalarMatrix kummer_period_matrix(const MonoidElement& a, const MonoidElement& lambda);

/// Conjugate of the parameter a: a fresh parameter name, or a^{-1} (|a| = 1).
struct Conjugation {
  std::string a = "a";
  std::string abar = "abar";
  bool unit_circle = false;

  Scalar conj_parameter() const;
  Scalar conj_log() const;
  Scalar conjugate(const Scalar& s) const;
};

/// Sum over the boundary circles at 0, 1, a, infinity of the regularized
/// restriction of -log|z|^2 (dz/(z-a) - dz/(z-1)), expanded to `order` in the
/// local coordinate. `scales` optionally replaces the unit scale per puncture
/// ("0", "1", "a", "inf") by a profile in theta.
Scalar i2_via_stokes(int order, const Conjugation& conj = {},
                     const std::map<std::string, MonoidElement>& scales = {});

/// Boundary term of a single puncture, exposed for inspection.
LogForm i2_local_form(const std::string& puncture, int order, const Conjugation& conj);

/// Chains on P^1 minus {0, 1, a, inf}: a small loop around a point or a path
/// between two points with unit tangential basepoints. Points are "0", "1",
/// "inf" or the parameter name.
struct Chain {
  enum class Kind { kLoop, kPath };
  Kind kind = Kind::kLoop;
  std::string from;
  std::string to;

  static Chain loop(std::string p) { return {Kind::kLoop, std::move(p), {}}; }
  static Chain path(std::string p, std::string q) { return {Kind::kPath, std::move(p), std::move(q)}; }
  std::string to_string() const;
};

/// omega = sum res_s dz/(z - s) with poles on A, nu likewise with poles on B;
/// residues at infinity are implied. `pairs` lists the dual chains (gamma_i, gamma_i^vee).
struct DoubleCopyConfig {
  std::map<std::string, Scalar> omega_residues;
  std::map<std::string, Scalar> nu_residues;
  std::vector<std::pair<Chain, Chain>> pairs;
  Conjugation conj;

  /// omega = dz/(z-a) - dz/(z-1), nu = dlog z, chains as in the standard example.
  static DoubleCopyConfig standard();
};

Scalar chain_integral(const std::map<std::string, Scalar>& residues, const Chain& c, const Conjugation& conj);
Scalar double_copy_p1(const DoubleCopyConfig& cfg);

}  // namespace logcorners
