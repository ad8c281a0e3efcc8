#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logcorners/morphism.hpp"

namespace logcorners {

/// Scales on a chart and on its boundary faces up to depth 2. Faces are keyed
/// by the selected basic coordinate(s). Corner scales may be partial: a
/// missing phantom value is an unknown positive constant to be solved for.
/// A corner given for only one order of its pair is used for both.
struct Regularization {
  Chart chart;
  Scale chart_scale;
  std::map<std::string, Scale> faces;
  std::map<std::pair<std::string, std::string>, Scale> corners;
};

enum class RegularizationStatus { kOk, kViolated, kSolved, kUnsolvable, kUnderdetermined };

std::string to_string(RegularizationStatus s);

struct RegularizationReport {
  RegularizationStatus status = RegularizationStatus::kOk;
  std::vector<std::string> violations;
  /// log of every unknown corner constant, keyed "lam_<phantom>". Free
  /// unknowns of an underdetermined system appear as the symbol log(lam_<phantom>).
  std::map<std::string, Scalar> log_values;
  /// The solved constants themselves when they are monoid constants.
  std::map<std::string, MonoidElement> values;
  std::vector<std::string> free_parameters;
  std::vector<std::string> unchecked;
};

RegularizationReport check_regularization(const Regularization& reg);

/// Quadrant [0,inf)^2 in r1, r2 with face scales t_r1 -> f2(r2) r2^a2 and
/// t_r2 -> f1(r1) r1^a1; corner constants left unknown.
Regularization quadrant_regularization(const MonoidElement& f1, int a1, const MonoidElement& f2, int a2);

/// exp of a Scalar that is an integer combination of L-symbols, if any.
std::optional<MonoidElement> exp_of_log(const Scalar& s);

}  // namespace logcorners
