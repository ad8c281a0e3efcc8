#pragma once

#include <map>
#include <string>
#include <vector>

#include "logcorners/monoid.hpp"

namespace logcorners {

enum class Role { kNone, kFree, kBasic, kPhantom, kAngular };

/// Model chart R^m x [0,inf)^n x [0)^k x (S^1)^p with named coordinates.
/// `bounds` turns selected basic coordinates into intervals [0, bound].
struct Chart {
  std::vector<std::string> free;
  std::vector<std::string> basic;
  std::vector<std::string> phantom;
  std::vector<std::string> angular;
  std::map<std::string, MonoidElement> bounds;

  static Chart point() { return {}; }
  /// [0, bound] in coordinate r.
  static Chart interval(const std::string& r, const MonoidElement& bound);
  static Chart half_line(const std::string& r) { return {{}, {r}, {}, {}, {}}; }
  static Chart phantom_end(const std::string& t) { return {{}, {}, {t}, {}, {}}; }
  static Chart circle(const std::string& theta) { return {{}, {}, {}, {theta}, {}}; }

  Role role(const std::string& name) const;
  bool contains(const std::string& name) const { return role(name) != Role::kNone; }
  /// Dimension of the underlying manifold (phantoms carry none).
  int dimension() const { return static_cast<int>(free.size() + basic.size() + angular.size()); }
  /// All names in canonical basis order: free, basic, phantom, angular.
  std::vector<std::string> coordinates() const;
  /// Throws when names repeat or bounds refer to non-basic coordinates.
  void validate() const;

  friend bool operator==(const Chart&, const Chart&) = default;

  std::string to_string() const;
};

/// Product chart; coordinate names must be disjoint.
Chart product(const Chart& a, const Chart& b);

/// Parses "I(0,a)", "r:H * t:E * theta:S1", "x:R", "r:I(0,2)" and
/// "pt". Kinds: R free, H half line, I interval, E phantom end, S1 circle.
Chart parse_chart(const std::string& text);

}  // namespace logcorners
