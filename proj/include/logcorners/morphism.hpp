#pragma once

#include <map>
#include <string>
#include <vector>

#include "logcorners/chart.hpp"

namespace logcorners {

/// Pullback of a target basic coordinate. `collapsed` records that the
/// underlying map sends the coordinate to 0 even though the monoid value is
/// basic, as for tangential basepoints.
struct RAssign {
  MonoidElement value;
  bool collapsed = false;

  friend bool operator==(const RAssign&, const RAssign&) = default;
};

/// Weak morphism source -> target, stored as the pullback of every target
/// coordinate.
struct WeakMorphism {
  Chart source;
  Chart target;
  std::map<std::string, RAssign> r;
  std::map<std::string, MonoidElement> t;
  std::map<std::string, Coefficient> x;
  std::map<std::string, AngleAssign> theta;

  /// Substitution table of the underlying smooth map (x and r coordinates).
  std::map<std::string, Coefficient> underlying() const;
  /// Underlying pullback of a coefficient function on the target.
  Coefficient pull(const Coefficient& c) const;
  /// Throws unless every target coordinate is assigned with source data.
  void validate() const;

  friend bool operator==(const WeakMorphism&, const WeakMorphism&) = default;
};

WeakMorphism identity(const Chart& chart);
/// g after f; requires f.target == g.source.
WeakMorphism compose(const WeakMorphism& g, const WeakMorphism& f);
bool is_ordinary(const WeakMorphism& f);
MonoidElement pullback(const WeakMorphism& f, const MonoidElement& m);

/// Boundary face selecting the listed basic coordinates. They become phantom
/// coordinates "t_<name>", appended in selection order.
struct Face {
  Chart chart;
  WeakMorphism inclusion;
};
std::string face_phantom_name(const std::string& r);
Face face(const Chart& chart, const std::vector<std::string>& selected);

/// Per phantom coordinate, a basic monoid element of the same chart.
using Scale = std::map<std::string, MonoidElement>;
bool is_nondegenerate(const Scale& s);
/// Chart with the scaled phantoms removed, mapping into `chart` by
/// t -> s(t) and the identity elsewhere. Pullback along it applies the scale.
WeakMorphism scale_morphism(const Chart& chart, const Scale& s);

/// Tangential basepoint at the origin of `chart`: r -> given constants, x ->
/// given constants, theta -> given offsets, phantoms -> given constants.
struct Basepoint {
  std::map<std::string, MonoidElement> r;
  std::map<std::string, Scalar> x;
  std::map<std::string, AngleAssign> theta;
  std::map<std::string, MonoidElement> t;
};
WeakMorphism basepoint(const Chart& chart, const Basepoint& b);

}  // namespace logcorners
