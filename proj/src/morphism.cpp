#include "logcorners/morphism.hpp"

#include <algorithm>
#include <set>

#include "logcorners/error.hpp"

namespace logcorners {

std::map<std::string, Coefficient> WeakMorphism::underlying() const {
  std::map<std::string, Coefficient> out = x;
  for (const auto& [name, a] : r) out[name] = a.collapsed ? Coefficient() : a.value.alpha();
  return out;
}

Coefficient WeakMorphism::pull(const Coefficient& c) const { return c.substitute(underlying(), theta); }

void WeakMorphism::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw DomainError("weak morphism: " + what);
  };
  for (const auto& n : target.basic) require(r.contains(n), "no assignment for basic coordinate '" + n + "'");
  for (const auto& n : target.phantom) require(t.contains(n), "no assignment for phantom coordinate '" + n + "'");
  for (const auto& n : target.free) require(x.contains(n), "no assignment for free coordinate '" + n + "'");
  for (const auto& n : target.angular) require(theta.contains(n), "no assignment for angle '" + n + "'");
  auto check_monoid = [&](const MonoidElement& m) {
    for (const auto& [n, _] : m.r) require(source.role(n) == Role::kBasic, "'" + n + "' is not a basic source coordinate");
    for (const auto& [n, _] : m.t) require(source.role(n) == Role::kPhantom, "'" + n + "' is not a phantom source coordinate");
  };
  for (const auto& [n, a] : r) {
    check_monoid(a.value);
    require(!a.value.is_phantom() || a.collapsed, "phantom value for '" + n + "' must be collapsed");
  }
  for (const auto& [_, m] : t) check_monoid(m);
  for (const auto& [_, a] : theta)
    require(!a.source || source.role(*a.source) == Role::kAngular, "angle source must be angular");
}

WeakMorphism identity(const Chart& chart) {
  WeakMorphism f{chart, chart, {}, {}, {}, {}};
  for (const auto& n : chart.basic) f.r[n] = {MonoidElement::basic(n), false};
  for (const auto& n : chart.phantom) f.t[n] = MonoidElement::phantom(n);
  for (const auto& n : chart.free) f.x[n] = Coefficient::variable(n);
  for (const auto& n : chart.angular) f.theta[n] = AngleAssign{1, n, 0};
  return f;
}

MonoidElement pullback(const WeakMorphism& f, const MonoidElement& m) {
  MonoidElement out = MonoidElement::constant(m.c, m.sigma);
  if (!m.q.is_zero()) {
    Coefficient q = f.pull(Coefficient(m.q));
    if (!q.is_polynomial())
      throw DomainError("pullback of exp(" + m.q.to_string() + ") is not an exponential of a polynomial");
    FourierPoly qp = q.as_polynomial();
    if (!qp.constant_term().is_zero())
      throw DomainError("pullback of exp(" + m.q.to_string() + ") has a constant factor exp(" +
                        qp.constant_term().to_string() + ") without exact representation");
    out.q = qp;
  }
  for (const auto& [n, k] : m.r) {
    auto it = f.r.find(n);
    if (it == f.r.end()) throw DomainError("morphism does not assign basic coordinate '" + n + "'");
    out = out * it->second.value.pow(k);
  }
  for (const auto& [n, k] : m.t) {
    auto it = f.t.find(n);
    if (it == f.t.end()) throw DomainError("morphism does not assign phantom coordinate '" + n + "'");
    out = out * it->second.pow(k);
  }
  return out;
}

WeakMorphism compose(const WeakMorphism& g, const WeakMorphism& f) {
  if (!(g.source == f.target))
    throw DomainError("cannot compose: source " + g.source.to_string() + " differs from target " +
                      f.target.to_string());
  WeakMorphism h{f.source, g.target, {}, {}, {}, {}};
  for (const auto& [n, a] : g.r) {
    MonoidElement v = pullback(f, a.value);
    bool collapsed = a.collapsed || v.is_phantom();
    for (const auto& [ri, k] : a.value.r)
      if (k > 0 && f.r.at(ri).collapsed) collapsed = true;
    h.r[n] = {v, collapsed};
  }
  for (const auto& [n, m] : g.t) h.t[n] = pullback(f, m);
  for (const auto& [n, c] : g.x) h.x[n] = f.pull(c);
  for (const auto& [n, a] : g.theta) {
    if (!a.source) {
      h.theta[n] = a;
      continue;
    }
    const AngleAssign& b = f.theta.at(*a.source);
    h.theta[n] = AngleAssign{a.sign * b.sign, b.source, a.sign * b.quarter_turns + a.quarter_turns};
  }
  for (auto& [_, a] : h.theta) a.quarter_turns = ((a.quarter_turns % 4) + 4) % 4;
  return h;
}

bool is_ordinary(const WeakMorphism& f) {
  for (const auto& [_, m] : f.t)
    if (!m.is_phantom()) return false;
  for (const auto& [_, a] : f.r)
    if (a.collapsed && !a.value.is_phantom()) return false;
  return true;
}

std::string face_phantom_name(const std::string& r) { return "t_" + r; }

Face face(const Chart& chart, const std::vector<std::string>& selected) {
  if (chart.basic.empty()) throw DomainError("chart " + chart.to_string() + " has no boundary faces");
  if (selected.empty()) throw DomainError("face selection is empty");
  std::set<std::string> seen;
  for (const auto& n : selected) {
    if (chart.role(n) != Role::kBasic) throw DomainError("'" + n + "' is not a basic coordinate");
    if (!seen.insert(n).second) throw DomainError("'" + n + "' selected twice");
    if (chart.contains(face_phantom_name(n)))
      throw DomainError("face coordinate '" + face_phantom_name(n) + "' already exists");
  }
  Chart fc = chart;
  std::erase_if(fc.basic, [&](const std::string& n) { return seen.contains(n); });
  for (const auto& n : selected) {
    fc.phantom.push_back(face_phantom_name(n));
    fc.bounds.erase(n);
  }
  WeakMorphism inc = identity(chart);
  inc.source = fc;
  for (const auto& n : selected) inc.r[n] = {MonoidElement::phantom(face_phantom_name(n)), true};
  return {fc, inc};
}

bool is_nondegenerate(const Scale& s) {
  return std::all_of(s.begin(), s.end(), [](const auto& kv) { return kv.second.r.empty(); });
}

WeakMorphism scale_morphism(const Chart& chart, const Scale& s) {
  Chart src = chart;
  for (const auto& [n, m] : s) {
    if (chart.role(n) != Role::kPhantom) throw DomainError("scale given for non-phantom '" + n + "'");
    if (m.is_phantom()) throw DomainError("scale value for '" + n + "' must be basic");
  }
  std::erase_if(src.phantom, [&](const std::string& n) { return s.contains(n); });
  WeakMorphism f = identity(chart);
  f.source = src;
  for (const auto& [n, m] : s) f.t[n] = m;
  f.validate();
  return f;
}

WeakMorphism basepoint(const Chart& chart, const Basepoint& b) {
  WeakMorphism f{Chart::point(), chart, {}, {}, {}, {}};
  for (const auto& n : chart.basic) {
    auto it = b.r.find(n);
    if (it == b.r.end()) throw DomainError("basepoint has no tangent value for '" + n + "'");
    if (!it->second.is_constant()) throw DomainError("basepoint value for '" + n + "' must be a positive constant");
    f.r[n] = {it->second, true};
  }
  for (const auto& n : chart.phantom) {
    auto it = b.t.find(n);
    if (it == b.t.end()) throw DomainError("basepoint has no value for phantom '" + n + "'");
    if (!it->second.is_constant()) throw DomainError("basepoint value for '" + n + "' must be a positive constant");
    f.t[n] = it->second;
  }
  for (const auto& n : chart.free) {
    auto it = b.x.find(n);
    if (it == b.x.end()) throw DomainError("basepoint has no value for '" + n + "'");
    f.x[n] = Coefficient(it->second);
  }
  for (const auto& n : chart.angular) {
    auto it = b.theta.find(n);
    AngleAssign a = it == b.theta.end() ? AngleAssign{1, std::nullopt, 0} : it->second;
    if (a.source) throw DomainError("basepoint angle for '" + n + "' must be a constant");
    f.theta[n] = a;
  }
  return f;
}

}  // namespace logcorners
