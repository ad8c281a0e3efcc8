#include "logcorners/integration.hpp"

#include <algorithm>

#include "logcorners/error.hpp"

namespace logcorners {

IntegrationDomain IntegrationDomain::of(const Chart& chart) {
  IntegrationDomain d;
  d.chart = chart;
  return d;
}

std::vector<std::string> IntegrationDomain::orientation() const {
  if (!order.empty()) return order;
  std::vector<std::string> o = chart.basic;
  o.insert(o.end(), chart.angular.begin(), chart.angular.end());
  return o;
}

MonoidElement IntegrationDomain::basepoint_at_zero(const std::string& r) const {
  auto it = lower.find(r);
  return it == lower.end() ? MonoidElement() : it->second;
}

void IntegrationDomain::validate() const {
  chart.validate();
  if (!chart.free.empty()) throw DomainError("free coordinates are not integrable; use bounded intervals");
  for (const auto& r : chart.basic)
    if (!chart.bounds.contains(r)) throw DomainError("basic coordinate '" + r + "' needs an upper bound");
  auto o = orientation();
  std::vector<std::string> expected = chart.basic;
  expected.insert(expected.end(), chart.angular.begin(), chart.angular.end());
  auto sorted_o = o;
  std::sort(sorted_o.begin(), sorted_o.end());
  std::sort(expected.begin(), expected.end());
  if (sorted_o != expected) throw DomainError("orientation order must list every interval and circle once");
  if (sign != 1 && sign != -1) throw DomainError("orientation sign must be +1 or -1");
  for (const auto& [r, m] : lower)
    if (!m.is_constant()) throw DomainError("basepoint at 0 for '" + r + "' must be a positive constant");
}

namespace {

Chart without(const Chart& c, const std::string& v) {
  Chart out = c;
  std::erase(out.basic, v);
  std::erase(out.angular, v);
  out.bounds.erase(v);
  return out;
}

Scalar power_difference(const Scalar& la, const Scalar& ll, int k) {
  return (la.pow(k + 1) - ll.pow(k + 1)).divided_by(Scalar(k + 1));
}

// Integrates f dlog(v) (basic v) or f dtheta (angular v) over the coordinate v.
LogFunction integrate_coordinate(const LogFunction& f, const std::string& v, const MonoidElement* bound,
                                 const MonoidElement* lambda) {
  Chart rest = without(f.chart(), v);
  LogFunction out(rest);
  const bool angular = f.chart().role(v) == Role::kAngular;
  Scalar la, ll;
  Coefficient a_value;
  if (!angular) {
    la = bound->log_constant();
    ll = lambda->log_constant();
    a_value = Coefficient(bound->constant_value());
  }
  for (const auto& [logs, c] : f.terms()) {
    if (c.exp_depends_on(v))
      throw NotExactError("exp factor depending on '" + v + "' has no exact antiderivative");
    int k = logs.contains(v) ? logs.at(v) : 0;
    Exponents other = logs;
    other.erase(v);
    for (const auto& [q, p] : c.terms()) {
      for (const auto& [key, s] : p.terms()) {
        FourierKey rest_key = key;
        if (angular) {
          if (key.fourier.contains(v)) continue;
          out.add(other, Coefficient::exp_times(q, FourierPoly::term(rest_key, s * Scalar(2) * Scalar::pi())));
          continue;
        }
        int n = key.mono.contains(v) ? key.mono.at(v) : 0;
        rest_key.mono.erase(v);
        Coefficient rest_coef = Coefficient::exp_times(q, FourierPoly::term(rest_key, s));
        if (n == 0) {
          out.add(other, rest_coef.scaled(power_difference(la, ll, k)));
          continue;
        }
        // r^n log^k r dlog r = r^(n-1) log^k r dr, whose primitive vanishes at 0.
        for (const auto& [lj, cj] : power_log_antiderivative(v, n - 1, k)) {
          int j = lj.contains(v) ? lj.at(v) : 0;
          Coefficient at_a = cj.substitute({{v, a_value}});
          out.add(other, rest_coef * at_a.scaled(la.pow(j)));
        }
      }
    }
  }
  return out;
}

LogForm scaled_form(const LogForm& w, const IntegrationDomain& dom) {
  if (dom.chart.phantom.empty()) return w;
  LogForm out = apply_scale(dom.scale, w);
  if (out.has_phantom_logs()) throw DomainError("leftover phantoms after applying the domain scale");
  return out;
}

IntegrationDomain scaled_domain(const IntegrationDomain& dom, const Chart& chart) {
  IntegrationDomain d = dom;
  d.chart = chart;
  d.scale.clear();
  return d;
}

// Restriction to the face v = bound.
LogForm restrict_to_end(const LogForm& w, const std::string& v, const MonoidElement& bound) {
  Chart rest = without(w.chart(), v);
  LogForm out(rest);
  Scalar la = bound.log_constant();
  Coefficient value(bound.constant_value());
  for (const auto& [b, lt] : w.terms()) {
    if (std::find(b.begin(), b.end(), v) != b.end()) continue;
    for (const auto& [l, c] : lt) {
      Exponents nl = l;
      int k = nl.contains(v) ? nl.at(v) : 0;
      nl.erase(v);
      out.add(b, nl, c.substitute({{v, value}}).scaled(la.pow(k)));
    }
  }
  return out;
}

}  // namespace

Scalar integrate_interval(const LogForm& w, const MonoidElement& a, const MonoidElement& lambda) {
  if (w.chart().basic.size() != 1 || w.chart().dimension() != 1)
    throw DomainError("integrate_interval needs a form on a single interval chart");
  const std::string& r = w.chart().basic.front();
  IntegrationDomain dom = IntegrationDomain::of(w.chart());
  dom.chart.bounds[r] = a;
  dom.lower[r] = lambda;
  LogForm on_dom = LogForm::from_terms(dom.chart, w.terms());
  return integrate(on_dom, dom);
}

Scalar integrate_circle(const LogForm& w) {
  if (w.chart().angular.size() != 1 || w.chart().dimension() != 1)
    throw DomainError("integrate_circle needs a form on a single circle chart");
  return integrate(w, IntegrationDomain::of(w.chart()));
}

Scalar integrate(const LogForm& w, const IntegrationDomain& dom) {
  require_same_chart(w.chart(), dom.chart);
  dom.validate();
  LogForm ws = scaled_form(w, dom);
  IntegrationDomain d = scaled_domain(dom, ws.chart());
  const int n = d.chart.dimension();
  LogForm top = ws.component(n);
  if (top.is_zero()) return {};
  Basis full = d.chart.basic;
  full.insert(full.end(), d.chart.angular.begin(), d.chart.angular.end());
  LogFunction f = top.coefficient(full);
  auto order = d.orientation();
  Basis oriented = order;
  int sign = canonical_basis(d.chart, oriented) * d.sign;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::string& v = *it;
    if (f.chart().role(v) == Role::kAngular) {
      f = integrate_coordinate(f, v, nullptr, nullptr);
    } else {
      MonoidElement lam = d.basepoint_at_zero(v);
      f = integrate_coordinate(f, v, &d.chart.bounds.at(v), &lam);
    }
  }
  Scalar value = f.as_constant();
  return sign > 0 ? value : -value;
}

StokesResult stokes_check(const LogForm& eta, const IntegrationDomain& dom) {
  require_same_chart(eta.chart(), dom.chart);
  dom.validate();
  LogForm e = scaled_form(eta, dom);
  IntegrationDomain d = scaled_domain(dom, e.chart());
  StokesResult res;
  res.lhs = integrate(logcorners::d(e), d);
  auto order = d.orientation();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::string& v = order[k];
    if (d.chart.role(v) != Role::kBasic) continue;
    int sk = k % 2 ? -1 : 1;
    IntegrationDomain fd = d;
    fd.chart = without(d.chart, v);
    fd.order.clear();
    for (const auto& o : order)
      if (o != v) fd.order.push_back(o);
    fd.lower.erase(v);
    fd.upper.erase(v);

    fd.sign = d.sign * sk;
    res.rhs += integrate(restrict_to_end(e, v, d.chart.bounds.at(v)), fd);

    LogForm at0 = reg_restrict(e, {v});
    LogForm scaled0 = apply_scale(Scale{{face_phantom_name(v), d.basepoint_at_zero(v)}}, at0);
    fd.sign = -d.sign * sk;
    res.rhs += integrate(LogForm::from_terms(fd.chart, scaled0.terms()), fd);
  }
  res.equal = res.lhs == res.rhs;
  return res;
}

Convergence convergence_classify(const LogForm& w, const IntegrationDomain& dom) {
  require_same_chart(w.chart(), dom.chart);
  LogForm ws = scaled_form(w, dom);
  Convergence c;
  for (const auto& r : ws.chart().basic) {
    LogForm restricted = reg_restrict(ws, {r});
    if (!restricted.is_zero()) {
      c.convergent = false;
      c.face = r;
      c.certificate = restricted;
      return c;
    }
  }
  return c;
}

namespace {

mpq_class rational_sqrt(const mpq_class& q) {
  mpz_class n = sqrt(q.get_num()), dd = sqrt(q.get_den());
  if (n * n != q.get_num() || dd * dd != q.get_den())
    throw DomainError("constant " + q.get_str() + " is not a rational square");
  return mpq_class(n, dd);
}

MonoidElement constant_sqrt(const MonoidElement& m) {
  if (!m.is_constant()) throw DomainError("square root of a non-constant monoid element");
  MonoidElement out = MonoidElement::constant(rational_sqrt(m.c));
  for (const auto& [n, k] : m.sigma) {
    if (k % 2) throw DomainError("parameter power " + n + "^" + std::to_string(k) + " is not a square");
    out.sigma[n] = k / 2;
  }
  return out;
}

}  // namespace

Reparametrization square_root_reparametrization(const IntegrationDomain& dom, const std::string& r,
                                                const std::string& u) {
  dom.validate();
  if (dom.chart.role(r) != Role::kBasic) throw DomainError("'" + r + "' is not an interval coordinate");
  if (dom.chart.contains(u)) throw DomainError("'" + u + "' already names a coordinate");
  Chart src = dom.chart;
  std::replace(src.basic.begin(), src.basic.end(), r, u);
  src.bounds.erase(r);
  src.bounds[u] = constant_sqrt(dom.chart.bounds.at(r));
  WeakMorphism f = identity(dom.chart);
  f.source = src;
  f.r[r] = {MonoidElement::basic(u, 2), false};
  f.validate();
  IntegrationDomain nd = dom;
  nd.chart = src;
  nd.lower.erase(r);
  nd.lower[u] = constant_sqrt(dom.basepoint_at_zero(r));
  nd.upper.erase(r);
  nd.order = dom.orientation();
  std::replace(nd.order.begin(), nd.order.end(), r, u);
  return {f, nd};
}

}  // namespace logcorners
