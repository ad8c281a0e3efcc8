#include "logcorners/regularize.hpp"

#include <algorithm>

#include "logcorners/error.hpp"

namespace logcorners {

namespace {

template <class Fn>
LogForm map_terms(const Chart& target, const LogForm& w, Fn&& fn) {
  LogForm out(target);
  for (const auto& [b, lt] : w.terms())
    for (const auto& [l, c] : lt) fn(out, b, l, c);
  return out;
}

void check_scale_covers(const Chart& chart, const Scale& s, const LogForm& w) {
  for (const auto& [b, lt] : w.terms()) {
    for (const auto& n : b)
      if (chart.role(n) == Role::kPhantom && !s.contains(n)) throw DomainError("missing scale component for '" + n + "'");
    for (const auto& [l, _] : lt)
      for (const auto& [n, k] : l)
        if (chart.role(n) == Role::kPhantom && !s.contains(n))
          throw DomainError("missing scale component for '" + n + "'");
  }
}

mpq_class factorial(int k) {
  mpz_class r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

// Face morphism q: t_r -> r from the chart back onto its face r = 0.
WeakMorphism retraction(const Chart& chart, const Face& f, const std::string& r) {
  WeakMorphism q = identity(f.chart);
  q.source = chart;
  q.t[face_phantom_name(r)] = MonoidElement::basic(r);
  q.validate();
  return q;
}

}  // namespace

LogFunction reg_restrict(const LogFunction& f, const std::vector<std::string>& selected) {
  Face fc = face(f.chart(), selected);
  std::map<std::string, Coefficient> zero;
  for (const auto& n : selected) zero[n] = Coefficient();
  LogFunction out(fc.chart);
  for (const auto& [l, c] : f.terms()) {
    Exponents nl;
    for (const auto& [n, k] : l)
      nl[std::find(selected.begin(), selected.end(), n) != selected.end() ? face_phantom_name(n) : n] = k;
    out.add(nl, c.substitute(zero));
  }
  return out;
}

LogForm reg_restrict(const LogForm& w, const std::vector<std::string>& selected) {
  Face fc = face(w.chart(), selected);
  std::map<std::string, Coefficient> zero;
  for (const auto& n : selected) zero[n] = Coefficient();
  auto rename = [&](const std::string& n) {
    return std::find(selected.begin(), selected.end(), n) != selected.end() ? face_phantom_name(n) : n;
  };
  return map_terms(fc.chart, w, [&](LogForm& out, const Basis& b, const Exponents& l, const Coefficient& c) {
    Basis nb;
    for (const auto& n : b) nb.push_back(rename(n));
    Exponents nl;
    for (const auto& [n, k] : l) nl[rename(n)] = k;
    out.add(nb, nl, c.substitute(zero));
  });
}

LogFunction apply_scale(const Scale& s, const LogFunction& f) {
  check_scale_covers(f.chart(), s, LogForm(f));
  Scale used;
  for (const auto& [n, m] : s)
    if (f.chart().role(n) == Role::kPhantom) used.emplace(n, m);
  return pullback(scale_morphism(f.chart(), used), f);
}

LogForm apply_scale(const Scale& s, const LogForm& w) {
  check_scale_covers(w.chart(), s, w);
  Scale used;
  for (const auto& [n, m] : s)
    if (w.chart().role(n) == Role::kPhantom) used.emplace(n, m);
  return pullback(scale_morphism(w.chart(), used), w);
}

Scalar reglim(const LogFunction& f, const Basepoint& at) {
  if (f.has_phantom_logs()) throw DomainError("leftover phantom logs in " + f.to_string() + "; apply a scale first");
  Basepoint b = at;
  for (const auto& n : f.chart().phantom) b.t.try_emplace(n, MonoidElement());
  return pullback(basepoint(f.chart(), b), f).as_constant();
}

bool is_continuous(const LogFunction& f) {
  for (const auto& [l, c] : f.terms())
    for (const auto& [n, k] : l)
      if (k > 0 && f.chart().role(n) == Role::kBasic && !c.divisible_by(n)) return false;
  return true;
}

LogForm homotopy_phantom(const LogForm& w, const std::string& t) {
  if (w.chart().role(t) != Role::kPhantom) throw DomainError("'" + t + "' is not a phantom coordinate");
  return map_terms(w.chart(), w, [&](LogForm& out, const Basis& b, const Exponents& l, const Coefficient& c) {
    auto it = std::find(b.begin(), b.end(), t);
    if (it == b.end()) return;
    long pos = it - b.begin();
    Basis rest = b;
    rest.erase(rest.begin() + pos);
    Exponents nl = l;
    int j = nl[t]++;
    out.add(rest, nl, c.scaled(Scalar(GaussRational(mpq_class(pos % 2 ? -1 : 1, j + 1)))));
  });
}

LogForm unit_projection(const LogForm& w, const std::string& t) {
  return map_terms(w.chart(), w, [&](LogForm& out, const Basis& b, const Exponents& l, const Coefficient& c) {
    if (std::find(b.begin(), b.end(), t) == b.end() && !l.contains(t)) out.add(b, l, c);
  });
}

LogTerms power_log_antiderivative(const std::string& r, int n, int k) {
  LogTerms out;
  mpq_class kf = factorial(k);
  for (int j = 0; j <= k; ++j) {
    mpq_class v = kf / factorial(j);
    for (int e = 0; e < k - j + 1; ++e) v /= n + 1;
    if ((k - j) % 2) v = -v;
    Exponents l;
    if (j) l[r] = j;
    out[l] = Coefficient::variable(r, n + 1).scaled(Scalar(GaussRational(v)));
  }
  return out;
}

LogForm homotopy_interval(const LogForm& w, const std::string& r) {
  if (w.chart().role(r) != Role::kBasic) throw DomainError("'" + r + "' is not a basic coordinate");
  if (!reg_restrict(w, {r}).is_zero())
    throw DomainError("form does not vanish on the face " + r + " = 0");
  return map_terms(w.chart(), w, [&](LogForm& out, const Basis& b, const Exponents& l, const Coefficient& c) {
    auto it = std::find(b.begin(), b.end(), r);
    if (it == b.end()) return;
    if (c.exp_depends_on(r)) throw NotExactError("exp factor in " + r + " blocks an exact antiderivative");
    long pos = it - b.begin();
    Basis rest = b;
    rest.erase(rest.begin() + pos);
    Coefficient f = c.divided_by_variable(r);
    int k = l.contains(r) ? l.at(r) : 0;
    Exponents other = l;
    other.erase(r);
    // f = sum over powers of r; integrate each power separately.
    for (const auto& [q, p] : f.terms()) {
      for (const auto& [key, s] : p.terms()) {
        int n = key.mono.contains(r) ? key.mono.at(r) : 0;
        FourierKey rest_key = key;
        rest_key.mono.erase(r);
        Coefficient rest_coef = Coefficient::exp_times(q, FourierPoly::term(rest_key, s));
        if (pos % 2) rest_coef = -rest_coef;
        for (const auto& [lj, cj] : power_log_antiderivative(r, n, k))
          out.add(rest, add_exponents(other, lj), rest_coef * cj);
      }
    }
  });
}

LogForm composite_projection(const LogForm& w, const std::string& r) {
  Face fc = face(w.chart(), {r});
  LogForm restricted = reg_restrict(w, {r});
  LogForm projected = unit_projection(restricted, face_phantom_name(r));
  return pullback(retraction(w.chart(), fc, r), projected);
}

LogForm homotopy_composite(const LogForm& w, const std::string& r) {
  Face fc = face(w.chart(), {r});
  WeakMorphism q = retraction(w.chart(), fc, r);
  LogForm restricted = reg_restrict(w, {r});
  LogForm kernel_part = w - pullback(q, restricted);
  return homotopy_interval(kernel_part, r) + pullback(q, homotopy_phantom(restricted, face_phantom_name(r)));
}

}  // namespace logcorners
