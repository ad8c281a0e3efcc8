#include "logcorners/regularization_check.hpp"

#include "logcorners/error.hpp"

namespace logcorners {

std::string to_string(RegularizationStatus s) {
  switch (s) {
    case RegularizationStatus::kOk: return "ok";
    case RegularizationStatus::kViolated: return "violated";
    case RegularizationStatus::kSolved: return "solved";
    case RegularizationStatus::kUnsolvable: return "unsolvable";
    case RegularizationStatus::kUnderdetermined: return "underdetermined";
  }
  return "?";
}

namespace {

mpz_class pow(const mpz_class& b, long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

std::optional<MonoidElement> exp_of_log(const Scalar& s) {
  MonoidElement m;
  for (const auto& [mono, c] : s.terms()) {
    if (mono.pi_degree != 0 || mono.logs.size() != 1 || mono.logs.begin()->second != 1) return std::nullopt;
    if (!c.is_constant()) return std::nullopt;
    GaussRational g = c.num().constant_value();
    if (!g.is_real() || g.re().get_den() != 1) return std::nullopt;
    long k = g.re().get_num().get_si();
    const std::string& name = mono.logs.begin()->first;
    if (std::isdigit(static_cast<unsigned char>(name.front()))) {
      mpz_class p(name);
      m.c *= k >= 0 ? mpq_class(pow(p, k)) : mpq_class(1, pow(p, -k));
      m.c.canonicalize();
    } else {
      m.sigma[name] += static_cast<int>(k);
    }
  }
  return m;
}

namespace {

struct Equation {
  std::map<std::string, mpq_class> coef;  // unknown -> coefficient
  Scalar rhs;
  std::string origin;
};

std::string unknown_name(const std::string& phantom) { return "lam_" + phantom; }

std::string pair_key(const std::string& a, const std::string& b) { return a < b ? a + "," + b : b + "," + a; }

// One scale-preservation constraint: inc^* s_F^* p = s_G^* p for every phantom p
// of the face chart F. Unknown constants of s_G are collected into equations.
void constrain(const Chart& f_chart, const Scale& s_f, const WeakMorphism& inc, const Scale& s_g,
               const std::string& label, std::vector<Equation>& eqs, std::vector<std::string>& violations) {
  for (const auto& p : f_chart.phantom) {
    auto it = s_f.find(p);
    if (it == s_f.end()) throw DomainError("malformed regularization: no scale for '" + p + "' on " + label);
    MonoidElement lhs = pullback(inc, it->second);
    Equation e;
    e.origin = label + ", " + p;
    MonoidElement known = lhs;
    known.t.clear();
    for (const auto& [t, k] : lhs.t) {
      auto jt = s_g.find(t);
      if (jt != s_g.end()) {
        known = known * jt->second.pow(k);
      } else {
        e.coef[unknown_name(t)] += k;
      }
    }
    MonoidElement rhs;
    if (auto jt = s_g.find(p); jt != s_g.end()) {
      rhs = jt->second;
    } else {
      e.coef[unknown_name(p)] -= 1;
    }
    if (!(known.q == rhs.q) || known.r != rhs.r || !known.t.empty() || !rhs.t.empty()) {
      violations.push_back(e.origin + ": " + known.to_string() + " != " + rhs.to_string());
      continue;
    }
    std::erase_if(e.coef, [](const auto& kv) { return sgn(kv.second) == 0; });
    e.rhs = rhs.log_constant() - known.log_constant();
    eqs.push_back(std::move(e));
  }
}

}  // namespace

RegularizationReport check_regularization(const Regularization& reg) {
  const Chart& chart = reg.chart;
  chart.validate();
  RegularizationReport report;
  std::vector<Equation> eqs;

  for (const auto& [p, m] : reg.chart_scale)
    if (chart.role(p) != Role::kPhantom) throw DomainError("malformed regularization: '" + p + "' is not a phantom");

  std::map<std::string, Face> depth1;
  for (const auto& ri : chart.basic) {
    auto it = reg.faces.find(ri);
    if (it == reg.faces.end()) throw DomainError("malformed regularization: no scale on the face " + ri + "=0");
    Face f = face(chart, {ri});
    for (const auto& [p, m] : it->second) {
      if (f.chart.role(p) != Role::kPhantom)
        throw DomainError("malformed regularization: '" + p + "' is not a phantom of the face " + ri + "=0");
      if (m.is_phantom()) throw DomainError("malformed regularization: scale value for '" + p + "' is a phantom");
    }
    constrain(chart, reg.chart_scale, f.inclusion, it->second, "face " + ri + "=0", eqs, report.violations);
    depth1.emplace(ri, std::move(f));
  }

  // Corner scales, merged over both orders of each pair.
  std::map<std::string, Scale> corner;
  for (const auto& [key, s] : reg.corners) {
    if (chart.role(key.first) != Role::kBasic || chart.role(key.second) != Role::kBasic || key.first == key.second)
      throw DomainError("malformed regularization: bad corner (" + key.first + "," + key.second + ")");
    Scale& merged = corner[pair_key(key.first, key.second)];
    for (const auto& [p, m] : s) {
      auto [it, inserted] = merged.emplace(p, m);
      if (!inserted && !(it->second == m))
        report.violations.push_back("corner {" + pair_key(key.first, key.second) + "} is not swap invariant at " + p);
    }
  }

  for (const auto& ri : chart.basic) {
    const Face& fi = depth1.at(ri);
    for (const auto& rj : fi.chart.basic) {
      Face fij = face(fi.chart, {rj});
      const Scale& s = corner[pair_key(ri, rj)];
      constrain(fi.chart, reg.faces.at(ri), fij.inclusion, s, "corner " + ri + "=" + rj + "=0", eqs,
                report.violations);
    }
  }
  if (chart.basic.size() >= 3) report.unchecked.push_back("faces of depth 3 and higher");

  // Gaussian elimination over Q with Scalar right-hand sides.
  std::vector<std::string> unknowns;
  for (const auto& e : eqs)
    for (const auto& [u, _] : e.coef)
      if (std::find(unknowns.begin(), unknowns.end(), u) == unknowns.end()) unknowns.push_back(u);
  std::sort(unknowns.begin(), unknowns.end());

  std::vector<std::string> pivots;
  std::vector<Equation> rows = eqs;
  std::size_t row = 0;
  // Later unknowns are eliminated first so the earliest ones stay free.
  for (auto uit = unknowns.rbegin(); uit != unknowns.rend(); ++uit) {
    const std::string& u = *uit;
    std::size_t piv = row;
    while (piv < rows.size() && sgn(rows[piv].coef[u]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[row], rows[piv]);
    mpq_class lead = rows[row].coef[u];
    for (auto& [_, c] : rows[row].coef) c /= lead;
    rows[row].rhs = rows[row].rhs * Scalar(GaussRational(1 / lead));
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == row) continue;
      mpq_class f = rows[k].coef[u];
      if (sgn(f) == 0) continue;
      for (const auto& [v, c] : rows[row].coef) rows[k].coef[v] -= f * c;
      rows[k].rhs -= rows[row].rhs * Scalar(GaussRational(f));
    }
    pivots.push_back(u);
    ++row;
  }

  bool inconsistent = false;
  for (std::size_t k = row; k < rows.size(); ++k) {
    if (!rows[k].rhs.is_zero()) {
      inconsistent = true;
      report.violations.push_back(rows[k].origin + ": requires " + rows[k].rhs.to_string() + " = 0");
    }
  }

  for (const auto& u : unknowns)
    if (std::find(pivots.begin(), pivots.end(), u) == pivots.end()) report.free_parameters.push_back(u);
  for (std::size_t k = 0; k < row; ++k) {
    Scalar v = rows[k].rhs;
    for (const auto& f : report.free_parameters) {
      auto it = rows[k].coef.find(f);
      if (it != rows[k].coef.end() && sgn(it->second) != 0)
        v -= Scalar(GaussRational(it->second)) * Scalar::log_symbol(f);
    }
    report.log_values[pivots[k]] = v;
    if (auto m = exp_of_log(v)) report.values.emplace(pivots[k], *m);
  }
  for (const auto& f : report.free_parameters) {
    report.log_values[f] = Scalar::log_symbol(f);
    report.values.emplace(f, MonoidElement::parameter(f));
  }

  if (inconsistent) {
    report.status = RegularizationStatus::kUnsolvable;
    if (unknowns.empty()) report.status = RegularizationStatus::kViolated;
  } else if (!report.violations.empty()) {
    report.status = RegularizationStatus::kViolated;
  } else if (unknowns.empty()) {
    report.status = RegularizationStatus::kOk;
  } else if (!report.free_parameters.empty()) {
    report.status = RegularizationStatus::kUnderdetermined;
  } else {
    report.status = RegularizationStatus::kSolved;
  }
  return report;
}

Regularization quadrant_regularization(const MonoidElement& f1, int a1, const MonoidElement& f2, int a2) {
  for (const auto* f : {&f1, &f2})
    if (!f->t.empty()) throw DomainError("quadrant scale functions must be basic");
  Regularization reg;
  reg.chart = Chart{{}, {"r1", "r2"}, {}, {}, {}};
  reg.faces["r1"][face_phantom_name("r1")] = f2 * MonoidElement::basic("r2", a2);
  reg.faces["r2"][face_phantom_name("r2")] = f1 * MonoidElement::basic("r1", a1);
  return reg;
}

}  // namespace logcorners
