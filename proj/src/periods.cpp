#include "logcorners/periods.hpp"

#include "logcorners/error.hpp"

namespace logcorners {

namespace {

const std::string kR = "r";
const std::string kTheta = "theta";

Chart polar_chart() { return Chart{{}, {kR}, {}, {kTheta}, {}}; }

Scalar two_pi_i() { return Scalar(2) * Scalar::pi() * Scalar::i(); }

// dlog r + i dtheta = dlog z in polar coordinates.
LogForm dlog_z(const Chart& c) { return LogForm::basis(c, kR) + LogForm::basis(c, kTheta).scaled(Scalar::i()); }

// w^k or conj(w)^k in polar coordinates.
Coefficient w_power(int k, bool conjugate = false) {
  return Coefficient::variable(kR, k) * Coefficient(FourierPoly::wave(kTheta, conjugate ? -k : k));
}

void require_unit(const MonoidElement& profile) {
  if (!profile.r.empty() || !profile.t.empty())
    throw DomainError("scale profile " + profile.to_string() + " is not a positive unit");
  for (const auto& [k, _] : profile.q.terms())
    if (!k.mono.empty()) throw DomainError("scale profile may only depend on theta");
  FourierPoly conj = profile.q.map_scalars([](const Scalar& s) {
    return s.conjugated([](const std::string& n) { return n; });
  });
  FourierPoly mirrored;
  for (const auto& [k, s] : conj.terms()) {
    FourierKey m = k;
    for (auto& [_, f] : m.fourier) f = -f;
    mirrored.add(m, s);
  }
  if (!(mirrored == profile.q)) throw DomainError("scale profile exponent is not real");
}

// Boundary circle at radius zero: restrict, scale t_r -> profile, integrate.
Scalar circle_at_zero(const LogForm& w, const MonoidElement& profile) {
  LogForm restricted = reg_restrict(w, {kR});
  LogForm scaled = apply_scale(Scale{{face_phantom_name(kR), profile}}, restricted);
  return integrate_circle(scaled);
}

Scalar point_value(const std::string& p, const Conjugation& conj) {
  if (p == "0") return {};
  if (p == "1") return 1;
  if (p == conj.a) return Scalar::parameter(conj.a);
  throw DomainError("unknown point '" + p + "'; expected 0, 1, inf or " + conj.a);
}

}  // namespace

Scalar residue_radius_zero(const MonoidElement& profile) {
  require_unit(profile);
  return circle_at_zero(dlog_z(polar_chart()), profile);
}

ScalarMatrix kummer_period_matrix(const MonoidElement& a, const MonoidElement& lambda) {
  if (!a.is_constant() || !lambda.is_constant()) throw DomainError("a and lambda must be positive constants");
  Chart i = Chart::interval(kR, a);
  LogForm dz_line = LogForm::basis(i, kR).times(LogFunction(i, Coefficient::variable(kR)));
  LogForm dlog_line = LogForm::basis(i, kR);
  Chart p = polar_chart();
  LogForm dz_polar = dlog_z(p).times(LogFunction(p, w_power(1)));
  ScalarMatrix m;
  m[0][0] = integrate_interval(dz_line, a, lambda);
  m[0][1] = integrate_interval(dlog_line, a, lambda);
  m[1][0] = circle_at_zero(dz_polar, MonoidElement());
  m[1][1] = circle_at_zero(dlog_z(p), MonoidElement());
  return m;
}

Scalar Conjugation::conj_parameter() const {
  return unit_circle ? Scalar(RationalFunction::monomial({{a, -1}})) : Scalar::parameter(abar);
}

Scalar Conjugation::conj_log() const {
  return unit_circle ? -Scalar::log_symbol(a) : Scalar::log_symbol(abar);
}

Scalar Conjugation::conjugate(const Scalar& s) const {
  Scalar c = s.conjugated([&](const std::string& n) {
    if (unit_circle) return n;
    if (n == a) return abar;
    if (n == abar) return a;
    return n;
  });
  if (!unit_circle) return c;
  // conj(a) = 1/a on the unit circle.
  return c.substitute({{a, RationalFunction::monomial({{a, -1}})}}, {{a, -Scalar::log_symbol(a)}});
}

LogForm i2_local_form(const std::string& puncture, int order, const Conjugation& conj) {
  if (order < 1) throw DomainError("expansion order must be at least 1");
  Chart c = polar_chart();
  LogForm base = dlog_z(c);
  auto fn = [&](const Coefficient& k) { return LogFunction(c, k); };
  const bool at_inf = puncture == "inf";

  auto dz_over = [&](const Scalar& s) {
    Coefficient series;
    if (at_inf) {
      for (int k = 0; k <= order; ++k) series += w_power(k).scaled(s.pow(k));
      return base.times(fn(-series));
    }
    Scalar cdiff = point_value(puncture, conj) - s;
    if (cdiff.is_zero()) return base;
    for (int k = 0; k <= order; ++k)
      series += w_power(k + 1).scaled(Scalar(k % 2 ? -1 : 1) * Scalar(1).divided_by(cdiff.pow(k + 1)));
    return base.times(fn(series));
  };

  LogFunction log_abs;
  if (puncture == "0") {
    log_abs = LogFunction::log_coordinate(c, kR).scaled(2);
  } else if (at_inf) {
    log_abs = LogFunction::log_coordinate(c, kR).scaled(-2);
  } else {
    Scalar p = point_value(puncture, conj);
    Scalar pbar = puncture == "1" ? Scalar(1) : conj.conj_parameter();
    Scalar log_p = puncture == "1" ? Scalar() : Scalar::log_symbol(conj.a) + conj.conj_log();
    Coefficient series(log_p);
    for (int k = 1; k <= order; ++k) {
      Scalar coef = Scalar::rational(k % 2 ? 1 : -1, k);
      series += w_power(k).scaled(coef.divided_by(p.pow(k))) + w_power(k, true).scaled(coef.divided_by(pbar.pow(k)));
    }
    log_abs = fn(series);
  }
  LogForm omega = dz_over(Scalar::parameter(conj.a)) - dz_over(Scalar(1));
  return omega.times(-log_abs);
}

Scalar i2_via_stokes(int order, const Conjugation& conj, const std::map<std::string, MonoidElement>& scales) {
  Scalar total;
  for (const std::string& p : std::vector<std::string>{"0", "1", conj.a, "inf"}) {
    LogForm alpha = i2_local_form(p, order, conj);
    auto it = scales.find(p);
    MonoidElement profile = it == scales.end() ? MonoidElement() : it->second;
    require_unit(profile);
    // Boundary circles carry the orientation opposite to the polar angle.
    total -= circle_at_zero(alpha, profile);
  }
  return total;
}

std::string Chain::to_string() const {
  return kind == Kind::kLoop ? "loop(" + from + ")" : "path(" + from + "," + to + ")";
}

DoubleCopyConfig DoubleCopyConfig::standard() {
  DoubleCopyConfig cfg;
  cfg.omega_residues = {{"a", 1}, {"1", -1}};
  cfg.nu_residues = {{"0", 1}};
  cfg.pairs = {{Chain::loop("a"), Chain::path("1", "a")}, {Chain::path("0", "inf"), Chain::loop("0")}};
  return cfg;
}

namespace {

// Finite residues plus the implied residue at infinity.
std::map<std::string, Scalar> complete_residues(const std::map<std::string, Scalar>& res) {
  std::map<std::string, Scalar> out;
  Scalar sum;
  for (const auto& [p, c] : res) {
    if (p == "inf") continue;
    if (!c.is_zero()) out[p] = c;
    sum += c;
  }
  if (auto it = res.find("inf"); it != res.end() && !(it->second == -sum))
    throw DomainError("inconsistent residues: they must sum to zero");
  if (!sum.is_zero()) out["inf"] = -sum;
  return out;
}

// Regularized log(e - s) at a point e with unit tangential basepoints.
Scalar log_difference(const std::string& e, const std::string& s, const Conjugation& conj) {
  if (e == s || e == "inf") return {};
  Scalar d = point_value(e, conj) - point_value(s, conj);
  RationalFunction rf = d.as_rational_function();
  const auto& num = rf.num().terms();
  const auto& den = rf.den().terms();
  if (num.size() != 1 || den.size() != 1 || !den.begin()->second.is_one() || !num.begin()->second.is_real())
    throw DomainError("log(" + d.to_string() + ") is not representable");
  mpq_class c = num.begin()->second.re();
  Scalar out = Scalar::log_rational(abs(c));
  for (const auto& [n, k] : num.begin()->first) out += Scalar(k) * Scalar::log_symbol(n);
  for (const auto& [n, k] : den.begin()->first) out -= Scalar(k) * Scalar::log_symbol(n);
  if (sgn(c) < 0) out += Scalar::i() * Scalar::pi();
  return out;
}

}  // namespace

Scalar chain_integral(const std::map<std::string, Scalar>& residues, const Chain& c, const Conjugation& conj) {
  auto res = complete_residues(residues);
  if (c.kind == Chain::Kind::kLoop) {
    auto it = res.find(c.from);
    return it == res.end() ? Scalar() : two_pi_i() * it->second;
  }
  Scalar total;
  for (const auto& [s, k] : res) {
    if (s == "inf") continue;
    total += k * (log_difference(c.to, s, conj) - log_difference(c.from, s, conj));
  }
  return total;
}

Scalar double_copy_p1(const DoubleCopyConfig& cfg) {
  auto a = complete_residues(cfg.omega_residues);
  auto b = complete_residues(cfg.nu_residues);
  for (const auto& [p, _] : a)
    if (b.contains(p)) throw DomainError("pole sets of omega and nu must be disjoint (shared point " + p + ")");
  Scalar total;
  for (const auto& [g, gv] : cfg.pairs)
    total += chain_integral(cfg.omega_residues, g, cfg.conj) * cfg.conj.conjugate(chain_integral(cfg.nu_residues, gv, cfg.conj));
  return total;
}

}  // namespace logcorners
