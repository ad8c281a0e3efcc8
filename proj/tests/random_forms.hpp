#pragma once

#include <random>
#include <string>
#include <vector>

#include "logcorners/logform.hpp"

namespace logcorners::testing {

/// Deterministic generators for symbolic objects. Knobs keep the output
/// inside what a given engine operation accepts.
struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

  mpq_class rational(int max_num = 3, int max_den = 3) {
    int n = uniform(-max_num, max_num);
    if (n == 0) n = 1;
    mpq_class q(n, uniform(1, max_den));
    q.canonicalize();
    return q;
  }

  mpq_class positive_rational() {
    mpq_class q(uniform(1, 4), uniform(1, 3));
    q.canonicalize();
    return q;
  }

  static Scalar rat(const mpq_class& q) { return Scalar(RationalFunction(GaussRational(q))); }

  Scalar scalar(bool transcendental = true) {
    Scalar s = rat(rational());
    if (coin(0.2)) s += Scalar(GaussRational(0, rational()));
    if (transcendental) {
      if (coin(0.2)) s += Scalar::pi() * rat(rational());
      if (coin(0.2)) s += Scalar::log_symbol("a") * rat(rational());
      if (coin(0.2)) s = s * Scalar::parameter("b");
    }
    return s;
  }

  /// Sum of scalar * monomial in the free/basic coordinates * waves.
  FourierPoly poly(const Chart& c, int terms, int max_degree, bool transcendental = true) {
    FourierPoly p;
    std::vector<std::string> vars = c.free;
    vars.insert(vars.end(), c.basic.begin(), c.basic.end());
    for (int k = 0; k < terms; ++k) {
      FourierPoly m(scalar(transcendental));
      for (const auto& v : vars)
        if (coin(0.5)) m = m * FourierPoly::variable(v, uniform(1, max_degree));
      for (const auto& th : c.angular)
        if (coin(0.4)) m = m * FourierPoly::wave(th, uniform(-2, 2));
      p += m;
    }
    return p;
  }

  /// Real polynomial without constant term, suitable for exp factors.
  FourierPoly exponent(const std::vector<std::string>& vars) {
    FourierPoly q;
    for (const auto& v : vars)
      if (coin(0.6)) q += FourierPoly::variable(v, uniform(1, 2)).scaled(rat(rational(2, 2)));
    if (q.is_zero() && !vars.empty()) q = FourierPoly::variable(vars.front());
    return q;
  }

  /// `exp_vars` lists coordinates that may appear inside exp factors.
  Coefficient coefficient(const Chart& c, const std::vector<std::string>& exp_vars = {}, bool transcendental = true) {
    Coefficient out(poly(c, uniform(1, 2), 2, transcendental));
    if (!exp_vars.empty() && coin(0.4))
      out += Coefficient::exp_times(exponent(exp_vars), poly(c, 1, 1, transcendental));
    return out;
  }

  /// Coefficients times powers of logs of basic and phantom coordinates.
  LogFunction function(const Chart& c, int max_log = 2, const std::vector<std::string>& exp_vars = {},
                       bool transcendental = true) {
    LogFunction f(c);
    std::vector<std::string> logs = c.basic;
    logs.insert(logs.end(), c.phantom.begin(), c.phantom.end());
    int terms = uniform(1, 3);
    for (int k = 0; k < terms; ++k) {
      Exponents e;
      for (const auto& n : logs)
        if (coin(0.5)) {
          int p = uniform(0, max_log);
          if (p > 0) e[n] = p;
        }
      f.add(e, coefficient(c, exp_vars, transcendental));
    }
    return f;
  }

  LogForm basis_wedge(const Chart& c, const std::vector<std::string>& names) {
    LogForm w(LogFunction(c, Coefficient(1)));
    for (const auto& n : names) w = wedge(w, LogForm::basis(c, n));
    return w;
  }

  /// Random homogeneous form of the given degree.
  LogForm form(const Chart& c, int degree, int max_log = 2, const std::vector<std::string>& exp_vars = {},
               bool transcendental = true) {
    std::vector<std::string> coords = c.coordinates();
    LogForm w(c);
    if (degree > static_cast<int>(coords.size())) return w;
    int terms = uniform(1, 3);
    for (int k = 0; k < terms; ++k) {
      std::vector<std::string> pool = coords, chosen;
      std::shuffle(pool.begin(), pool.end(), rng);
      chosen.assign(pool.begin(), pool.begin() + degree);
      w += basis_wedge(c, chosen).times(function(c, max_log, exp_vars, transcendental));
    }
    return w;
  }

  /// Positive constant: rational, parameter or product.
  MonoidElement positive_constant(bool parameters = true) {
    MonoidElement m = MonoidElement::constant(positive_rational());
    if (parameters && coin(0.4)) m = m * MonoidElement::parameter(pick(std::vector<std::string>{"a", "lam", "mu"}));
    return m;
  }

  MonoidElement monoid(const Chart& c) {
    MonoidElement m = positive_constant();
    for (const auto& r : c.basic)
      if (coin()) m = m * MonoidElement::basic(r, uniform(1, 2));
    for (const auto& t : c.phantom)
      if (coin(0.3)) m = m * MonoidElement::phantom(t, 1);
    if (coin(0.4)) m = m * MonoidElement::exponential(exponent(c.basic));
    return m;
  }

  /// Every target coordinate is pulled back to the first source coordinate of
  /// its kind. A `tame` morphism has no exp factors and no constant shifts of
  /// free coordinates, so exp factors of pulled-back forms stay polynomial.
  WeakMorphism morphism(const Chart& source, const Chart& target, bool tame = false) {
    WeakMorphism f{source, target, {}, {}, {}, {}};
    const std::string& u = source.basic[0];
    std::vector<std::string> vars = {source.free[0], u};
    for (const auto& r : target.basic) {
      MonoidElement m = positive_constant() * MonoidElement::basic(u, uniform(1, 2));
      if (!tame && coin(0.5)) m = m * MonoidElement::exponential(exponent(vars));
      f.r[r] = {m, false};
    }
    for (const auto& t : target.phantom) {
      MonoidElement m = positive_constant() * MonoidElement::phantom(source.phantom[0], uniform(1, 2));
      if (coin(0.5)) m = m * MonoidElement::basic(u, 1);
      f.t[t] = m;
    }
    for (const auto& x : target.free) {
      Coefficient c = tame ? Coefficient() : Coefficient(rat(rational()));
      c += Coefficient::variable(source.free[0]).scaled(rat(rational()));
      if (coin()) c += Coefficient::variable(u, 2);
      f.x[x] = c;
    }
    for (const auto& th : target.angular) f.theta[th] = {coin() ? 1 : -1, source.angular[0], uniform(0, 3)};
    f.validate();
    return f;
  }
};

}  // namespace logcorners::testing
