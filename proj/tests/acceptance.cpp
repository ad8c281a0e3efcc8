// One pass/fail line per acceptance criterion. Exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "logcorners/error.hpp"
#include "logcorners/numeric.hpp"
#include "logcorners/periods.hpp"
#include "logcorners/regularization_check.hpp"

using namespace logcorners;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Scalar L(const std::string& n) { return Scalar::log_symbol(n); }
Scalar two_pi_i() { return Scalar(2) * Scalar::pi() * Scalar::i(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [FAILED]");
  }
};

Outcome kummer() {
  Outcome o;
  auto t0 = Clock::now();
  auto a = MonoidElement::parameter("a");
  ScalarMatrix m = kummer_period_matrix(a, MonoidElement::parameter("lam"));
  o.require(m[0][0] == Scalar::parameter("a") && m[0][1] == L("a") - L("lam") && m[1][0].is_zero() &&
                m[1][1] == two_pi_i(),
            "[[" + m[0][0].to_string() + ", " + m[0][1].to_string() + "], [" + m[1][0].to_string() + ", " +
                m[1][1].to_string() + "]]");
  ScalarMatrix m1 = kummer_period_matrix(a, MonoidElement::constant(1));
  o.require(m1[0][1] == L("a"), "lambda = 1 gives I1 = " + m1[0][1].to_string());
  double t = seconds_since(t0);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s < 1 s");
  return o;
}

Outcome i2() {
  Outcome o;
  auto t0 = Clock::now();
  Scalar expected = two_pi_i() * (L("a") + L("abar"));
  bool all = true;
  Scalar v;
  for (int order = 1; order <= 4; ++order) {
    v = i2_via_stokes(order);
    all = all && v == expected;
  }
  o.require(all, "I2 = " + v.to_string() + " = 2*pi*i*log|a|^2 for orders 1..4");
  Conjugation unit{"a", "abar", true};
  o.require(i2_via_stokes(2, unit).is_zero(), "|a| = 1 gives 0");
  o.require(double_copy_p1(DoubleCopyConfig::standard()) == expected, "double copy agrees");
  double ts = seconds_since(t0);
  o.require(ts < 1.0, "symbolic " + std::to_string(ts) + " s < 1 s");

  auto value = expected.eval({{"a", 2.0}, {"abar", 2.0}});
  char buf[160];
  std::snprintf(buf, sizeof buf, "a=2: %.6fi, |.-8.710262i| = %.1e < 1e-4", value.imag(),
                std::abs(value - std::complex<double>(0, 8.710262)));
  o.require(std::abs(value - std::complex<double>(0, 8.710262)) < 1e-4, buf);
  auto t1 = Clock::now();
  QuadratureResult q = i2_plane_oracle(2.0);
  double to = seconds_since(t1);
  std::snprintf(buf, sizeof buf, "oracle %.9fi, |oracle-exact| = %.1e < 1e-4", q.value.imag(), std::abs(q.value - value));
  o.require(std::abs(q.value - value) < 1e-4, buf);
  o.require(to < 60.0, "oracle " + std::to_string(to) + " s < 60 s");
  return o;
}

Outcome residue() {
  Outcome o;
  auto t0 = Clock::now();
  const std::string th = "theta";
  MonoidElement profiles[] = {
      MonoidElement::constant(1),
      MonoidElement::exponential((FourierPoly::wave(th, 1) + FourierPoly::wave(th, -1)).scaled(Scalar::rational(1, 2))),
      MonoidElement::parameter("lam") *
          MonoidElement::exponential(
              (FourierPoly::wave(th, 2) - FourierPoly::wave(th, -2)).scaled(Scalar(GaussRational(0, mpq_class(-1, 2)))))};
  const char* names[] = {"1", "exp(cos(theta))", "lam*exp(sin(2*theta))"};
  for (int k = 0; k < 3; ++k) {
    Scalar r = residue_radius_zero(profiles[k]);
    o.require(r == two_pi_i(), std::string(names[k]) + " -> " + r.to_string());
  }
  double t = seconds_since(t0);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s < 1 s");
  return o;
}

Outcome convergent_integral() {
  Outcome o;
  auto t0 = Clock::now();
  Chart c = Chart::interval("r", MonoidElement::parameter("a"));
  LogForm w = d(LogFunction(c, Coefficient::variable("r"))).times(LogFunction::log_coordinate(c, "r"));
  Scalar expected = Scalar::parameter("a") * L("a") - Scalar::parameter("a");
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(1, 9), den(1, 7);
  mpq_class previous = 0;
  for (int k = 0; k < 2; ++k) {
    IntegrationDomain dom = IntegrationDomain::of(c);
    mpq_class q = previous;
    while (q == previous) {
      q = mpq_class(num(rng), den(rng));
      q.canonicalize();
    }
    previous = q;
    dom.lower["r"] = MonoidElement::constant(q) * MonoidElement::parameter(k == 0 ? "lam" : "mu");
    Scalar v = integrate(w, dom);
    o.require(v == expected, "regularization " + dom.lower["r"].to_string() + ": " + v.to_string());
  }
  for (double a : {2.0, 0.5}) {
    Chart cn = Chart::interval("r", MonoidElement::constant(mpq_class(a)));
    LogForm wn = d(LogFunction(cn, Coefficient::variable("r"))).times(LogFunction::log_coordinate(cn, "r"));
    QuadratureSpec spec;
    spec.tolerance = 1e-12;
    QuadratureResult q = quadrature(wn, IntegrationDomain::of(cn), spec);
    double err = std::abs(q.value - expected.eval({{"a", a}}));
    char buf[96];
    std::snprintf(buf, sizeof buf, "oracle at a=%.1f differs by %.1e < 1e-8", a, err);
    o.require(err < 1e-8, buf);
  }
  o.detail << " (" << seconds_since(t0) << " s)";
  return o;
}

Outcome quadrant() {
  Outcome o;
  auto t0 = Clock::now();
  auto c1 = MonoidElement::parameter("c1"), c2 = MonoidElement::parameter("c2");
  auto solved = check_regularization(quadrant_regularization(c1, 0, c2, 0));
  o.require(solved.status == RegularizationStatus::kSolved, "(0,0): " + to_string(solved.status));
  auto bad = check_regularization(quadrant_regularization(c1, 1, c2, 1));
  o.require(bad.status == RegularizationStatus::kUnsolvable, "(1,1), f1(0)f2(0) != 1: " + to_string(bad.status));
  auto family = check_regularization(quadrant_regularization(c1, 1, c1.inverse(), 1));
  o.require(family.status == RegularizationStatus::kUnderdetermined && family.free_parameters.size() == 1,
            "(1,1), f1(0) = f2(0)^-1: " + to_string(family.status) + " with " +
                std::to_string(family.free_parameters.size()) + " free parameter");
  double t = seconds_since(t0);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s < 1 s");
  return o;
}

Outcome properties(const std::string& exe) {
  Outcome o;
  auto t0 = Clock::now();
  int rc = std::system((exe + " --minimal > /dev/null 2>&1").c_str());
  double t = seconds_since(t0);
  o.require(rc == 0, "property suites (200 cases each) exit " + std::to_string(rc));
  o.require(t < 300.0, "runtime " + std::to_string(t) + " s < 300 s");
  return o;
}

Outcome divergence() {
  Outcome o;
  auto t0 = Clock::now();
  Chart c = Chart::interval("r", MonoidElement::constant(1));
  LogForm w = LogForm::basis(c, "r");
  IntegrationDomain dom = IntegrationDomain::of(c);
  DivergenceFit fit = divergence_fit(w, dom, {});
  char buf[128];
  std::snprintf(buf, sizeof buf, "constant %.2e, log(eps) coefficient %.8f", std::abs(fit.coefficients[0]),
                fit.coefficients[1].real());
  o.require(std::abs(fit.coefficients[0]) < 1e-5 && std::abs(fit.coefficients[1] + 1.0) < 1e-5, buf);
  Scalar exact = integrate(w, dom);
  o.require(std::abs(exact.eval({}) - fit.coefficients[0]) < 1e-5, "exact regularized value " + exact.to_string());
  o.detail << " (" << seconds_since(t0) << " s)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string property_exe = argc > 1 ? argv[1] : "./property_tests";
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  Criterion criteria[] = {
      {"Kummer period matrix", kummer},
      {"I2 = 2*pi*i*log|a|^2 and numeric oracle", i2},
      {"residue at radius zero for three profiles", residue},
      {"convergent integral of log r on [0,a]", convergent_integral},
      {"quadrant regularization regimes", quadrant},
      {"property suites", [&] { return properties(property_exe); }},
      {"numeric divergence fit of dlog r", divergence},
  };
  int failures = 0;
  int k = 0;
  for (auto& c : criteria) {
    ++k;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << " - " << c.name << ": " << o.detail.str()
              << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
