#include <doctest.h>

#include "logcorners/error.hpp"
#include "logcorners/integration.hpp"

using namespace logcorners;

namespace {

const MonoidElement kA = MonoidElement::parameter("a");
const MonoidElement kLam = MonoidElement::parameter("lam");

Chart interval() { return Chart::interval("r", kA); }
LogFunction logr(const Chart& c) { return LogFunction::log_coordinate(c, "r"); }
Coefficient r() { return Coefficient::variable("r"); }

}  // namespace

TEST_CASE("interval integrals") {
  Chart c = interval();
  auto dl = LogForm::basis(c, "r");
  CHECK(integrate_interval(dl, kA, kLam) == Scalar::log_symbol("a") - Scalar::log_symbol("lam"));
  auto w = dl.times(LogFunction(c, r()) * logr(c));
  CHECK(integrate_interval(w, kA, kLam) == Scalar::parameter("a") * Scalar::log_symbol("a") - Scalar::parameter("a"));
  CHECK(integrate_interval(dl.times(LogFunction(c, r())), MonoidElement::constant(2), kLam) == Scalar(2));
}

TEST_CASE("circle integrals") {
  Chart c = Chart::circle("theta");
  auto dt = LogForm::basis(c, "theta");
  CHECK(integrate_circle(dt.scaled(Scalar::i())) == Scalar(2) * Scalar::pi() * Scalar::i());
  CHECK(integrate_circle(dt.times(LogFunction(c, Coefficient(FourierPoly::wave("theta", 1))))).is_zero());
}

TEST_CASE("product and stokes") {
  Chart c = product(interval(), Chart::circle("theta"));
  IntegrationDomain dom = IntegrationDomain::of(c);
  dom.lower["r"] = kLam;
  auto w = wedge(LogForm::basis(c, "r"), LogForm::basis(c, "theta").scaled(Scalar::i()));
  CHECK(integrate(w, dom) ==
        Scalar(2) * Scalar::pi() * Scalar::i() * (Scalar::log_symbol("a") - Scalar::log_symbol("lam")));
  IntegrationDomain d1 = IntegrationDomain::of(interval());
  d1.lower["r"] = kLam;
  auto res = stokes_check(LogForm(logr(interval())), d1);
  CHECK(res.equal);
  CHECK(res.lhs == Scalar::log_symbol("a") - Scalar::log_symbol("lam"));
  auto eta = LogFunction(interval(), r()) * logr(interval()) - LogFunction(interval(), r());
  res = stokes_check(LogForm(eta), d1);
  CHECK(res.equal);
}

TEST_CASE("convergence") {
  IntegrationDomain d1 = IntegrationDomain::of(interval());
  auto dl = LogForm::basis(interval(), "r");
  CHECK(!convergence_classify(dl, d1).convergent);
  CHECK(convergence_classify(dl.times(LogFunction(interval(), r()) * logr(interval())), d1).convergent);
  CHECK(convergence_classify(LogForm(interval()), d1).convergent);
}

TEST_CASE("phantom integral with scale") {
  Chart c{{}, {"r"}, {"u"}, {}, {{"r", kA}}};
  IntegrationDomain dom = IntegrationDomain::of(c);
  dom.scale["u"] = MonoidElement::exponential(FourierPoly::variable("r")) * MonoidElement::basic("r", 2);
  auto w = LogForm::basis(c, "u");
  // dlog(e^r r^2) = r dlog r + 2 dlog r
  CHECK(integrate(w, dom) == Scalar::parameter("a") + Scalar(2) * Scalar::log_symbol("a"));
}
