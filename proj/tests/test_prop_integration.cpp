#include <doctest.h>

#include "logcorners/error.hpp"
#include "logcorners/numeric.hpp"
#include "random_forms.hpp"

using namespace logcorners;
using logcorners::testing::Gen;

namespace {

constexpr int kCases = 200;

IntegrationDomain interval_domain(Gen& g) {
  IntegrationDomain dom = IntegrationDomain::of(Chart::interval("r", g.positive_constant()));
  dom.lower["r"] = g.positive_constant();
  return dom;
}

IntegrationDomain square_domain(Gen& g) {
  Chart c{{}, {"r", "s"}, {}, {}, {{"r", g.positive_constant()}, {"s", g.positive_constant()}}};
  IntegrationDomain dom = IntegrationDomain::of(c);
  dom.lower["r"] = g.positive_constant();
  dom.lower["s"] = g.positive_constant();
  return dom;
}

IntegrationDomain cylinder_domain(Gen& g) {
  Chart c{{}, {"r"}, {}, {"theta"}, {{"r", g.positive_constant()}}};
  IntegrationDomain dom = IntegrationDomain::of(c);
  dom.lower["r"] = g.positive_constant();
  return dom;
}

void check_stokes(Gen& g, IntegrationDomain (*make)(Gen&)) {
  for (int k = 0; k < kCases; ++k) {
    IntegrationDomain dom = make(g);
    LogForm eta = g.form(dom.chart, dom.chart.dimension() - 1, 3);
    StokesResult s = stokes_check(eta, dom);
    CHECK(s.equal);
    CHECK(s.lhs == s.rhs);
  }
}

// Multiplies every coefficient by the product of the basic coordinates.
LogForm damped(const LogForm& w) {
  Coefficient m(1);
  for (const auto& r : w.chart().basic) m *= Coefficient::variable(r);
  return w.times(LogFunction(w.chart(), m));
}

}  // namespace

TEST_CASE("property: Stokes on [0,a]") {
  Gen g(31);
  check_stokes(g, interval_domain);
}

TEST_CASE("property: Stokes on [0,a]x[0,b]") {
  Gen g(32);
  check_stokes(g, square_domain);
}

TEST_CASE("property: Stokes on [0,a]xS1") {
  Gen g(33);
  check_stokes(g, cylinder_domain);
}

TEST_CASE("property: Fubini on decomposable forms") {
  Gen g(34);
  for (int k = 0; k < kCases; ++k) {
    IntegrationDomain dom = square_domain(g);
    MonoidElement a = dom.chart.bounds.at("r"), b = dom.chart.bounds.at("s");
    Chart cr = Chart::interval("r", a), cs = Chart::interval("s", b);
    LogFunction f = g.function(cr, 3), h = g.function(cs, 3);
    LogForm wr = LogForm::basis(cr, "r").times(f), ws = LogForm::basis(cs, "s").times(h);
    LogForm w = wedge(LogForm::basis(dom.chart, "r").times(LogFunction(dom.chart, f.terms())),
                      LogForm::basis(dom.chart, "s").times(LogFunction(dom.chart, h.terms())));
    Scalar expected = integrate_interval(wr, a, dom.lower.at("r")) * integrate_interval(ws, b, dom.lower.at("s"));
    CHECK(integrate(w, dom) == expected);
    IntegrationDomain swapped = dom;
    swapped.order = {"s", "r"};
    CHECK(integrate(w, swapped) == -expected);
  }
}

TEST_CASE("property: convergent integrals do not depend on the regularization") {
  Gen g(35);
  IntegrationDomain (*makers[])(Gen&) = {interval_domain, square_domain, cylinder_domain};
  for (int k = 0; k < kCases; ++k) {
    IntegrationDomain dom = makers[k % 3](g);
    LogForm w = damped(g.form(dom.chart, dom.chart.dimension(), 3));
    REQUIRE(convergence_classify(w, dom).convergent);
    IntegrationDomain other = dom;
    for (auto& [r, lam] : other.lower) lam = g.positive_constant();
    CHECK(integrate(w, dom) == integrate(w, other));
  }
}

TEST_CASE("property: change of variables r = u^2") {
  Gen g(36);
  for (int k = 0; k < kCases; ++k) {
    MonoidElement p = g.positive_constant(), q = g.positive_constant();
    bool cyl = k % 2 == 1;
    Chart c = cyl ? Chart{{}, {"r"}, {}, {"theta"}, {{"r", p * p}}} : Chart::interval("r", p * p);
    IntegrationDomain dom = IntegrationDomain::of(c);
    dom.lower["r"] = q * q;
    LogForm w = g.form(c, c.dimension(), 3);
    Reparametrization rep = square_root_reparametrization(dom, "r", "u");
    CHECK(integrate(pullback(rep.morphism, w), rep.domain) == integrate(w, dom));
  }
}

TEST_CASE("property: exact integrals agree with the quadrature oracle") {
  Gen g(37);
  Point params{{"a", 1.3}, {"b", 0.7}};
  for (int k = 0; k < kCases; ++k) {
    IntegrationDomain dom = IntegrationDomain::of(Chart::interval("r", MonoidElement::constant(g.positive_rational())));
    LogForm w = damped(g.form(dom.chart, 1, 3));
    Scalar exact = integrate(w, dom);
    QuadratureSpec spec;
    spec.params = params;
    spec.tolerance = 1e-12;
    QuadratureResult num = quadrature(w, dom, spec);
    auto ex = exact.eval(params);
    CHECK(std::abs(num.value - ex) <= 1e-8 * (1 + std::abs(ex)));
  }
}
