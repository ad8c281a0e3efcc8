#include <doctest.h>

#include <chrono>
#include <cmath>

#include "logcorners/numeric.hpp"

using namespace logcorners;

namespace {

Chart unit_interval() { return Chart::interval("r", MonoidElement()); }

}  // namespace

TEST_CASE("interior evaluation") {
  Chart c = unit_interval();
  auto lr = LogFunction::log_coordinate(c, "r");
  CHECK(eval_interior(lr, {{"r", std::exp(1.0)}}, {}).real() == doctest::Approx(1).epsilon(1e-12));
  auto rl = LogFunction(c, Coefficient::variable("r")) * lr;
  CHECK(eval_interior(rl, {{"r", 1e-6}}, {}).real() == doctest::Approx(-1.381551e-5).epsilon(1e-5));
}

TEST_CASE("quadrature basics") {
  Chart c = unit_interval();
  auto lr = LogFunction::log_coordinate(c, "r");
  auto w = LogForm::basis(c, "r").times(LogFunction(c, Coefficient::variable("r")) * lr);
  auto q = quadrature(w, IntegrationDomain::of(c), {});
  CHECK(std::abs(q.value - Complex(-1)) < 1e-9);
  Chart s = Chart::circle("theta");
  auto e = LogForm::basis(s, "theta").times(LogFunction(s, Coefficient(FourierPoly::wave("theta", 1))));
  CHECK(std::abs(quadrature(e, IntegrationDomain::of(s), {}).value) < 1e-10);
}

TEST_CASE("divergence fit of dlog r") {
  Chart c = unit_interval();
  auto fit = divergence_fit(LogForm::basis(c, "r"), IntegrationDomain::of(c), {});
  CHECK(std::abs(fit.coefficients[0]) < 1e-5);
  CHECK(std::abs(fit.coefficients[1] - Complex(-1)) < 1e-5);
  auto lr = LogFunction::log_coordinate(c, "r");
  fit = divergence_fit(LogForm::basis(c, "r").times(lr), IntegrationDomain::of(c), {});
  CHECK(std::abs(fit.coefficients[2] - Complex(-0.5)) < 1e-5);
  CHECK(std::abs(fit.coefficients[0]) < 1e-5);
}

TEST_CASE("plane oracle") {
  auto t0 = std::chrono::steady_clock::now();
  auto q = i2_plane_oracle(2.0, 1e-8);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("oracle ", q.value, " err ", q.error, " in ", secs, " s");
  CHECK(std::abs(q.value - Complex(0, 2 * std::numbers::pi * std::log(4.0))) < 1e-4);
}
