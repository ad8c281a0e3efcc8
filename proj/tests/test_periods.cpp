#include <doctest.h>

#include "logcorners/periods.hpp"

using namespace logcorners;

namespace {

Scalar two_pi_i() { return Scalar(2) * Scalar::pi() * Scalar::i(); }

}  // namespace

TEST_CASE("residue at radius zero") {
  CHECK(residue_radius_zero(MonoidElement()) == two_pi_i());
  FourierPoly cos_theta = (FourierPoly::wave("theta", 1) + FourierPoly::wave("theta", -1)).scaled(Scalar::rational(1, 2));
  CHECK(residue_radius_zero(MonoidElement::exponential(cos_theta)) == two_pi_i());
  CHECK(residue_radius_zero(MonoidElement::parameter("c")) == two_pi_i());
}

TEST_CASE("kummer matrix") {
  auto m = kummer_period_matrix(MonoidElement::parameter("a"), MonoidElement::parameter("lam"));
  CHECK(m[0][0] == Scalar::parameter("a"));
  CHECK(m[0][1] == Scalar::log_symbol("a") - Scalar::log_symbol("lam"));
  CHECK(m[1][0].is_zero());
  CHECK(m[1][1] == two_pi_i());
}

TEST_CASE("i2 and double copy") {
  Scalar expected = two_pi_i() * (Scalar::log_symbol("a") + Scalar::log_symbol("abar"));
  for (int order = 1; order <= 4; ++order) CHECK(i2_via_stokes(order) == expected);
  Conjugation unit;
  unit.unit_circle = true;
  CHECK(i2_via_stokes(2, unit).is_zero());
  CHECK(double_copy_p1(DoubleCopyConfig::standard()) == expected);
}
