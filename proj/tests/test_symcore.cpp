#include <doctest.h>

#include <random>

#include "logcorners/coefficient.hpp"
#include "logcorners/error.hpp"

using namespace logcorners;

TEST_CASE("scalar identities") {
  Scalar two_pi_i = Scalar(2) * Scalar::pi() * Scalar::i();
  CHECK(two_pi_i + Scalar() == two_pi_i);
  Scalar la = Scalar::log_symbol("a");
  CHECK((la * Scalar(2) + la * Scalar(-2)).is_zero());
  CHECK(two_pi_i.to_string() == "2*i*pi");
  CHECK(Scalar::log_rational(mpq_class(12, 5)).to_string() == "2*log(2) + log(3) - log(5)");
}

TEST_CASE("rational function reduction") {
  auto a = Polynomial::variable("a");
  RationalFunction f(a * a - Polynomial(1), a - Polynomial(1));
  CHECK(f == RationalFunction(a + Polynomial(1)));
  RationalFunction g(Polynomial(1), a - Polynomial(1));
  CHECK((g * RationalFunction(a - Polynomial(1))) == RationalFunction(1));
  Scalar s = Scalar(g) * Scalar::pi();
  CHECK(s.to_string() == "1/(a - 1)*pi");
}

TEST_CASE("coefficient evaluation") {
  Coefficient r2 = Coefficient::variable("r", 2);
  CHECK(r2.eval({{"r", 3.0}}, {}).real() == doctest::Approx(9));
  Coefficient er = Coefficient::exp(FourierPoly::variable("r")) * Coefficient::variable("r");
  CHECK(std::abs(er.eval({{"r", 0.0}}, {})) == doctest::Approx(0));
  Coefficient w(FourierPoly::wave("theta", 1));
  auto v = w.eval({{"theta", std::acos(0.0)}}, {});
  CHECK(std::abs(v - std::complex<double>(0, 1)) < 1e-12);
}

TEST_CASE("coefficient derivatives") {
  auto r = Coefficient::variable("r");
  CHECK(r.pow(2).diff("r") == r.scaled(2));
  FourierPoly q = FourierPoly::variable("r", 2);
  CHECK(Coefficient::exp(q).diff("r") == Coefficient(q.diff("r")) * Coefficient::exp(q));
  Coefficient w(FourierPoly::wave("theta", 1));
  CHECK(w.diff("theta") == w.scaled(Scalar::i()));
  CHECK_THROWS_AS(Coefficient::exp(FourierPoly(1)), DomainError);
}
