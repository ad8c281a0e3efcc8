#include <doctest.h>

#include "logcorners/morphism.hpp"
#include "random_forms.hpp"

using namespace logcorners;
using logcorners::testing::Gen;

namespace {

constexpr int kCases = 200;

Chart xyr() { return {{"x"}, {"r"}, {}, {"theta"}, {}}; }

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

}  // namespace

TEST_CASE("property: coefficient ring axioms") {
  Gen g(11);
  Chart c = xyr();
  for (int k = 0; k < kCases; ++k) {
    Coefficient a = g.coefficient(c, {"x", "r"}), b = g.coefficient(c, {"x", "r"}), e = g.coefficient(c, {"r"});
    CHECK((a + b) + e == a + (b + e));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * e == a * (b * e));
    CHECK(a * (b + e) == a * b + a * e);
    CHECK((a - a).is_zero());
    CHECK(a * Coefficient(1) == a);
    CHECK((a * Coefficient(0)).is_zero());
  }
}

TEST_CASE("property: scalar ring axioms and conjugation") {
  Gen g(12);
  auto id = [](const std::string& n) { return n; };
  for (int k = 0; k < kCases; ++k) {
    Scalar a = g.scalar(), b = g.scalar(), e = g.scalar();
    CHECK(a * (b + e) == a * b + a * e);
    CHECK((a * b) * e == a * (b * e));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a.conjugated(id).conjugated(id) == a);
    CHECK((a * b).conjugated(id) == a.conjugated(id) * b.conjugated(id));
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  Gen g(13);
  Chart c = xyr();
  Point params{{"a", 1.7}, {"b", 0.6}};
  for (int k = 0; k < kCases; ++k) {
    Coefficient a = g.coefficient(c, {"x", "r"}), b = g.coefficient(c, {"x", "r"});
    Point pt{{"x", g.uniform(-20, 20) / 10.0}, {"r", g.uniform(1, 30) / 10.0}, {"theta", g.uniform(0, 62) / 10.0}};
    CHECK(close((a * b).eval(pt, params), a.eval(pt, params) * b.eval(pt, params)));
    CHECK(close((a + b).eval(pt, params), a.eval(pt, params) + b.eval(pt, params)));
  }
}

TEST_CASE("property: derivatives commute and obey Leibniz") {
  Gen g(14);
  Chart c = xyr();
  for (int k = 0; k < kCases; ++k) {
    Coefficient a = g.coefficient(c, {"x", "r"}), b = g.coefficient(c, {"r"});
    CHECK(a.diff("x").diff("r") == a.diff("r").diff("x"));
    CHECK((a * b).diff("r") == a.diff("r") * b + a * b.diff("r"));
    CHECK((a + b).diff("x") == a.diff("x") + b.diff("x"));
  }
}

TEST_CASE("property: zero test is exact") {
  Gen g(15);
  Chart c = xyr();
  for (int k = 0; k < kCases; ++k) {
    Coefficient a = g.coefficient(c, {"x"}), b = g.coefficient(c, {"r"});
    Coefficient z = (a + b) * (a - b) - (a * a - b * b);
    CHECK(z.is_zero());
    CHECK(z == Coefficient());
  }
}

TEST_CASE("property: monoid alpha is a homomorphism") {
  Gen g(16);
  Chart c{{}, {"r", "s"}, {"t"}, {}, {}};
  for (int k = 0; k < kCases; ++k) {
    MonoidElement m = g.monoid(c), n = g.monoid(c);
    CHECK((m * n).alpha() == m.alpha() * n.alpha());
    CHECK((m * n).log_constant() == m.log_constant() + n.log_constant());
  }
}

TEST_CASE("property: category laws for weak morphisms") {
  Gen g(17);
  Chart a{{"x"}, {"r"}, {"t"}, {"theta"}, {}};
  Chart b{{"y"}, {"u"}, {"s"}, {"phi"}, {}};
  Chart cc{{"z"}, {"v"}, {"w"}, {"psi"}, {}};
  Chart dd{{"x2"}, {"r2"}, {"t2"}, {"theta2"}, {}};
  for (int k = 0; k < kCases; ++k) {
    WeakMorphism f = g.morphism(b, a);
    WeakMorphism h = g.morphism(cc, b, true);
    WeakMorphism e = g.morphism(dd, cc, true);
    CHECK(compose(identity(a), f) == f);
    CHECK(compose(f, identity(b)) == f);
    CHECK(compose(compose(f, h), e) == compose(f, compose(h, e)));
    WeakMorphism ft = g.morphism(b, a, true);
    MonoidElement m = g.monoid(a);
    CHECK(pullback(compose(ft, h), m) == pullback(h, pullback(ft, m)));
  }
}
