#include <doctest.h>

#include <cmath>

#include "logcorners/numeric.hpp"
#include "logcorners/regularize.hpp"
#include "random_forms.hpp"

using namespace logcorners;
using logcorners::testing::Gen;

namespace {

constexpr int kCases = 200;

Chart target() { return {{"x"}, {"r"}, {"t"}, {"theta"}, {}}; }
Chart middle() { return {{"y"}, {"u"}, {"s"}, {"phi"}, {}}; }
Chart source() { return {{"z"}, {"v"}, {"w"}, {"psi"}, {}}; }

}  // namespace

TEST_CASE("property: d squared vanishes") {
  Gen g(21);
  Chart c = target();
  for (int k = 0; k < kCases; ++k) {
    LogForm w = g.form(c, g.uniform(0, 2), 2, {"x", "r"});
    CHECK(d(d(w)).is_zero());
  }
}

TEST_CASE("property: Leibniz rule for wedge") {
  Gen g(22);
  Chart c = target();
  for (int k = 0; k < kCases; ++k) {
    int p = g.uniform(0, 1);
    LogForm a = g.form(c, p, 2, {"x"}), b = g.form(c, g.uniform(0, 2));
    LogForm lhs = d(wedge(a, b));
    LogForm rhs = wedge(d(a), b) + (p % 2 ? -wedge(a, d(b)) : wedge(a, d(b)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("property: pullback commutes with d") {
  Gen g(23);
  for (int k = 0; k < kCases; ++k) {
    bool tame = k % 2 == 0;
    WeakMorphism f = g.morphism(middle(), target(), tame);
    LogForm w = tame ? g.form(target(), g.uniform(0, 2), 2, {"x", "r"}) : g.form(target(), g.uniform(0, 2), 2);
    CHECK(pullback(f, d(w)) == d(pullback(f, w)));
  }
}

TEST_CASE("property: pullback respects composition") {
  Gen g(24);
  for (int k = 0; k < kCases; ++k) {
    bool tame = k % 2 == 0;
    WeakMorphism f = g.morphism(middle(), target(), tame);
    WeakMorphism h = g.morphism(source(), middle(), true);
    LogForm w = tame ? g.form(target(), g.uniform(0, 3), 2, {"x", "r"}) : g.form(target(), g.uniform(0, 3), 2);
    CHECK(pullback(compose(f, h), w) == pullback(h, pullback(f, w)));
  }
}

TEST_CASE("property: pullback agrees numerically with substitution") {
  Gen g(25);
  Chart tgt{{"x"}, {"r"}, {}, {"theta"}, {}};
  Chart src{{"y"}, {"u"}, {}, {"phi"}, {}};
  Point params{{"a", 1.3}, {"b", 0.7}, {"lam", 2.0}, {"mu", 0.4}};
  for (int k = 0; k < kCases; ++k) {
    WeakMorphism f = g.morphism(src, tgt, true);
    LogFunction h = g.function(tgt, 2, {"x", "r"});
    Point p{{"y", g.uniform(-10, 10) / 10.0}, {"u", g.uniform(2, 20) / 10.0}, {"phi", g.uniform(0, 60) / 10.0}};
    Point q;
    q["x"] = f.x.at("x").eval(p, params).real();
    q["r"] = f.r.at("r").value.alpha().eval(p, params).real();
    const AngleAssign& a = f.theta.at("theta");
    q["theta"] = a.sign * p.at("phi") + a.quarter_turns * M_PI / 2;
    auto lhs = eval_interior(pullback(f, h), p, params);
    auto rhs = eval_interior(h, q, params);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1 + std::abs(rhs)));
  }
}

TEST_CASE("property: regularized restriction is pullback along the face inclusion") {
  Gen g(26);
  Chart c{{}, {"r", "s"}, {}, {"theta"}, {}};
  for (int k = 0; k < kCases; ++k) {
    LogForm w = g.form(c, g.uniform(0, 3), 2, {"r", "s"});
    std::vector<std::string> sel = g.coin() ? std::vector<std::string>{"r"} : std::vector<std::string>{"r", "s"};
    CHECK(reg_restrict(w, sel) == pullback(face(c, sel).inclusion, w));
  }
}

TEST_CASE("property: phantom homotopy dh + hd = id - p*s*") {
  Gen g(27);
  Chart c{{"x"}, {"r"}, {"t"}, {}, {}};
  for (int k = 0; k < kCases; ++k) {
    LogForm w = g.form(c, g.uniform(0, 3), 3, {"x", "r"});
    LogForm lhs = d(homotopy_phantom(w, "t")) + homotopy_phantom(d(w), "t");
    CHECK(lhs == w - unit_projection(w, "t"));
  }
}

TEST_CASE("property: interval homotopy dh' + h'd = id on the kernel of i*") {
  Gen g(28);
  Chart c{{"x"}, {"r"}, {}, {"theta"}, {}};
  auto r = LogFunction(c, Coefficient::variable("r"));
  for (int k = 0; k < kCases; ++k) {
    LogForm w = g.form(c, g.uniform(0, 3), 3, {"x"}).times(r);
    REQUIRE(reg_restrict(w, {"r"}).is_zero());
    LogForm lhs = d(homotopy_interval(w, "r")) + homotopy_interval(d(w), "r");
    CHECK(lhs == w);
  }
}

TEST_CASE("property: composite homotopy dh + hd = id - q*p*s*i*") {
  Gen g(29);
  Chart c{{"x"}, {"r"}, {}, {"theta"}, {}};
  for (int k = 0; k < kCases; ++k) {
    LogForm w = g.form(c, g.uniform(0, 3), 3, {"x"});
    LogForm lhs = d(homotopy_composite(w, "r")) + homotopy_composite(d(w), "r");
    CHECK(lhs == w - composite_projection(w, "r"));
  }
}

TEST_CASE("property: regularized limit of a continuous function is the ordinary limit") {
  Gen g(30);
  Chart c{{"x"}, {"r"}, {}, {}, {}};
  Point params{{"a", 1.3}, {"b", 0.7}};
  auto r = LogFunction(c, Coefficient::variable("r"));
  for (int k = 0; k < kCases; ++k) {
    Coefficient base = g.coefficient(c, {"r"});
    LogFunction f = LogFunction(c, base) + g.function(c, 3, {"r"}) * r;
    REQUIRE(is_continuous(f));
    mpq_class xv = g.rational();
    Basepoint bp{{{"r", g.positive_constant()}}, {{"x", Scalar(GaussRational(xv))}}, {}, {}};
    Scalar lim = reglim(f, bp);
    // log-free part at r = 0, x = xv
    Coefficient at0 = base.at_zero("r").substitute({{"x", Coefficient(Scalar(GaussRational(xv)))}});
    CHECK(at0.is_constant());
    CHECK(lim == at0.as_constant());
    auto near = eval_interior(f, {{"x", xv.get_d()}, {"r", 1e-13}}, params);
    CHECK(std::abs(near - lim.eval(params)) < 1e-6 * (1 + std::abs(near)));
  }
}
