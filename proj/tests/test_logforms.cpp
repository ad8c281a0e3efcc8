#include <doctest.h>

#include "logcorners/error.hpp"
#include "logcorners/regularization_check.hpp"
#include "logcorners/regularize.hpp"

using namespace logcorners;

namespace {

Chart half_line() { return Chart::half_line("r"); }
LogFunction logr() { return LogFunction::log_coordinate(half_line(), "r"); }
LogFunction fn(const Coefficient& c) { return LogFunction(half_line(), c); }

}  // namespace

TEST_CASE("log_of expansions") {
  Chart c{{}, {"r"}, {"t"}, {}, {}};
  auto lam_t = MonoidElement::parameter("lam") * MonoidElement::phantom("t");
  CHECK(log_of(c, lam_t).to_string() == "log(lam) + log(t)");
  auto m = MonoidElement::exponential(FourierPoly::variable("r")) * MonoidElement::basic("r", 2);
  CHECK(log_of(c, m) == LogFunction(c, Coefficient::variable("r")) + LogFunction::log_coordinate(c, "r").scaled(2));
}

TEST_CASE("differential") {
  CHECK(d(logr()) == LogForm::basis(half_line(), "r"));
  auto r = Coefficient::variable("r");
  LogFunction eta = fn(r) * logr() - fn(r);
  CHECK(d(eta) == LogForm::basis(half_line(), "r").times(fn(r) * logr()));
  CHECK(d(d(eta)).is_zero());
}

TEST_CASE("wedge signs") {
  Chart c{{}, {"r"}, {}, {"theta"}, {}};
  auto dl = LogForm::basis(c, "r");
  auto dt = LogForm::basis(c, "theta");
  CHECK(wedge(dl, dl).is_zero());
  CHECK(wedge(dt, dl) == -wedge(dl, dt));
  auto i = Scalar::i();
  auto dz = dl + dt.scaled(i);
  auto dzb = dl - dt.scaled(i);
  CHECK(wedge(dz, dzb) == wedge(dl, dt).scaled(Scalar(-2) * i));
}

TEST_CASE("restriction and scales") {
  Chart c{{}, {"r"}, {}, {"theta"}, {}};
  auto dz = LogForm::basis(c, "r") + LogForm::basis(c, "theta").scaled(Scalar::i());
  CHECK(reg_restrict(dz, {"r"}).to_string() == "dlog(t_r) + i*d(theta)");
  Face f = face(c, {"r"});
  CHECK(reg_restrict(dz, {"r"}) == pullback(f.inclusion, dz));
  Chart e = Chart::phantom_end("t");
  Scale s{{"t", MonoidElement::parameter("c")}};
  CHECK(apply_scale(s, LogFunction::log_coordinate(e, "t")).as_constant() == Scalar::log_symbol("c"));
  Basepoint bp{{{"r", MonoidElement::parameter("c")}}, {}, {}, {}};
  CHECK(reglim(logr(), bp) == Scalar::log_symbol("c"));
  auto r = Coefficient::variable("r");
  CHECK(reglim(fn(r) * logr(), bp).is_zero());
  CHECK(is_continuous(fn(r) * logr()));
  CHECK(!is_continuous(logr()));
}

TEST_CASE("homotopies") {
  Chart e = Chart::phantom_end("t");
  auto lt = LogFunction::log_coordinate(e, "t");
  auto w = LogForm::basis(e, "t").times(lt.pow(2));
  CHECK(homotopy_phantom(w, "t") == LogForm(lt.pow(3).scaled(Scalar::rational(1, 3))));
  CHECK(homotopy_phantom(LogForm(lt), "t").is_zero());
  auto r = Coefficient::variable("r");
  auto dr = LogForm::basis(half_line(), "r").times(fn(r));
  CHECK(homotopy_interval(dr, "r") == LogForm(fn(r)));
  CHECK(homotopy_interval(dr.times(logr()), "r") == LogForm(fn(r) * logr() - fn(r)));
  auto w2 = dr.times(fn(r) * logr().pow(2));
  auto expect = fn(r.pow(2)).scaled(Scalar::rational(1, 2)) * logr().pow(2) -
                fn(r.pow(2)).scaled(Scalar::rational(1, 2)) * logr() + fn(r.pow(2)).scaled(Scalar::rational(1, 4));
  CHECK(homotopy_interval(w2, "r") == LogForm(expect));
}

TEST_CASE("quadrant regularization") {
  auto f1 = MonoidElement::parameter("c1");
  auto f2 = MonoidElement::parameter("c2");
  auto rep = check_regularization(quadrant_regularization(f1, 0, f2, 0));
  CHECK(rep.status == RegularizationStatus::kSolved);
  CHECK(rep.values.at("lam_t_r1") == f2);
  CHECK(rep.values.at("lam_t_r2") == f1);
  rep = check_regularization(quadrant_regularization(f1, 1, f2, 1));
  CHECK(rep.status == RegularizationStatus::kUnsolvable);
  rep = check_regularization(quadrant_regularization(f1, 1, f1.inverse(), 1));
  CHECK(rep.status == RegularizationStatus::kUnderdetermined);
  REQUIRE(rep.free_parameters.size() == 1);
  MESSAGE(rep.free_parameters[0], " ", rep.log_values.begin()->second.to_string(), " ", std::next(rep.log_values.begin())->second.to_string());
}
