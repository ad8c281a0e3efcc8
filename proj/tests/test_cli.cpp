#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "logcorners/error.hpp"
#include "logcorners/typing.hpp"
#include "random_forms.hpp"

using namespace logcorners;
using logcorners::testing::Gen;

namespace {

constexpr int kCases = 200;

ExprPtr random_expr(Gen& g, int depth) {
  static const std::vector<std::string> idents = {"a", "r", "t_r", "theta", "x1", "lam", "i", "pi", "dtheta"};
  static const std::vector<std::string> numbers = {"0", "1", "2", "17", "0.5", "3.25"};
  if (depth == 0 || g.coin(0.25))
    return g.coin() ? make_ident(g.pick(idents)) : make_number(g.pick(numbers));
  switch (g.uniform(0, 8)) {
    case 0: return make_unary(Expr::Kind::kNeg, random_expr(g, depth - 1));
    case 1: return make_binary(Expr::Kind::kAdd, random_expr(g, depth - 1), random_expr(g, depth - 1));
    case 2: return make_binary(Expr::Kind::kSub, random_expr(g, depth - 1), random_expr(g, depth - 1));
    case 3: return make_binary(Expr::Kind::kMul, random_expr(g, depth - 1), random_expr(g, depth - 1));
    case 4: return make_binary(Expr::Kind::kDiv, random_expr(g, depth - 1), random_expr(g, depth - 1));
    case 5: return make_binary(Expr::Kind::kWedge, random_expr(g, depth - 1), random_expr(g, depth - 1));
    case 6: return make_pow(random_expr(g, depth - 1), g.uniform(-3, 4));
    default: return make_call(g.pick(grammar_functions()), random_expr(g, depth - 1));
  }
}

}  // namespace

TEST_CASE("grammar precedence") {
  auto e = parse_expr("log(r)^2 * (1 + r)");
  CHECK(*e == *make_binary(Expr::Kind::kMul, make_pow(make_call("log", make_ident("r")), 2),
                           make_binary(Expr::Kind::kAdd, make_number("1"), make_ident("r"))));
  auto w = parse_expr("dlog(r) ^wedge i*dtheta");
  CHECK(*w == *make_binary(Expr::Kind::kWedge, make_call("dlog", make_ident("r")),
                           make_binary(Expr::Kind::kMul, make_ident("i"), make_ident("dtheta"))));
  CHECK(*parse_expr("a + b /\\ c*e") == *parse_expr("a + (b ^wedge (c*e))"));
  CHECK(*parse_expr("-a^2") == *make_unary(Expr::Kind::kNeg, make_pow(make_ident("a"), 2)));
  CHECK(*parse_expr("a^(-1)") == *parse_expr("a^-1"));
  CHECK(*parse_expr("a - b - c") == *parse_expr("(a - b) - c"));
  CHECK(*parse_expr("dlog(r) \xE2\x88\xA7 dtheta") == *parse_expr("dlog(r) ^wedge dtheta"));
}

TEST_CASE("grammar errors carry positions") {
  try {
    parse_expr("log(r + ");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
  CHECK_THROWS_AS(parse_expr("a ^ b"), ParseError);
  CHECK_THROWS_AS(parse_expr("a^2^3"), ParseError);
  CHECK_THROWS_AS(parse_expr("log r"), ParseError);
  CHECK_THROWS_AS(parse_expr("a $ b"), ParseError);
}

TEST_CASE("typing") {
  Chart c = parse_chart("r:H * theta:S1");
  LogForm w = parse_form("dlog(r) ^wedge i*dtheta", c);
  CHECK(w.degree() == 2);
  CHECK(w == wedge(LogForm::basis(c, "r"), LogForm::basis(c, "theta")).scaled(Scalar::i()));
  try {
    parse_form("2*log(r + 1)", c);
    FAIL("no error");
  } catch (const TypeError& e) {
    CHECK(e.node_path() == "$.1.0");
  }
  CHECK_THROWS_AS(parse_form("dlog(r) * dtheta", c), TypeError);
  CHECK_THROWS_AS(parse_form("theta", c), TypeError);
  CHECK_THROWS_AS(parse_form("1/(r + 1)", c), TypeError);
  CHECK(parse_form("dr", c) == d(LogFunction(c, Coefficient::variable("r"))));
  CHECK(parse_function("cos(theta)^2 + sin(theta)^2", c) == LogFunction(c, Coefficient(1)));
  CHECK(parse_function("cis(theta + pi/2)", c) ==
        LogFunction(c, Coefficient(FourierPoly::wave("theta", 1))).scaled(Scalar::i()));
  CHECK(parse_monoid("exp(log(a) + r)*r^2", c) ==
        MonoidElement::parameter("a") * MonoidElement::exponential(FourierPoly::variable("r")) *
            MonoidElement::basic("r", 2));
  CHECK(parse_scalar("log(12)") == Scalar(2) * Scalar::log_symbol("2") + Scalar::log_symbol("3"));
}

TEST_CASE("chart parsing and inference") {
  Chart c = parse_chart("I(0,a)");
  CHECK(c == Chart::interval("r", MonoidElement::parameter("a")));
  Chart p = parse_chart("r:H * t:E * theta:S1");
  CHECK(p.basic == std::vector<std::string>{"r"});
  CHECK(p.phantom == std::vector<std::string>{"t"});
  CHECK(p.angular == std::vector<std::string>{"theta"});
  CHECK(parse_chart("pt") == Chart::point());
  CHECK(parse_chart("x:R").free == std::vector<std::string>{"x"});
  CHECK(parse_chart("r:I(0,2)").bounds.at("r") == MonoidElement::constant(2));
  CHECK(parse_chart(p.to_string()) == p);
  CHECK_THROWS_AS(parse_chart("r:Q"), ParseError);
  Chart inf = infer_chart({parse_expr("log(r)*dlog(t_r) ^wedge dtheta + lam*x")});
  CHECK(inf == Chart{{"x"}, {"r"}, {"t_r"}, {"theta"}, {}});
}

TEST_CASE("property: render then parse is the identity on ASTs") {
  Gen g(41);
  for (int k = 0; k < kCases; ++k) {
    ExprPtr e = random_expr(g, 5);
    std::string text = render(*e);
    ExprPtr back = parse_expr(text);
    CHECK_MESSAGE(*back == *e, text);
    CHECK_NOTHROW(render_latex(*e));
  }
}

TEST_CASE("property: engine output parses back to the same form") {
  Gen g(42);
  Chart c{{"x"}, {"r"}, {"t"}, {"theta"}, {}};
  for (int k = 0; k < kCases; ++k) {
    LogForm w = g.form(c, g.uniform(0, 4), 3, {"x", "r"});
    CHECK_MESSAGE(parse_form(w.to_string(), c) == w, w.to_string());
    Scalar s = g.scalar();
    CHECK_MESSAGE(parse_scalar(s.to_string()) == s, s.to_string());
  }
}

namespace {

nlohmann::json run(const std::vector<std::string>& args, int* code) {
  std::ostringstream out, err;
  *code = run_cli(args, out, err);
  return nlohmann::json::parse(out.str());
}

// Floats compare with a relative tolerance; everything else exactly.
bool json_close(const nlohmann::json& a, const nlohmann::json& b) {
  if (a.is_number_float() || b.is_number_float()) {
    if (!a.is_number() || !b.is_number()) return false;
    double x = a.get<double>(), y = b.get<double>();
    return std::abs(x - y) <= 1e-9 * (1 + std::abs(x) + std::abs(y));
  }
  if (a.type() != b.type() || a.size() != b.size()) return false;
  if (a.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it)
      if (!b.contains(it.key()) || !json_close(it.value(), b[it.key()])) return false;
    return true;
  }
  if (a.is_array()) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!json_close(a[k], b[k])) return false;
    return true;
  }
  return a == b;
}

}  // namespace

TEST_CASE("cli golden outputs") {
  std::string path = std::string(LOGC_TEST_DATA) + "/golden_cli.json";
  std::ifstream in(path);
  REQUIRE(in);
  nlohmann::json cases = nlohmann::json::parse(in);
  bool update = std::getenv("LOGC_UPDATE_GOLDEN") != nullptr;
  for (auto& c : cases) {
    int code = 0;
    nlohmann::json got = run(c["args"].get<std::vector<std::string>>(), &code);
    if (got.contains("oracle")) got["oracle"].erase("seconds");
    if (update) {
      c["exit"] = code;
      c["output"] = got;
      continue;
    }
    CHECK_MESSAGE(code == c["exit"].get<int>(), std::string(c["args"].dump()));
    CHECK_MESSAGE(json_close(got, c["output"]), std::string(c["args"].dump() + "\n" + got.dump()));
  }
  if (update) std::ofstream(path) << cases.dump(2) << "\n";
}

TEST_CASE("cli exit codes") {
  int code = 0;
  run({"reglim", "--expr", "log(r + 1)", "--at", "1*d/dr@0"}, &code);
  CHECK(code == 2);
  run({"integrate", "--chart", "I(0,a)", "--form", "dlog(r"}, &code);
  CHECK(code == 2);
  run({"integrate", "--chart", "I(0,a)", "--form", "dlog(r)", "--scale0", "-1"}, &code);
  CHECK(code == 2);
  run({"integrate", "--chart", "r:I(0,a) * t:E", "--form", "log(t)*dlog(r)"}, &code);
  CHECK(code == 3);
  run({"period", "kummer", "--a", "a", "--lam", "lam"}, &code);
  CHECK(code == 0);
  std::ostringstream out, err;
  CHECK(run_cli({"no-such-command"}, out, err) == 2);
}
