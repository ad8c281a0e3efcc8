#include "logcorners/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "logcorners/error.hpp"

namespace logcorners {

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.text != b.text || a.exponent != b.exponent || a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

namespace {

ExprPtr node(Expr::Kind k, std::string text, std::vector<ExprPtr> args, std::size_t pos = 0, int exponent = 0) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->text = std::move(text);
  e->args = std::move(args);
  e->position = pos;
  e->exponent = exponent;
  return e;
}

}  // namespace

ExprPtr make_number(std::string text) { return node(Expr::Kind::kNumber, std::move(text), {}); }
ExprPtr make_ident(std::string name) { return node(Expr::Kind::kIdent, std::move(name), {}); }
ExprPtr make_unary(Expr::Kind kind, ExprPtr a) { return node(kind, "", {std::move(a)}); }
ExprPtr make_binary(Expr::Kind kind, ExprPtr a, ExprPtr b) { return node(kind, "", {std::move(a), std::move(b)}); }
ExprPtr make_pow(ExprPtr base, int exponent) { return node(Expr::Kind::kPow, "", {std::move(base)}, 0, exponent); }
ExprPtr make_call(std::string fn, ExprPtr arg) { return node(Expr::Kind::kCall, std::move(fn), {std::move(arg)}); }

const std::vector<std::string>& grammar_functions() {
  static const std::vector<std::string> fns = {"log", "exp", "dlog", "d", "cis", "cos", "sin"};
  return fns;
}

namespace {

enum class Tok { kNum, kIdent, kPlus, kMinus, kStar, kSlash, kCaret, kWedge, kLParen, kRParen, kEnd };

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '.') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw ParseError("digit expected after decimal point", i);
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Tok::kNum, s.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::kIdent, s.substr(start, i - start), start});
      continue;
    }
    if (c == '^') {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] == ' ') ++j;
      if (s.compare(j, 5, "wedge") == 0 && (j + 5 >= s.size() || !ident_char(s[j + 5]))) {
        out.push_back({Tok::kWedge, "^wedge", start});
        i = j + 5;
        continue;
      }
      out.push_back({Tok::kCaret, "^", start});
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < s.size() && s[i + 1] == '\\') {
      out.push_back({Tok::kWedge, "/\\", start});
      i += 2;
      continue;
    }
    if (s.compare(i, 3, "\xE2\x88\xA7") == 0) {
      out.push_back({Tok::kWedge, "\xE2\x88\xA7", start});
      i += 3;
      continue;
    }
    Tok t;
    switch (c) {
      case '+': t = Tok::kPlus; break;
      case '-': t = Tok::kMinus; break;
      case '*': t = Tok::kStar; break;
      case '/': t = Tok::kSlash; break;
      case '(': t = Tok::kLParen; break;
      case ')': t = Tok::kRParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({t, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : toks_(tokenize(s)) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    if (peek().type != Tok::kEnd) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_++]; }
  bool accept(Tok t) {
    if (peek().type != t) return false;
    ++i_;
    return true;
  }
  void expect(Tok t, const char* what) {
    if (!accept(t)) throw ParseError(std::string("expected ") + what, peek().pos);
  }

  ExprPtr sum() {
    ExprPtr e = wedge();
    for (;;) {
      std::size_t pos = peek().pos;
      if (accept(Tok::kPlus)) e = node(Expr::Kind::kAdd, "", {e, wedge()}, pos);
      else if (accept(Tok::kMinus)) e = node(Expr::Kind::kSub, "", {e, wedge()}, pos);
      else return e;
    }
  }

  ExprPtr wedge() {
    ExprPtr e = product();
    for (;;) {
      std::size_t pos = peek().pos;
      if (!accept(Tok::kWedge)) return e;
      e = node(Expr::Kind::kWedge, "", {e, product()}, pos);
    }
  }

  ExprPtr product() {
    ExprPtr e = unary();
    for (;;) {
      std::size_t pos = peek().pos;
      if (accept(Tok::kStar)) e = node(Expr::Kind::kMul, "", {e, unary()}, pos);
      else if (accept(Tok::kSlash)) e = node(Expr::Kind::kDiv, "", {e, unary()}, pos);
      else return e;
    }
  }

  ExprPtr unary() {
    std::size_t pos = peek().pos;
    if (accept(Tok::kMinus)) return node(Expr::Kind::kNeg, "", {unary()}, pos);
    return power();
  }

  int integer() {
    const Token& t = peek();
    if (t.type != Tok::kNum || t.text.find('.') != std::string::npos)
      throw ParseError("integer exponent expected", t.pos);
    take();
    if (t.text.size() > 6) throw ParseError("exponent too large", t.pos);
    return std::stoi(t.text);
  }

  int exponent() {
    if (accept(Tok::kMinus)) return -integer();
    if (accept(Tok::kLParen)) {
      int sign = accept(Tok::kMinus) ? -1 : 1;
      int n = integer();
      expect(Tok::kRParen, "')'");
      return sign * n;
    }
    return integer();
  }

  ExprPtr power() {
    ExprPtr e = atom();
    std::size_t pos = peek().pos;
    if (accept(Tok::kCaret)) {
      e = node(Expr::Kind::kPow, "", {e}, pos, exponent());
      if (peek().type == Tok::kCaret) throw ParseError("chained powers need parentheses", peek().pos);
    }
    return e;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::kNum:
        take();
        return node(Expr::Kind::kNumber, t.text, {}, t.pos);
      case Tok::kIdent: {
        take();
        const auto& fns = grammar_functions();
        if (std::find(fns.begin(), fns.end(), t.text) != fns.end()) {
          expect(Tok::kLParen, "'(' after function name");
          ExprPtr arg = sum();
          expect(Tok::kRParen, "')'");
          return node(Expr::Kind::kCall, t.text, {arg}, t.pos);
        }
        return node(Expr::Kind::kIdent, t.text, {}, t.pos);
      }
      case Tok::kLParen: {
        take();
        ExprPtr e = sum();
        expect(Tok::kRParen, "')'");
        return e;
      }
      case Tok::kEnd:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub: return 1;
    case Expr::Kind::kWedge: return 2;
    case Expr::Kind::kMul:
    case Expr::Kind::kDiv: return 3;
    case Expr::Kind::kNeg: return 4;
    case Expr::Kind::kPow: return 5;
    default: return 6;
  }
}

std::string render(const Expr& e, bool leading);

std::string render_at(const Expr& e, int min_prec, bool leading) {
  if (precedence(e) >= min_prec) return render(e, leading);
  return "(" + render(e, true) + ")";
}

std::string exponent_text(int n) { return n < 0 ? "(" + std::to_string(n) + ")" : std::to_string(n); }

std::string render(const Expr& e, bool leading) {
  switch (e.kind) {
    case Expr::Kind::kNumber:
    case Expr::Kind::kIdent: return e.text;
    case Expr::Kind::kCall: return e.text + "(" + render(*e.args[0], true) + ")";
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
      return render_at(*e.args[0], 1, leading) + (e.kind == Expr::Kind::kAdd ? " + " : " - ") +
             render_at(*e.args[1], 2, false);
    case Expr::Kind::kWedge:
      return render_at(*e.args[0], 2, leading) + " ^wedge " + render_at(*e.args[1], 3, false);
    case Expr::Kind::kMul:
    case Expr::Kind::kDiv:
      return render_at(*e.args[0], 3, leading) + (e.kind == Expr::Kind::kMul ? "*" : "/") +
             render_at(*e.args[1], 4, false);
    case Expr::Kind::kNeg: {
      std::string s = "-" + render_at(*e.args[0], 4, false);
      return leading ? s : "(" + s + ")";
    }
    case Expr::Kind::kPow: return render_at(*e.args[0], 6, false) + "^" + exponent_text(e.exponent);
  }
  return {};
}

std::string latex_ident(const std::string& name) {
  static const std::map<std::string, std::string> greek = {
      {"alpha", "\\alpha"}, {"beta", "\\beta"},   {"gamma", "\\gamma"}, {"delta", "\\delta"},
      {"eps", "\\epsilon"}, {"theta", "\\theta"}, {"phi", "\\phi"},     {"lam", "\\lambda"},
      {"lambda", "\\lambda"}, {"mu", "\\mu"},     {"nu", "\\nu"},       {"rho", "\\rho"},
      {"sigma", "\\sigma"}, {"tau", "\\tau"},     {"pi", "\\pi"},       {"omega", "\\omega"}};
  std::string base = name, sub;
  auto us = name.find('_');
  if (us != std::string::npos) {
    base = name.substr(0, us);
    sub = name.substr(us + 1);
  } else {
    auto k = name.find_first_of("0123456789");
    if (k != std::string::npos && k > 0) {
      base = name.substr(0, k);
      sub = name.substr(k);
    }
  }
  if (base == "abar") base = "\\bar{a}";
  auto it = greek.find(base);
  if (it != greek.end()) base = it->second;
  if (base.size() > 1 && base[0] != '\\') base = "\\mathrm{" + base + "}";
  if (!sub.empty()) base += "_{" + (sub.size() > 1 ? latex_ident(sub) : sub) + "}";
  return base;
}

std::string latex(const Expr& e);

std::string latex_at(const Expr& e, int min_prec) {
  if (precedence(e) >= min_prec) return latex(e);
  return "\\left(" + latex(e) + "\\right)";
}

std::string latex(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kNumber: return e.text;
    case Expr::Kind::kIdent:
      if (e.text.size() > 1 && e.text[0] == 'd' && e.text != "delta") return "d" + latex_ident(e.text.substr(1));
      return latex_ident(e.text);
    case Expr::Kind::kCall: {
      static const std::map<std::string, std::string> names = {
          {"log", "\\log"}, {"exp", "\\exp"}, {"dlog", "d\\log"}, {"d", "d"},
          {"cis", "\\operatorname{cis}"}, {"cos", "\\cos"}, {"sin", "\\sin"}};
      return names.at(e.text) + "\\left(" + latex(*e.args[0]) + "\\right)";
    }
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
      return latex_at(*e.args[0], 1) + (e.kind == Expr::Kind::kAdd ? " + " : " - ") + latex_at(*e.args[1], 2);
    case Expr::Kind::kWedge: return latex_at(*e.args[0], 2) + " \\wedge " + latex_at(*e.args[1], 3);
    case Expr::Kind::kMul: return latex_at(*e.args[0], 3) + " \\cdot " + latex_at(*e.args[1], 4);
    case Expr::Kind::kDiv: return "\\frac{" + latex(*e.args[0]) + "}{" + latex(*e.args[1]) + "}";
    case Expr::Kind::kNeg: return "-" + latex_at(*e.args[0], 4);
    case Expr::Kind::kPow: return latex_at(*e.args[0], 6) + "^{" + std::to_string(e.exponent) + "}";
  }
  return {};
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string render(const Expr& e) { return render(e, true); }

std::string render_latex(const Expr& e) { return latex(e); }

}  // namespace logcorners
