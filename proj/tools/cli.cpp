#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "logcorners/error.hpp"
#include "logcorners/numeric.hpp"
#include "logcorners/periods.hpp"
#include "logcorners/regularization_check.hpp"
#include "logcorners/typing.hpp"

namespace logcorners {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kResultSchema = "logcorners-result/1";
constexpr const char* kChartSchema = "logcorners-chart/1";

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what(), 0);
  }
}

std::string file_argument(const std::string& s) {
  if (!s.empty() && s[0] == '@') return s.substr(1);
  if (s.size() > 5 && s.compare(s.size() - 5, 5, ".json") == 0) return s;
  return {};
}

Chart chart_from_json(const json& j) {
  if (j.contains("schema") && j["schema"] != kChartSchema)
    throw ParseError("unsupported chart schema " + j["schema"].dump(), 0);
  if (j.contains("chart") && j["chart"].is_string()) return parse_chart(j["chart"].get<std::string>());
  Chart c;
  auto names = [&](const char* key) {
    std::vector<std::string> v;
    if (j.contains(key)) v = j[key].get<std::vector<std::string>>();
    return v;
  };
  c.free = names("free");
  c.basic = names("basic");
  c.phantom = names("phantom");
  c.angular = names("angular");
  if (j.contains("bounds"))
    for (const auto& [n, b] : j["bounds"].items()) c.bounds[n] = parse_monoid(b.get<std::string>(), Chart::point());
  c.validate();
  return c;
}

// Form text, possibly "@file" holding {"chart": ..., "form": ...}.
struct FormInput {
  std::string text;
  std::optional<Chart> chart;
};

FormInput read_form(const std::string& s) {
  std::string path = file_argument(s);
  if (path.empty()) return {s, std::nullopt};
  json j = read_json_file(path);
  if (!j.contains("form")) throw ParseError("chart file '" + path + "' has no \"form\" entry", 0);
  return {j["form"].get<std::string>(), chart_from_json(j)};
}

Chart resolve_chart(const std::string& opt, const std::vector<std::string>& texts, const std::optional<Chart>& from_file) {
  if (!opt.empty()) {
    std::string path = file_argument(opt);
    return path.empty() ? parse_chart(opt) : chart_from_json(read_json_file(path));
  }
  if (from_file) return *from_file;
  std::vector<ExprPtr> exprs;
  for (const auto& t : texts)
    if (!t.empty()) exprs.push_back(parse_expr(t));
  return infer_chart(exprs);
}

Point parse_assignments(const std::string& text) {
  Point p;
  for (const auto& raw : split_top_level(text, ",;")) {
    std::string s = trim(raw);
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value in '" + s + "'", 0);
    std::string v = trim(s.substr(eq + 1));
    try {
      std::size_t used = 0;
      p[trim(s.substr(0, eq))] = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::logic_error&) {
      throw ParseError("not a number: '" + v + "'", eq + 1);
    }
  }
  return p;
}

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json latex_of(const std::string& text) {
  try {
    return render_latex(*parse_expr(text));
  } catch (const Error&) {
    return nullptr;
  }
}

json result(const std::string& command) {
  json j;
  j["schema"] = kResultSchema;
  j["command"] = command;
  j["mode"] = "exact";
  return j;
}

void put_scalar(json& j, const Scalar& s, const std::optional<Point>& approx) {
  j["exact"] = s.to_string();
  j["latex"] = latex_of(s.to_string());
  j["approx"] = approx ? complex_json(s.eval(*approx)) : json(nullptr);
}

void put_form(json& j, const LogForm& w) {
  j["exact"] = w.to_string();
  j["latex"] = latex_of(w.to_string());
  j["approx"] = nullptr;
  j["chart"] = w.chart().to_string();
  j["degree"] = w.is_homogeneous() ? json(w.degree()) : json(nullptr);
}

void save_form(const std::string& path, const LogForm& w) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write '" + path + "'");
  json j;
  j["schema"] = kChartSchema;
  j["chart"] = w.chart().to_string();
  j["form"] = w.to_string();
  out << j.dump(2) << "\n";
}

double default_tolerance() {
  if (const char* p = std::getenv("LOGC_PRECISION")) {
    char* end = nullptr;
    double v = std::strtod(p, &end);
    if (end != p && v > 0) return v;
  }
  return 1e-10;
}

// Basepoint constants at 0 (or the far end) of every interval.
std::map<std::string, MonoidElement> parse_endpoint_scales(const std::string& text, const Chart& chart) {
  std::map<std::string, MonoidElement> out;
  if (trim(text).empty()) return out;
  if (text.find("d/d") != std::string::npos) {
    for (const auto& raw : split_top_level(text, "+")) {
      std::string s = trim(raw);
      auto at = s.find('@');
      if (at != std::string::npos) s = s.substr(0, at);
      auto k = s.rfind("d/d");
      std::string n = trim(s.substr(k + 3));
      std::string c = trim(s.substr(0, k));
      if (!c.empty() && c.back() == '*') c = trim(c.substr(0, c.size() - 1));
      if (!c.empty() && c.front() == '-') c = trim(c.substr(1));
      if (chart.role(n) != Role::kBasic) throw DomainError("'" + n + "' is not a basic coordinate");
      out[n] = parse_monoid(c.empty() ? "1" : c, Chart::point());
    }
    return out;
  }
  if (text.find('=') == std::string::npos) {
    if (chart.basic.size() != 1) throw DomainError("name the interval: use r=value when the chart has several");
    out[chart.basic[0]] = parse_monoid(text, Chart::point());
    return out;
  }
  for (const auto& raw : split_top_level(text, ",;")) {
    auto eq = raw.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value in '" + raw + "'", 0);
    std::string n = trim(raw.substr(0, eq));
    if (chart.role(n) != Role::kBasic) throw DomainError("'" + n + "' is not a basic coordinate");
    out[n] = parse_monoid(trim(raw.substr(eq + 1)), Chart::point());
  }
  return out;
}

struct DomainOptions {
  std::string scale0;
  std::string scale1;
  std::string scale;
  std::string orientation;
  int sign = 1;

  void add_to(CLI::App* app) {
    app->add_option("--scale0", scale0, "basepoint at 0: lam, r=lam,s=mu or lam*d/dr@0");
    app->add_option("--scale1", scale1, "basepoint at the far end: mu or -mu*d/dr@a");
    app->add_option("--scale", scale, "phantom scale, e.g. \"r^2 d/dt\"");
    app->add_option("--orientation", orientation, "comma-separated coordinate order");
    app->add_option("--sign", sign, "orientation sign (1 or -1)");
  }

  IntegrationDomain build(const Chart& chart) const {
    IntegrationDomain dom = IntegrationDomain::of(chart);
    dom.lower = parse_endpoint_scales(scale0, chart);
    dom.upper = parse_endpoint_scales(scale1, chart);
    if (!trim(scale).empty()) dom.scale = parse_scale(scale, chart);
    for (const auto& raw : split_top_level(orientation, ",")) {
      std::string n = trim(raw);
      if (!n.empty()) dom.order.push_back(n);
    }
    if (sign != 1 && sign != -1) throw DomainError("--sign must be 1 or -1");
    dom.sign = sign;
    dom.validate();
    return dom;
  }
};

json scale_json(const std::map<std::string, MonoidElement>& m) {
  json j = json::object();
  for (const auto& [n, v] : m) j[n] = v.to_string();
  return j;
}

Scalar parse_residue(const json& v) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  return parse_scalar(v.get<std::string>());
}

Chain parse_chain(const std::string& s) {
  std::istringstream in(s);
  std::string kind, a, b;
  in >> kind >> a >> b;
  if (kind == "loop" && !a.empty() && b.empty()) return Chain::loop(a);
  if (kind == "path" && !a.empty() && !b.empty()) return Chain::path(a, b);
  throw ParseError("chain must be 'loop p' or 'path p q', got '" + s + "'", 0);
}

DoubleCopyConfig double_copy_config(const std::string& path) {
  if (path.empty()) return DoubleCopyConfig::standard();
  json j = read_json_file(path);
  DoubleCopyConfig cfg;
  for (const auto& [p, v] : j.at("omega").items()) cfg.omega_residues[p] = parse_residue(v);
  for (const auto& [p, v] : j.at("nu").items()) cfg.nu_residues[p] = parse_residue(v);
  for (const auto& pair : j.at("pairs"))
    cfg.pairs.emplace_back(parse_chain(pair.at(0).get<std::string>()), parse_chain(pair.at(1).get<std::string>()));
  cfg.conj.a = j.value("a", "a");
  cfg.conj.abar = j.value("abar", "abar");
  cfg.conj.unit_circle = j.value("unit_circle", false);
  return cfg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact regularized integrals of logarithmic forms on manifolds with log corners"};
  app.name("logcorners");
  app.require_subcommand(1);

  // Shared option storage; each subcommand binds what it needs.
  std::string chart_opt, form_opt, expr_opt, at_opt, scale_opt, face_opt, morphism_opt, source_opt, kind_opt,
      coord_opt, approx_opt, save_opt, cutoff_opt, eps_opt, profile_opt, a_opt = "a", abar_opt = "abar", lam_opt = "1",
      config_opt, f1_opt = "1", f2_opt = "1";
  bool numeric_flag = false, fit_flag = false, unit_circle = false, oracle_flag = false, approx_given = false;
  double tol = default_tolerance();
  int degree_opt = -1, order_opt = 2, a1_opt = 0, a2_opt = 0;
  DomainOptions dopts;

  auto add_approx = [&](CLI::App* c) {
    c->add_option("--approx", approx_opt, "numeric values for parameters, e.g. a=2,lam=1")
        ->each([&](const std::string&) { approx_given = true; });
  };
  auto add_chart = [&](CLI::App* c) { c->add_option("--chart", chart_opt, "inline chart or @chart.json"); };
  auto add_save = [&](CLI::App* c) { c->add_option("--save", save_opt, "write the resulting form to a chart file"); };

  auto* reglim_cmd = app.add_subcommand("reglim", "regularized limit at a tangential basepoint");
  reglim_cmd->add_option("--expr", expr_opt, "log function")->required();
  reglim_cmd->add_option("--at", at_opt, "basepoint, e.g. 1*d/dr@0")->required();
  reglim_cmd->add_option("--scale", scale_opt, "phantom scale applied first");
  add_chart(reglim_cmd);
  add_approx(reglim_cmd);

  auto* restrict_cmd = app.add_subcommand("restrict", "regularized restriction to a boundary face");
  restrict_cmd->add_option("--form", form_opt, "log form")->required();
  restrict_cmd->add_option("--face", face_opt, "basic coordinates set to zero, e.g. r or r,s")->required();
  restrict_cmd->add_option("--scale", scale_opt, "scale on the face phantoms, applied after restricting");
  add_chart(restrict_cmd);
  add_save(restrict_cmd);

  auto* scale_cmd = app.add_subcommand("scale", "apply a scale to phantom logarithms");
  scale_cmd->add_option("--form", form_opt, "log form")->required();
  scale_cmd->add_option("--scale", scale_opt, "e.g. \"exp(r)*r^2 d/dt\"")->required();
  add_chart(scale_cmd);
  add_save(scale_cmd);

  auto* pullback_cmd = app.add_subcommand("pullback", "pull a form back along a weak morphism");
  pullback_cmd->add_option("--form", form_opt, "log form on the target")->required();
  pullback_cmd->add_option("--morphism", morphism_opt, "assignments such as \"r=u^2; theta=-phi\"")->required();
  pullback_cmd->add_option("--source", source_opt, "source chart (inferred from the assignments if absent)");
  add_chart(pullback_cmd);
  add_save(pullback_cmd);

  auto* integrate_cmd = app.add_subcommand("integrate", "regularized integral of a top form");
  integrate_cmd->add_option("--form", form_opt, "log form")->required();
  integrate_cmd->add_flag("--numeric", numeric_flag, "use the quadrature oracle instead of the exact engine");
  integrate_cmd->add_option("--tol", tol, "quadrature tolerance");
  add_chart(integrate_cmd);
  add_approx(integrate_cmd);
  dopts.add_to(integrate_cmd);

  auto* stokes_cmd = app.add_subcommand("stokes-check", "compare the integral of d(eta) with the boundary terms");
  stokes_cmd->add_option("--form", form_opt, "form eta of degree dim - 1")->required();
  add_chart(stokes_cmd);
  add_approx(stokes_cmd);
  dopts.add_to(stokes_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "absolute convergence of a top form");
  classify_cmd->add_option("--form", form_opt, "log form")->required();
  add_chart(classify_cmd);
  dopts.add_to(classify_cmd);

  auto* homotopy_cmd = app.add_subcommand("homotopy", "contracting homotopy operators");
  homotopy_cmd->add_option("--form", form_opt, "log form")->required();
  homotopy_cmd->add_option("--kind", kind_opt, "phantom, interval or composite")->required()
      ->check(CLI::IsMember({"phantom", "interval", "composite"}));
  homotopy_cmd->add_option("--coord", coord_opt, "coordinate the homotopy contracts")->required();
  add_chart(homotopy_cmd);
  add_save(homotopy_cmd);

  auto* quad_cmd = app.add_subcommand("quadrature", "numeric integral, optionally with a divergence fit");
  quad_cmd->add_option("--form", form_opt, "log form")->required();
  quad_cmd->add_option("--tol", tol, "tolerance (default LOGC_PRECISION or 1e-10)");
  quad_cmd->add_option("--cutoff", cutoff_opt, "lower cutoffs, e.g. r=1e-6");
  quad_cmd->add_flag("--fit", fit_flag, "fit the cutoff integral against powers of log(eps)");
  quad_cmd->add_option("--eps", eps_opt, "comma-separated cutoffs for --fit");
  quad_cmd->add_option("--degree", degree_opt, "highest log(eps) power for --fit");
  add_chart(quad_cmd);
  add_approx(quad_cmd);
  dopts.add_to(quad_cmd);

  auto* period_cmd = app.add_subcommand("period", "period computations");
  period_cmd->require_subcommand(1);
  auto* residue_cmd = period_cmd->add_subcommand("residue", "boundary circle at radius zero");
  residue_cmd->add_option("--profile", profile_opt, "scale profile in theta, e.g. exp(cos(theta))");
  add_approx(residue_cmd);
  auto* kummer_cmd = period_cmd->add_subcommand("kummer", "period matrix of the Kummer motive");
  kummer_cmd->add_option("--a", a_opt, "endpoint a");
  kummer_cmd->add_option("--lam", lam_opt, "tangential basepoint at 0");
  add_approx(kummer_cmd);
  auto* i2_cmd = period_cmd->add_subcommand("i2", "single-valued integral over the plane via Stokes");
  i2_cmd->add_option("--order", order_opt, "expansion order of the local boundary terms");
  i2_cmd->add_option("--a", a_opt, "parameter name of the puncture a");
  i2_cmd->add_option("--abar", abar_opt, "parameter name of its conjugate");
  i2_cmd->add_flag("--unit-circle", unit_circle, "take |a| = 1, so conj(a) = 1/a");
  i2_cmd->add_flag("--oracle", oracle_flag, "also run the numeric plane quadrature (needs --approx a=...)");
  i2_cmd->add_option("--tol", tol, "oracle tolerance");
  add_approx(i2_cmd);
  auto* dc_cmd = period_cmd->add_subcommand("double-copy", "single-valued period as a sum over dual chains");
  dc_cmd->add_option("--config", config_opt, "JSON file with omega, nu residues and chain pairs");
  add_approx(dc_cmd);

  auto* quadrant_cmd = app.add_subcommand("quadrant", "solve the corner constants of a quadrant regularization");
  quadrant_cmd->add_option("--f1", f1_opt, "unit part of the scale on the face r2 = 0, a function of r1");
  quadrant_cmd->add_option("--a1", a1_opt, "power of r1 in that scale");
  quadrant_cmd->add_option("--f2", f2_opt, "unit part of the scale on the face r1 = 0, a function of r2");
  quadrant_cmd->add_option("--a2", a2_opt, "power of r2 in that scale");

  std::vector<std::string> argv_store = {"logcorners"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::optional<Point> approx;
    if (approx_given) approx = parse_assignments(approx_opt);
    FormInput form_in;
    if (!form_opt.empty()) form_in = read_form(form_opt);
    json j;

    if (reglim_cmd->parsed()) {
      Chart chart = resolve_chart(chart_opt, {expr_opt}, std::nullopt);
      if (!scale_opt.empty()) {
        for (const auto& raw : split_top_level(scale_opt, "+;")) {
          auto k = raw.rfind("d/d");
          if (k == std::string::npos) continue;
          std::string t = trim(raw.substr(k + 3));
          if (!chart.contains(t) && chart_opt.empty()) chart.phantom.push_back(t);
        }
        std::vector<ExprPtr> extra;
        for (const auto& raw : split_top_level(scale_opt, "+;")) {
          auto k = raw.rfind("d/d");
          std::string m = trim(raw.substr(0, k));
          if (!m.empty() && m.back() == '*') m.pop_back();
          if (!trim(m).empty()) extra.push_back(parse_expr(m));
        }
        if (chart_opt.empty())
          for (const auto& n : infer_chart(extra).basic)
            if (!chart.contains(n)) chart.basic.push_back(n);
      }
      if (chart_opt.empty()) {
        auto at = at_opt.find('@');
        for (const auto& raw : split_top_level(at_opt.substr(0, at), "+")) {
          auto k = raw.rfind("d/d");
          if (k == std::string::npos) continue;
          std::string n = trim(raw.substr(k + 3));
          if (!chart.contains(n)) {
            if (infer_role(n) == Role::kPhantom) chart.phantom.push_back(n);
            else chart.basic.push_back(n);
          }
        }
      }
      LogFunction f = parse_function(expr_opt, chart);
      if (!scale_opt.empty()) f = apply_scale(parse_scale(scale_opt, chart), f);
      ParsedBasepoint bp = parse_basepoint(at_opt, f.chart());
      Scalar v;
      if (bp.at_end) {
        v = value_at_end(f, bp.end_coordinate, bp.end_value);
      } else {
        for (const auto& n : f.chart().phantom)
          if (!bp.at_zero.t.count(n)) bp.at_zero.t[n] = MonoidElement::constant(1);
        v = reglim(f, bp.at_zero);
      }
      j = result("reglim");
      put_scalar(j, v, approx);
    } else if (restrict_cmd->parsed()) {
      Chart chart = resolve_chart(chart_opt, {form_in.text}, form_in.chart);
      std::vector<std::string> selected;
      for (const auto& raw : split_top_level(face_opt, ",")) selected.push_back(trim(raw));
      LogForm w = reg_restrict(parse_form(form_in.text, chart), selected);
      if (!scale_opt.empty()) w = apply_scale(parse_scale(scale_opt, w.chart()), w);
      j = result("restrict");
      put_form(j, w);
      save_form(save_opt, w);
    } else if (scale_cmd->parsed()) {
      Chart chart = resolve_chart(chart_opt, {form_in.text}, form_in.chart);
      LogForm w = apply_scale(parse_scale(scale_opt, chart), parse_form(form_in.text, chart));
      j = result("scale");
      put_form(j, w);
      save_form(save_opt, w);
    } else if (pullback_cmd->parsed()) {
      Chart target = resolve_chart(chart_opt, {form_in.text}, form_in.chart);
      Chart source;
      if (!source_opt.empty()) {
        source = resolve_chart(source_opt, {}, std::nullopt);
      } else {
        std::vector<ExprPtr> rhs;
        std::set<std::string> assigned;
        for (const auto& raw : split_top_level(morphism_opt, ";,")) {
          auto eq = raw.find('=');
          if (eq == std::string::npos) continue;
          assigned.insert(trim(raw.substr(0, eq)));
          std::string v = trim(raw.substr(eq + 1));
          if (v.size() > 2 && v.compare(v.size() - 2, 2, "@0") == 0) v = v.substr(0, v.size() - 2);
          rhs.push_back(parse_expr(v));
        }
        source = infer_chart(rhs);
        for (const auto& n : target.coordinates())
          if (!assigned.count(n) && !source.contains(n)) {
            switch (target.role(n)) {
              case Role::kFree: source.free.push_back(n); break;
              case Role::kBasic: source.basic.push_back(n); break;
              case Role::kPhantom: source.phantom.push_back(n); break;
              case Role::kAngular: source.angular.push_back(n); break;
              default: break;
            }
          }
      }
      WeakMorphism f = parse_morphism(morphism_opt, source, target);
      LogForm w = pullback(f, parse_form(form_in.text, target));
      j = result("pullback");
      put_form(j, w);
      j["ordinary"] = is_ordinary(f);
      save_form(save_opt, w);
    } else if (integrate_cmd->parsed() || stokes_cmd->parsed() || classify_cmd->parsed() || quad_cmd->parsed()) {
      Chart chart = resolve_chart(chart_opt, {form_in.text}, form_in.chart);
      IntegrationDomain dom = dopts.build(chart);
      LogForm w = parse_form(form_in.text, chart);
      if (integrate_cmd->parsed()) {
        j = result("integrate");
        bool numeric = numeric_flag;
        if (!numeric) {
          try {
            put_scalar(j, integrate(w, dom), approx);
          } catch (const NotExactError& e) {
            Convergence c = convergence_classify(w, dom);
            if (!c.convergent) throw;
            numeric = true;
            j["note"] = std::string("no closed form: ") + e.what();
          }
        }
        if (numeric) {
          Convergence c = convergence_classify(w, dom);
          if (!c.convergent)
            throw DomainError("numeric integration needs an absolutely convergent form (divergent at " + c.face + " = 0)");
          QuadratureSpec spec;
          spec.tolerance = tol;
          spec.params = approx.value_or(Point{});
          QuadratureResult q = quadrature(w, dom, spec);
          j["mode"] = "numeric";
          j["exact"] = nullptr;
          j["latex"] = nullptr;
          j["approx"] = complex_json(q.value);
          j["error"] = q.error;
          j["converged"] = q.converged;
        }
      } else if (stokes_cmd->parsed()) {
        StokesResult s = stokes_check(w, dom);
        j = result("stokes-check");
        j["lhs"] = s.lhs.to_string();
        j["rhs"] = s.rhs.to_string();
        j["equal"] = s.equal;
        put_scalar(j, s.lhs - s.rhs, approx);
      } else if (classify_cmd->parsed()) {
        Convergence c = convergence_classify(w, dom);
        j = result("classify");
        j["convergent"] = c.convergent;
        j["face"] = c.face.empty() ? json(nullptr) : json(c.face);
        j["certificate"] = c.certificate ? json(c.certificate->to_string()) : json(nullptr);
      } else {
        Point params = approx.value_or(Point{});
        j = result("quadrature");
        j["mode"] = "numeric";
        j["exact"] = nullptr;
        if (fit_flag) {
          std::vector<double> eps;
          for (const auto& raw : split_top_level(eps_opt, ",")) {
            if (trim(raw).empty()) continue;
            eps.push_back(parse_assignments("e=" + trim(raw)).at("e"));
          }
          DivergenceFit fit = divergence_fit(w, dom, params, eps, degree_opt);
          json coeffs = json::array();
          for (auto c : fit.coefficients) coeffs.push_back(complex_json(c));
          j["approx"] = fit.coefficients.empty() ? json(nullptr) : complex_json(fit.coefficients[0]);
          j["fit"] = {{"log_eps_coefficients", coeffs}, {"eps", fit.eps}, {"residual", fit.residual}};
        } else {
          QuadratureSpec spec;
          spec.tolerance = tol;
          spec.params = params;
          spec.cutoff = parse_assignments(cutoff_opt);
          QuadratureResult q = quadrature(w, dom, spec);
          j["approx"] = complex_json(q.value);
          j["error"] = q.error;
          j["converged"] = q.converged;
        }
      }
      j["chart"] = chart.to_string();
    } else if (homotopy_cmd->parsed()) {
      Chart chart = resolve_chart(chart_opt, {form_in.text}, form_in.chart);
      LogForm w = parse_form(form_in.text, chart);
      LogForm h;
      j = result("homotopy");
      if (kind_opt == "phantom") {
        h = homotopy_phantom(w, coord_opt);
        put_form(j, h);
        j["projection"] = unit_projection(w, coord_opt).to_string();
      } else if (kind_opt == "interval") {
        h = homotopy_interval(w, coord_opt);
        put_form(j, h);
      } else {
        h = homotopy_composite(w, coord_opt);
        put_form(j, h);
        j["projection"] = composite_projection(w, coord_opt).to_string();
      }
      save_form(save_opt, h);
    } else if (residue_cmd->parsed()) {
      std::string profile = profile_opt.empty() ? "1" : profile_opt;
      Chart chart = Chart::circle("theta");
      auto e = parse_expr(profile);
      Chart inferred = infer_chart({e});
      if (inferred.angular.size() == 1) chart = Chart::circle(inferred.angular[0]);
      j = result("period residue");
      put_scalar(j, residue_radius_zero(to_monoid(*e, chart)), approx);
      j["profile"] = profile;
    } else if (kummer_cmd->parsed()) {
      ScalarMatrix m = kummer_period_matrix(parse_monoid(a_opt, Chart::point()), parse_monoid(lam_opt, Chart::point()));
      j = result("period kummer");
      json ex = json::array(), ap = json::array();
      for (const auto& row : m) {
        json er = json::array(), ar = json::array();
        for (const auto& s : row) {
          er.push_back(s.to_string());
          if (approx) ar.push_back(complex_json(s.eval(*approx)));
        }
        ex.push_back(er);
        ap.push_back(ar);
      }
      j["exact"] = ex;
      j["approx"] = approx ? ap : json(nullptr);
      j["rows"] = {"path [0, a]", "circle at radius zero"};
      j["columns"] = {"dz", "dlog z"};
    } else if (i2_cmd->parsed()) {
      Conjugation conj{a_opt, abar_opt, unit_circle};
      Scalar v = i2_via_stokes(order_opt, conj);
      std::optional<Point> p = approx;
      if (p && p->count(a_opt) && !p->count(abar_opt)) (*p)[abar_opt] = p->at(a_opt);
      j = result("period i2");
      put_scalar(j, v, p);
      j["order"] = order_opt;
      if (oracle_flag) {
        if (!approx || !approx->count(a_opt)) throw DomainError("--oracle needs a numeric value, e.g. --approx a=2");
        auto t0 = std::chrono::steady_clock::now();
        QuadratureResult q = i2_plane_oracle(approx->at(a_opt), tol < 1e-9 ? 1e-9 : tol);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        j["oracle"] = {{"value", complex_json(q.value)}, {"error", q.error}, {"seconds", secs}};
      }
    } else if (dc_cmd->parsed()) {
      DoubleCopyConfig cfg = double_copy_config(file_argument(config_opt).empty() ? config_opt : file_argument(config_opt));
      std::optional<Point> p = approx;
      if (p && p->count(cfg.conj.a) && !p->count(cfg.conj.abar)) (*p)[cfg.conj.abar] = p->at(cfg.conj.a);
      j = result("period double-copy");
      put_scalar(j, double_copy_p1(cfg), p);
      json pairs = json::array();
      for (const auto& [g, gv] : cfg.pairs) pairs.push_back({g.to_string(), gv.to_string()});
      j["pairs"] = pairs;
    } else if (quadrant_cmd->parsed()) {
      MonoidElement f1 = parse_monoid(f1_opt, Chart::half_line("r1"));
      MonoidElement f2 = parse_monoid(f2_opt, Chart::half_line("r2"));
      RegularizationReport rep = check_regularization(quadrant_regularization(f1, a1_opt, f2, a2_opt));
      j = result("quadrant");
      j["status"] = to_string(rep.status);
      json logs = json::object();
      for (const auto& [n, s] : rep.log_values) logs[n] = s.to_string();
      j["log_values"] = logs;
      j["values"] = scale_json(rep.values);
      j["free_parameters"] = rep.free_parameters;
      j["violations"] = rep.violations;
    }
    out << j.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    json j;
    j["schema"] = kResultSchema;
    const char* kind = dynamic_cast<const TypeError*>(&e) ? "type" : e.exit_code() == 2 ? "parse" : "domain";
    j["error"] = {{"kind", kind}, {"message", e.what()}};
    out << j.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace logcorners
