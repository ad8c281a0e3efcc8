#include "logcorners/numeric.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <queue>

#include "logcorners/error.hpp"

namespace logcorners {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// Flattened log function over a fixed coordinate order.
class Compiled {
 public:
  Compiled(const LogFunction& f, const std::vector<std::string>& coords, const Point& params) {
    auto index = [&](const std::string& n) {
      auto it = std::find(coords.begin(), coords.end(), n);
      if (it == coords.end()) throw DomainError("no value assigned to coordinate '" + n + "'");
      return static_cast<int>(it - coords.begin());
    };
    auto compile_poly = [&](const FourierPoly& p, std::vector<Term>& out) {
      for (const auto& [k, s] : p.terms()) {
        Term t;
        t.c = s.eval(params);
        for (const auto& [n, e] : k.mono) t.powers.emplace_back(index(n), e);
        for (const auto& [n, e] : k.fourier) t.waves.emplace_back(index(n), e);
        out.push_back(std::move(t));
      }
    };
    for (const auto& [logs, c] : f.terms()) {
      for (const auto& [q, p] : c.terms()) {
        int exp_id = -1;
        if (!q.is_zero()) {
          exps_.emplace_back();
          compile_poly(q, exps_.back());
          exp_id = static_cast<int>(exps_.size()) - 1;
        }
        std::size_t first = terms_.size();
        compile_poly(p, terms_);
        for (std::size_t i = first; i < terms_.size(); ++i) {
          terms_[i].exp_id = exp_id;
          for (const auto& [n, k] : logs) {
            if (f.chart().role(n) == Role::kPhantom)
              throw DomainError("log(" + n + ") of a phantom has no numeric value");
            terms_[i].logs.emplace_back(index(n), k);
          }
        }
      }
    }
  }

  Complex operator()(const std::vector<double>& x) const {
    std::vector<Complex> ev(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) ev[i] = std::exp(sum(exps_[i], x));
    Complex total = 0;
    for (const auto& t : terms_) {
      Complex v = value(t, x);
      for (const auto& [i, k] : t.logs) v *= std::pow(std::log(x[i]), k);
      if (t.exp_id >= 0) v *= ev[t.exp_id];
      total += v;
    }
    return total;
  }

 private:
  struct Term {
    Complex c;
    std::vector<std::pair<int, int>> powers, waves, logs;
    int exp_id = -1;
  };
  static Complex value(const Term& t, const std::vector<double>& x) {
    Complex v = t.c;
    for (const auto& [i, e] : t.powers) v *= std::pow(x[i], e);
    for (const auto& [i, e] : t.waves) v *= std::polar(1.0, e * x[i]);
    return v;
  }
  static Complex sum(const std::vector<Term>& ts, const std::vector<double>& x) {
    Complex s = 0;
    for (const auto& t : ts) s += value(t, x);
    return s;
  }
  std::vector<Term> terms_;
  std::vector<std::vector<Term>> exps_;
};

const double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                        0.207784955007898467600689403773245, 0.0};
const double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<Complex(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Complex fc = f(c);
  Complex k = fc * kWgk[7], g = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    double dx = h * kXgk[j];
    Complex s = f(c - dx) + f(c + dx);
    k += kWgk[j] * s;
    if (j % 2 == 1) g += kWg[j / 2] * s;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

}  // namespace

Complex eval_interior(const LogFunction& f, const Point& coords, const Point& params) {
  for (const auto& n : f.chart().basic) {
    auto it = coords.find(n);
    if (it != coords.end() && !(it->second > 0)) throw DomainError("point is on the boundary: " + n + " = 0");
  }
  for (const auto& [n, v] : params)
    if (!(v > 0)) throw DomainError("parameter '" + n + "' must be positive");
  return f.eval(coords, params);
}

QuadratureResult adaptive_gk(const std::function<Complex(double)>& f, double a, double b, double tol,
                             int max_subdivisions) {
  std::priority_queue<Segment> queue;
  Segment first = gk15(f, a, b);
  queue.push(first);
  Complex total = first.value;
  double error = first.error;
  int n = 1;
  while (error > std::max(tol, tol * std::abs(total)) && n < max_subdivisions) {
    Segment s = queue.top();
    queue.pop();
    double m = 0.5 * (s.a + s.b);
    Segment l = gk15(f, s.a, m), r = gk15(f, m, s.b);
    total += l.value + r.value - s.value;
    error += l.error + r.error - s.error;
    queue.push(l);
    queue.push(r);
    ++n;
  }
  // Re-sum in a fixed order to avoid drift from incremental updates.
  Complex sum = 0;
  double err = 0;
  std::vector<Segment> all;
  while (!queue.empty()) {
    all.push_back(queue.top());
    queue.pop();
  }
  std::sort(all.begin(), all.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  for (const auto& s : all) {
    sum += s.value;
    err += s.error;
  }
  return {sum, err, err <= std::max(tol, tol * std::abs(sum))};
}

QuadratureResult quadrature(const LogForm& w, const IntegrationDomain& dom, const QuadratureSpec& spec) {
  require_same_chart(w.chart(), dom.chart);
  dom.validate();
  LogForm ws = w;
  Chart chart = dom.chart;
  if (!chart.phantom.empty()) {
    ws = apply_scale(dom.scale, w);
    chart = ws.chart();
  }
  const int n = chart.dimension();
  LogForm top = ws.component(n);
  if (top.is_zero()) return {};
  Basis full = chart.basic;
  full.insert(full.end(), chart.angular.begin(), chart.angular.end());
  LogFunction f = top.coefficient(full);
  auto order = dom.orientation();
  Basis oriented = order;
  int sign = canonical_basis(chart, oriented) * dom.sign;

  Compiled g(f, order, spec.params);
  std::vector<double> bound(order.size(), 0), cut(order.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (chart.role(order[k]) != Role::kBasic) continue;
    bound[k] = chart.bounds.at(order[k]).alpha().eval({}, spec.params).real();
    auto it = spec.cutoff.find(order[k]);
    cut[k] = it == spec.cutoff.end() ? 0 : it->second;
    if (cut[k] < 0 || cut[k] >= bound[k]) throw DomainError("cutoff for '" + order[k] + "' outside (0, bound)");
  }

  std::vector<double> x(order.size());
  bool converged = true;
  double error = 0;
  std::function<Complex(std::size_t)> level = [&](std::size_t k) -> Complex {
    if (k == order.size()) return g(x);
    std::function<Complex(double)> inner;
    double lo = 0, hi = 0;
    if (chart.role(order[k]) == Role::kAngular) {
      inner = [&, k](double t) {
        x[k] = t;
        return level(k + 1);
      };
      hi = kTwoPi;
    } else if (cut[k] > 0) {
      // r = a e^{-u}; dlog r becomes du on [0, log(a/eps)].
      inner = [&, k](double u) {
        x[k] = bound[k] * std::exp(-u);
        return level(k + 1);
      };
      hi = std::log(bound[k] / cut[k]);
    } else {
      // u = s/(1-s) maps [0,1) onto [0, inf).
      inner = [&, k](double s) {
        double u = s / (1 - s);
        x[k] = bound[k] * std::exp(-u);
        if (x[k] == 0) return Complex(0);
        return level(k + 1) / ((1 - s) * (1 - s));
      };
      hi = 1;
    }
    QuadratureResult r = adaptive_gk(inner, lo, hi, spec.tolerance, spec.max_subdivisions);
    if (k == 0) error = r.error;
    converged = converged && r.converged;
    return r.value;
  };
  Complex v = level(0);
  return {sign > 0 ? v : -v, error, converged};
}

DivergenceFit divergence_fit(const LogForm& w, const IntegrationDomain& dom, const Point& params,
                             std::vector<double> eps, int degree, double max_residual) {
  if (dom.chart.basic.size() != 1 || dom.chart.dimension() != 1)
    throw DomainError("divergence_fit needs a one-dimensional interval integrand");
  const std::string& r = dom.chart.basic.front();
  if (eps.empty())
    for (int e = 6; e <= 14; ++e) eps.push_back(std::pow(10.0, -e));
  if (degree < 0) {
    int maxlog = 0;
    for (const auto& [b, lt] : w.terms())
      for (const auto& [l, _] : lt)
        if (l.contains(r)) maxlog = std::max(maxlog, l.at(r));
    degree = maxlog + 1;
  }
  if (static_cast<int>(eps.size()) <= degree) throw DomainError("not enough cutoffs for the fit");
  Eigen::MatrixXd a(eps.size(), degree + 1);
  Eigen::MatrixXcd y(eps.size(), 1);
  QuadratureSpec spec;
  spec.params = params;
  spec.tolerance = 1e-13;
  spec.max_subdivisions = 2000;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    spec.cutoff[r] = eps[i];
    y(i, 0) = quadrature(w, dom, spec).value;
    double le = std::log(eps[i]);
    for (int k = 0; k <= degree; ++k) a(i, k) = std::pow(le, k);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::VectorXd re = qr.solve(Eigen::VectorXd(y.real()));
  Eigen::VectorXd im = qr.solve(Eigen::VectorXd(y.imag()));
  DivergenceFit fit;
  fit.eps = eps;
  for (int k = 0; k <= degree; ++k) fit.coefficients.emplace_back(re(k), im(k));
  Eigen::VectorXd res_re = a * re - y.real();
  Eigen::VectorXd res_im = a * im - y.imag();
  fit.residual = std::sqrt((res_re.squaredNorm() + res_im.squaredNorm()) / eps.size());
  if (fit.residual > max_residual)
    throw DomainError("poor divergence fit: residual " + std::to_string(fit.residual));
  return fit;
}

namespace {

double smooth_h(double x) { return x > 0 ? std::exp(-1 / x) : 0; }

// 1 on [0, 1/2], 0 on [1, inf), smooth in between.
double bump(double s) {
  if (s <= 0.5) return 1;
  if (s >= 1) return 0;
  double tau = 2 * (s - 0.5);
  return smooth_h(1 - tau) / (smooth_h(1 - tau) + smooth_h(tau));
}

}  // namespace

QuadratureResult i2_plane_oracle(double a, double tol) {
  if (!(a > 0) || a == 1) throw DomainError("the plane oracle needs a positive a different from 1");
  const Complex I(0, 1);
  auto density = [&](Complex z) { return -2.0 * I * (1.0 / (z - a) - 1.0 / (z - 1.0)) / std::conj(z); };
  const std::vector<double> centers{0, 1, a};
  double gap = std::min({1.0, std::abs(a - 1), a});
  const double rho = std::min(0.5, 0.4 * gap);
  const double big_r = 2 * std::max(a, 1.0) + 2;
  auto patches = [&](Complex z) {
    double s = 0;
    for (double c : centers) s += bump(std::abs(z - c) / rho);
    return s;
  };
  const int budget = 200;
  auto polar = [&](const std::function<Complex(double, double)>& g, double r0, double r1) {
    return adaptive_gk(
        [&](double r) {
          return adaptive_gk([&](double t) { return g(r, t); }, 0, kTwoPi, tol, budget).value;
        },
        r0, r1, tol, budget);
  };
  Complex total = 0;
  double error = 0;
  bool ok = true;
  auto accumulate = [&](const QuadratureResult& q) {
    total += q.value;
    error += q.error;
    ok = ok && q.converged;
  };
  for (double c : centers) {
    accumulate(polar(
        [&](double r, double t) {
          Complex z = c + std::polar(r, t);
          return bump(r / rho) * density(z) * r;
        },
        0, rho));
  }
  accumulate(polar(
      [&](double r, double t) {
        Complex z = std::polar(r, t);
        return (1 - patches(z)) * bump(r / big_r) * density(z) * r;
      },
      0, big_r));
  // Outside radius R/2 with r = (R/2)/s.
  accumulate(polar(
      [&](double s, double t) {
        double r = 0.5 * big_r / s;
        Complex z = std::polar(r, t);
        return (1 - bump(r / big_r)) * density(z) * r * (0.5 * big_r / (s * s));
      },
      0, 1));
  return {total, error, ok};
}

}  // namespace logcorners
