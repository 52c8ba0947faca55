#include "plectic/flow_lab.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plectic/errors.hpp"
#include "plectic/exterior.hpp"

namespace plectic {

namespace {

// Polynomial with double coefficients; rational functions with a nonconstant denominator keep the exact path.
struct CompiledTerm {
  double coefficient;
  Exponent exponent;
};

struct CompiledFunction {
  std::vector<CompiledTerm> terms;
  std::size_t arity = 0;
  std::optional<RationalFunction> general;

  explicit CompiledFunction(const RationalFunction& f) {
    arity = f.variables() ? f.variables()->size() : 0;
    if (!f.is_polynomial()) {
      general = f;
      return;
    }
    for (const auto& [e, c] : f.numerator().terms()) terms.push_back({c.get_d(), e});
  }

  double operator()(const double* x) const {
    if (general) return general->evaluate(std::span<const double>(x, arity));
    double sum = 0.0;
    for (const auto& t : terms) {
      double v = t.coefficient;
      for (std::size_t i = 0; i < arity; ++i) {
        for (unsigned k = 0; k < t.exponent[i]; ++k) v *= x[i];
      }
      sum += v;
    }
    return sum;
  }
};

double determinant(std::vector<double> a, int n) {
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(a[r * n + c]) > std::abs(a[pivot * n + c])) pivot = r;
    }
    if (a[pivot * n + c] == 0.0) return 0.0;
    if (pivot != c) {
      for (int k = 0; k < n; ++k) std::swap(a[c * n + k], a[pivot * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (int r = c + 1; r < n; ++r) {
      double f = a[r * n + c] / a[c * n + c];
      for (int k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

// α(w_0, ..., w_{k-1}) = Σ_I α_I det(w_j^i)_{i ∈ I}.
double evaluate_on(const NumericForm& alpha, const std::vector<double>& coeffs, const std::vector<const double*>& w) {
  const int k = alpha.degree;
  double sum = 0.0;
  std::vector<double> m(static_cast<std::size_t>(k * k));
  for (std::size_t c = 0; c < alpha.indices.size(); ++c) {
    if (coeffs[c] == 0.0) continue;
    auto rows = alpha.indices[c].indices();
    for (int r = 0; r < k; ++r) {
      for (int j = 0; j < k; ++j) m[static_cast<std::size_t>(r * k + j)] = w[static_cast<std::size_t>(j)][rows[static_cast<std::size_t>(r)]];
    }
    sum += coeffs[c] * determinant(m, k);
  }
  return sum;
}

std::vector<double> periodic_differentiation(int n, double period) {
  std::vector<double> d(static_cast<std::size_t>(n * n), 0.0);
  const double h = 2.0 * std::numbers::pi / n;
  const double scale = 2.0 * std::numbers::pi / period;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double sign = (i - j) % 2 == 0 ? 1.0 : -1.0;
      double arg = (i - j) * h / 2.0;
      double v = n % 2 == 0 ? 0.5 * sign / std::tan(arg) : 0.5 * sign / std::sin(arg);
      d[static_cast<std::size_t>(i * n + j)] = scale * v;
    }
  }
  return d;
}

std::vector<double> barycentric_differentiation(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> w(n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) w[j] /= x[j] - x[k];
    }
  }
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double diag = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      d[i * n + j] = (w[j] / w[i]) / (x[i] - x[j]);
      diag -= d[i * n + j];
    }
    d[i * n + i] = diag;
  }
  return d;
}

}  // namespace

NumericField NumericField::from_symbolic(const VectorField& v, bool time_dependent) {
  const int dim = v.chart()->dimension();
  NumericField out;
  out.dimension = time_dependent ? dim - 1 : dim;
  if (out.dimension < 1) throw PreconditionFailed("field needs at least one spatial coordinate");
  std::vector<CompiledFunction> comps;
  for (int i = 0; i < out.dimension; ++i) comps.emplace_back(v[i]);
  const int n = out.dimension;
  out.eval = [comps = std::move(comps), n, time_dependent](double t, const double* x, double* res) {
    double buf[kMaxVariables];
    std::copy(x, x + n, buf);
    if (time_dependent) buf[n] = t;
    for (int i = 0; i < n; ++i) res[i] = comps[static_cast<std::size_t>(i)](buf);
  };
  return out;
}

NumericForm NumericForm::from_symbolic(const DifferentialForm& a, bool time_dependent) {
  const int dim = a.chart()->dimension();
  NumericForm out;
  out.dimension = time_dependent ? dim - 1 : dim;
  out.degree = a.degree();
  std::vector<CompiledFunction> comps;
  for (const auto& [idx, f] : a.components()) {
    if (time_dependent && idx.contains(dim - 1)) continue;
    out.indices.push_back(idx);
    comps.emplace_back(f);
  }
  const int n = out.dimension;
  out.eval = [comps = std::move(comps), n, time_dependent](double t, const double* x, double* res) {
    double buf[kMaxVariables];
    std::copy(x, x + n, buf);
    if (time_dependent) buf[n] = t;
    for (std::size_t i = 0; i < comps.size(); ++i) res[i] = comps[i](buf);
  };
  return out;
}

Membrane::Membrane(int ambient, std::vector<ParameterDirection> directions, const Parametrization& sigma)
    : ambient_(ambient), dirs_(std::move(directions)) {
  const int d = dimension();
  if (d < 1 || d > 3) throw PreconditionFailed("membrane dimension must be 1, 2 or 3");
  if (d > ambient) throw PreconditionFailed("membrane dimension exceeds ambient dimension");
  std::vector<std::vector<double>> nodes(static_cast<std::size_t>(d));
  std::vector<std::vector<double>> node_weights(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    const auto& dir = dirs_[static_cast<std::size_t>(a)];
    if (dir.nodes < 8) throw PreconditionFailed("membrane grids need at least 8 nodes per direction");
    if (!(dir.hi > dir.lo)) throw PreconditionFailed("parameter interval is empty");
    auto& xs = nodes[static_cast<std::size_t>(a)];
    auto& ws = node_weights[static_cast<std::size_t>(a)];
    if (dir.periodic) {
      const double h = (dir.hi - dir.lo) / dir.nodes;
      for (int i = 0; i < dir.nodes; ++i) {
        xs.push_back(dir.lo + i * h);
        ws.push_back(h);
      }
      diff_.push_back(periodic_differentiation(dir.nodes, dir.hi - dir.lo));
    } else {
      gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(dir.nodes));
      for (int i = 0; i < dir.nodes; ++i) {
        double xi = 0.0;
        double wi = 0.0;
        gsl_integration_glfixed_point(dir.lo, dir.hi, static_cast<std::size_t>(i), &xi, &wi, table);
        xs.push_back(xi);
        ws.push_back(wi);
      }
      gsl_integration_glfixed_table_free(table);
      diff_.push_back(barycentric_differentiation(xs));
    }
  }
  strides_.assign(static_cast<std::size_t>(d), 1);
  for (int a = d - 2; a >= 0; --a) {
    strides_[static_cast<std::size_t>(a)] = strides_[static_cast<std::size_t>(a + 1)] * dirs_[static_cast<std::size_t>(a + 1)].nodes;
  }
  const std::size_t total = static_cast<std::size_t>(strides_[0] * dirs_[0].nodes);
  initial_.resize(total * static_cast<std::size_t>(ambient));
  weights_.resize(total);
  std::vector<double> u(static_cast<std::size_t>(d));
  for (std::size_t node = 0; node < total; ++node) {
    double w = 1.0;
    for (int a = 0; a < d; ++a) {
      auto i = (node / static_cast<std::size_t>(strides_[static_cast<std::size_t>(a)])) %
               static_cast<std::size_t>(dirs_[static_cast<std::size_t>(a)].nodes);
      u[static_cast<std::size_t>(a)] = nodes[static_cast<std::size_t>(a)][i];
      w *= node_weights[static_cast<std::size_t>(a)][i];
    }
    weights_[node] = w;
    sigma(u.data(), &initial_[node * static_cast<std::size_t>(ambient)]);
  }
}

Membrane Membrane::points(int ambient, std::vector<std::vector<double>> pts, std::vector<double> weights) {
  if (pts.empty() || pts.size() != weights.size()) throw PreconditionFailed("need one weight per point");
  Membrane m;
  m.ambient_ = ambient;
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != ambient) throw DegreeMismatch("point has wrong dimension");
    m.initial_.insert(m.initial_.end(), p.begin(), p.end());
  }
  m.weights_ = std::move(weights);
  return m;
}

Membrane Membrane::circle(int ambient, std::vector<double> center, double radius, int axis_a, int axis_b, int nodes) {
  if (static_cast<int>(center.size()) != ambient) throw DegreeMismatch("center has wrong dimension");
  ParameterDirection dir{0.0, 2.0 * std::numbers::pi, nodes, true};
  return Membrane(ambient, {dir}, [=](const double* u, double* x) {
    std::copy(center.begin(), center.end(), x);
    x[axis_a] += radius * std::cos(u[0]);
    x[axis_b] += radius * std::sin(u[0]);
  });
}

bool Membrane::closed() const {
  if (dirs_.empty()) return false;
  return std::all_of(dirs_.begin(), dirs_.end(), [](const ParameterDirection& d) { return d.periodic; });
}

std::vector<double> Membrane::derivative(const std::vector<double>& positions, int direction) const {
  const auto a = static_cast<std::size_t>(direction);
  const std::size_t n = static_cast<std::size_t>(dirs_.at(a).nodes);
  const std::size_t stride = static_cast<std::size_t>(strides_[a]);
  const std::size_t amb = static_cast<std::size_t>(ambient_);
  const auto& dm = diff_[a];
  std::vector<double> out(positions.size(), 0.0);
  for (std::size_t node = 0; node < node_count(); ++node) {
    const std::size_t i = (node / stride) % n;
    const std::size_t base = node - i * stride;
    for (std::size_t k = 0; k < n; ++k) {
      const double c = dm[i * n + k];
      if (c == 0.0) continue;
      const double* src = &positions[(base + k * stride) * amb];
      for (std::size_t j = 0; j < amb; ++j) out[node * amb + j] += c * src[j];
    }
  }
  return out;
}

std::vector<double> advect(const std::vector<double>& positions, int ambient, const NumericField& v, double t0, double t1,
                           int steps_per_unit, double bound) {
  if (v.dimension != ambient) throw DegreeMismatch("field and membrane live in different dimensions");
  if (steps_per_unit < 1) throw PreconditionFailed("steps_per_unit must be positive");
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(t1 - t0) * steps_per_unit - 1e-9)));
  const double h = (t1 - t0) / steps;
  const auto n = static_cast<std::size_t>(ambient);
  std::vector<double> out = positions;
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  for (std::size_t node = 0; node * n < out.size(); ++node) {
    double* x = &out[node * n];
    double t = t0;
    for (int s = 0; s < steps; ++s) {
      v.eval(t, x, k1.data());
      for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
      v.eval(t + 0.5 * h, tmp.data(), k2.data());
      for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
      v.eval(t + 0.5 * h, tmp.data(), k3.data());
      for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
      v.eval(t + h, tmp.data(), k4.data());
      for (std::size_t i = 0; i < n; ++i) {
        x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        if (!std::isfinite(x[i]) || std::abs(x[i]) > bound) {
          throw HorizonError("flow left the box |x| <= " + std::to_string(bound) + " at t = " + std::to_string(t + h));
        }
      }
      t = t0 + (s + 1) * h;
    }
  }
  return out;
}

double integrate_pullback(const NumericForm& alpha, const Membrane& m, const std::vector<double>& positions, double t) {
  if (alpha.dimension != m.ambient()) throw DegreeMismatch("form and membrane live in different dimensions");
  if (alpha.degree != m.dimension()) throw DegreeMismatch("form degree differs from membrane dimension");
  const auto amb = static_cast<std::size_t>(m.ambient());
  std::vector<std::vector<double>> jac;
  for (int a = 0; a < m.dimension(); ++a) jac.push_back(m.derivative(positions, a));
  std::vector<double> coeffs(alpha.indices.size());
  std::vector<const double*> w(static_cast<std::size_t>(m.dimension()));
  double sum = 0.0;
  for (std::size_t node = 0; node < m.node_count(); ++node) {
    alpha.eval(t, &positions[node * amb], coeffs.data());
    for (std::size_t a = 0; a < jac.size(); ++a) w[a] = &jac[a][node * amb];
    sum += m.weights()[node] * evaluate_on(alpha, coeffs, w);
  }
  return sum;
}

FlowTrace run_trace(const Membrane& m, const NumericField& v, const NumericForm& alpha, const std::vector<double>& times,
                    int steps_per_unit, double bound) {
  if (times.empty()) throw PreconditionFailed("need at least one sample time");
  FlowTrace trace;
  trace.times = times;
  std::vector<double> x = m.initial();
  trace.integrals.push_back(integrate_pullback(alpha, m, x, times[0]));
  for (std::size_t j = 1; j < times.size(); ++j) {
    x = advect(x, m.ambient(), v, times[j - 1], times[j], steps_per_unit, bound);
    trace.integrals.push_back(integrate_pullback(alpha, m, x, times[j]));
  }
  trace.final_positions = std::move(x);
  return trace;
}

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::Strict:
      return "strict";
    case Hypothesis::GlobalClosed:
      return "global-closed";
    case Hypothesis::LocalBounding:
      return "local-bounding";
    case Hypothesis::None:
      return "none";
  }
  return "none";
}

CirculationVerdict circulation_check(const FlowTrace& trace, double tol, Hypothesis hypothesis) {
  CirculationVerdict out;
  out.hypothesis = hypothesis;
  out.reference = trace.integrals.at(0);
  for (double v : trace.integrals) out.max_drift = std::max(out.max_drift, std::abs(v - out.reference));
  out.invariant = out.max_drift <= tol;
  return out;
}

DriftFit linear_drift_fit(const FlowTrace& trace) {
  const std::size_t n = trace.times.size();
  if (n < 2) throw PreconditionFailed("a drift fit needs two samples");
  double st = 0, sy = 0, stt = 0, sty = 0;
  const double i0 = trace.integrals[0];
  for (std::size_t j = 0; j < n; ++j) {
    double t = trace.times[j];
    double y = trace.integrals[j] - i0;
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  DriftFit fit;
  const double den = n * stt - st * st;
  fit.slope = (n * sty - st * sy) / den;
  fit.intercept = (sy - fit.slope * st) / n;
  for (std::size_t j = 0; j < n; ++j) {
    double y = trace.integrals[j] - i0;
    fit.residual = std::max(fit.residual, std::abs(y - fit.intercept - fit.slope * trace.times[j]));
  }
  return fit;
}

KelvinCertificate kelvin_certificate(const VectorField& v) {
  const ChartPtr& chart = v.chart();
  const int n = chart->dimension() - 1;
  if (n < 1) throw PreconditionFailed("space-time chart needs a spatial coordinate");
  DifferentialForm::Components comps;
  for (int i = 0; i < n; ++i) {
    RationalFunction e = v[i].derivative(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) e += v[k] * v[i].derivative(static_cast<std::size_t>(k));
    if (!e.is_zero()) comps.emplace(IndexSet::single(i), e);
  }
  KelvinCertificate out;
  out.euler_form = DifferentialForm(chart, 1, std::move(comps));
  DifferentialForm::Components curl;
  DifferentialForm full = d(out.euler_form);
  for (const auto& [idx, f] : full.components()) {
    if (!idx.contains(n)) curl.emplace(idx, f);
  }
  out.spatial_curl = DifferentialForm(chart, 2, std::move(curl));
  out.exact = out.spatial_curl.is_zero();
  return out;
}

DifferentialForm metric_dual(const VectorField& v) {
  const int n = v.chart()->dimension() - 1;
  DifferentialForm::Components comps;
  for (int i = 0; i < n; ++i) {
    if (!v[i].is_zero()) comps.emplace(IndexSet::single(i), v[i]);
  }
  return DifferentialForm(v.chart(), 1, std::move(comps));
}

double transgression_pair(const NumericForm& alpha, const Membrane& m, const std::vector<double>& positions,
                          const std::vector<double>& u, double t) {
  if (alpha.dimension != m.ambient()) throw DegreeMismatch("form and membrane live in different dimensions");
  if (alpha.degree != m.dimension() + 1) throw DegreeMismatch("transgression needs deg alpha = d + 1");
  if (u.size() != positions.size()) throw DegreeMismatch("one field sample per node is required");
  const auto amb = static_cast<std::size_t>(m.ambient());
  std::vector<std::vector<double>> jac;
  for (int a = 0; a < m.dimension(); ++a) jac.push_back(m.derivative(positions, a));
  std::vector<double> coeffs(alpha.indices.size());
  std::vector<const double*> w(static_cast<std::size_t>(m.dimension() + 1));
  double sum = 0.0;
  for (std::size_t node = 0; node < m.node_count(); ++node) {
    alpha.eval(t, &positions[node * amb], coeffs.data());
    w[0] = &u[node * amb];
    for (std::size_t a = 0; a < jac.size(); ++a) w[a + 1] = &jac[a][node * amb];
    sum += m.weights()[node] * evaluate_on(alpha, coeffs, w);
  }
  return sum;
}

double advected_derivative(const NumericForm& beta, const Membrane& m, const NumericField& v, double h,
                           int steps_per_unit) {
  auto at = [&](double tau) {
    auto x = advect(m.initial(), m.ambient(), v, 0.0, tau, steps_per_unit);
    return integrate_pullback(beta, m, x, 0.0);
  };
  return (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
}

std::vector<double> sample_field(const NumericField& v, const std::vector<double>& positions, double t) {
  const auto n = static_cast<std::size_t>(v.dimension);
  std::vector<double> out(positions.size());
  for (std::size_t node = 0; node * n < positions.size(); ++node) v.eval(t, &positions[node * n], &out[node * n]);
  return out;
}

}  // namespace plectic
