/// @file flow_lab.hpp
/// @brief Numerical advection of membranes under (time-dependent) vector fields and
/// quadrature of pulled-back forms: circulation, linear drift, Kelvin and transgression checks.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plectic/forms.hpp"

namespace plectic {

/// x' = v(t, x) on R^dimension.
struct NumericField {
  int dimension = 0;
  std::function<void(double t, const double* x, double* out)> eval;

  /// When `time_dependent`, the last chart coordinate is time and the field's own time component is ignored.
  static NumericField from_symbolic(const VectorField& v, bool time_dependent = false);
};

/// Form on R^dimension with (possibly time-dependent) coefficients, one per increasing index set.
struct NumericForm {
  int dimension = 0;
  int degree = 0;
  std::vector<IndexSet> indices;
  std::function<void(double t, const double* x, double* out)> eval;

  /// Components involving the time differential are dropped when `time_dependent`.
  static NumericForm from_symbolic(const DifferentialForm& a, bool time_dependent = false);
};

/// One parameter direction of a membrane.
struct ParameterDirection {
  double lo = 0.0;
  double hi = 1.0;
  int nodes = 8;
  /// Uniform nodes with spectral differentiation; otherwise Gauss-Legendre nodes.
  bool periodic = false;
};

class Membrane {
 public:
  using Parametrization = std::function<void(const double* u, double* x)>;

  /// d = directions.size() ∈ {1, 2, 3}. Throws PreconditionFailed below 8 nodes per direction.
  Membrane(int ambient, std::vector<ParameterDirection> directions, const Parametrization& sigma);
  /// d = 0: signed point masses (Σ = ∂N for an oriented segment gives weights +1 and −1).
  static Membrane points(int ambient, std::vector<std::vector<double>> pts, std::vector<double> weights);
  /// Circle center + r(cos s · e_a + sin s · e_b), s ∈ [0, 2π).
  static Membrane circle(int ambient, std::vector<double> center, double radius, int axis_a, int axis_b, int nodes);

  int ambient() const { return ambient_; }
  int dimension() const { return static_cast<int>(dirs_.size()); }
  /// All parameter directions periodic (no boundary).
  bool closed() const;
  std::size_t node_count() const { return weights_.size(); }
  const std::vector<double>& initial() const { return initial_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<ParameterDirection>& directions() const { return dirs_; }

  /// ∂x/∂u_a at every node for positions laid out as [node][ambient].
  std::vector<double> derivative(const std::vector<double>& positions, int direction) const;

 private:
  Membrane() = default;

  int ambient_ = 0;
  std::vector<ParameterDirection> dirs_;
  std::vector<int> strides_;
  std::vector<std::vector<double>> diff_;
  std::vector<double> initial_;
  std::vector<double> weights_;
};

/// RK4 with a fixed step 1/steps_per_unit from t0 to t1 for every node.
/// Throws HorizonError when a node leaves the box |x_i| ≤ bound.
std::vector<double> advect(const std::vector<double>& positions, int ambient, const NumericField& v, double t0, double t1,
                           int steps_per_unit, double bound = 1e6);

/// ∫_Σ σ*α at time t for the given node positions. Throws DegreeMismatch when deg α ≠ d.
double integrate_pullback(const NumericForm& alpha, const Membrane& m, const std::vector<double>& positions, double t = 0.0);

struct FlowTrace {
  std::vector<double> times;
  std::vector<double> integrals;
  std::vector<double> final_positions;
};

/// I(t_j) = ∫ σ_{t_j}* α^{t_j}, with σ_{t_0} the membrane's initial sample.
FlowTrace run_trace(const Membrane& m, const NumericField& v, const NumericForm& alpha, const std::vector<double>& times,
                    int steps_per_unit, double bound = 1e6);

enum class Hypothesis { Strict, GlobalClosed, LocalBounding, None };
std::string to_string(Hypothesis h);

struct CirculationVerdict {
  bool invariant = false;
  double reference = 0.0;
  double max_drift = 0.0;
  Hypothesis hypothesis = Hypothesis::None;
};

CirculationVerdict circulation_check(const FlowTrace& trace, double tol, Hypothesis hypothesis);

struct DriftFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// max |I(t) − I(0) − (intercept + slope·t)|.
  double residual = 0.0;
};

/// Least-squares line through (t_j, I(t_j) − I(t_0)).
DriftFit linear_drift_fit(const FlowTrace& trace);

struct KelvinCertificate {
  /// Σ_i (Σ_k v_k ∂_k v_i + ∂_t v_i) dx_i on the space-time chart.
  DifferentialForm euler_form;
  /// Spatial exterior derivative of euler_form.
  DifferentialForm spatial_curl;
  bool exact = false;
};

/// v lives on a chart whose last coordinate is time; α^t is its metric dual.
KelvinCertificate kelvin_certificate(const VectorField& v);

/// Σ_i v_i dx_i on the same space-time chart.
DifferentialForm metric_dual(const VectorField& v);

/// ∫_Σ σ*(ι_u α) with u sampled per node as [node][ambient]. Throws DegreeMismatch when deg α ≠ d + 1.
double transgression_pair(const NumericForm& alpha, const Membrane& m, const std::vector<double>& positions,
                          const std::vector<double>& u, double t = 0.0);

/// d/dt|_0 ∫ σ_t*β by a five-point central difference of advected integrals.
double advected_derivative(const NumericForm& beta, const Membrane& m, const NumericField& v, double h,
                           int steps_per_unit);

/// v sampled at the given node positions.
std::vector<double> sample_field(const NumericField& v, const std::vector<double>& positions, double t = 0.0);

}  // namespace plectic
