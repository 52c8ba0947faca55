/// @file exterior.hpp
/// @brief Exterior calculus on a chart: d, wedge, contractions, Lie derivatives,
/// Hamiltonian vector fields and primitives on the star-shaped chart.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plectic/forms.hpp"

namespace plectic {

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm exterior_derivative(const DifferentialForm& a);
inline DifferentialForm d(const DifferentialForm& a) { return exterior_derivative(a); }

/// ι_v a. Zero on 0-forms.
DifferentialForm interior(const VectorField& v, const DifferentialForm& a);

/// ι(v_1 ∧ ... ∧ v_m) a = ι_{v_m} ... ι_{v_1} a, summed over terms.
DifferentialForm contract(const MultiVectorField& y, const DifferentialForm& a);

DifferentialForm lie_derivative(const VectorField& v, const DifferentialForm& a);

/// L_Y a = d ι_Y a − (−1)^m ι_Y d a.
DifferentialForm multivector_lie_derivative(const MultiVectorField& y, const DifferentialForm& a);

/// [v, w]^i = v^j ∂_j w^i − w^j ∂_j v^i.
VectorField bracket(const VectorField& v, const VectorField& w);

/// v(f) = Σ v^i ∂_i f.
RationalFunction directional_derivative(const VectorField& v, const RationalFunction& f);

/// ∂(v_1 ∧ ... ∧ v_m) = Σ_{i<j} (−1)^{i+j} [v_i, v_j] ∧ v_1 ... v̂_i ... v̂_j ... v_m.
MultiVectorField schouten_boundary(const std::vector<VectorField>& vs);

struct TechIdentityReport {
  bool holds = false;
  DifferentialForm lhs;
  DifferentialForm rhs;
  DifferentialForm difference;
};

/// (−1)^m d ι(v)Ω  vs  ι(∂v)Ω + Σ_i (−1)^i ι(v_1..v̂_i..v_m) L_{v_i}Ω + ι(v) dΩ.
TechIdentityReport check_tech_identity(const std::vector<VectorField>& vs, const DifferentialForm& omega);

/// Generic-point injectivity of v ↦ ι_v ω.
bool is_nondegenerate(const DifferentialForm& omega);

struct HamiltonianSolution {
  VectorField field;
  /// Basis of {u : ι_u ω = 0}; empty when ω is nondegenerate.
  std::vector<VectorField> kernel;
};

/// Solves ι_v ω = −d a. Throws NotHamiltonian when no solution exists.
HamiltonianSolution hamiltonian_vector_field(const DifferentialForm& omega, const DifferentialForm& a);

/// Homotopy operator K with d(K a) = a for closed polynomial a of degree ≥ 1.
/// A 0-form is exact only when it vanishes; the zero 0-form is returned then.
DifferentialForm poincare_primitive(const DifferentialForm& a);

enum class ConservationTag { Strict, Global, Local, None, Undecided };

std::string to_string(ConservationTag tag);

/// Strength order Strict > Global > Local > None. Undecided ranks with Local.
int strength(ConservationTag tag);

struct ConservationClass {
  ConservationTag tag = ConservationTag::None;
  /// d(primitive) = L_v α; only for Global.
  std::optional<DifferentialForm> primitive;
  DifferentialForm lie_derivative;
};

/// Classifies a form whose Lie derivative is already known.
ConservationClass classify_lie_derivative(const DifferentialForm& l);

ConservationClass classify_conservation(const VectorField& v, const DifferentialForm& a);

/// Closed and exact-or-zero decision for an arbitrary form on the chart.
bool is_closed(const DifferentialForm& a);

/// Re-homes a form or field whose chart coordinates are a prefix of `target`'s (pullback along the
/// projection onto those coordinates).
DifferentialForm pullback_projection(const DifferentialForm& a, const ChartPtr& target);
VectorField lift_trivially(const VectorField& v, const ChartPtr& target);

/// Restricts a field on `target` to the prefix chart `base` (drops the remaining components).
/// Throws PreconditionFailed if the kept components depend on the dropped coordinates.
VectorField project_field(const VectorField& v, const ChartPtr& base);

}  // namespace plectic
