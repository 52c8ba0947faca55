/// @file magnetic.hpp
/// @brief Multicotangent charts Λ^k T*R^m, magnetic k-plectic forms, canonical lifts,
/// the lifted Hamiltonian and the co-momentum map of an invariant potential.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plectic/momentum.hpp"

namespace plectic {

struct MulticotangentChart {
  int m = 0;
  int k = 0;
  /// x_1 ... x_m (just "x" when m = 1).
  ChartPtr base;
  /// Base coordinates followed by p_I for each increasing multi-index I of length k.
  ChartPtr chart;
  std::vector<IndexSet> fiber_indices;
  /// Σ_I p_I dx^I.
  DifferentialForm theta;

  /// Chart index of the fiber coordinate p_I.
  int fiber_coordinate(IndexSet multi_index) const;
};

/// Throws PreconditionFailed unless 1 ≤ k ≤ m ≤ 9.
MulticotangentChart build_chart(int m, int k);

/// dθ + π*c. Throws NotClosed when dc ≠ 0, DegreeMismatch when deg c ≠ k+1.
DifferentialForm magnetic_form(const MulticotangentChart& mc, const DifferentialForm& c);

/// The lift with base part w and L_{w^h} θ = 0.
VectorField canonical_lift(const MulticotangentChart& mc, const VectorField& w);

struct MagneticData {
  VectorField w;
  DifferentialForm b;
  DifferentialForm a;
  /// dθ + π*db.
  DifferentialForm omega;
  VectorField lift;
  /// −π*a + ι_{w^h}(θ + π*b).
  DifferentialForm h;
  /// dH + ι_{w^h} ω.
  DifferentialForm residual;
};

/// Throws PreconditionFailed when L_w b ≠ da on the base.
MagneticData magnetic_hamiltonian(const MulticotangentChart& mc, const VectorField& w, const DifferentialForm& b,
                                  const DifferentialForm& a);

struct LiftedAction {
  PlecticStructure structure;
  InfinitesimalAction action;
  /// θ + π*b.
  DifferentialForm potential;
  /// f_k(p) = −ς(k)(−1)^k ι(v^h_p)(θ + π*b); f_1(x) = ι_{v^h_x}(θ + π*b).
  CoMomentumMap f;
};

/// Lifts a base action preserving b to (Λ^k T*R^m, d(θ + π*b)). Throws PreconditionFailed when L_{v_x} b ≠ 0.
LiftedAction potential_comomentum(const MulticotangentChart& mc, const DifferentialForm& b, const LieAlgebraPtr& algebra,
                                  const std::vector<VectorField>& base_generators);

struct Sl2CounterexampleReport {
  /// −b̃(w̃, Ad_{g⁻¹} x) with x = h, w̃ = f, b̃ = e*∧f*.
  Polynomial function;
  Polynomial expected;
  bool matches_expected = false;
  bool h_is_boundary = false;
  bool b_closed = false;
  std::vector<std::vector<Rational>> sample_points;
  std::vector<Rational> sample_values;
  bool constant = true;
  /// Global by the boundary guarantee, not strict since the function is not constant.
  bool global_not_strict = false;
};

Sl2CounterexampleReport sl2_strict_counterexample();

}  // namespace plectic
