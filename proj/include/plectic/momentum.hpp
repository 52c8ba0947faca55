/// @file momentum.hpp
/// @brief Homotopy co-momentum maps for Lie algebra actions on (pre-)multisymplectic charts,
/// conserved quantities from cycles and boundaries, the obstruction map, isotropy reduction
/// and the extension by the Hamiltonian flow.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plectic/exterior.hpp"
#include "plectic/forms.hpp"
#include "plectic/lie_algebra.hpp"

namespace plectic {

/// ς(k) = −(−1)^{k(k+1)/2}.
int varsigma(int k);

/// "e^f" for the wedge-basis element e_I; "1" for the empty index set.
std::string basis_label(const LieAlgebraPtr& g, IndexSet idx);

/// Closed (n+1)-form on a chart. n = 0 only arises from reduction by a top-degree cycle.
struct PlecticStructure {
  DifferentialForm omega;
  int n = 0;
  bool nondegenerate = false;

  /// Throws NotClosed or DegreeMismatch.
  static PlecticStructure make(DifferentialForm omega);
  const ChartPtr& chart() const { return omega.chart(); }
};

/// x ↦ v_x, one vector field per basis element of the algebra.
struct InfinitesimalAction {
  LieAlgebraPtr algebra;
  ChartPtr chart;
  std::vector<VectorField> generators;

  /// Checks v_{[e_i,e_j]} = [v_i, v_j] and L_{v_i} ω = 0; throws PreconditionFailed.
  static InfinitesimalAction make(LieAlgebraPtr algebra, std::vector<VectorField> generators, const PlecticStructure& p);

  /// v_x for x of degree 1.
  VectorField field(const WedgeElement& x) const;
  /// v_p = Σ_I c_I v_{i_1} ∧ ... ∧ v_{i_k}.
  MultiVectorField multivector(const WedgeElement& p) const;
};

/// f_k on wedge-basis elements for k = 1 ... n. Missing entries are zero.
class CoMomentumMap {
 public:
  CoMomentumMap() = default;
  CoMomentumMap(LieAlgebraPtr algebra, ChartPtr chart, int n);

  const LieAlgebraPtr& algebra() const { return alg_; }
  const ChartPtr& chart() const { return chart_; }
  int n() const { return n_; }

  /// f_k(e_I) := form; the form degree must be n − |I|.
  void set(IndexSet basis, DifferentialForm form);
  /// f_k(p) extended linearly; zero of degree n − k when k is 0 or above the stored range.
  DifferentialForm operator()(const WedgeElement& p) const;
  const std::map<IndexSet, DifferentialForm>& entries() const { return entries_; }

 private:
  LieAlgebraPtr alg_;
  ChartPtr chart_;
  int n_ = 0;
  std::map<IndexSet, DifferentialForm> entries_;
};

struct ComomentumCheck {
  int k = 0;
  IndexSet basis;
  bool pass = false;
  /// f_{k−1}(∂p) + d f_k(p) + ς(k) ι(v_p) ω.
  DifferentialForm residual;
};

struct ComomentumReport {
  bool pass = true;
  std::vector<ComomentumCheck> checks;
  /// d f_1(x) + ι_{v_x} ω per generator.
  std::vector<ComomentumCheck> hamiltonian_checks;
};

/// Checks −f_{k−1}(∂p) = d f_k(p) + ς(k) ι(v_p) ω for k = 1 ... n+1 on every wedge-basis element.
ComomentumReport verify_comomentum(const CoMomentumMap& f, const InfinitesimalAction& action, const PlecticStructure& p);

/// Hamiltonian form together with a chosen Hamiltonian vector field.
struct Observable {
  DifferentialForm form;
  VectorField field;
};

/// Throws NotHamiltonian when d α ≠ −ι_v ω.
Observable make_observable(const PlecticStructure& p, DifferentialForm form, VectorField field);
/// Solves for the Hamiltonian vector field.
Observable make_observable(const PlecticStructure& p, DifferentialForm form);

/// l_1 = d on positive L∞ degree; l_k = ς(k) ι(v_1 ∧ ... ∧ v_k) ω on forms of degree n−1; otherwise 0.
DifferentialForm l_bracket(const std::vector<Observable>& args, const PlecticStructure& p);

struct PreservationClass {
  ConservationTag tag = ConservationTag::Strict;
  /// Classification of L_{v_x} H per generator.
  std::vector<ConservationClass> witnesses;
};

PreservationClass classify_H_preservation(const InfinitesimalAction& action, const DifferentialForm& h);

/// Guaranteed classes for f_k(p): cycles and boundaries.
ConservationTag guaranteed_for_cycle(ConservationTag preservation);
ConservationTag guaranteed_for_boundary(ConservationTag preservation);

struct ConservedQuantity {
  WedgeElement element;
  DifferentialForm form;
  ConservationClass actual;
  ConservationTag guaranteed = ConservationTag::None;
  bool is_boundary = false;
  bool consistent = false;
};

/// f_k(p) for a cycle p, classified under v_H. Throws NotACycle.
ConservedQuantity conserved_from_cycle(const CoMomentumMap& f, const WedgeElement& p, const VectorField& v_h,
                                       ConservationTag preservation, const HomologySpaces& hs);

struct StrictPrimitiveCheck {
  bool holds = false;
  DifferentialForm lie_derivative;
  /// ι_{v_H} f_k(p) + ς(k) ι(v_p) H.
  DifferentialForm primitive;
};

/// L_{v_H} f_k(p) = d(ι_{v_H} f_k(p) + ς(k) ι(v_p) H).
StrictPrimitiveCheck check_strict_primitive(const CoMomentumMap& f, const InfinitesimalAction& action,
                                            const WedgeElement& p, const DifferentialForm& h, const VectorField& v_h);

struct TableRow {
  int k = 0;
  bool boundary_row = false;
  std::vector<ConservedQuantity> entries;
  ConservationTag guaranteed = ConservationTag::None;
  bool consistent = true;
};

struct ConservationTable {
  ConservationTag preservation = ConservationTag::None;
  std::vector<TableRow> rows;
  bool consistent = true;
};

ConservationTable conservation_table(const CoMomentumMap& f, const InfinitesimalAction& action,
                                     const DifferentialForm& h, const VectorField& v_h);

struct ObstructionClass {
  WedgeElement representative;
  DifferentialForm lie_derivative;
  /// ι(v_p) dH, the contraction form used alongside the Lie derivative.
  DifferentialForm contraction;
  bool zero = true;
  /// Constant value when n − k = 0.
  std::optional<Rational> value;
  std::optional<Rational> contraction_value;
};

struct ObstructionReport {
  int k = 0;
  int form_degree = 0;
  std::vector<ObstructionClass> classes;
  /// L_{v_{∂q}} H exact for all q in the wedge basis of degree k+1.
  bool well_defined = true;
  bool identically_zero() const;
};

/// [p] ↦ [L_{v_p} H] on a basis of H_k. Throws PreconditionFailed if a representative gives a non-closed form.
ObstructionReport obstruction_A(const InfinitesimalAction& action, const DifferentialForm& h, int k,
                                const HomologySpaces& hs);

struct RewriteCheck {
  bool holds = false;
  DifferentialForm lhs;
  DifferentialForm rhs;
};

/// [L_{v_p} H] = −ς(k) [L_{v_H} f_k(p)].
RewriteCheck rewrite_check_A(const CoMomentumMap& f, const InfinitesimalAction& action, const DifferentialForm& h,
                             const VectorField& v_h, const WedgeElement& p);

struct ExtendedComomentum {
  LieAlgebraPtr algebra;
  InfinitesimalAction action;
  CoMomentumMap map;
};

/// g ⊕ ⟨c⟩ with c ↦ v_H and f̃_k(x_1, ..., x_{k−1}, c) = ς(k) ι(v_{x_1} ∧ ... ∧ v_{x_{k−1}}) H.
/// Throws PreconditionFailed unless the action is strictly H-preserving and commutes with v_H.
ExtendedComomentum extend_comomentum_tilde(const CoMomentumMap& f, const InfinitesimalAction& action,
                                           const DifferentialForm& h, const VectorField& v_h, const PlecticStructure& p,
                                           const std::string& center_name = "c");

struct TildeConserved {
  WedgeElement element;
  DifferentialForm form;
  ConservationClass actual;
  bool cycle = false;
  /// ι_{v_H} d f̃_k(p ⊗ c) = 0.
  bool route_zero = false;
};

TildeConserved tilde_conserved(const ExtendedComomentum& ext, const WedgeElement& p, const VectorField& v_h);

struct InducedComomentum {
  LieAlgebraPtr subalgebra;
  /// Images of the subalgebra basis in g.
  std::vector<WedgeElement> basis;
  InfinitesimalAction action;
  PlecticStructure structure;
  CoMomentumMap map;
  /// q ↦ (−1)^k ι(v_q) f_k(p).
  CoMomentumMap alternative;
  bool reduced_closed = false;
};

/// f^p_j(q) = −ς(k) f_{j+k}(q ∧ p) on g_p acting on (M, ι(v_p) ω). Throws NotACycle.
InducedComomentum induced_comomentum(const CoMomentumMap& f, const InfinitesimalAction& action, const WedgeElement& p,
                                     const PlecticStructure& structure);

struct ReducedHamiltonianCheck {
  DifferentialForm reduced_h;
  DifferentialForm d_reduced_h;
  /// ι_{v_H}(ι(v_p) ω).
  DifferentialForm contraction;
  /// d(ι(v_p)H) = −ι_{v_H}(ι(v_p)ω).
  bool hamiltonian = false;
  /// d(ι(v_p)H) = +ι_{v_H}(ι(v_p)ω).
  bool literal_sign = false;
};

ReducedHamiltonianCheck reduced_hamiltonian(const InfinitesimalAction& action, const WedgeElement& p,
                                            const DifferentialForm& h, const VectorField& v_h,
                                            const PlecticStructure& structure);

struct TangencyReport {
  bool holds = true;
  std::vector<WedgeElement> basis;
  std::vector<DifferentialForm> values;
};

/// ι_{v_H} d f_n(p) = 0 on a basis of Z_n (or B_n when `boundaries`).
TangencyReport level_map_tangency(const CoMomentumMap& f, const VectorField& v_h, const HomologySpaces& hs,
                                  bool boundaries = false);

/// d β = 0 and L_v β = 0.
bool in_algebra_A(const VectorField& v, const DifferentialForm& beta);

/// ι(v_p) ω ∈ A(v_H) for a cycle p.
bool a_algebra_membership(const InfinitesimalAction& action, const WedgeElement& p, const PlecticStructure& structure,
                          const VectorField& v_h);
/// l_k(f_1(x_1), ..., f_1(x_{k−1}), H) ∈ A(v_H).
bool a_algebra_membership(const CoMomentumMap& f, const InfinitesimalAction& action,
                          const std::vector<WedgeElement>& xs, const Observable& h, const PlecticStructure& structure);

/// L_v(l_k(β_1..β_k)) = 0 for all subsets of size ≥ 2 and L_v(d β_i) = 0.
/// Throws PreconditionFailed when L_v ω ≠ 0 or some L_v β_i is not closed.
bool subalgebra_closure_check(const PlecticStructure& p, const VectorField& v, const std::vector<Observable>& betas);

struct HamiltonianCriteria {
  ConservationClass alpha_under_h;
  ConservationClass h_under_alpha;
  bool local_match = false;
  bool global_match = false;
};

/// Local/global conservation of α under v_H against closedness/exactness of L_{v_α} H.
HamiltonianCriteria hamiltonian_criteria(const Observable& alpha, const Observable& h);

/// L_{v_x} f_k(q) = f_k([x, q]) for all generators x and basis elements q.
bool is_infinitesimally_equivariant(const CoMomentumMap& f, const InfinitesimalAction& action);

}  // namespace plectic
