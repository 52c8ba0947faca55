/// @file lie_algebra.hpp
/// @brief Finite-dimensional Lie algebras over Q: Λ•g, the homology differential,
/// cycles/boundaries, the Gerstenhaber bracket, isotropy and central extension.
#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "plectic/index_set.hpp"
#include "plectic/polynomial.hpp"

namespace plectic {

class LieAlgebra;
using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// [e_i, e_j] = Σ_k c[i][j][k] e_k.
class LieAlgebra {
 public:
  using Constants = std::vector<std::vector<std::vector<Rational>>>;

  struct Bracket {
    int i;
    int j;
    std::vector<Rational> value;
  };

  /// Unlisted brackets are zero; [e_j, e_i] is filled in by antisymmetry.
  /// Throws PreconditionFailed when antisymmetry or Jacobi fails.
  static LieAlgebraPtr from_brackets(std::string name, std::vector<std::string> basis_names,
                                     const std::vector<Bracket>& brackets);
  /// Full table; validated the same way.
  static LieAlgebraPtr from_constants(std::string name, std::vector<std::string> basis_names, Constants c);

  const std::string& name() const { return name_; }
  int dimension() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& basis_names() const { return names_; }
  /// -1 when absent.
  int index_of(const std::string& basis_name) const;
  const std::vector<Rational>& bracket(int i, int j) const {
    return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const Constants& constants() const { return c_; }
  bool is_abelian() const;

 private:
  LieAlgebra(std::string name, std::vector<std::string> names, Constants c);
  void validate() const;

  std::string name_;
  std::vector<std::string> names_;
  Constants c_;
};

/// Registered algebras.
LieAlgebraPtr abelian_algebra(int n, std::vector<std::string> names = {});
/// [e1, e2] = e3.
LieAlgebraPtr heisenberg_algebra();
/// Basis (h, e, f) with [h,e] = 2e, [h,f] = −2f, [e,f] = h.
LieAlgebraPtr sl2_algebra();
/// [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
LieAlgebraPtr so3_algebra();

/// Element of Λ^k g in the basis e_{i_1} ∧ ... ∧ e_{i_k}, i_1 < ... < i_k.
class WedgeElement {
 public:
  using Coefficients = std::map<IndexSet, Rational>;

  WedgeElement() = default;
  WedgeElement(LieAlgebraPtr algebra, int degree);
  WedgeElement(LieAlgebraPtr algebra, int degree, Coefficients coefficients);

  static WedgeElement scalar(LieAlgebraPtr algebra, const Rational& value);
  static WedgeElement basis(LieAlgebraPtr algebra, IndexSet index);
  static WedgeElement generator(LieAlgebraPtr algebra, int i);
  static WedgeElement from_vector(LieAlgebraPtr algebra, int degree, const std::vector<Rational>& coordinates);

  const LieAlgebraPtr& algebra() const { return alg_; }
  int degree() const { return degree_; }
  const Coefficients& coefficients() const { return coeffs_; }
  Rational coefficient(IndexSet index) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Coordinates over subsets_of_size(dim, degree).
  std::vector<Rational> to_vector() const;

  WedgeElement operator-() const;
  WedgeElement& operator+=(const WedgeElement& other);
  friend WedgeElement operator+(WedgeElement a, const WedgeElement& b) { return a += b; }
  friend WedgeElement operator-(WedgeElement a, const WedgeElement& b) { return a += -b; }
  friend WedgeElement operator*(const Rational& s, const WedgeElement& a);
  friend bool operator==(const WedgeElement& a, const WedgeElement& b);

  /// "2*h^e - f".
  std::string to_string() const;

 private:
  void add(IndexSet index, const Rational& value);

  LieAlgebraPtr alg_;
  int degree_ = 0;
  Coefficients coeffs_;
};

WedgeElement wedge(const WedgeElement& p, const WedgeElement& q);

/// ∂(x_1 ∧ ... ∧ x_k) = Σ_{i<j} (−1)^{i+j} [x_i, x_j] ∧ x_1 ... x̂_i ... x̂_j ... x_k; zero for k ≤ 1.
WedgeElement boundary(const WedgeElement& p);

/// [x_1∧...∧x_k, y_1∧...∧y_l] = Σ (−1)^{i+j} [x_i, y_j] ∧ x_1..x̂_i..x_k ∧ y_1..ŷ_j..y_l.
WedgeElement gerstenhaber_bracket(const WedgeElement& p, const WedgeElement& q);

/// ∂(p∧q) = ∂p∧q + (−1)^k p∧∂q + (−1)^k [p,q], k = deg p.
bool check_leibniz(const WedgeElement& p, const WedgeElement& q);

struct HomologyDegree {
  std::vector<WedgeElement> cycles;
  std::vector<WedgeElement> boundaries;
  int dim_homology = 0;
  /// Cycles completing `boundaries` to a basis of Z_k; they represent a basis of H_k.
  std::vector<WedgeElement> homology_representatives;
};

struct HomologySpaces {
  /// Indexed by k = 0 ... dim g.
  std::vector<HomologyDegree> degrees;
  const HomologyDegree& operator[](int k) const { return degrees[static_cast<std::size_t>(k)]; }
};

HomologySpaces homology(const LieAlgebraPtr& algebra);

bool is_cycle(const WedgeElement& p);
/// True when p lies in the span of the given elements (all of the same degree).
bool in_span(const WedgeElement& p, const std::vector<WedgeElement>& basis);

/// {x ∈ g : [x, p] = 0} as a basis of degree-1 elements.
std::vector<WedgeElement> isotropy_subalgebra(const WedgeElement& p);

/// g ⊕ ⟨c⟩ with c central and appended as the last basis element.
LieAlgebraPtr extend_with_center(const LieAlgebraPtr& algebra, const std::string& center_name = "c");

/// Image of p ∈ Λ^k g under the inclusion into Λ^k g̃.
WedgeElement include_in_extension(const WedgeElement& p, const LieAlgebraPtr& extended);
/// p ⊗ c ↦ p ∧ c ∈ Λ^{k+1} g̃.
WedgeElement tensor_center(const WedgeElement& p, const LieAlgebraPtr& extended);

/// Alternating k-linear form on g, stored on the wedge basis.
struct AlternatingForm {
  int degree = 0;
  std::map<IndexSet, Rational> values;
};

Rational evaluate(const AlternatingForm& b, const WedgeElement& p);

/// b ∘ ∂ vanishes on Λ^{k+1} g.
bool is_ce_closed(const LieAlgebraPtr& algebra, const AlternatingForm& b);

/// Entries [[a11, a12], [a21, a22]] with polynomial coefficients.
struct SymbolicMatrix2 {
  std::array<Polynomial, 4> entries;
};

/// [[alpha, beta], [gamma, delta]] over the variables alpha, beta, gamma, delta.
SymbolicMatrix2 generic_sl2_matrix();

/// 2×2 rational matrix, row-major.
using Matrix2 = std::array<Rational, 4>;

/// Coordinates of a trace-free matrix in the basis (h, e, f). Throws PreconditionFailed otherwise.
std::array<Rational, 3> sl2_coordinates(const Matrix2& m);

/// −b̃(w̃, Ad_{g⁻¹}x) with Ad_{g⁻¹}x = g⁻¹ x g and det g = 1 (g⁻¹ taken as the adjugate).
Polynomial matrix_adjoint_value(const SymbolicMatrix2& g, const Matrix2& x, const Matrix2& w, const AlternatingForm& b);

}  // namespace plectic
