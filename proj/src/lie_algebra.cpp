#include "plectic/lie_algebra.hpp"

#include <set>
#include <sstream>

#include "plectic/errors.hpp"
#include "plectic/linear_solve.hpp"

namespace plectic {

// -- LieAlgebra -------------------------------------------------------------

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> names, Constants c)
    : name_(std::move(name)), names_(std::move(names)), c_(std::move(c)) {}

LieAlgebraPtr LieAlgebra::from_constants(std::string name, std::vector<std::string> basis_names, Constants c) {
  const std::size_t n = basis_names.size();
  if (n > 31) throw PreconditionFailed("Lie algebra dimension too large");
  std::set<std::string> seen(basis_names.begin(), basis_names.end());
  if (seen.size() != n) throw PreconditionFailed("duplicate basis name");
  if (c.size() != n) throw PreconditionFailed("structure constant table has wrong size");
  for (const auto& row : c) {
    if (row.size() != n) throw PreconditionFailed("structure constant table has wrong size");
    for (const auto& v : row) {
      if (v.size() != n) throw PreconditionFailed("structure constant table has wrong size");
    }
  }
  std::shared_ptr<LieAlgebra> g(new LieAlgebra(std::move(name), std::move(basis_names), std::move(c)));
  g->validate();
  return g;
}

LieAlgebraPtr LieAlgebra::from_brackets(std::string name, std::vector<std::string> basis_names,
                                        const std::vector<Bracket>& brackets) {
  const std::size_t n = basis_names.size();
  Constants c(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j < 0 || static_cast<std::size_t>(b.i) >= n || static_cast<std::size_t>(b.j) >= n ||
        b.value.size() != n) {
      throw PreconditionFailed("bracket entry out of range");
    }
    auto i = static_cast<std::size_t>(b.i), j = static_cast<std::size_t>(b.j);
    c[i][j] = b.value;
    for (std::size_t k = 0; k < n; ++k) c[j][i][k] = -b.value[k];
  }
  return from_constants(std::move(name), std::move(basis_names), std::move(c));
}

void LieAlgebra::validate() const {
  const std::size_t n = names_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (c_[i][j][k] != -c_[j][i][k]) {
          throw PreconditionFailed("structure constants are not antisymmetric at [" + names_[i] + ", " + names_[j] + "]");
        }
      }
    }
  }
  // Σ_m c[j][k][m] c[i][m][l] + cyclic = 0.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Rational s = 0;
          for (std::size_t m = 0; m < n; ++m) {
            s += c_[j][k][m] * c_[i][m][l] + c_[k][i][m] * c_[j][m][l] + c_[i][j][m] * c_[k][m][l];
          }
          if (s != 0) {
            throw PreconditionFailed("Jacobi identity fails for (" + names_[i] + ", " + names_[j] + ", " + names_[k] + ")");
          }
        }
      }
    }
  }
}

int LieAlgebra::index_of(const std::string& basis_name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == basis_name) return static_cast<int>(i);
  }
  return -1;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& row : c_) {
    for (const auto& v : row) {
      for (const auto& x : v) {
        if (x != 0) return false;
      }
    }
  }
  return true;
}

LieAlgebraPtr abelian_algebra(int n, std::vector<std::string> names) {
  if (names.empty()) {
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  }
  if (static_cast<int>(names.size()) != n) throw PreconditionFailed("abelian algebra: name count differs from dimension");
  return LieAlgebra::from_brackets("abelian" + std::to_string(n), std::move(names), {});
}

namespace {

std::vector<Rational> unit(int n, int k, long s = 1) {
  std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
  v[static_cast<std::size_t>(k)] = s;
  return v;
}

}  // namespace

LieAlgebraPtr heisenberg_algebra() {
  return LieAlgebra::from_brackets("heisenberg", {"e1", "e2", "e3"}, {{0, 1, unit(3, 2)}});
}

LieAlgebraPtr sl2_algebra() {
  return LieAlgebra::from_brackets("sl2", {"h", "e", "f"},
                                   {{0, 1, unit(3, 1, 2)}, {0, 2, unit(3, 2, -2)}, {1, 2, unit(3, 0)}});
}

LieAlgebraPtr so3_algebra() {
  return LieAlgebra::from_brackets("so3", {"e1", "e2", "e3"},
                                   {{0, 1, unit(3, 2)}, {1, 2, unit(3, 0)}, {2, 0, unit(3, 1)}});
}

// -- WedgeElement -----------------------------------------------------------

WedgeElement::WedgeElement(LieAlgebraPtr algebra, int degree) : alg_(std::move(algebra)), degree_(degree) {
  if (degree_ < 0 || degree_ > alg_->dimension()) throw DegreeMismatch("wedge degree outside 0..dim g");
}

WedgeElement::WedgeElement(LieAlgebraPtr algebra, int degree, Coefficients coefficients)
    : WedgeElement(std::move(algebra), degree) {
  for (const auto& [idx, v] : coefficients) {
    if (idx.size() != degree_) throw DegreeMismatch("wedge coefficient index has wrong length");
    add(idx, v);
  }
}

WedgeElement WedgeElement::scalar(LieAlgebraPtr algebra, const Rational& value) {
  WedgeElement p(std::move(algebra), 0);
  p.add(IndexSet{}, value);
  return p;
}

WedgeElement WedgeElement::basis(LieAlgebraPtr algebra, IndexSet index) {
  WedgeElement p(std::move(algebra), index.size());
  p.add(index, Rational(1));
  return p;
}

WedgeElement WedgeElement::generator(LieAlgebraPtr algebra, int i) { return basis(std::move(algebra), IndexSet::single(i)); }

WedgeElement WedgeElement::from_vector(LieAlgebraPtr algebra, int degree, const std::vector<Rational>& coordinates) {
  auto subsets = subsets_of_size(algebra->dimension(), degree);
  if (subsets.size() != coordinates.size()) throw DegreeMismatch("coordinate vector length differs from dim of exterior power");
  WedgeElement p(std::move(algebra), degree);
  for (std::size_t i = 0; i < subsets.size(); ++i) p.add(subsets[i], coordinates[i]);
  return p;
}

void WedgeElement::add(IndexSet index, const Rational& value) {
  if (sgn(value) == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(index, value);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += value;
    if (sgn(it->second) == 0) coeffs_.erase(it);
  }
}

Rational WedgeElement::coefficient(IndexSet index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<Rational> WedgeElement::to_vector() const {
  auto subsets = subsets_of_size(alg_->dimension(), degree_);
  std::vector<Rational> v;
  v.reserve(subsets.size());
  for (auto s : subsets) v.push_back(coefficient(s));
  return v;
}

WedgeElement WedgeElement::operator-() const {
  WedgeElement r = *this;
  for (auto& [idx, v] : r.coeffs_) v = -v;
  return r;
}

WedgeElement& WedgeElement::operator+=(const WedgeElement& other) {
  if (alg_ != other.alg_ && alg_->basis_names() != other.alg_->basis_names()) {
    throw PreconditionFailed("wedge elements from different algebras");
  }
  if (other.is_zero()) return *this;
  if (degree_ != other.degree_) throw DegreeMismatch("adding wedge elements of different degree");
  for (const auto& [idx, v] : other.coeffs_) add(idx, v);
  return *this;
}

WedgeElement operator*(const Rational& s, const WedgeElement& a) {
  WedgeElement r(a.alg_, a.degree_);
  for (const auto& [idx, v] : a.coeffs_) r.add(idx, s * v);
  return r;
}

bool operator==(const WedgeElement& a, const WedgeElement& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

std::string WedgeElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, v] : coeffs_) {
    Rational mag = abs(v);
    if (first) {
      if (sgn(v) < 0) os << "-";
    } else {
      os << (sgn(v) < 0 ? " - " : " + ");
    }
    first = false;
    std::string basis;
    for (int i : idx.indices()) {
      if (!basis.empty()) basis += "^";
      basis += alg_->basis_names()[static_cast<std::size_t>(i)];
    }
    if (basis.empty()) os << mag.get_str();
    else if (mag == 1) os << basis;
    else os << mag.get_str() << "*" << basis;
  }
  return os.str();
}

WedgeElement wedge(const WedgeElement& p, const WedgeElement& q) {
  const int deg = p.degree() + q.degree();
  if (deg > p.algebra()->dimension()) return WedgeElement(p.algebra(), 0);
  WedgeElement::Coefficients acc;
  WedgeElement out(p.algebra(), deg);
  for (const auto& [a, va] : p.coefficients()) {
    for (const auto& [b, vb] : q.coefficients()) {
      int s = wedge_sign(a, b);
      if (s == 0) continue;
      out += WedgeElement(p.algebra(), deg, {{IndexSet{a.bits | b.bits}, Rational(s) * va * vb}});
    }
  }
  return out;
}

namespace {

/// [e_m-expansion of v] ∧ e_rest, accumulated with the given sign.
void add_bracket_term(WedgeElement& out, const std::vector<Rational>& v, IndexSet rest, int sign,
                      const Rational& coeff) {
  for (std::size_t m = 0; m < v.size(); ++m) {
    if (sgn(v[m]) == 0) continue;
    int s = wedge_sign(IndexSet::single(static_cast<int>(m)), rest);
    if (s == 0) continue;
    out += WedgeElement(out.algebra(), out.degree(),
                        {{rest.with(static_cast<int>(m)), Rational(s * sign) * coeff * v[m]}});
  }
}

}  // namespace

WedgeElement boundary(const WedgeElement& p) {
  const auto& g = p.algebra();
  if (p.degree() <= 1) return WedgeElement(g, 0);
  WedgeElement out(g, p.degree() - 1);
  for (const auto& [idx, coeff] : p.coefficients()) {
    auto xs = idx.indices();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        IndexSet rest = idx.without(xs[i]).without(xs[j]);
        add_bracket_term(out, g->bracket(xs[i], xs[j]), rest, (i + j) % 2 == 0 ? 1 : -1, coeff);
      }
    }
  }
  return out;
}

WedgeElement gerstenhaber_bracket(const WedgeElement& p, const WedgeElement& q) {
  const auto& g = p.algebra();
  const int deg = p.degree() + q.degree() - 1;
  if (p.degree() == 0 || q.degree() == 0) return WedgeElement(g, std::max(deg, 0));
  if (deg > g->dimension()) return WedgeElement(g, 0);
  WedgeElement out(g, deg);
  for (const auto& [a, va] : p.coefficients()) {
    auto xs = a.indices();
    for (const auto& [b, vb] : q.coefficients()) {
      auto ys = b.indices();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < ys.size(); ++j) {
          IndexSet ra = a.without(xs[i]), rb = b.without(ys[j]);
          int s = wedge_sign(ra, rb);
          if (s == 0) continue;
          if ((i + j) % 2 == 1) s = -s;
          add_bracket_term(out, g->bracket(xs[i], ys[j]), IndexSet{ra.bits | rb.bits}, s, va * vb);
        }
      }
    }
  }
  return out;
}

bool check_leibniz(const WedgeElement& p, const WedgeElement& q) {
  const int k = p.degree();
  const int total = k + q.degree();
  if (total > p.algebra()->dimension()) return true;
  if (total <= 1) return boundary(wedge(p, q)).is_zero();
  WedgeElement rhs(p.algebra(), total - 1);
  const Rational sign = (k % 2 == 0) ? 1 : -1;
  if (k >= 2) rhs += wedge(boundary(p), q);
  if (q.degree() >= 2) rhs += sign * wedge(p, boundary(q));
  rhs += sign * gerstenhaber_bracket(p, q);
  return boundary(wedge(p, q)) == rhs;
}

bool is_cycle(const WedgeElement& p) { return boundary(p).is_zero(); }

namespace {

/// Matrix of ∂_k: Λ^k → Λ^{k−1} (rows Λ^{k−1} coordinates).
Matrix<Rational> boundary_matrix(const LieAlgebraPtr& g, int k) {
  const int n = g->dimension();
  auto cols = subsets_of_size(n, k);
  auto rows = subsets_of_size(n, std::max(k - 1, 0));
  Matrix<Rational> m(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
  if (k <= 1) return m;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    WedgeElement img = boundary(WedgeElement::basis(g, cols[c]));
    for (std::size_t r = 0; r < rows.size(); ++r) m[r][c] = img.coefficient(rows[r]);
  }
  return m;
}

}  // namespace

HomologySpaces homology(const LieAlgebraPtr& algebra) {
  const int n = algebra->dimension();
  HomologySpaces out;
  out.degrees.resize(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    auto& hk = out.degrees[static_cast<std::size_t>(k)];
    const std::size_t len = subsets_of_size(n, k).size();
    for (auto& v : nullspace(boundary_matrix(algebra, k), len, Rational(0), Rational(1))) {
      hk.cycles.push_back(WedgeElement::from_vector(algebra, k, v));
    }
    if (k < n) {
      // Image of ∂_{k+1}: row space of the transpose.
      Matrix<Rational> m = boundary_matrix(algebra, k + 1);
      Matrix<Rational> t(m.empty() ? 0 : m[0].size(), std::vector<Rational>(m.size(), Rational(0)));
      for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m[r].size(); ++c) t[c][r] = m[r][c];
      }
      for (auto& row : row_reduce(t, len).rref) hk.boundaries.push_back(WedgeElement::from_vector(algebra, k, row));
    }
    std::vector<std::vector<Rational>> vecs;
    for (const auto& b : hk.boundaries) vecs.push_back(b.to_vector());
    for (const auto& z : hk.cycles) vecs.push_back(z.to_vector());
    for (auto i : independent_subset(vecs, len)) {
      if (i >= hk.boundaries.size()) hk.homology_representatives.push_back(hk.cycles[i - hk.boundaries.size()]);
    }
    hk.dim_homology = static_cast<int>(hk.cycles.size() - hk.boundaries.size());
  }
  return out;
}

bool in_span(const WedgeElement& p, const std::vector<WedgeElement>& basis) {
  if (p.is_zero()) return true;
  if (basis.empty()) return false;
  const std::size_t len = p.to_vector().size();
  Matrix<Rational> rows;
  for (const auto& b : basis) rows.push_back(b.to_vector());
  const std::size_t r0 = row_reduce(rows, len).rank();
  rows.push_back(p.to_vector());
  return row_reduce(rows, len).rank() == r0;
}

std::vector<WedgeElement> isotropy_subalgebra(const WedgeElement& p) {
  const auto& g = p.algebra();
  const int n = g->dimension();
  if (p.is_zero()) throw PreconditionFailed("isotropy of the zero element");
  const std::size_t len = subsets_of_size(n, p.degree()).size();
  Matrix<Rational> m(len, std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) {
    auto col = gerstenhaber_bracket(WedgeElement::generator(g, i), p);
    auto v = col.is_zero() ? std::vector<Rational>(len, Rational(0)) : col.to_vector();
    for (std::size_t r = 0; r < len; ++r) m[r][static_cast<std::size_t>(i)] = v[r];
  }
  std::vector<WedgeElement> out;
  for (auto& v : nullspace(m, static_cast<std::size_t>(n), Rational(0), Rational(1))) {
    out.push_back(WedgeElement::from_vector(g, 1, v));
  }
  return out;
}

LieAlgebraPtr extend_with_center(const LieAlgebraPtr& algebra, const std::string& center_name) {
  const auto n = static_cast<std::size_t>(algebra->dimension());
  LieAlgebra::Constants c(n + 1, std::vector<std::vector<Rational>>(n + 1, std::vector<Rational>(n + 1, Rational(0))));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c[i][j][k] = algebra->constants()[i][j][k];
    }
  }
  auto names = algebra->basis_names();
  names.push_back(center_name);
  return LieAlgebra::from_constants(algebra->name() + "+R", std::move(names), std::move(c));
}

WedgeElement include_in_extension(const WedgeElement& p, const LieAlgebraPtr& extended) {
  return WedgeElement(extended, p.degree(), p.coefficients());
}

WedgeElement tensor_center(const WedgeElement& p, const LieAlgebraPtr& extended) {
  const int c = extended->dimension() - 1;
  WedgeElement::Coefficients out;
  for (const auto& [idx, v] : p.coefficients()) out.emplace(idx.with(c), v);
  return WedgeElement(extended, p.degree() + 1, std::move(out));
}

Rational evaluate(const AlternatingForm& b, const WedgeElement& p) {
  if (b.degree != p.degree()) throw DegreeMismatch("alternating form evaluated on element of another degree");
  Rational s = 0;
  for (const auto& [idx, v] : p.coefficients()) {
    auto it = b.values.find(idx);
    if (it != b.values.end()) s += it->second * v;
  }
  return s;
}

bool is_ce_closed(const LieAlgebraPtr& algebra, const AlternatingForm& b) {
  const int n = algebra->dimension();
  if (b.degree + 1 > n) return true;
  for (IndexSet idx : subsets_of_size(n, b.degree + 1)) {
    auto img = boundary(WedgeElement::basis(algebra, idx));
    if (img.is_zero()) continue;
    if (evaluate(b, img) != 0) return false;
  }
  return true;
}

SymbolicMatrix2 generic_sl2_matrix() {
  static Variables vars = make_variables({"alpha", "beta", "gamma", "delta"});
  SymbolicMatrix2 g;
  for (std::size_t i = 0; i < 4; ++i) g.entries[i] = Polynomial::variable(vars, i);
  return g;
}

std::array<Rational, 3> sl2_coordinates(const Matrix2& m) {
  if (m[0] + m[3] != 0) throw PreconditionFailed("matrix is not trace-free, hence not in sl2");
  return {m[0], m[1], m[2]};
}

Polynomial matrix_adjoint_value(const SymbolicMatrix2& g, const Matrix2& x, const Matrix2& w, const AlternatingForm& b) {
  if (b.degree != 2) throw DegreeMismatch("b must be an alternating 2-form on sl2");
  static_cast<void>(sl2_coordinates(x));
  const auto wc = sl2_coordinates(w);
  const auto& e = g.entries;
  const Variables& vars = e[0].variables();
  auto cst = [&](const Rational& q) { return Polynomial(vars, q); };
  // g⁻¹ = adj(g) under det g = 1.
  std::array<Polynomial, 4> inv{e[3], -e[1], -e[2], e[0]};
  std::array<Polynomial, 4> xg;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      xg[static_cast<std::size_t>(2 * r + c)] =
          cst(x[static_cast<std::size_t>(2 * r)]) * e[static_cast<std::size_t>(c)] +
          cst(x[static_cast<std::size_t>(2 * r + 1)]) * e[static_cast<std::size_t>(2 + c)];
    }
  }
  std::array<Polynomial, 4> ad;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      ad[static_cast<std::size_t>(2 * r + c)] = inv[static_cast<std::size_t>(2 * r)] * xg[static_cast<std::size_t>(c)] +
                                                inv[static_cast<std::size_t>(2 * r + 1)] * xg[static_cast<std::size_t>(2 + c)];
    }
  }
  std::array<Polynomial, 3> yc{ad[0], ad[1], ad[2]};
  Polynomial value(vars);
  for (const auto& [idx, coeff] : b.values) {
    auto ij = idx.indices();
    auto i = static_cast<std::size_t>(ij[0]), j = static_cast<std::size_t>(ij[1]);
    value += coeff * (cst(wc[i]) * yc[j] - cst(wc[j]) * yc[i]);
  }
  return -value;
}

}  // namespace plectic
