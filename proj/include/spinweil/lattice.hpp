// The lattice V = H^1(X) + H^1(Xhat) with its hyperbolic pairing, and exact subspaces.
#pragma once

#include "spinweil/exterior.hpp"
#include "spinweil/linalg.hpp"

#include <vector>

namespace spinweil {

// Coordinates: e_1..e_{2n} at 0..2n-1, f_1..f_{2n} at 2n..4n-1.
struct LatticeV {
  int n;
  int rank() const { return 4 * n; }
  int e(int i) const { return i - 1; }           // 1-based e_i
  int f(int i) const { return 2 * n + i - 1; }   // 1-based f_i
  Matrix<Rat> gram() const;
  template <class K>
  Vec<K> unit(int coord) const {
    Vec<K> v(rank(), K(0));
    v.at(coord) = K(1);
    return v;
  }
};

template <class K>
K pair_V(const LatticeV& L, const Vec<K>& v, const Vec<K>& w) {
  if (static_cast<int>(v.size()) != L.rank() || static_cast<int>(w.size()) != L.rank())
    throw std::invalid_argument("pair_V: dimension mismatch");
  int h = 2 * L.n;
  K acc(0);
  for (int i = 0; i < h; ++i) {
    if (!is_zero(v[i]) && !is_zero(w[h + i])) acc += v[i] * w[h + i];
    if (!is_zero(v[h + i]) && !is_zero(w[i])) acc += v[h + i] * w[i];
  }
  return acc;
}

template <class K>
std::vector<Vec<K>> identity_rows(int n) {
  std::vector<Vec<K>> out;
  for (int i = 0; i < n; ++i) {
    Vec<K> v(n, K(0));
    v[i] = K(1);
    out.push_back(std::move(v));
  }
  return out;
}

template <class K>
Matrix<K> scalar_matrix(const Matrix<Rat>& m) {
  Matrix<K> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = K(m(i, j));
  return r;
}

// Row space in reduced echelon form.
template <class K>
class Subspace {
 public:
  explicit Subspace(int ambient = 0) : ambient_(ambient), rows_(0, ambient) {}

  static Subspace span(const std::vector<Vec<K>>& gens, int ambient) {
    Subspace s(ambient);
    if (gens.empty()) return s;
    Matrix<K> m = Matrix<K>::from_rows(gens, ambient);
    auto piv = rref_in_place(m);
    Matrix<K> r(static_cast<int>(piv.size()), ambient);
    for (int i = 0; i < r.rows(); ++i)
      for (int j = 0; j < ambient; ++j) r(i, j) = m(i, j);
    s.rows_ = std::move(r);
    s.pivots_ = std::move(piv);
    return s;
  }

  int ambient() const { return ambient_; }
  int dim() const { return rows_.rows(); }
  const Matrix<K>& echelon() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  // Coordinates of v (assumed to lie in the subspace) in the echelon basis.
  Vec<K> coordinates(const Vec<K>& v) const {
    Vec<K> c(dim());
    for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }
  std::vector<Vec<K>> basis() const {
    std::vector<Vec<K>> out;
    for (int i = 0; i < dim(); ++i) out.push_back(rows_.row(i));
    return out;
  }

  bool contains(const Vec<K>& v) const {
    Vec<K> r = v;
    for (int i = 0; i < dim(); ++i) {
      K c = r[pivots_[i]];
      if (is_zero(c)) continue;
      for (int j = 0; j < ambient_; ++j)
        if (!is_zero(rows_(i, j))) r[j] -= c * rows_(i, j);
    }
    return is_zero_vec(r);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  int ambient_;
  Matrix<K> rows_;
  std::vector<int> pivots_;
};

template <class K>
Subspace<K> kernel_of(const Matrix<K>& map) {
  return Subspace<K>::span(kernel_basis(map), map.cols());
}

template <class K>
Subspace<K> subspace_sum(const Subspace<K>& a, const Subspace<K>& b) {
  auto g = a.basis();
  for (auto& v : b.basis()) g.push_back(v);
  return Subspace<K>::span(g, a.ambient());
}

template <class K>
Subspace<K> intersect(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
  int da = a.dim(), db = b.dim(), n = a.ambient();
  if (da == 0 || db == 0) return Subspace<K>(n);
  // x A = y B  <=>  [A; -B]^T (x, y) = 0
  Matrix<K> m(n, da + db);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < da; ++i) m(j, i) = a.echelon()(i, j);
    for (int i = 0; i < db; ++i) m(j, da + i) = -b.echelon()(i, j);
  }
  std::vector<Vec<K>> gens;
  for (const auto& k : kernel_basis(m)) {
    Vec<K> v(n, K(0));
    for (int i = 0; i < da; ++i)
      if (!is_zero(k[i]))
        for (int j = 0; j < n; ++j) v[j] += k[i] * a.echelon()(i, j);
    gens.push_back(std::move(v));
  }
  return Subspace<K>::span(gens, n);
}

template <class K>
Subspace<K> conj_subspace(const Subspace<K>& a) {
  std::vector<Vec<K>> gens;
  for (auto v : a.basis()) {
    for (auto& x : v) x = conj_scalar(x);
    gens.push_back(std::move(v));
  }
  return Subspace<K>::span(gens, a.ambient());
}

template <class K>
bool is_isotropic(const LatticeV& L, const Subspace<K>& W) {
  auto b = W.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j)
      if (!is_zero(pair_V(L, b[i], b[j]))) return false;
  return true;
}

// The pairing-annihilator of W.
template <class K>
Subspace<K> orthogonal_complement(const LatticeV& L, const Subspace<K>& W) {
  Matrix<K> m(W.dim(), L.rank());
  Matrix<K> g = scalar_matrix<K>(L.gram());
  for (int i = 0; i < W.dim(); ++i) {
    Vec<K> row = g * W.echelon().row(i);
    for (int j = 0; j < L.rank(); ++j) m(i, j) = row[j];
  }
  if (W.dim() == 0) return Subspace<K>::span(identity_rows<K>(L.rank()), L.rank());
  return kernel_of(m);
}

// Vectors of V as degree-1 elements of wedge*V and back.
template <class K>
GradedElement<K> vector_to_wedge(int n, const Vec<K>& v) {
  GradedElement<K> r(basis_V(n));
  for (int b = 0; b < 4 * n; ++b) r.add_term(1u << b, v[b]);
  return r;
}

// Induced action of an endomorphism R of V on wedge*V (multiplicative extension).
template <class K>
class WedgePower {
 public:
  WedgePower(int n, Matrix<K> R) : n_(n), R_(std::move(R)) {
    for (int j = 0; j < 4 * n; ++j) cols_.push_back(vector_to_wedge(n, R_.column(j)));
  }
  const GradedElement<K>& on_basis(MultiIndex J) {
    auto it = cache_.find(J);
    if (it != cache_.end()) return it->second;
    GradedElement<K> img = GradedElement<K>::one(basis_V(n_));
    if (J != 0) {
      int top = 31 - std::countl_zero(J);
      img = wedge(on_basis(J & ~(1u << top)), cols_[top]);
    }
    return cache_.emplace(J, std::move(img)).first->second;
  }
  GradedElement<K> apply(const GradedElement<K>& x) {
    GradedElement<K> r(x.basis());
    for (const auto& [m, c] : x.terms()) r += on_basis(m) * c;
    return r;
  }

 private:
  int n_;
  Matrix<K> R_;
  std::vector<GradedElement<K>> cols_;
  std::map<MultiIndex, GradedElement<K>> cache_;
};

template <class K>
GradedElement<K> wedge_power_apply(int n, const Matrix<K>& R, const GradedElement<K>& x) {
  WedgePower<K> wp(n, R);
  return wp.apply(x);
}

// Derivation extension of an endomorphism A of V to wedge*V.
template <class K>
GradedElement<K> derivation_apply(const Matrix<K>& A, const GradedElement<K>& x) {
  GradedElement<K> r(x.basis());
  int dim = A.rows();
  for (const auto& [J, c] : x.terms()) {
    for (MultiIndex rest_bits = J; rest_bits; rest_bits &= rest_bits - 1) {
      int j = std::countr_zero(rest_bits);
      MultiIndex rest = J & ~(1u << j);
      int s = parity_sign(count_below(J, j));
      for (int i = 0; i < dim; ++i) {
        if (is_zero(A(i, j)) || (rest & (1u << i))) continue;
        int t = s * parity_sign(count_below(rest, i));
        K v = c * A(i, j);
        r.add_term(rest | (1u << i), t < 0 ? K(-v) : v);
      }
    }
  }
  return r;
}

// Principal polarization Theta = sum_i c_i e_i ^ e_{i+n}, signs chosen so that
// Theta^n / n! = e_1 ^ ... ^ e_{2n}.
std::vector<int> theta_signs(int n);
GradedElement<Rat> standard_theta(int n);
// theta: H^1(Xhat) -> H^1(X), y -> contraction of Theta by y; 2n x 2n matrix.
Matrix<Rat> theta_matrix(int n);
// Theta(y1, y2) on H^1(Xhat) as a 2n x 2n alternating matrix.
Matrix<Rat> theta_form(int n);

Subspace<Rat> e_block(int n);
Subspace<Rat> f_block(int n);

}  // namespace spinweil
