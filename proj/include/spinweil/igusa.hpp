// The Spin(12)-invariant quartic J on S+ for abelian threefolds.
#pragma once

#include "spinweil/exterior.hpp"
#include "spinweil/linalg.hpp"

#include <map>

namespace spinweil {

// Pfaffian with Pf([[a]]) = a for 2x2, expanded along the first row.
template <class K>
K pfaffian_standard(const Matrix<K>& A) {
  int m = A.rows();
  if (A.cols() != m) throw std::invalid_argument("pfaffian: non-square matrix");
  if (m % 2) throw std::invalid_argument("pfaffian: odd size");
  for (int i = 0; i < m; ++i) {
    if (!is_zero(A(i, i))) throw std::invalid_argument("pfaffian: matrix not alternating");
    for (int j = i + 1; j < m; ++j)
      if (A(i, j) != -A(j, i)) throw std::invalid_argument("pfaffian: matrix not alternating");
  }
  std::map<MultiIndex, K> memo;
  auto rec = [&](auto&& self, MultiIndex S) -> K {
    if (S == 0) return K(1);
    auto it = memo.find(S);
    if (it != memo.end()) return it->second;
    int s0 = std::countr_zero(S);
    MultiIndex rest = S & ~(1u << s0);
    K acc(0);
    int k = 0;
    for (MultiIndex r = rest; r; r &= r - 1, ++k) {
      int j = std::countr_zero(r);
      if (is_zero(A(s0, j))) continue;
      K term = A(s0, j) * self(self, rest & ~(1u << j));
      acc += (k % 2 == 0) ? term : K(-term);
    }
    memo.emplace(S, acc);
    return acc;
  };
  return rec(rec, full_mask(m));
}

// Normalized so that Pf((0 I_r; -I_r 0)) = 1.
template <class K>
K pfaffian(const Matrix<K>& A) {
  int r = A.rows() / 2;
  K p = pfaffian_standard(A);
  return parity_sign(static_cast<long>(r) * (r - 1) / 2) < 0 ? K(-p) : p;
}

template <class K>
struct IgusaCoords {
  K x0;
  Matrix<K> x;  // x(i,j) = coefficient of e_i ^ e_j
  Matrix<K> y;  // y(i,j) = coefficient of e*_ij
  K y0;
};

// e*_ij = (-1)^{i+j-1} e_{[6]\{i,j}} (1-based i, j)
MultiIndex igusa_dual_index(int i, int j);
int igusa_dual_sign(int i, int j);

template <class K>
IgusaCoords<K> igusa_coords(const GradedElement<K>& w) {
  if (w.basis()->rank() != 6) throw std::invalid_argument("igusa: requires n = 3 (rank-6 spinor basis)");
  for (const auto& t : w.terms())
    if (degree_of(t.first) % 2) throw std::invalid_argument("igusa: element is not in S+");
  IgusaCoords<K> c{w.coeff(0), Matrix<K>(6, 6), Matrix<K>(6, 6), w.coeff(full_mask(6))};
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      K xij = w.coeff((1u << (i - 1)) | (1u << (j - 1)));
      K yij = w.coeff(igusa_dual_index(i, j));
      if (igusa_dual_sign(i, j) < 0) yij = -yij;
      c.x(i - 1, j - 1) = xij;
      c.x(j - 1, i - 1) = -xij;
      c.y(i - 1, j - 1) = yij;
      c.y(j - 1, i - 1) = -yij;
    }
  return c;
}

// Alternating matrix with rows/columns i and j (0-based) removed.
template <class K>
Matrix<K> cross_out(const Matrix<K>& A, int i, int j) {
  std::vector<int> keep;
  for (int k = 0; k < A.rows(); ++k)
    if (k != i && k != j) keep.push_back(k);
  Matrix<K> B(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) B(a, b) = A(keep[a], keep[b]);
  return B;
}

// The 15 terms Pf(X_ij) Pf(Y_ij), indexed by (i,j) 0-based with i < j.
template <class K>
std::map<std::pair<int, int>, K> igusa_minor_terms(const IgusaCoords<K>& c) {
  std::map<std::pair<int, int>, K> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) out[{i, j}] = pfaffian(cross_out(c.x, i, j)) * pfaffian(cross_out(c.y, i, j));
  return out;
}

template <class K>
K igusa_J_from_coords(const IgusaCoords<K>& c) {
  K J = c.x0 * pfaffian(c.y) + c.y0 * pfaffian(c.x);
  for (const auto& [ij, v] : igusa_minor_terms(c)) J += v;
  K q = c.x0 * c.y0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) q -= c.x(i, j) * c.y(i, j);
  J -= q * q * K(Rat(1, 4));
  return J;
}

template <class K>
K igusa_J(const GradedElement<K>& w) {
  return igusa_J_from_coords(igusa_coords(w));
}

}  // namespace spinweil
