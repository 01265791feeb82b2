// Pure spinors, maximal isotropic subspaces, stabilizers and secant planes.
#pragma once

#include "spinweil/clifford.hpp"

#include <optional>
#include <vector>

namespace spinweil {

// Columns m_{v_j}(w) restricted to the rows that occur.
template <class K>
Matrix<K> spinor_annihilator_system(const GradedElement<K>& w) {
  int n = w.basis()->rank() / 2;
  std::vector<GradedElement<K>> imgs;
  std::map<MultiIndex, int> row_of;
  for (int b = 0; b < 4 * n; ++b) {
    imgs.push_back(m_generator(n, b, w));
    for (const auto& t : imgs.back().terms()) row_of.try_emplace(t.first, 0);
  }
  int r = 0;
  for (auto& kv : row_of) kv.second = r++;
  Matrix<K> m(r, 4 * n);
  for (int b = 0; b < 4 * n; ++b)
    for (const auto& [k, c] : imgs[b].terms()) m(row_of[k], b) = c;
  return m;
}

// ker(v -> m_v(w)) inside V.
template <class K>
Subspace<K> isotropic_of_spinor(const GradedElement<K>& w) {
  int n = w.basis()->rank() / 2;
  Matrix<K> m = spinor_annihilator_system(w);
  if (m.rows() == 0) return Subspace<K>::span(identity_rows<K>(4 * n), 4 * n);
  return kernel_of(m);
}

template <class K>
bool is_pure(const GradedElement<K>& w) {
  if (w.is_zero()) return false;
  int n = w.basis()->rank() / 2;
  int par = -1;
  for (const auto& t : w.terms()) {
    int p = degree_of(t.first) & 1;
    if (par >= 0 && p != par) throw std::invalid_argument("is_pure: spinor is not parity-homogeneous");
    par = p;
  }
  return isotropic_of_spinor(w).dim() == 2 * n;
}

// The spinor line annihilated by a maximal isotropic W, normalized to have a
// leading coefficient 1 in the kernel's canonical basis.
template <class K>
GradedElement<K> spinor_of_isotropic(const LatticeV& L, const Subspace<K>& W) {
  if (W.dim() != 2 * L.n || !is_isotropic(L, W)) throw std::invalid_argument("spinor_of_isotropic: W is not maximal isotropic");
  Matrix<K> sys(0, 1 << (2 * L.n));
  for (const auto& v : W.basis()) sys.append_rows(m_matrix(CliffordElement<K>::from_vector(L.n, v)));
  auto ker = kernel_basis(sys);
  if (ker.size() != 1) throw std::logic_error("spinor_of_isotropic: annihilator is not a line");
  // canonical kernel vector has a 1 at its free column; rescale so the lowest nonzero entry is 1
  Vec<K> v = ker.front();
  K lead(0);
  for (const auto& x : v)
    if (!is_zero(x)) {
      lead = x;
      break;
    }
  K inv = inverse_scalar(lead);
  GradedElement<K> s(basis_S(L.n));
  for (std::size_t i = 0; i < v.size(); ++i) s.add_term(static_cast<MultiIndex>(i), v[i] * inv);
  return s;
}

// All bivectors v_a ^ v_b (a < b) of V in a fixed order.
std::vector<std::pair<int, int>> bivector_index(int n);

// Basis of {xi in wedge^2 V : xi . w = 0}, as elements of wedge^2 V.
template <class K>
std::vector<GradedElement<K>> stabilizer_lie(const std::vector<GradedElement<K>>& ws) {
  if (ws.empty()) throw std::invalid_argument("stabilizer_lie: no spinors given");
  int n = ws.front().basis()->rank() / 2;
  LatticeV L{n};
  auto idx = bivector_index(n);
  std::map<std::pair<int, MultiIndex>, int> row_of;
  std::vector<std::vector<std::pair<std::pair<int, MultiIndex>, K>>> cols(idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    for (std::size_t k = 0; k < ws.size(); ++k) {
      auto img = lie_action(n, L.unit<K>(idx[c].first), L.unit<K>(idx[c].second), ws[k]);
      for (const auto& [m, v] : img.terms()) {
        std::pair<int, MultiIndex> key{static_cast<int>(k), m};
        row_of.try_emplace(key, 0);
        cols[c].emplace_back(key, v);
      }
    }
  }
  int r = 0;
  for (auto& kv : row_of) kv.second = r++;
  Matrix<K> sys(r, static_cast<int>(idx.size()));
  for (std::size_t c = 0; c < idx.size(); ++c)
    for (const auto& [key, v] : cols[c]) sys(row_of[key], static_cast<int>(c)) = v;
  std::vector<Vec<K>> ker;
  if (r == 0) {
    ker = identity_rows<K>(static_cast<int>(idx.size()));
  } else {
    ker = kernel_basis(sys);
  }
  std::vector<GradedElement<K>> out;
  for (const auto& v : ker) {
    GradedElement<K> xi(basis_V(n));
    for (std::size_t c = 0; c < idx.size(); ++c) xi.add_term((1u << idx[c].first) | (1u << idx[c].second), v[c]);
    out.push_back(std::move(xi));
  }
  return out;
}

template <class K>
std::vector<GradedElement<K>> stabilizer_lie(const GradedElement<K>& w) {
  return stabilizer_lie(std::vector<GradedElement<K>>{w});
}

// Common zero set in S+ of the given bivectors' actions.
template <class K>
std::vector<GradedElement<K>> joint_kernel_even(int n, const std::vector<GradedElement<K>>& bivectors) {
  BasisPtr S = basis_S(n);
  std::vector<MultiIndex> even;
  for (MultiIndex m = 0; m < (1u << (2 * n)); ++m)
    if (degree_of(m) % 2 == 0) even.push_back(m);
  std::map<MultiIndex, int> pos;
  for (std::size_t i = 0; i < even.size(); ++i) pos[even[i]] = static_cast<int>(i);
  int dim = static_cast<int>(even.size());
  Matrix<K> sys(0, dim);
  for (const auto& xi : bivectors) {
    Matrix<K> block(dim, dim);
    for (int j = 0; j < dim; ++j) {
      auto img = bivector_spinor_action(n, xi, GradedElement<K>::monomial(S, even[j]));
      for (const auto& [m, c] : img.terms()) block(pos.at(m), j) = c;
    }
    sys.append_rows(block);
  }
  std::vector<GradedElement<K>> out;
  auto ker = sys.rows() == 0 ? identity_rows<K>(dim) : kernel_basis(sys);
  for (const auto& v : ker) {
    GradedElement<K> s(S);
    for (int j = 0; j < dim; ++j) s.add_term(even[j], v[j]);
    out.push_back(std::move(s));
  }
  return out;
}

struct SecantData {
  int n = 0;
  // rational generators of the plane P in S+
  GradedElement<Rat> p1, p2;
  // raw discriminant parameter; the lines live in Q(sqrt(-d)). Zero marks the split case.
  long d = 0;
  // true when the two pure points are rational (no CM structure)
  bool split = false;
  GradedElement<QuadExt> ell1, ell2;
  Subspace<QuadExt> W1, W2;
};

// Validates the SecantData invariants; returns an empty string when all hold.
std::string secant_invariant_violation(const SecantData& s);

// The plane through exp(+-sqrt(-d) Theta) for the standard polarization.
SecantData standard_secant(int n, long d);

// Secant plane through a class w of S+ with J(w) != 0 (n = 3).
SecantData secant_plane(const GradedElement<Rat>& w);

// Square-free representative of the field parameter.
long secant_square_free_d(const SecantData& s);

// Rational plane underlying wedge^{2n} W1 + wedge^{2n} W2 (two generators on basis_V).
std::vector<GradedElement<Rat>> hodge_weil_plane(const SecantData& s, const Matrix<Rat>& I);

// wedge of the rows of W as an element of wedge^{dim} V.
template <class K>
GradedElement<K> subspace_wedge(int n, const Subspace<K>& W) {
  GradedElement<K> r = GradedElement<K>::one(basis_V(n));
  for (const auto& v : W.basis()) r = wedge(r, vector_to_wedge(n, v));
  return r;
}

// True when a and b are nonzero and proportional.
template <class K>
bool same_line(const GradedElement<K>& a, const GradedElement<K>& b) {
  if (a.is_zero() || b.is_zero()) return false;
  const auto& [m0, a0] = *a.terms().begin();
  K b0 = b.coeff(m0);
  if (is_zero(b0)) return false;
  K ratio = b0 * inverse_scalar(a0);
  return a * ratio == b;
}

}  // namespace spinweil
