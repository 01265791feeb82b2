#include "spinweil/lattice.hpp"

namespace spinweil {

Matrix<Rat> LatticeV::gram() const {
  Matrix<Rat> g(rank(), rank());
  for (int i = 0; i < 2 * n; ++i) {
    g(i, 2 * n + i) = 1;
    g(2 * n + i, i) = 1;
  }
  return g;
}

Inertia inertia_of(Matrix<Rat> a) {
  int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inertia: non-square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i)) throw std::invalid_argument("inertia: matrix not symmetric");
  auto swap_index = [&](int p, int q) {
    for (int j = 0; j < n; ++j) std::swap(a(p, j), a(q, j));
    for (int i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
  };
  Inertia res;
  for (int k = 0; k < n; ++k) {
    if (is_zero(a(k, k))) {
      int diag = -1, off = -1;
      for (int j = k + 1; j < n; ++j) {
        if (!is_zero(a(j, j))) {
          diag = j;
          break;
        }
        if (off < 0 && !is_zero(a(k, j))) off = j;
      }
      if (diag >= 0) {
        swap_index(k, diag);
      } else if (off >= 0) {
        for (int j = 0; j < n; ++j) a(k, j) += a(off, j);
        for (int i = 0; i < n; ++i) a(i, k) += a(i, off);
      } else {
        ++res.zero;
        continue;
      }
    }
    Rat piv = a(k, k);
    (sgn(piv) > 0 ? res.positive : res.negative)++;
    for (int i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      Rat f = a(i, k) / piv;
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (int j = k; j < n; ++j) a(j, i) = a(i, j);
    }
  }
  return res;
}

std::vector<int> theta_signs(int n) {
  int s = parity_sign(static_cast<long>(n) * (n - 1) / 2);
  std::vector<int> c(n, 1);
  if (n % 2 == 1) {
    for (auto& x : c) x = s;
  } else if (n > 0) {
    c[n - 1] = s;
  }
  return c;
}

GradedElement<Rat> standard_theta(int n) {
  auto c = theta_signs(n);
  GradedElement<Rat> t(basis_S(n));
  for (int i = 0; i < n; ++i) t.add_term((1u << i) | (1u << (i + n)), Rat(c[i]));
  return t;
}

Matrix<Rat> theta_matrix(int n) {
  auto c = theta_signs(n);
  Matrix<Rat> m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    // contraction of c e_i ^ e_{i+n} by f_i gives c e_{i+n}; by f_{i+n} gives -c e_i
    m(i + n, i) = c[i];
    m(i, i + n) = -c[i];
  }
  return m;
}

Matrix<Rat> theta_form(int n) { return theta_matrix(n).transpose(); }

Subspace<Rat> e_block(int n) {
  std::vector<Vec<Rat>> g;
  LatticeV L{n};
  for (int i = 1; i <= 2 * n; ++i) g.push_back(L.unit<Rat>(L.e(i)));
  return Subspace<Rat>::span(g, L.rank());
}

Subspace<Rat> f_block(int n) {
  std::vector<Vec<Rat>> g;
  LatticeV L{n};
  for (int i = 1; i <= 2 * n; ++i) g.push_back(L.unit<Rat>(L.f(i)));
  return Subspace<Rat>::span(g, L.rank());
}

}  // namespace spinweil
