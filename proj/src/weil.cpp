#include "spinweil/weil.hpp"

namespace spinweil {

CMStructure cm_from_secant(const SecantData& s) {
  if (s.split || s.d <= 0) throw std::domain_error("cm_from_secant: secant has no imaginary quadratic field");
  if (intersect(s.W1, s.W2).dim() != 0) throw std::domain_error("cm_from_secant: W1 and W2 intersect");
  int r = 4 * s.n;
  // columns: basis of W1 then W2
  Matrix<QuadExt> M(r, r);
  auto b1 = s.W1.basis(), b2 = s.W2.basis();
  for (int j = 0; j < 2 * s.n; ++j)
    for (int i = 0; i < r; ++i) {
      M(i, j) = b1[j][i];
      M(i, 2 * s.n + j) = b2[j][i];
    }
  Matrix<QuadExt> D(r, r);
  QuadExt w = QuadExt::omega(s.d);
  for (int j = 0; j < 2 * s.n; ++j) {
    D(j, j) = w;
    D(2 * s.n + j, 2 * s.n + j) = -w;
  }
  Matrix<QuadExt> F = M * D * inverse_of(M);
  CMStructure C{s, s.d, Matrix<Rat>(r, r)};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (!F(i, j).is_rational()) throw std::logic_error("cm_from_secant: f is not rational");
      C.f(i, j) = F(i, j).re();
    }
  return C;
}

Rat xi_form(const CMStructure& C, const Vec<Rat>& x, const Vec<Rat>& y) {
  return pair_V(LatticeV{C.secant.n}, C.f * x, y);
}

QuadExt hermitian_H(const CMStructure& C, const Vec<Rat>& x, const Vec<Rat>& y) {
  Rat re = Rat(C.d) * pair_V(LatticeV{C.secant.n}, x, y);
  return QuadExt(C.d, re, xi_form(C, x, y));
}

Vec<Rat> eta(const CMStructure& C, const QuadExt& lambda, const Vec<Rat>& x) {
  if (lambda.d() != 0 && lambda.d() != C.d) throw std::invalid_argument("eta: scalar from another field");
  Vec<Rat> fx = C.f * x;
  Vec<Rat> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = lambda.re() * x[i] + lambda.im() * fx[i];
  return out;
}

Matrix<Rat> xi_matrix(const CMStructure& C) {
  LatticeV L{C.secant.n};
  return C.f.transpose() * L.gram();
}

Matrix<Rat> real_part_gram(const CMStructure& C) {
  return scaled(LatticeV{C.secant.n}.gram(), Rat(C.d));
}

Matrix<QuadExt> hermitian_gram(const CMStructure& C, const std::vector<Vec<Rat>>& basis) {
  int m = static_cast<int>(basis.size());
  Matrix<QuadExt> G(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) G(i, j) = hermitian_H(C, basis[i], basis[j]);
  return G;
}

Inertia gram_signature(const Matrix<Rat>& form) {
  Inertia in = inertia_of(form);
  if (in.zero != 0) throw std::domain_error("gram_signature: degenerate form");
  return in;
}

Rat discriminant_H(const CMStructure& C, const std::vector<Vec<Rat>>& basis) {
  int n = C.secant.n;
  if (static_cast<int>(basis.size()) != 2 * n) throw std::invalid_argument("discriminant_H: need 2n vectors");
  // K-basis <=> basis and f(basis) span V over Q
  std::vector<Vec<Rat>> all = basis;
  for (const auto& b : basis) all.push_back(C.f * b);
  if (Subspace<Rat>::span(all, 4 * n).dim() != 4 * n) throw std::invalid_argument("discriminant_H: not a K-basis");
  return to_rat(determinant(hermitian_gram(C, basis)));
}

std::vector<Vec<Rat>> standard_hermitian_basis(int n) {
  LatticeV L{n};
  std::vector<Vec<Rat>> out;
  for (int i = 1; i <= 2 * n; ++i) out.push_back(L.unit<Rat>(L.f(i)));
  return out;
}

Matrix<Rat> standard_complex_structure(int n) {
  auto c = theta_signs(n);
  Matrix<Rat> I(4 * n, 4 * n);
  for (int block : {0, 2 * n}) {
    for (int i = 0; i < n; ++i) {
      int a = block + i, b = block + i + n;
      I(b, a) = c[i];
      I(a, b) = -c[i];
    }
  }
  return I;
}

bool commutes(const Matrix<Rat>& a, const Matrix<Rat>& b) { return a * b == b * a; }

Matrix<Rat> g_form(const CMStructure& C, const Matrix<Rat>& I) {
  if (!commutes(I, C.f)) throw std::domain_error("g_form: I does not commute with f");
  LatticeV L{C.secant.n};
  return (C.f * I).transpose() * L.gram();
}

namespace {

// Rows of the linear map A -> X A - A Y on vectorized A (row-major).
void append_commutator_rows(Matrix<Rat>& sys, const Matrix<Rat>& X, const Matrix<Rat>& Y) {
  int r = X.rows();
  Matrix<Rat> block(r * r, r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int row = i * r + j;
      // (X A)_{ij} = sum_k X_ik A_kj ; (A Y)_{ij} = sum_k A_ik Y_kj
      for (int k = 0; k < r; ++k) {
        if (!is_zero(X(i, k))) block(row, k * r + j) += X(i, k);
        if (!is_zero(Y(k, j))) block(row, i * r + k) -= Y(k, j);
      }
    }
  sys.append_rows(block);
}

}  // namespace

CentralizerDims centralizer_dims(const CMStructure& C, const Matrix<Rat>& I) {
  LatticeV L{C.secant.n};
  int r = L.rank();
  Matrix<Rat> G = L.gram();
  Matrix<Rat> sys(0, r * r);
  // A^T G + G A = 0
  Matrix<Rat> so(r * r, r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int row = i * r + j;
      for (int k = 0; k < r; ++k) {
        if (!is_zero(G(k, j))) so(row, k * r + i) += G(k, j);
        if (!is_zero(G(i, k))) so(row, k * r + j) += G(i, k);
      }
    }
  sys.append_rows(so);
  append_commutator_rows(sys, C.f, C.f);
  // tr(f A) = 0
  Matrix<Rat> tr(1, r * r);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) tr(0, k * r + i) += C.f(i, k);
  sys.append_rows(tr);
  CentralizerDims out;
  out.so_f = r * r - rank_of(sys);
  append_commutator_rows(sys, I, I);
  out.with_I = r * r - rank_of(sys);
  return out;
}

}  // namespace spinweil
