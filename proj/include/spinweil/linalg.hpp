// Dense exact linear algebra over Rat or QuadExt.
#pragma once

#include "spinweil/scalars.hpp"

#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace spinweil {

template <class K>
using Vec = std::vector<K>;

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, K(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<K>>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[i].size()) != cols) throw std::invalid_argument("ragged rows");
      for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(const std::vector<Vec<K>>& cols, int rows) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
      if (static_cast<int>(cols[j].size()) != rows) throw std::invalid_argument("ragged columns");
      for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec<K> row(int i) const { return Vec<K>(data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_, data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_); }
  Vec<K> column(int j) const {
    Vec<K> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void append_rows(const Matrix& o) {
    if (rows_ == 0 && cols_ == 0) cols_ = o.cols_;
    if (o.cols_ != cols_) throw std::invalid_argument("append_rows: column mismatch");
    data_.insert(data_.end(), o.data_.begin(), o.data_.end());
    rows_ += o.rows_;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<K> data_;
};

template <class K>
Matrix<K> operator*(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix<K> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const K& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class K>
Matrix<K> operator+(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

template <class K>
Matrix<K> operator-(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

template <class K>
Matrix<K> scaled(const Matrix<K>& a, const K& s) {
  Matrix<K> c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

template <class K>
Vec<K> operator*(const Matrix<K>& a, const Vec<K>& v) {
  if (a.cols() != static_cast<int>(v.size())) throw std::invalid_argument("matrix-vector: shape mismatch");
  Vec<K> r(a.rows(), K(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j)) && !is_zero(v[j])) r[i] += a(i, j) * v[j];
  return r;
}

template <class K>
bool is_zero_vec(const Vec<K>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

// Reduced row echelon form in place; returns pivot columns.
template <class K>
std::vector<int> rref_in_place(Matrix<K>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    K inv = inverse_scalar(m(r, c));
    for (int j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    std::vector<int> nz;
    for (int j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) nz.push_back(j);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (int j : nz) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
int rank_of(Matrix<K> m) {
  return static_cast<int>(rref_in_place(m).size());
}

// Basis of {x : m x = 0}, one vector per free column, in canonical form.
template <class K>
std::vector<Vec<K>> kernel_basis(Matrix<K> m) {
  auto piv = rref_in_place(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec<K>> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec<K> v(m.cols(), K(0));
    v[f] = K(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), f);
    out.push_back(std::move(v));
  }
  return out;
}

template <class K>
std::optional<Vec<K>> solve_linear(const Matrix<K>& a, const Vec<K>& b) {
  Matrix<K> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref_in_place(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec<K> x(a.cols(), K(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), a.cols());
  return x;
}

template <class K>
Matrix<K> inverse_of(const Matrix<K>& a) {
  int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse: non-square matrix");
  Matrix<K> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = K(1);
  }
  auto piv = rref_in_place(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  Matrix<K> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class K>
K determinant(Matrix<K> m) {
  int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant: non-square matrix");
  K det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) return K(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    K inv = inverse_scalar(m(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      K f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Sylvester inertia of a symmetric rational matrix by congruence reduction.
Inertia inertia_of(Matrix<Rat> a);

}  // namespace spinweil
