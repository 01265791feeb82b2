// Clifford algebra C(V) as normal-ordered words, its spin module S, and the vector representation.
#pragma once

#include "spinweil/exterior.hpp"
#include "spinweil/lattice.hpp"

#include <utility>
#include <vector>

namespace spinweil {

// Generator bit b of V: e_{b+1} for b < 2n, f_{b-2n+1} otherwise; words use the same bits.
using WordTerms = std::vector<std::pair<MultiIndex, long>>;

// Normal-ordered expansion of the product of two basis words.
WordTerms word_product(int n, MultiIndex a, MultiIndex b);
// Normal-ordered expansion of the reversed word.
WordTerms word_reverse(int n, MultiIndex a);

template <class K>
class CliffordElement {
 public:
  CliffordElement() = default;
  explicit CliffordElement(int n) : n_(n), words_(basis_V(n)) {}

  static CliffordElement scalar(int n, const K& c) {
    CliffordElement r(n);
    r.words_.add_term(0, c);
    return r;
  }
  static CliffordElement word(int n, MultiIndex w, const K& c = K(1)) {
    CliffordElement r(n);
    r.words_.add_term(w, c);
    return r;
  }
  static CliffordElement generator(int n, int bit) { return word(n, 1u << bit); }
  static CliffordElement from_vector(int n, const Vec<K>& v) {
    if (static_cast<int>(v.size()) != 4 * n) throw std::invalid_argument("from_vector: dimension mismatch");
    CliffordElement r(n);
    for (int b = 0; b < 4 * n; ++b) r.words_.add_term(1u << b, v[b]);
    return r;
  }

  int n() const { return n_; }
  const typename GradedElement<K>::Map& terms() const { return words_.terms(); }
  const GradedElement<K>& as_graded() const { return words_; }
  bool is_zero() const { return words_.is_zero(); }
  K coeff(MultiIndex w) const { return words_.coeff(w); }
  void add_term(MultiIndex w, const K& c) { words_.add_term(w, c); }

  // 0 even, 1 odd, -1 mixed or zero
  int parity() const {
    int p = -2;
    for (const auto& t : words_.terms()) {
      int q = degree_of(t.first) & 1;
      if (p == -2) p = q;
      else if (p != q) return -1;
    }
    return p == -2 ? -1 : p;
  }

  CliffordElement& operator+=(const CliffordElement& o) {
    check(o);
    words_ += o.words_;
    return *this;
  }
  CliffordElement& operator-=(const CliffordElement& o) {
    check(o);
    words_ -= o.words_;
    return *this;
  }
  CliffordElement& operator*=(const K& s) {
    words_ *= s;
    return *this;
  }
  CliffordElement operator-() const {
    CliffordElement r = *this;
    r.words_ = -r.words_;
    return r;
  }
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(CliffordElement a, const K& s) { return a *= s; }
  friend CliffordElement operator*(const K& s, CliffordElement a) { return a *= s; }
  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  void check(const CliffordElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Clifford ambient mismatch");
  }

 private:
  int n_ = 0;
  GradedElement<K> words_;
};

template <class K2, class K1>
CliffordElement<K2> scalar_cast(const CliffordElement<K1>& a) {
  CliffordElement<K2> r(a.n());
  for (const auto& [w, c] : a.terms()) r.add_term(w, K2(c));
  return r;
}

template <class K>
CliffordElement<K> cl_mul(const CliffordElement<K>& a, const CliffordElement<K>& b) {
  a.check(b);
  CliffordElement<K> r(a.n());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      K c = ca * cb;
      for (const auto& [w, k] : word_product(a.n(), wa, wb)) r.add_term(w, c * K(k));
    }
  return r;
}

template <class K>
CliffordElement<K> cl_tau(const CliffordElement<K>& a) {
  CliffordElement<K> r(a.n());
  for (const auto& [w, c] : a.terms())
    for (const auto& [v, k] : word_reverse(a.n(), w)) r.add_term(v, c * K(k));
  return r;
}

template <class K>
CliffordElement<K> cl_alpha(const CliffordElement<K>& a) {
  CliffordElement<K> r(a.n());
  for (const auto& [w, c] : a.terms()) r.add_term(w, degree_of(w) & 1 ? K(-c) : c);
  return r;
}

// x* = alpha(tau(x))
template <class K>
CliffordElement<K> cl_star(const CliffordElement<K>& a) {
  return cl_alpha(cl_tau(a));
}

// Scalar value of a degree-0 element; nullopt otherwise.
template <class K>
std::optional<K> cl_scalar_value(const CliffordElement<K>& a) {
  for (const auto& t : a.terms())
    if (t.first != 0) return std::nullopt;
  return a.coeff(0);
}

// Degree-1 part as a vector; nullopt if a has other parts.
template <class K>
std::optional<Vec<K>> cl_vector_value(const CliffordElement<K>& a) {
  Vec<K> v(4 * a.n(), K(0));
  for (const auto& [w, c] : a.terms()) {
    if (degree_of(w) != 1) return std::nullopt;
    v[std::countr_zero(w)] = c;
  }
  return v;
}

// Action of one generator on S: e-side by wedge, f-side by contraction.
template <class K>
GradedElement<K> m_generator(int n, int bit, const GradedElement<K>& s) {
  return bit < 2 * n ? wedge_generator(bit, s) : contract_generator(bit - 2 * n, s);
}

template <class K>
GradedElement<K> m_word(int n, MultiIndex w, const GradedElement<K>& s) {
  GradedElement<K> cur = s;
  for (int b = 4 * n - 1; b >= 0 && !cur.is_zero(); --b)
    if (w & (1u << b)) cur = m_generator(n, b, cur);
  return cur;
}

template <class K>
GradedElement<K> m_action(const CliffordElement<K>& a, const GradedElement<K>& s) {
  if (s.basis()->rank() != 2 * a.n()) throw std::invalid_argument("m_action: spinor rank mismatch");
  GradedElement<K> r(s.basis());
  for (const auto& [w, c] : a.terms()) r += m_word(a.n(), w, s) * c;
  return r;
}

// Matrix of m_a on S in the monomial basis ordered by MultiIndex value.
template <class K>
Matrix<K> m_matrix(const CliffordElement<K>& a) {
  int dim = 1 << (2 * a.n());
  Matrix<K> m(dim, dim);
  BasisPtr S = basis_S(a.n());
  for (int j = 0; j < dim; ++j) {
    auto img = m_action(a, GradedElement<K>::monomial(S, static_cast<MultiIndex>(j)));
    for (const auto& [k, c] : img.terms()) m(static_cast<int>(k), j) = c;
  }
  return m;
}

// g v g^{-1} for an invertible versor g.
template <class K>
Vec<K> conjugate_vector(const CliffordElement<K>& g, const CliffordElement<K>& ginv, const Vec<K>& v) {
  auto r = cl_mul(cl_mul(g, CliffordElement<K>::from_vector(g.n(), v)), ginv);
  auto vec = cl_vector_value(r);
  if (!vec) throw std::domain_error("rho: image not in V (element is not in the Clifford group)");
  return *vec;
}

template <class K>
class SpinElement {
 public:
  // Verifies evenness, g g* = 1 and g V g* in V.
  explicit SpinElement(CliffordElement<K> g) : g_(std::move(g)) {
    if (g_.parity() != 0) throw std::domain_error("Spin: element is not even");
    ginv_ = cl_star(g_);
    auto s = cl_scalar_value(cl_mul(g_, ginv_));
    if (!s || *s != K(1)) throw std::domain_error("Spin: g g* != 1");
    int r = 4 * g_.n();
    rho_ = Matrix<K>(r, r);
    LatticeV L{g_.n()};
    for (int j = 0; j < r; ++j) {
      Vec<K> col = conjugate_vector(g_, ginv_, L.unit<K>(j));
      for (int i = 0; i < r; ++i) rho_(i, j) = col[i];
    }
  }

  // Composite of two verified elements; rho is multiplicative, so no re-verification.
  friend SpinElement spin_product(const SpinElement& a, const SpinElement& b) {
    return SpinElement(cl_mul(a.g_, b.g_), cl_mul(b.ginv_, a.ginv_), a.rho_ * b.rho_);
  }

  const CliffordElement<K>& element() const { return g_; }
  const CliffordElement<K>& inverse() const { return ginv_; }
  const Matrix<K>& rho_matrix() const { return rho_; }
  int n() const { return g_.n(); }

 private:
  SpinElement(CliffordElement<K> g, CliffordElement<K> ginv, Matrix<K> rho)
      : g_(std::move(g)), ginv_(std::move(ginv)), rho_(std::move(rho)) {}

  CliffordElement<K> g_;
  CliffordElement<K> ginv_;
  Matrix<K> rho_;
};

template <class K>
Vec<K> rho(const SpinElement<K>& g, const Vec<K>& v) {
  return g.rho_matrix() * v;
}

template <class K>
SpinElement<K> spin_from_pair(const LatticeV& L, const Vec<K>& v1, const Vec<K>& v2) {
  K n1 = pair_V(L, v1, v1), n2 = pair_V(L, v2, v2);
  if (n1 != n2 || (n1 != K(2) && n1 != K(-2))) throw std::invalid_argument("spin_from_pair: need (v1,v1) = (v2,v2) = +-2");
  return SpinElement<K>(cl_mul(CliffordElement<K>::from_vector(L.n, v1), CliffordElement<K>::from_vector(L.n, v2)));
}

template <class K>
CliffordElement<K> cl_exp_nilpotent(const CliffordElement<K>& u) {
  CliffordElement<K> result = CliffordElement<K>::scalar(u.n(), K(1));
  CliffordElement<K> power = result;
  for (int k = 1;; ++k) {
    power = cl_mul(power, u);
    if (power.is_zero()) return result;
    if (k > 4 * u.n() + 1) throw std::domain_error("exp: argument is not nilpotent");
    power *= K(Rat(1, k));
    result += power;
  }
}

template <class K>
SpinElement<K> spin_exp_even_nilpotent(const CliffordElement<K>& u) {
  if (!u.is_zero() && u.parity() != 0) throw std::invalid_argument("spin_exp: argument is not even");
  return SpinElement<K>(cl_exp_nilpotent(u));
}

template <class K>
K norm_char(const CliffordElement<K>& g) {
  auto s = cl_scalar_value(cl_mul(g, cl_tau(g)));
  if (!s) throw std::domain_error("norm_char: g tau(g) is not a scalar");
  return *s;
}

// 1/2 (m_x m_y - m_y m_x)(s)
template <class K>
GradedElement<K> lie_action(int n, const Vec<K>& x, const Vec<K>& y, const GradedElement<K>& s) {
  auto X = CliffordElement<K>::from_vector(n, x), Y = CliffordElement<K>::from_vector(n, y);
  auto r = m_action(X, m_action(Y, s)) - m_action(Y, m_action(X, s));
  return r * K(Rat(1, 2));
}

// Action of a bivector (element of wedge^2 V on basis_V) on S.
template <class K>
GradedElement<K> bivector_spinor_action(int n, const GradedElement<K>& xi, const GradedElement<K>& s) {
  LatticeV L{n};
  GradedElement<K> r(s.basis());
  for (const auto& [m, c] : xi.terms()) {
    if (degree_of(m) != 2) throw std::invalid_argument("bivector expected");
    int a = std::countr_zero(m), b = 31 - std::countl_zero(m);
    r += lie_action(n, L.unit<K>(a), L.unit<K>(b), s) * c;
  }
  return r;
}

// Matrix on V of v -> [xi, v]; for x ^ y this is v -> (y,v) x - (x,v) y.
template <class K>
Matrix<K> bivector_matrix(int n, const GradedElement<K>& xi) {
  int r = 4 * n;
  Matrix<K> m(r, r);
  auto partner = [&](int b) { return b < 2 * n ? b + 2 * n : b - 2 * n; };
  for (const auto& [mask, c] : xi.terms()) {
    if (degree_of(mask) != 2) throw std::invalid_argument("bivector expected");
    int a = std::countr_zero(mask), b = 31 - std::countl_zero(mask);
    // (v_b, v) = coordinate partner(b) of v
    m(a, partner(b)) += c;
    m(b, partner(a)) -= c;
  }
  return m;
}

}  // namespace spinweil
