// Sparse exterior algebras over labeled bases.
#pragma once

#include "spinweil/scalars.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinweil {

// Subset of generators, bit b <-> generator b+1.
using MultiIndex = std::uint32_t;

constexpr int kMaxRank = 24;

inline int degree_of(MultiIndex m) { return std::popcount(m); }

inline MultiIndex full_mask(int r) { return r == 0 ? 0u : (r >= 32 ? ~0u : ((1u << r) - 1u)); }

// number of elements of J strictly below bit b
inline int count_below(MultiIndex J, int b) { return std::popcount(J & ((1u << b) - 1u)); }

inline int parity_sign(long e) { return (e & 1) ? -1 : 1; }

// e_K ^ e_L = sign_eps(K,L) e_{K u L}
int sign_eps(MultiIndex K, MultiIndex L);

// 1-based index sum of K
int index_sum(MultiIndex K);

MultiIndex mask_from_indices(const std::vector<int>& one_based);
std::vector<int> indices_from_mask(MultiIndex m);

struct GradedBasis {
  std::string name;
  std::vector<std::string> labels;
  int rank() const { return static_cast<int>(labels.size()); }
};
using BasisPtr = std::shared_ptr<const GradedBasis>;

BasisPtr make_basis(const std::string& name, std::vector<std::string> labels);
// H*(X): e1..e2n
BasisPtr basis_S(int n);
// H*(Xhat): f1..f2n
BasisPtr basis_Shat(int n);
// wedge*V: e1..e2n, f1..f2n
BasisPtr basis_V(int n);
// S (x) S as H*(X x X): e1..e2n, e'1..e'2n
BasisPtr basis_SS(int n);
// Registry lookup used by deserialization.
BasisPtr basis_by_name(const std::string& name);
bool same_basis(const BasisPtr& a, const BasisPtr& b);

template <class K>
class GradedElement {
 public:
  using Map = std::map<MultiIndex, K>;

  GradedElement() = default;
  explicit GradedElement(BasisPtr b) : basis_(std::move(b)) {}

  static GradedElement monomial(BasisPtr b, MultiIndex m, const K& c = K(1)) {
    if (b && (m & ~full_mask(b->rank()))) throw std::invalid_argument("monomial: index outside the basis");
    GradedElement r(std::move(b));
    r.add_term(m, c);
    return r;
  }
  static GradedElement one(BasisPtr b) { return monomial(std::move(b), 0); }

  const BasisPtr& basis() const { return basis_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  K coeff(MultiIndex m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(MultiIndex m, const K& c) {
    if (spinweil::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (spinweil::is_zero(it->second)) terms_.erase(it);
    }
  }

  void set_term(MultiIndex m, const K& c) {
    if (spinweil::is_zero(c)) {
      terms_.erase(m);
    } else {
      terms_[m] = c;
    }
  }

  GradedElement& operator+=(const GradedElement& o) {
    check_basis(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  GradedElement& operator-=(const GradedElement& o) {
    check_basis(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  GradedElement& operator*=(const K& s) {
    if (spinweil::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  GradedElement operator-() const {
    GradedElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(const K& s, GradedElement a) { return a *= s; }
  friend GradedElement operator*(GradedElement a, const K& s) { return a *= s; }
  friend bool operator==(const GradedElement& a, const GradedElement& b) {
    return same_basis(a.basis_, b.basis_) && a.terms_ == b.terms_;
  }

  int max_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, degree_of(t.first));
    return d;
  }
  int min_degree() const {
    int d = kMaxRank + 1;
    for (const auto& t : terms_) d = std::min(d, degree_of(t.first));
    return terms_.empty() ? -1 : d;
  }
  // degree if homogeneous, -1 for zero, -2 for mixed
  int homogeneous_degree() const {
    if (terms_.empty()) return -1;
    int d = min_degree();
    return d == max_degree() ? d : -2;
  }
  GradedElement degree_part(int k) const {
    GradedElement r(basis_);
    for (const auto& [m, c] : terms_)
      if (degree_of(m) == k) r.terms_.emplace(m, c);
    return r;
  }
  GradedElement degree_range(int lo, int hi) const {
    GradedElement r(basis_);
    for (const auto& [m, c] : terms_) {
      int k = degree_of(m);
      if (k >= lo && k <= hi) r.terms_.emplace(m, c);
    }
    return r;
  }

  void check_basis(const GradedElement& o) const {
    if (!same_basis(basis_, o.basis_)) throw std::invalid_argument("graded element basis mismatch");
  }

 private:
  BasisPtr basis_;
  Map terms_;
};

template <class K2, class K1>
GradedElement<K2> scalar_cast(const GradedElement<K1>& a) {
  GradedElement<K2> r(a.basis());
  for (const auto& [m, c] : a.terms()) r.add_term(m, K2(c));
  return r;
}

template <class K>
GradedElement<K> wedge(const GradedElement<K>& a, const GradedElement<K>& b) {
  a.check_basis(b);
  GradedElement<K> r(a.basis());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      int s = sign_eps(ka, kb);
      if (s == 0) continue;
      K c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(ka | kb, c);
    }
  }
  return r;
}

// Left multiplication by generator bit g.
template <class K>
GradedElement<K> wedge_generator(int g, const GradedElement<K>& a) {
  GradedElement<K> r(a.basis());
  MultiIndex gb = 1u << g;
  for (const auto& [m, c] : a.terms()) {
    if (m & gb) continue;
    r.add_term(m | gb, count_below(m, g) & 1 ? K(-c) : c);
  }
  return r;
}

// Interior derivative by the dual of generator bit g (acting from the left).
template <class K>
GradedElement<K> contract_generator(int g, const GradedElement<K>& a) {
  GradedElement<K> r(a.basis());
  MultiIndex gb = 1u << g;
  for (const auto& [m, c] : a.terms()) {
    if (!(m & gb)) continue;
    r.add_term(m & ~gb, count_below(m, g) & 1 ? K(-c) : c);
  }
  return r;
}

inline int tau_sign(int i) { return parity_sign(static_cast<long>(i) * (i - 1) / 2); }

template <class K>
GradedElement<K> tau_involution(const GradedElement<K>& s) {
  GradedElement<K> out(s.basis());
  for (const auto& [m, c] : s.terms()) out.add_term(m, tau_sign(degree_of(m)) < 0 ? K(-c) : c);
  return out;
}

// Coefficient of the top multi-index.
template <class K>
K integral_X(const GradedElement<K>& s) {
  return s.coeff(full_mask(s.basis()->rank()));
}

template <class K>
K mukai_pairing(const GradedElement<K>& s, const GradedElement<K>& t) {
  s.check_basis(t);
  MultiIndex top = full_mask(s.basis()->rank());
  K acc(0);
  for (const auto& [m, c] : s.terms()) {
    MultiIndex comp = top & ~m;
    auto it = t.terms().find(comp);
    if (it == t.terms().end()) continue;
    int sg = tau_sign(degree_of(m)) * sign_eps(m, comp);
    K v = c * it->second;
    acc += sg < 0 ? K(-v) : v;
  }
  return acc;
}

// Basis on the other side of Poincare duality (S_X <-> S_Xhat).
BasisPtr dual_side_basis(const BasisPtr& b);

// e_K -> eps_{K,K^c} f_{K^c}; the input must be homogeneous of degree k.
template <class K>
GradedElement<K> poincare_dual(int k, const GradedElement<K>& s) {
  int hd = s.homogeneous_degree();
  if (hd != -1 && hd != k) throw std::invalid_argument("poincare_dual: input not homogeneous of degree k");
  MultiIndex top = full_mask(s.basis()->rank());
  GradedElement<K> r(dual_side_basis(s.basis()));
  for (const auto& [m, c] : s.terms()) {
    MultiIndex comp = top & ~m;
    r.add_term(comp, sign_eps(m, comp) < 0 ? K(-c) : c);
  }
  return r;
}

// Kunneth embedding e_K (x) e_L -> e_K ^ e'_L on the doubled basis.
template <class K>
GradedElement<K> tensor_element(const GradedElement<K>& s, const GradedElement<K>& t) {
  s.check_basis(t);
  int r = s.basis()->rank();
  BasisPtr doubled;
  if (s.basis()->name.rfind("S_X[n=", 0) == 0) {
    doubled = basis_SS(r / 2);
  } else {
    std::vector<std::string> labels = s.basis()->labels;
    for (const auto& l : s.basis()->labels) labels.push_back(l + "'");
    doubled = make_basis(s.basis()->name + "(x)" + s.basis()->name, labels);
  }
  GradedElement<K> out(doubled);
  for (const auto& [ka, ca] : s.terms())
    for (const auto& [kb, cb] : t.terms()) out.add_term(ka | (kb << r), ca * cb);
  return out;
}

// exp of an even nilpotent element (no degree-0 part) under the wedge product.
template <class K>
GradedElement<K> wedge_exp(const GradedElement<K>& x) {
  if (x.coeff(0) != K(0)) throw std::invalid_argument("wedge_exp: argument has a constant term");
  GradedElement<K> result = GradedElement<K>::one(x.basis());
  GradedElement<K> power = result;
  for (int k = 1; k <= x.basis()->rank(); ++k) {
    power = wedge(power, x);
    if (power.is_zero()) break;
    power *= K(Rat(1, k));
    result += power;
  }
  return result;
}

}  // namespace spinweil
