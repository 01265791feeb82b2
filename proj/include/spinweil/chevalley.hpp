// Chevalley isomorphism S(x)S -> C(V) -> wedge*V, the cohomological Orlov map and its
// twisted equivariance.
#pragma once

#include "spinweil/clifford.hpp"

#include <map>
#include <optional>

namespace spinweil {

inline MultiIndex e_part(int n, MultiIndex key) { return key & full_mask(2 * n); }
inline MultiIndex f_part(int n, MultiIndex key) { return key >> (2 * n); }
inline MultiIndex ef_key(int n, MultiIndex e, MultiIndex f) { return e | (f << (2 * n)); }

// phi(s (x) t) = s [pt_Xhat] tau(t)
template <class K>
CliffordElement<K> varphi(const GradedElement<K>& s, const GradedElement<K>& t) {
  s.check_basis(t);
  int n = s.basis()->rank() / 2;
  CliffordElement<K> ftop = CliffordElement<K>::word(n, full_mask(2 * n) << (2 * n));
  CliffordElement<K> S(n), T(n);
  for (const auto& [m, c] : s.terms()) S.add_term(m, c);
  for (const auto& [m, c] : t.terms()) T.add_term(m, c);
  return cl_mul(cl_mul(S, ftop), cl_tau(T));
}

// B0((w1,t1),(w2,t2)) = t2(w1)
template <class K>
K b0_form(int n, const Vec<K>& v1, const Vec<K>& v2) {
  K acc(0);
  for (int i = 0; i < 2 * n; ++i)
    if (!is_zero(v1[i]) && !is_zero(v2[2 * n + i])) acc += v1[i] * v2[2 * n + i];
  return acc;
}

// psi'(e_i) = L_{e_i} + contraction removing f_i ; psi'(f_i) = L_{f_i}
template <class K>
GradedElement<K> psi_prime_generator(int n, int bit, const GradedElement<K>& x) {
  GradedElement<K> r = wedge_generator(bit, x);
  if (bit < 2 * n) r += contract_generator(bit + 2 * n, x);
  return r;
}

template <class K>
GradedElement<K> psi(const CliffordElement<K>& a) {
  int n = a.n();
  GradedElement<K> out(basis_V(n));
  for (const auto& [w, c] : a.terms()) {
    GradedElement<K> cur = GradedElement<K>::one(basis_V(n));
    for (int b = 4 * n - 1; b >= 0 && !cur.is_zero(); --b)
      if (w & (1u << b)) cur = psi_prime_generator(n, b, cur);
    out += cur * c;
  }
  return out;
}

// Inverse of psi by peeling off top-degree parts.
template <class K>
CliffordElement<K> psi_inverse(const GradedElement<K>& omega) {
  int n = omega.basis()->rank() / 4;
  CliffordElement<K> x(n);
  GradedElement<K> rest = omega;
  while (!rest.is_zero()) {
    int k = rest.max_degree();
    CliffordElement<K> top(n);
    for (const auto& [m, c] : rest.terms())
      if (degree_of(m) == k) top.add_term(m, c);
    x += top;
    rest -= psi(top);
    if (!rest.is_zero() && rest.max_degree() >= k) throw std::logic_error("psi_inverse: leading terms did not cancel");
  }
  return x;
}

template <class K>
GradedElement<K> tilde_varphi(const GradedElement<K>& s, const GradedElement<K>& t) {
  return psi(varphi(s, t));
}

// Closed basis formula for tilde_varphi(e_K (x) e_L).
const GradedElement<Rat>& tilde_varphi_closed(int n, MultiIndex Kset, MultiIndex Lset);

template <class K>
GradedElement<K> tilde_varphi_closed(const GradedElement<K>& ss) {
  int n = ss.basis()->rank() / 4;
  GradedElement<K> out(basis_V(n));
  for (const auto& [key, c] : ss.terms())
    for (const auto& [m, v] : tilde_varphi_closed(n, e_part(n, key), f_part(n, key)).terms()) out.add_term(m, c * K(v));
  return out;
}

// id (x) tau on the doubled basis.
template <class K>
GradedElement<K> tensor_tau_second(const GradedElement<K>& ss) {
  int n = ss.basis()->rank() / 4;
  GradedElement<K> out(ss.basis());
  for (const auto& [key, c] : ss.terms()) out.add_term(key, tau_sign(degree_of(f_part(n, key))) < 0 ? K(-c) : c);
  return out;
}

// Signed Poincare-dual components: phi_P on H*(Xhat) -> H*(X), psi_{P^-1[n]} on H*(X) -> H*(Xhat).
int phi_P_sign(int n, MultiIndex A);
int psi_Pinv_shift_sign(int n, MultiIndex B);

template <class K>
GradedElement<K> phi_P_component(int k, const GradedElement<K>& x) {
  int n = x.basis()->rank() / 2;
  GradedElement<K> pd = poincare_dual(k, x);
  return pd * K(parity_sign(static_cast<long>(k) * (k + 1) / 2 + n));
}

template <class K>
GradedElement<K> psi_Pinv_shift_component(int k, const GradedElement<K>& x) {
  GradedElement<K> pd = poincare_dual(k, x);
  return pd * K(parity_sign(static_cast<long>(k) * (k + 1) / 2));
}

// Unshifted psi_{P^-1} = (-1)^n psi_{P^-1[n]}.
template <class K>
GradedElement<K> psi_Pinv_component(int k, const GradedElement<K>& x) {
  int n = x.basis()->rank() / 2;
  return psi_Pinv_shift_component(k, x) * K(parity_sign(n));
}

// (phi_P (x) psi_{P^-1[n]}) on a basis element e_B ^ f_A of wedge*V; returns (key, sign).
std::pair<MultiIndex, int> orlov_q_basis(int n, MultiIndex key);
std::pair<MultiIndex, int> orlov_q_inverse_basis(int n, MultiIndex key);

template <class K>
GradedElement<K> orlov_q(const GradedElement<K>& omega) {
  int n = omega.basis()->rank() / 4;
  GradedElement<K> out(omega.basis());
  for (const auto& [m, c] : omega.terms()) {
    auto [k, s] = orlov_q_basis(n, m);
    out.add_term(k, s < 0 ? K(-c) : c);
  }
  return out;
}

template <class K>
GradedElement<K> orlov_q_inverse(const GradedElement<K>& omega) {
  int n = omega.basis()->rank() / 4;
  GradedElement<K> out(omega.basis());
  for (const auto& [m, c] : omega.terms()) {
    auto [k, s] = orlov_q_inverse_basis(n, m);
    out.add_term(k, s < 0 ? K(-c) : c);
  }
  return out;
}

// Orlov image of e_K (x) e_L; cached per basis pair.
const GradedElement<Rat>& orlov_basis(int n, MultiIndex key);

// phi = (phi_P (x) psi_{P^-1[n]}) o tilde_varphi o (id (x) tau), input on the doubled basis.
template <class K>
GradedElement<K> orlov_phi(const GradedElement<K>& ss) {
  int n = ss.basis()->rank() / 4;
  GradedElement<K> out(basis_V(n));
  for (const auto& [key, c] : ss.terms())
    for (const auto& [m, v] : orlov_basis(n, key).terms()) out.add_term(m, c * K(v));
  return out;
}

// Inverse of phi on the Clifford side, read off from the matrix of m_x on S.
template <class K>
GradedElement<K> varphi_inverse(const CliffordElement<K>& x) {
  int n = x.n();
  MultiIndex top = full_mask(2 * n);
  BasisPtr S = basis_S(n);
  GradedElement<K> out(basis_SS(n));
  for (MultiIndex U = 0; U <= top; ++U) {
    auto img = m_action(x, GradedElement<K>::monomial(S, U));
    MultiIndex L = top & ~U;
    int g = tau_sign(degree_of(L)) * sign_eps(L, U) * parity_sign(n);
    for (const auto& [Kset, c] : img.terms()) out.add_term(Kset | (L << (2 * n)), g < 0 ? K(-c) : c);
  }
  return out;
}

template <class K>
GradedElement<K> orlov_phi_inverse(const GradedElement<K>& omega) {
  auto x = psi_inverse(orlov_q_inverse(omega));
  return tensor_tau_second(varphi_inverse(x));
}

// (m_g (x) m_g^dagger) on the doubled basis, m^dagger_g = tau m_g tau.
template <class K>
GradedElement<K> tensor_action(const SpinElement<K>& g, const GradedElement<K>& ss) {
  int n = g.n();
  BasisPtr S = basis_S(n);
  std::map<MultiIndex, GradedElement<K>> left, right;
  auto act_left = [&](MultiIndex k) -> const GradedElement<K>& {
    auto it = left.find(k);
    if (it != left.end()) return it->second;
    return left.emplace(k, m_action(g.element(), GradedElement<K>::monomial(S, k))).first->second;
  };
  auto act_right = [&](MultiIndex k) -> const GradedElement<K>& {
    auto it = right.find(k);
    if (it != right.end()) return it->second;
    auto v = tau_involution(m_action(g.element(), tau_involution(GradedElement<K>::monomial(S, k))));
    return right.emplace(k, std::move(v)).first->second;
  };
  GradedElement<K> out(ss.basis());
  for (const auto& [key, c] : ss.terms()) {
    const auto& a = act_left(e_part(n, key));
    const auto& b = act_right(f_part(n, key));
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) out.add_term(ka | (kb << (2 * n)), c * ca * cb);
  }
  return out;
}

template <class K>
GradedElement<K> rho_prime(const SpinElement<K>& g, const GradedElement<K>& omega) {
  return orlov_phi(tensor_action(g, orlov_phi_inverse(omega)));
}

// c1 of the Poincare bundle: sum_i e_i ^ f_i.
GradedElement<Rat> c1_poincare(int n);

template <class K>
GradedElement<K> twist_class(const SpinElement<K>& g) {
  int n = g.n();
  auto c1 = scalar_cast<K>(c1_poincare(n));
  auto moved = wedge_power_apply(n, g.rho_matrix(), c1);
  return (c1 - moved) * K(Rat(1, 2));
}

template <class K>
struct TwistCheck {
  bool ok = true;
  GradedElement<K> twist;
  std::optional<MultiIndex> counterexample;  // basis key of S(x)S where the identity fails
};

// Verifies phi o (m_g (x) m_g^dagger) = exp(twist) ^ wedge(rho_g) o phi on every basis element.
template <class K>
TwistCheck<K> twist_identity_check(const SpinElement<K>& g) {
  int n = g.n();
  TwistCheck<K> res;
  res.twist = twist_class(g);
  auto E = wedge_exp(res.twist);
  WedgePower<K> wr(n, g.rho_matrix());
  BasisPtr SS = basis_SS(n);
  for (MultiIndex key = 0; key < (1u << (4 * n)); ++key) {
    auto j = GradedElement<K>::monomial(SS, key);
    auto lhs = orlov_phi(tensor_action(g, j));
    auto rhs = wedge(E, wr.apply(orlov_phi(j)));
    if (!(lhs == rhs)) {
      res.ok = false;
      res.counterexample = key;
      return res;
    }
  }
  return res;
}

// kappa(ch) = exp(-ch_1 / r) ^ ch
template <class K>
GradedElement<K> kappa(const GradedElement<K>& ch) {
  K r = ch.coeff(0);
  if (is_zero(r)) throw std::domain_error("kappa: rank is zero");
  auto c1 = ch.degree_part(2) * (-inverse_scalar(r));
  return wedge(wedge_exp(c1), ch);
}

// gamma_*(s) = sum (integral of s ^ a) b for gamma = sum a (x) b
template <class K>
GradedElement<K> correspondence_push(const GradedElement<K>& gamma, const GradedElement<K>& s) {
  int n = gamma.basis()->rank() / 4;
  BasisPtr S = basis_S(n);
  GradedElement<K> out(S);
  MultiIndex top = full_mask(2 * n);
  for (const auto& [key, c] : gamma.terms()) {
    MultiIndex a = e_part(n, key);
    MultiIndex need = top & ~a;
    K sv = s.coeff(need);
    if (is_zero(sv)) continue;
    int sg = sign_eps(need, a);
    K v = c * sv;
    out.add_term(f_part(n, key), sg < 0 ? K(-v) : v);
  }
  return out;
}

// (m_h^dagger (x) m_g) on the doubled basis.
template <class K>
GradedElement<K> correspondence_action(const SpinElement<K>& h, const SpinElement<K>& g, const GradedElement<K>& gamma) {
  int n = g.n();
  BasisPtr S = basis_S(n);
  GradedElement<K> out(gamma.basis());
  for (const auto& [key, c] : gamma.terms()) {
    auto a = tau_involution(m_action(h.element(), tau_involution(GradedElement<K>::monomial(S, e_part(n, key)))));
    auto b = m_action(g.element(), GradedElement<K>::monomial(S, f_part(n, key)));
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) out.add_term(ka | (kb << (2 * n)), c * ca * cb);
  }
  return out;
}

}  // namespace spinweil
