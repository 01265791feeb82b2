#include "spinweil/chevalley.hpp"

#include <mutex>

namespace spinweil {

namespace {

std::mutex g_cache_mutex;
std::map<std::pair<int, std::uint64_t>, GradedElement<Rat>> g_closed_cache;
std::map<std::pair<int, MultiIndex>, GradedElement<Rat>> g_orlov_cache;

GradedElement<Rat> closed_formula(int n, MultiIndex Kset, MultiIndex Lset) {
  MultiIndex top = full_mask(2 * n);
  GradedElement<Rat> out(basis_V(n));
  int l = degree_of(Lset);
  // enumerate I subset of K
  for (MultiIndex I = Kset;; I = (I - 1) & Kset) {
    if (!(I & Lset)) {
      MultiIndex Ip = Kset & ~I;
      int s = sign_eps(Ip, I) * sign_eps(I, Lset) * tau_sign(l) * parity_sign(index_sum(Ip) - degree_of(Ip));
      MultiIndex A = top & ~Ip, B = I | Lset;
      s *= parity_sign(static_cast<long>(degree_of(A)) * degree_of(B));
      out.add_term(ef_key(n, B, A), Rat(s));
    }
    if (I == 0) break;
  }
  return out;
}

}  // namespace

const GradedElement<Rat>& tilde_varphi_closed(int n, MultiIndex Kset, MultiIndex Lset) {
  std::pair<int, std::uint64_t> key{n, (static_cast<std::uint64_t>(Lset) << 32) | Kset};
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_closed_cache.find(key);
    if (it != g_closed_cache.end()) return it->second;
  }
  auto v = closed_formula(n, Kset, Lset);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return g_closed_cache.try_emplace(key, std::move(v)).first->second;
}

int phi_P_sign(int n, MultiIndex A) {
  MultiIndex comp = full_mask(2 * n) & ~A;
  long a = degree_of(A);
  return parity_sign(a * (a + 1) / 2 + n) * sign_eps(A, comp);
}

int psi_Pinv_shift_sign(int n, MultiIndex B) {
  MultiIndex comp = full_mask(2 * n) & ~B;
  long b = degree_of(B);
  return parity_sign(b * (b + 1) / 2) * sign_eps(B, comp);
}

std::pair<MultiIndex, int> orlov_q_basis(int n, MultiIndex key) {
  MultiIndex top = full_mask(2 * n);
  MultiIndex B = e_part(n, key), A = f_part(n, key);
  int s = parity_sign(static_cast<long>(degree_of(A)) * degree_of(B)) * phi_P_sign(n, A) * psi_Pinv_shift_sign(n, B);
  return {ef_key(n, top & ~A, top & ~B), s};
}

std::pair<MultiIndex, int> orlov_q_inverse_basis(int n, MultiIndex key) {
  MultiIndex top = full_mask(2 * n);
  MultiIndex A = top & ~e_part(n, key), B = top & ~f_part(n, key);
  MultiIndex src = ef_key(n, B, A);
  auto [img, s] = orlov_q_basis(n, src);
  if (img != key) throw std::logic_error("orlov_q_inverse_basis: inconsistent indexing");
  return {src, s};
}

const GradedElement<Rat>& orlov_basis(int n, MultiIndex key) {
  std::pair<int, MultiIndex> ck{n, key};
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_orlov_cache.find(ck);
    if (it != g_orlov_cache.end()) return it->second;
  }
  MultiIndex L = f_part(n, key);
  auto v = orlov_q(tilde_varphi_closed(n, e_part(n, key), L) * Rat(tau_sign(degree_of(L))));
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return g_orlov_cache.try_emplace(ck, std::move(v)).first->second;
}

GradedElement<Rat> c1_poincare(int n) {
  GradedElement<Rat> c(basis_V(n));
  for (int i = 0; i < 2 * n; ++i) c.add_term(ef_key(n, 1u << i, 1u << i), Rat(1));
  return c;
}

}  // namespace spinweil
