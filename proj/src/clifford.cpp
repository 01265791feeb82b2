#include "spinweil/clifford.hpp"

#include <unordered_map>

namespace spinweil {

namespace {

bool paired(int n, int a, int g) { return a - g == 2 * n || g - a == 2 * n; }

// w * generator g, accumulated into out with the given sign.
void times_generator(int n, MultiIndex w, int g, long sign, WordTerms& out) {
  if (w == 0) {
    out.emplace_back(1u << g, sign);
    return;
  }
  int a = 31 - std::countl_zero(w);
  if (a < g) {
    out.emplace_back(w | (1u << g), sign);
    return;
  }
  if (a == g) return;  // basis generators square to zero
  MultiIndex rest = w & ~(1u << a);
  // rest*a*g = -(rest*g)*a + (a,g) rest
  WordTerms tmp;
  times_generator(n, rest, g, -sign, tmp);
  for (auto& [t, c] : tmp) out.emplace_back(t | (1u << a), c);
  if (paired(n, a, g)) out.emplace_back(rest, sign);
}

WordTerms collect(WordTerms terms) {
  std::unordered_map<MultiIndex, long> acc;
  for (auto& [w, c] : terms) acc[w] += c;
  WordTerms out;
  for (auto& [w, c] : acc)
    if (c != 0) out.emplace_back(w, c);
  return out;
}

struct CacheKey {
  int n;
  MultiIndex a, b;
  bool operator==(const CacheKey& o) const { return n == o.n && a == o.a && b == o.b; }
};
struct CacheHash {
  std::size_t operator()(const CacheKey& k) const {
    return (static_cast<std::size_t>(k.a) * 0x9E3779B97F4A7C15ull) ^ (static_cast<std::size_t>(k.b) << 7) ^ static_cast<std::size_t>(k.n);
  }
};

}  // namespace

WordTerms word_product(int n, MultiIndex a, MultiIndex b) {
  if ((a & b) == 0) {
    // fast path: pure reordering when no letter of b pairs with a letter of a
    bool clash = false;
    for (MultiIndex r = b; r; r &= r - 1) {
      int g = std::countr_zero(r);
      int p = g < 2 * n ? g + 2 * n : g - 2 * n;
      if (a & (1u << p)) {
        clash = true;
        break;
      }
    }
    if (!clash) return {{a | b, sign_eps(a, b)}};
  }
  thread_local std::unordered_map<CacheKey, WordTerms, CacheHash> cache;
  CacheKey key{n, a, b};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  WordTerms cur{{a, 1}};
  for (MultiIndex r = b; r; r &= r - 1) {
    int g = std::countr_zero(r);
    WordTerms next;
    for (auto& [w, c] : cur) times_generator(n, w, g, c, next);
    cur = collect(std::move(next));
  }
  if (cache.size() > (1u << 20)) cache.clear();
  cache.emplace(key, cur);
  return cur;
}

WordTerms word_reverse(int n, MultiIndex a) {
  WordTerms cur{{0, 1}};
  for (int g = 31; g >= 0; --g) {
    if (!(a & (1u << g))) continue;
    WordTerms next;
    for (auto& [w, c] : cur) times_generator(n, w, g, c, next);
    cur = collect(std::move(next));
  }
  return cur;
}

}  // namespace spinweil
