#include "spinweil/exterior.hpp"

#include <mutex>

namespace spinweil {

int sign_eps(MultiIndex K, MultiIndex L) {
  if (K & L) return 0;
  int inversions = 0;
  for (MultiIndex rest = L; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    inversions += std::popcount(K >> (j + 1));
  }
  return parity_sign(inversions);
}

int index_sum(MultiIndex K) {
  int s = 0;
  for (MultiIndex rest = K; rest; rest &= rest - 1) s += std::countr_zero(rest) + 1;
  return s;
}

MultiIndex mask_from_indices(const std::vector<int>& one_based) {
  MultiIndex m = 0;
  for (int i : one_based) {
    if (i < 1 || i > kMaxRank) throw std::out_of_range("multi-index entry out of range");
    MultiIndex b = 1u << (i - 1);
    if (m & b) throw std::invalid_argument("repeated multi-index entry");
    m |= b;
  }
  return m;
}

std::vector<int> indices_from_mask(MultiIndex m) {
  std::vector<int> out;
  for (MultiIndex rest = m; rest; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
  return out;
}

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, BasisPtr>& registry() {
  static std::map<std::string, BasisPtr> r;
  return r;
}

std::vector<std::string> numbered(const std::string& stem, int count, const std::string& suffix = "") {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i) + suffix);
  return out;
}

}  // namespace

BasisPtr make_basis(const std::string& name, std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) > kMaxRank) throw std::invalid_argument("basis rank exceeds 24");
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(name);
  if (it != registry().end()) {
    if (it->second->labels != labels) throw std::invalid_argument("basis name reused with other labels: " + name);
    return it->second;
  }
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) throw std::invalid_argument("duplicate generator label " + labels[i]);
  auto b = std::make_shared<const GradedBasis>(GradedBasis{name, std::move(labels)});
  registry().emplace(name, b);
  return b;
}

BasisPtr basis_S(int n) { return make_basis("S_X[n=" + std::to_string(n) + "]", numbered("e", 2 * n)); }

BasisPtr basis_Shat(int n) { return make_basis("S_Xhat[n=" + std::to_string(n) + "]", numbered("f", 2 * n)); }

BasisPtr basis_V(int n) {
  auto labels = numbered("e", 2 * n);
  for (auto& l : numbered("f", 2 * n)) labels.push_back(l);
  return make_basis("ExtV[n=" + std::to_string(n) + "]", labels);
}

BasisPtr basis_SS(int n) {
  auto labels = numbered("e", 2 * n);
  for (auto& l : numbered("e", 2 * n, "'")) labels.push_back(l);
  return make_basis("S_X(x)S_X[n=" + std::to_string(n) + "]", labels);
}

BasisPtr basis_by_name(const std::string& name) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(name);
  if (it != registry().end()) return it->second;
  throw std::invalid_argument("unknown basis " + name);
}

bool same_basis(const BasisPtr& a, const BasisPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->name == b->name && a->labels == b->labels;
}

BasisPtr dual_side_basis(const BasisPtr& b) {
  const std::string& nm = b->name;
  auto n_of = [&](const std::string& prefix) { return std::stoi(nm.substr(prefix.size(), nm.size() - prefix.size() - 1)); };
  if (nm.rfind("S_X[n=", 0) == 0) return basis_Shat(n_of("S_X[n="));
  if (nm.rfind("S_Xhat[n=", 0) == 0) return basis_S(n_of("S_Xhat[n="));
  throw std::invalid_argument("poincare duality needs an S_X or S_Xhat basis, got " + nm);
}

}  // namespace spinweil
