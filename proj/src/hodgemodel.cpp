#include "spinweil/hodgemodel.hpp"

namespace spinweil {

DolbeaultAlgebra::DolbeaultAlgebra(int n) : n_(n) {
  if (n < 1 || 2 * n > kMaxRank) throw std::invalid_argument("DolbeaultAlgebra: unsupported n");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("w" + std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back("wb" + std::to_string(i));
  basis_ = make_basis("Dolbeault[n=" + std::to_string(n) + "]", labels);
}

std::pair<int, int> DolbeaultAlgebra::type_of(MultiIndex m) const {
  return {degree_of(m & full_mask(n_)), degree_of(m >> n_)};
}

GradedElement<Rat> DolbeaultAlgebra::theta() const {
  GradedElement<Rat> t(basis_);
  for (int i = 0; i < n_; ++i) t.add_term((1u << w(i)) | (1u << wbar(i)), Rat(1));
  return t;
}

GradedElement<Rat> DolbeaultAlgebra::hodge_of_theta(const ThetaPoly& p) const {
  if (p.n() != n_) throw std::invalid_argument("hodge_of_theta: dimension mismatch");
  GradedElement<Rat> out(basis_), power = GradedElement<Rat>::one(basis_);
  auto t = theta();
  for (int k = 0; k <= n_; ++k) {
    out += power * to_rat(p[k]);
    power = wedge(power, t);
  }
  return out;
}

std::vector<MultiIndex> DolbeaultAlgebra::monomials_of_type(int p, int q) const {
  std::vector<MultiIndex> out;
  for (MultiIndex m = 0; m < (1u << (2 * n_)); ++m)
    if (type_of(m) == std::make_pair(p, q)) out.push_back(m);
  return out;
}

int ht_dim(int n) { return n * (n - 1) / 2 + n * n + n * (n - 1) / 2; }

HTClass ht_zero(const DolbeaultAlgebra& A) {
  return HTClass{GradedElement<Rat>(A.basis()), Matrix<Rat>(A.n(), A.n()), Matrix<Rat>(A.n(), A.n())};
}

HTClass ht_from_coords(const DolbeaultAlgebra& A, const Vec<Rat>& coords) {
  int n = A.n();
  if (static_cast<int>(coords.size()) != ht_dim(n)) throw std::invalid_argument("ht_from_coords: wrong length");
  HTClass h = ht_zero(A);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) h.c.add_term((1u << A.wbar(i)) | (1u << A.wbar(j)), coords[k++]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.xi(i, j) = coords[k++];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      h.pi(i, j) = coords[k];
      h.pi(j, i) = -coords[k++];
    }
  return h;
}

Vec<Rat> ht_to_coords(const DolbeaultAlgebra& A, const HTClass& h) {
  int n = A.n();
  Vec<Rat> out;
  for (const auto& [m, c] : h.c.terms()) {
    auto [p, q] = A.type_of(m);
    if (p != 0 || q != 2) throw std::invalid_argument("ht_to_coords: c is not of type (0,2)");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(h.c.coeff((1u << A.wbar(i)) | (1u << A.wbar(j))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.push_back(h.xi(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(h.pi(i, j));
  return out;
}

GradedElement<Rat> ht_contract(const DolbeaultAlgebra& A, const HTClass& h, const GradedElement<Rat>& a) {
  if (!same_basis(a.basis(), A.basis())) throw std::invalid_argument("ht_contract: element not in this algebra");
  int n = A.n();
  GradedElement<Rat> out = wedge(h.c, a);
  for (int i = 0; i < n; ++i) {
    GradedElement<Rat> di = contract_generator(A.w(i), a);
    if (di.is_zero()) continue;
    for (int j = 0; j < n; ++j)
      if (!is_zero(h.xi(i, j))) out += wedge_generator(A.wbar(j), di) * h.xi(i, j);
    for (int j = i + 1; j < n; ++j)
      if (!is_zero(h.pi(i, j))) out += contract_generator(A.w(i), contract_generator(A.w(j), a)) * h.pi(i, j);
  }
  return out;
}

Matrix<Rat> contraction_matrix(const DolbeaultAlgebra& A, const GradedElement<Rat>& a) {
  int dim = ht_dim(A.n());
  Matrix<Rat> M(1 << (2 * A.n()), dim);
  for (int k = 0; k < dim; ++k) {
    Vec<Rat> e(dim, Rat(0));
    e[k] = 1;
    auto img = ht_contract(A, ht_from_coords(A, e), a);
    for (const auto& [m, c] : img.terms()) M(static_cast<int>(m), k) = c;
  }
  return M;
}

KernelData annihilator_kernel(const DolbeaultAlgebra& A, const GradedElement<Rat>& a) {
  Matrix<Rat> M = contraction_matrix(A, a);
  KernelData out;
  out.rank = rank_of(M);
  out.kernel = kernel_basis(M);
  out.kernel_dim = static_cast<int>(out.kernel.size());
  return out;
}

KernelData annihilator_kernel(const ThetaPoly& ch) {
  if (ch.n() > 4) throw std::invalid_argument("annihilator_kernel: n <= 4 required");
  DolbeaultAlgebra A(ch.n());
  return annihilator_kernel(A, A.hodge_of_theta(ch));
}

int projected_contraction_rank(const ThetaPoly& ch, const std::vector<std::pair<int, int>>& targets) {
  DolbeaultAlgebra A(ch.n());
  Matrix<Rat> M = contraction_matrix(A, A.hodge_of_theta(ch));
  std::vector<Vec<Rat>> rows;
  for (int r = 0; r < M.rows(); ++r) {
    auto t = A.type_of(static_cast<MultiIndex>(r));
    for (const auto& want : targets)
      if (t == want) rows.push_back(M.row(r));
  }
  if (rows.empty()) return 0;
  return rank_of(Matrix<Rat>::from_rows(rows, M.cols()));
}

namespace {

// Embeds a factor class into HT^2 of the product. The first factor uses
// holomorphic indices 0..n-1 of the doubled algebra, the second n..2n-1.
Vec<Rat> embed_factor(const DolbeaultAlgebra& X, const DolbeaultAlgebra& XX, const Vec<Rat>& coords, int offset) {
  HTClass h = ht_from_coords(X, coords);
  HTClass H = ht_zero(XX);
  int n = X.n();
  for (const auto& [m, c] : h.c.terms()) {
    MultiIndex mm = 0;
    for (int j = 0; j < n; ++j)
      if (m & (1u << X.wbar(j))) mm |= 1u << XX.wbar(offset + j);
    H.c.add_term(mm, c);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      H.xi(offset + i, offset + j) = h.xi(i, j);
      H.pi(offset + i, offset + j) = h.pi(i, j);
    }
  return ht_to_coords(XX, H);
}

GradedElement<Rat> embed_class(const DolbeaultAlgebra& X, const DolbeaultAlgebra& XX, const GradedElement<Rat>& a, int offset) {
  GradedElement<Rat> out(XX.basis());
  int n = X.n();
  for (const auto& [m, c] : a.terms()) {
    MultiIndex mm = 0;
    for (int j = 0; j < n; ++j) {
      if (m & (1u << X.w(j))) mm |= 1u << XX.w(offset + j);
      if (m & (1u << X.wbar(j))) mm |= 1u << XX.wbar(offset + j);
    }
    // reorder w, wbar of the factor into the product ordering
    int sign = 1;
    std::vector<int> bits;
    for (int j = 0; j < n; ++j)
      if (m & (1u << X.w(j))) bits.push_back(XX.w(offset + j));
    for (int j = 0; j < n; ++j)
      if (m & (1u << X.wbar(j))) bits.push_back(XX.wbar(offset + j));
    for (std::size_t x = 0; x < bits.size(); ++x)
      for (std::size_t y = x + 1; y < bits.size(); ++y)
        if (bits[x] > bits[y]) sign = -sign;
    out.add_term(mm, sign < 0 ? Rat(-c) : c);
  }
  return out;
}

}  // namespace

ProductAnnihilator product_annihilator(const ThetaPoly& ch1, const ThetaPoly& ch2) {
  if (ch1.n() != ch2.n()) throw std::invalid_argument("product_annihilator: dimension mismatch");
  int n = ch1.n();
  DolbeaultAlgebra X(n), XX(2 * n);
  ProductAnnihilator out;
  out.ht_dim = ht_dim(2 * n);
  auto a1 = X.hodge_of_theta(ch1), a2 = X.hodge_of_theta(ch2);
  auto box = wedge(embed_class(X, XX, a1, 0), embed_class(X, XX, a2, n));
  out.degenerate = a1.is_zero() || a2.is_zero();
  auto K = annihilator_kernel(XX, box);
  out.kernel_dim = K.kernel_dim;
  auto k1 = annihilator_kernel(X, a1), k2 = annihilator_kernel(X, a2);
  out.factor_kernel_1 = k1.kernel_dim;
  out.factor_kernel_2 = k2.kernel_dim;
  std::vector<Vec<Rat>> gens;
  for (const auto& v : k1.kernel) gens.push_back(embed_factor(X, XX, v, 0));
  for (const auto& v : k2.kernel) gens.push_back(embed_factor(X, XX, v, n));
  auto expected = Subspace<Rat>::span(gens, out.ht_dim);
  auto actual = Subspace<Rat>::span(K.kernel, out.ht_dim);
  out.decomposes = !out.degenerate && expected == actual;
  return out;
}

}  // namespace spinweil
