// Bigraded Dolbeault model of H*(X, C) for a split principally polarized abelian
// variety, polyvector classes HT^2 and their contraction action.
#pragma once

#include "spinweil/lattice.hpp"
#include "spinweil/thetaring.hpp"

namespace spinweil {

// Generators w_1..w_n (type (1,0)) at bits 0..n-1, wbar_1..wbar_n at bits n..2n-1.
class DolbeaultAlgebra {
 public:
  explicit DolbeaultAlgebra(int n);
  int n() const { return n_; }
  const BasisPtr& basis() const { return basis_; }
  int w(int i) const { return i; }          // 0-based
  int wbar(int i) const { return n_ + i; }  // 0-based
  // (p, q) type of a monomial
  std::pair<int, int> type_of(MultiIndex m) const;
  // Theta = sum_i w_i ^ wbar_i
  GradedElement<Rat> theta() const;
  GradedElement<Rat> hodge_of_theta(const ThetaPoly& p) const;
  // Monomials of type (p, q) in increasing order.
  std::vector<MultiIndex> monomials_of_type(int p, int q) const;

 private:
  int n_;
  BasisPtr basis_;
};

// c in wedge^2 span(wbar), xi_ij for d/dw_i (x) wbar_j, pi alternating for d/dw_i ^ d/dw_j.
struct HTClass {
  GradedElement<Rat> c;
  Matrix<Rat> xi;
  Matrix<Rat> pi;
};

HTClass ht_zero(const DolbeaultAlgebra& A);
int ht_dim(int n);
// Coordinates: c on pairs i<j of wbar, then xi row-major, then pi on pairs i<j.
HTClass ht_from_coords(const DolbeaultAlgebra& A, const Vec<Rat>& coords);
Vec<Rat> ht_to_coords(const DolbeaultAlgebra& A, const HTClass& h);

// c ^ a + sum xi_ij wbar_j ^ i_{d/dw_i} a + sum_{i<j} pi_ij i_i i_j a
GradedElement<Rat> ht_contract(const DolbeaultAlgebra& A, const HTClass& h, const GradedElement<Rat>& a);

struct KernelData {
  int rank = 0;
  int kernel_dim = 0;
  std::vector<Vec<Rat>> kernel;  // in ht coordinates
};

// Matrix of h -> h . a on HT^2 (columns) into the monomial basis (rows, all 2^{2n}).
Matrix<Rat> contraction_matrix(const DolbeaultAlgebra& A, const GradedElement<Rat>& a);
KernelData annihilator_kernel(const DolbeaultAlgebra& A, const GradedElement<Rat>& a);
KernelData annihilator_kernel(const ThetaPoly& ch);

// Rank of the contraction against ch projected to the given (p, q) targets.
int projected_contraction_rank(const ThetaPoly& ch, const std::vector<std::pair<int, int>>& targets);

struct ProductAnnihilator {
  int ht_dim = 0;          // dim HT^2(X x X)
  int kernel_dim = 0;      // annihilator of ch1 (x) ch2
  int factor_kernel_1 = 0;
  int factor_kernel_2 = 0;
  bool degenerate = false; // ch1 or ch2 vanishes
  bool decomposes = false; // annihilator = ker1 (x) 1 + 1 (x) ker2
};
ProductAnnihilator product_annihilator(const ThetaPoly& ch1, const ThetaPoly& ch2);

}  // namespace spinweil
