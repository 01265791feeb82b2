// The truncated ring Q[Theta]/(Theta^{n+1}) of a principally polarized abelian n-fold.
#pragma once

#include "spinweil/exterior.hpp"

#include <array>
#include <vector>

namespace spinweil {

// sum_k c_k Theta^k; rational coefficients are QuadExt values with d = 0.
class ThetaPoly {
 public:
  ThetaPoly() = default;
  ThetaPoly(int n, std::vector<QuadExt> coeffs);
  static ThetaPoly constant(int n, const QuadExt& c);
  static ThetaPoly theta(int n);
  // [pt] = Theta^n / n!
  static ThetaPoly point(int n);

  int n() const { return n_; }
  const std::vector<QuadExt>& coeffs() const { return c_; }
  const QuadExt& operator[](int k) const { return c_.at(k); }
  bool is_rational() const;

  ThetaPoly& operator+=(const ThetaPoly& o);
  ThetaPoly& operator-=(const ThetaPoly& o);
  ThetaPoly& operator*=(const QuadExt& s);
  friend ThetaPoly operator+(ThetaPoly a, const ThetaPoly& b) { return a += b; }
  friend ThetaPoly operator-(ThetaPoly a, const ThetaPoly& b) { return a -= b; }
  friend ThetaPoly operator*(ThetaPoly a, const QuadExt& s) { return a *= s; }
  friend ThetaPoly operator*(const QuadExt& s, ThetaPoly a) { return a *= s; }
  friend ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b);
  friend bool operator==(const ThetaPoly& a, const ThetaPoly& b);

 private:
  void check(const ThetaPoly& o) const;
  int n_ = 0;
  std::vector<QuadExt> c_;
};

ThetaPoly texp(const QuadExt& c, int n);
// n! c_n
QuadExt tintegral(const ThetaPoly& p);
// Theta^k -> (-1)^k Theta^k
ThetaPoly ttau(const ThetaPoly& p);
// Coefficient-wise real and imaginary parts.
std::pair<ThetaPoly, ThetaPoly> real_imag(const ThetaPoly& p);

// (1 - (d+1)(Theta^2/2 - 2[pt])) exp(Theta) for n = 3.
ThetaPoly ch_secant_ideal_threefold(long d);

// q^n exp(k Theta) = alpha + tau sqrt(-d) beta with k = (rho + tau sqrt(-d)) / q.
std::pair<ThetaPoly, ThetaPoly> alpha_beta(int n, long d, long rho, long tau, long q);

QuadExt euler_pairing(const ThetaPoly& v, const ThetaPoly& w);

// Hard-coded Chern characters of O_{W_k} on a Jacobian of genus 4.
ThetaPoly ch_structure_sheaf_W(int k);

struct Genus4Coeffs {
  Rat a0, a1, a2;
};
// Solves ch(I_Z(a3 Theta)) = alpha + a3 beta with ch(O_Z) = sum a_k ch(O_{W_k}) - 6 C(a2,2)[pt].
Genus4Coeffs solve_genus4_coeffs(long d, long a3);

// Substitutes the standard principal Theta of S_X (n <= 3).
GradedElement<QuadExt> embed_theta_into_spinor(const ThetaPoly& p);
// Same for rational polynomials.
GradedElement<Rat> embed_theta_rational(const ThetaPoly& p);

}  // namespace spinweil
