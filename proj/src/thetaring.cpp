#include "spinweil/thetaring.hpp"

#include "spinweil/lattice.hpp"

namespace spinweil {

namespace {

Rat factorial(int k) {
  Rat f(1);
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

ThetaPoly::ThetaPoly(int n, std::vector<QuadExt> coeffs) : n_(n), c_(std::move(coeffs)) {
  if (n < 0) throw std::invalid_argument("ThetaPoly: negative n");
  if (static_cast<int>(c_.size()) > n + 1) {
    for (std::size_t k = n + 1; k < c_.size(); ++k)
      if (!is_zero(c_[k])) throw std::invalid_argument("ThetaPoly: coefficient above Theta^n");
  }
  c_.resize(n + 1, QuadExt(0));
}

ThetaPoly ThetaPoly::constant(int n, const QuadExt& c) { return ThetaPoly(n, {c}); }

ThetaPoly ThetaPoly::theta(int n) {
  std::vector<QuadExt> c(n + 1, QuadExt(0));
  if (n >= 1) c[1] = QuadExt(1);
  return ThetaPoly(n, c);
}

ThetaPoly ThetaPoly::point(int n) {
  std::vector<QuadExt> c(n + 1, QuadExt(0));
  c[n] = QuadExt(Rat(1) / factorial(n));
  return ThetaPoly(n, c);
}

bool ThetaPoly::is_rational() const {
  for (const auto& c : c_)
    if (!c.is_rational()) return false;
  return true;
}

void ThetaPoly::check(const ThetaPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("ThetaPoly: dimension mismatch");
}

ThetaPoly& ThetaPoly::operator+=(const ThetaPoly& o) {
  check(o);
  for (int k = 0; k <= n_; ++k) c_[k] += o.c_[k];
  return *this;
}

ThetaPoly& ThetaPoly::operator-=(const ThetaPoly& o) {
  check(o);
  for (int k = 0; k <= n_; ++k) c_[k] -= o.c_[k];
  return *this;
}

ThetaPoly& ThetaPoly::operator*=(const QuadExt& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b) {
  a.check(b);
  std::vector<QuadExt> c(a.n_ + 1, QuadExt(0));
  for (int i = 0; i <= a.n_; ++i)
    for (int j = 0; i + j <= a.n_; ++j) c[i + j] += a.c_[i] * b.c_[j];
  return ThetaPoly(a.n_, c);
}

bool operator==(const ThetaPoly& a, const ThetaPoly& b) {
  if (a.n_ != b.n_) return false;
  for (int k = 0; k <= a.n_; ++k)
    if (!is_zero(a.c_[k] - b.c_[k])) return false;
  return true;
}

ThetaPoly texp(const QuadExt& c, int n) {
  std::vector<QuadExt> out(n + 1, QuadExt(0));
  QuadExt p(1);
  for (int k = 0; k <= n; ++k) {
    out[k] = p * QuadExt(Rat(1) / factorial(k));
    p *= c;
  }
  return ThetaPoly(n, out);
}

QuadExt tintegral(const ThetaPoly& p) { return p[p.n()] * QuadExt(factorial(p.n())); }

ThetaPoly ttau(const ThetaPoly& p) {
  auto c = p.coeffs();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return ThetaPoly(p.n(), c);
}

std::pair<ThetaPoly, ThetaPoly> real_imag(const ThetaPoly& p) {
  std::vector<QuadExt> re, im;
  for (const auto& c : p.coeffs()) {
    re.emplace_back(c.re());
    im.emplace_back(c.im());
  }
  return {ThetaPoly(p.n(), re), ThetaPoly(p.n(), im)};
}

ThetaPoly ch_secant_ideal_threefold(long d) {
  if (d <= 0) throw std::invalid_argument("ch_secant_ideal_threefold: d must be positive");
  const int n = 3;
  ThetaPoly t2 = ThetaPoly::theta(n) * ThetaPoly::theta(n);
  ThetaPoly ideal = ThetaPoly::constant(n, 1) -
                    (t2 * QuadExt(Rat(1, 2)) - ThetaPoly::point(n) * QuadExt(2)) * QuadExt(d + 1);
  return ideal * texp(QuadExt(1), n);
}

std::pair<ThetaPoly, ThetaPoly> alpha_beta(int n, long d, long rho, long tau, long q) {
  if (q <= 0) throw std::invalid_argument("alpha_beta: q must be positive");
  if (tau == 0) throw std::invalid_argument("alpha_beta: tau must be nonzero");
  std::vector<QuadExt> a(n + 1, QuadExt(0)), b(n + 1, QuadExt(0));
  Rat t2d = Rat(tau) * tau * d;
  Rat qq(q);
  auto qpow = [&](int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= qq;
    return r;
  };
  Rat tp(1);
  for (int j = 0; 2 * j <= n; ++j) {
    Rat sgn_j = (j % 2) ? Rat(-1) : Rat(1);
    a[2 * j] = QuadExt(sgn_j * qpow(n - 2 * j) * tp / factorial(2 * j));
    if (2 * j + 1 <= n) b[2 * j + 1] = QuadExt(sgn_j * qpow(n - 1 - 2 * j) * tp / factorial(2 * j + 1));
    tp *= t2d;
  }
  ThetaPoly e = texp(QuadExt(rat(rho, q)), n);
  return {e * ThetaPoly(n, a), e * ThetaPoly(n, b)};
}

QuadExt euler_pairing(const ThetaPoly& v, const ThetaPoly& w) { return tintegral(ttau(v) * w); }

ThetaPoly ch_structure_sheaf_W(int k) {
  const int n = 4;
  ThetaPoly t = ThetaPoly::theta(n), pt = ThetaPoly::point(n);
  ThetaPoly t2 = t * t, t3 = t2 * t;
  switch (k) {
    case 0:
      return pt;
    case 1:
      return t3 * QuadExt(Rat(1, 6)) - pt * QuadExt(3);
    case 2:
      return t2 * QuadExt(Rat(1, 2)) - t3 * QuadExt(Rat(1, 3)) + pt * QuadExt(3);
    default:
      throw std::invalid_argument("ch_structure_sheaf_W: k must be 0, 1 or 2");
  }
}

Genus4Coeffs solve_genus4_coeffs(long d, long a3) {
  const int n = 4;
  auto [alpha, beta] = alpha_beta(n, d, 0, 1, 1);
  ThetaPoly target = (alpha + beta * QuadExt(a3)) * texp(QuadExt(-a3), n);
  // ch(O_Z) = 1 - target
  ThetaPoly chz = ThetaPoly::constant(n, 1) - target;
  if (!is_zero(chz[0]) || !is_zero(chz[1])) throw std::domain_error("solve_genus4_coeffs: inconsistent system");
  auto W0 = ch_structure_sheaf_W(0), W1 = ch_structure_sheaf_W(1), W2 = ch_structure_sheaf_W(2);
  auto solve = [](const QuadExt& rhs, const QuadExt& known, const QuadExt& coef) {
    if (is_zero(coef)) throw std::domain_error("solve_genus4_coeffs: singular step");
    return to_rat((rhs - known) / coef);
  };
  Genus4Coeffs r;
  // Theta^2 involves only W2, Theta^3 W1 and W2, [pt] everything.
  r.a2 = solve(chz[2], QuadExt(0), W2[2]);
  r.a1 = solve(chz[3], W2[3] * QuadExt(r.a2), W1[3]);
  Rat choose2 = r.a2 * (r.a2 - 1) / 2;
  ThetaPoly pt = ThetaPoly::point(n);
  QuadExt known = W1[4] * QuadExt(r.a1) + W2[4] * QuadExt(r.a2) - pt[4] * QuadExt(6 * choose2);
  r.a0 = solve(chz[4], known, W0[4]);
  return r;
}

GradedElement<QuadExt> embed_theta_into_spinor(const ThetaPoly& p) {
  int n = p.n();
  if (n < 1 || n > 3) throw std::invalid_argument("embed_theta_into_spinor: need 1 <= n <= 3");
  auto theta = scalar_cast<QuadExt>(standard_theta(n));
  GradedElement<QuadExt> out(basis_S(n));
  GradedElement<QuadExt> power = GradedElement<QuadExt>::one(basis_S(n));
  for (int k = 0; k <= n; ++k) {
    out += power * p[k];
    power = wedge(power, theta);
  }
  return out;
}

GradedElement<Rat> embed_theta_rational(const ThetaPoly& p) {
  auto q = embed_theta_into_spinor(p);
  GradedElement<Rat> out(q.basis());
  for (const auto& [m, c] : q.terms()) out.add_term(m, to_rat(c));
  return out;
}

}  // namespace spinweil
