#include "spinweil/spinors.hpp"

#include "spinweil/igusa.hpp"

namespace spinweil {

std::vector<std::pair<int, int>> bivector_index(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < 4 * n; ++a)
    for (int b = a + 1; b < 4 * n; ++b) out.emplace_back(a, b);
  return out;
}

namespace {

using Poly = std::vector<Rat>;  // coefficient of t^k at index k

void trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rat(static_cast<long>(k)));
  return d;
}

// J(w + t w') as a polynomial of degree <= 4.
Poly quartic_along(const GradedElement<Rat>& w, const GradedElement<Rat>& wp) {
  Matrix<Rat> V(5, 5);
  Vec<Rat> vals(5);
  for (int t = 0; t < 5; ++t) {
    Rat tp(1);
    for (int k = 0; k < 5; ++k) {
      V(t, k) = tp;
      tp *= t;
    }
    vals[t] = igusa_J(w + wp * Rat(t));
  }
  auto sol = solve_linear(V, vals);
  return *sol;
}

GradedElement<QuadExt> combine(const GradedElement<Rat>& w, const GradedElement<Rat>& wp, const QuadExt& t) {
  auto r = scalar_cast<QuadExt>(w);
  r += scalar_cast<QuadExt>(wp) * t;
  return r;
}

}  // namespace

SecantData standard_secant(int n, long d) {
  if (d <= 0) throw std::invalid_argument("standard_secant: d must be positive");
  SecantData s;
  s.n = n;
  s.d = d;
  auto theta = scalar_cast<QuadExt>(standard_theta(n));
  s.ell1 = wedge_exp(theta * QuadExt::omega(d));
  s.ell2 = GradedElement<QuadExt>(s.ell1.basis());
  s.p1 = GradedElement<Rat>(basis_S(n));
  s.p2 = GradedElement<Rat>(basis_S(n));
  for (const auto& [m, c] : s.ell1.terms()) {
    s.ell2.add_term(m, quad_conj(c));
    s.p1.add_term(m, c.re());
    s.p2.add_term(m, c.im());
  }
  s.W1 = isotropic_of_spinor(s.ell1);
  s.W2 = conj_subspace(s.W1);
  return s;
}

SecantData secant_plane(const GradedElement<Rat>& w) {
  if (w.basis()->rank() != 6) throw std::invalid_argument("secant_plane: requires n = 3");
  if (is_zero(igusa_J(w))) throw std::domain_error("secant_plane: J(w) = 0, the secant plane is not unique");
  auto stab = stabilizer_lie(w);
  auto plane = joint_kernel_even(3, stab);
  if (plane.size() != 2) throw std::logic_error("secant_plane: joint kernel is not a plane");
  GradedElement<Rat> wp = same_line(plane[0], w) || plane[0] == w ? plane[1] : plane[0];
  if (same_line(wp, w)) wp = plane[1];
  Poly c = quartic_along(w, wp);
  for (int k = 1; c.size() < 5 || is_zero(c[4]); ++k) {
    if (k > 8) throw std::logic_error("secant_plane: no generic direction found");
    wp = wp + w;
    c = quartic_along(w, wp);
    trim(c);
    c.resize(5, Rat(0));
  }
  Poly q = poly_gcd(c, derivative(c));
  if (q.size() != 3) throw std::domain_error("secant_plane: J is not a square along the plane");
  SecantData s;
  s.n = 3;
  s.p1 = w;
  s.p2 = wp;
  Rat B = q[1], C = q[0];
  Rat disc = B * B - 4 * C;
  if (sgn(disc) == 0) throw std::domain_error("secant_plane: tangential plane");
  if (sgn(disc) < 0) {
    Rat D = -disc;
    mpz_class num = D.get_num(), den = D.get_den();
    if (!num.fits_slong_p() || !den.fits_slong_p()) throw std::overflow_error("secant_plane: discriminant too large");
    long dr = num.get_si() * den.get_si();
    s.d = dr;
    QuadExt t1(dr, Rat(-B / 2), Rat(Rat(1) / (2 * Rat(den))));
    s.ell1 = combine(w, wp, t1);
    s.ell2 = combine(w, wp, quad_conj(t1));
  } else {
    mpz_class num = disc.get_num(), den = disc.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      throw std::domain_error("secant_plane: pure points are defined over a real quadratic field");
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat root(rn, rd);
    root.canonicalize();
    s.split = true;
    s.d = 0;
    s.ell1 = combine(w, wp, QuadExt(Rat((-B + root) / 2)));
    s.ell2 = combine(w, wp, QuadExt(Rat((-B - root) / 2)));
  }
  s.W1 = isotropic_of_spinor(s.ell1);
  s.W2 = s.split ? isotropic_of_spinor(s.ell2) : conj_subspace(s.W1);
  if (s.W1.dim() != 6 || s.W2.dim() != 6) throw std::logic_error("secant_plane: root is not a pure spinor");
  return s;
}

long secant_square_free_d(const SecantData& s) {
  if (s.split) throw std::domain_error("split secant has no field parameter");
  return square_free_part(s.d).first;
}

std::string secant_invariant_violation(const SecantData& s) {
  LatticeV L{s.n};
  if (!s.split) {
    GradedElement<QuadExt> c(s.ell1.basis());
    for (const auto& [m, v] : s.ell1.terms()) c.add_term(m, quad_conj(v));
    if (!(c == s.ell2)) return "ell2 != conj(ell1)";
    if (!(conj_subspace(s.W1) == s.W2)) return "W2 != conj(W1)";
  }
  if (s.W1.dim() != 2 * s.n || s.W2.dim() != 2 * s.n) return "W_i not of dimension 2n";
  if (!is_isotropic(L, s.W1) || !is_isotropic(L, s.W2)) return "W_i not isotropic";
  if (intersect(s.W1, s.W2).dim() != 0) return "W1 and W2 intersect";
  // span{ell1, ell2} = P (x) K
  std::vector<Vec<QuadExt>> rows;
  int dim = 1 << (2 * s.n);
  auto to_vec = [&](const GradedElement<QuadExt>& x) {
    Vec<QuadExt> v(dim, QuadExt(0));
    for (const auto& [m, c] : x.terms()) v[m] = c;
    return v;
  };
  auto P = Subspace<QuadExt>::span({to_vec(scalar_cast<QuadExt>(s.p1)), to_vec(scalar_cast<QuadExt>(s.p2))}, dim);
  auto E = Subspace<QuadExt>::span({to_vec(s.ell1), to_vec(s.ell2)}, dim);
  if (P.dim() != 2 || !(P == E)) return "span{ell1, ell2} != P";
  return "";
}

std::vector<GradedElement<Rat>> hodge_weil_plane(const SecantData& s, const Matrix<Rat>& I) {
  if (s.split) throw std::domain_error("hodge_weil_plane: split secant has no CM structure");
  int n = s.n;
  auto IK = scalar_matrix<QuadExt>(I);
  if (!(scalar_matrix<QuadExt>(I * I) == scaled(Matrix<QuadExt>::identity(4 * n), QuadExt(-1))))
    throw std::invalid_argument("hodge_weil_plane: I^2 != -1");
  QuadExt trace(0);
  for (int i = 0; i < s.W1.dim(); ++i) {
    Vec<QuadExt> img = IK * s.W1.echelon().row(i);
    if (!s.W1.contains(img)) throw std::domain_error("hodge_weil_plane: I does not preserve W1");
    trace += s.W1.coordinates(img)[i];
  }
  if (!is_zero(trace)) throw std::domain_error("hodge_weil_plane: W1 meets V^{1,0} in dimension != n");
  auto omega = subspace_wedge(n, s.W1);
  GradedElement<Rat> re(basis_V(n)), im(basis_V(n));
  for (const auto& [m, c] : omega.terms()) {
    re.add_term(m, c.re());
    im.add_term(m, c.im());
  }
  if (re.is_zero() || im.is_zero() || same_line(re, im)) throw std::logic_error("hodge_weil_plane: degenerate plane");
  WedgePower<Rat> wi(n, I);
  if (!(wi.apply(re) == re) || !(wi.apply(im) == im)) throw std::logic_error("hodge_weil_plane: class not fixed by wedge I");
  return {re, im};
}

}  // namespace spinweil
