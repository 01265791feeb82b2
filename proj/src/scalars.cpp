#include "spinweil/scalars.hpp"

#include <cstdlib>

namespace spinweil {

std::string to_string(const Rat& r) { return r.get_str(); }

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

QuadExt::QuadExt(long d, Rat re, Rat im) : d_(d), re_(std::move(re)), im_(std::move(im)) {
  if (d_ < 0) throw std::invalid_argument("QuadExt: d must be positive");
  if (d_ == 0 && sgn(im_) != 0) throw std::invalid_argument("QuadExt: irrational value needs d > 0");
}

long QuadExt::join(long a, long b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw std::domain_error("QuadExt: mixing fields with d=" + std::to_string(a) + " and d=" +
                          std::to_string(b));
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = join(d_, o.d_);
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = join(d_, o.d_);
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  d_ = join(d_, o.d_);
  Rat re = re_ * o.re_ - Rat(d_) * im_ * o.im_;
  Rat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

QuadExt QuadExt::inverse() const {
  Rat nm = quad_norm(*this);
  if (sgn(nm) == 0) throw std::domain_error("QuadExt: division by zero");
  return QuadExt(d_, re_ / nm, -im_ / nm, raw_tag{});
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

bool operator==(const QuadExt& a, const QuadExt& b) {
  if (a.d_ != 0 && b.d_ != 0 && a.d_ != b.d_) {
    throw std::domain_error("QuadExt: comparing values from different fields");
  }
  return a.re_ == b.re_ && a.im_ == b.im_;
}

QuadExt quad_conj(const QuadExt& z) { return QuadExt(z.d(), z.re(), -z.im()); }

Rat quad_norm(const QuadExt& z) { return z.re() * z.re() + Rat(z.d()) * z.im() * z.im(); }

std::string to_string(const QuadExt& z) {
  if (z.is_rational()) return to_string(z.re());
  return to_string(z.re()) + (sgn(z.im()) < 0 ? "-" : "+") + to_string(Rat(abs(z.im()))) +
         "*sqrt(-" + std::to_string(z.d()) + ")";
}

std::pair<long, long> square_free_part(long d) {
  if (d <= 0) throw std::invalid_argument("square_free_part: d must be positive");
  long core = 1, m = 1;
  long rest = d;
  for (long p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) m *= p;
    if (e % 2) core *= p;
  }
  core *= rest;
  return {core, m};
}

QuadExt reembed(const QuadExt& z, long d_new) {
  if (z.is_rational()) return QuadExt(d_new, z.re(), Rat(0));
  // w_old = m * w_new with m^2 = d_old / d_new
  Rat ratio(z.d(), d_new);
  ratio.canonicalize();
  mpz_class num = ratio.get_num(), den = ratio.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    throw std::domain_error("reembed: fields differ");
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rat m(rn, rd);
  m.canonicalize();
  return QuadExt(d_new, z.re(), z.im() * m);
}

Rat to_rat(const QuadExt& z) {
  if (!z.is_rational()) throw std::domain_error("expected a rational value, got " + to_string(z));
  return z.re();
}

}  // namespace spinweil
