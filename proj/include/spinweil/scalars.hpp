// Exact scalars: rationals (GMP) and elements of Q(sqrt(-d)).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace spinweil {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// value re + im*w with w^2 = -d. d == 0 marks a rational value not yet tied
// to a field; it adopts the field of whatever it is combined with.
class QuadExt {
 public:
  QuadExt() : d_(0), re_(0), im_(0) {}
  QuadExt(int v) : d_(0), re_(v), im_(0) {}  // NOLINT implicit
  QuadExt(long v) : d_(0), re_(v), im_(0) {}  // NOLINT implicit
  QuadExt(const Rat& v) : d_(0), re_(v), im_(0) {}  // NOLINT implicit
  QuadExt(long d, Rat re, Rat im);

  static QuadExt omega(long d) { return QuadExt(d, Rat(0), Rat(1)); }

  long d() const { return d_; }
  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }
  bool is_rational() const { return sgn(im_) == 0; }

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  QuadExt operator-() const { return QuadExt(d_, -re_, -im_, raw_tag{}); }

  QuadExt inverse() const;

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend bool operator==(const QuadExt& a, const QuadExt& b);
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

 private:
  struct raw_tag {};
  QuadExt(long d, Rat re, Rat im, raw_tag) : d_(d), re_(std::move(re)), im_(std::move(im)) {}
  static long join(long a, long b);

  long d_;
  Rat re_;
  Rat im_;
};

inline bool is_zero(const QuadExt& z) { return is_zero(z.re()) && is_zero(z.im()); }

QuadExt quad_conj(const QuadExt& z);
Rat quad_norm(const QuadExt& z);
std::string to_string(const QuadExt& z);

// Re-express z in Q(sqrt(-d_new)); requires d/d_new to be a rational square.
QuadExt reembed(const QuadExt& z, long d_new);

// d = core * m^2 with core square-free.
std::pair<long, long> square_free_part(long d);

// Generic helpers shared by templated code over Rat and QuadExt.
inline Rat conj_scalar(const Rat& r) { return r; }
inline QuadExt conj_scalar(const QuadExt& z) { return quad_conj(z); }

inline Rat inverse_scalar(const Rat& r) {
  if (is_zero(r)) throw std::domain_error("division by zero");
  return 1 / r;
}
inline QuadExt inverse_scalar(const QuadExt& z) { return z.inverse(); }

template <class K>
K from_rat(const Rat& r) {
  return K(r);
}

// Rational value of a scalar that must be rational.
inline Rat to_rat(const Rat& r) { return r; }
Rat to_rat(const QuadExt& z);

}  // namespace spinweil
