#pragma once

/*
 * Exact arithmetic over the Gaussian rationals Q(i).
 *
 * A GaussianRational is a pair of GMP rationals (re, im). Both parts are kept
 * canonical (lowest terms, positive denominator) after every operation, so
 * equality is plain component comparison and hashing is well defined.
 *
 * Text form: "p/q+r/s*i" with zero parts omitted and a unit imaginary
 * coefficient written bare, e.g. "2", "-i/2", "1/2+1/2*i", "3-i".
 */

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mlinv {

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: implicit from integers
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i();
  static GaussianRational from_ratio(long num, unsigned long den,
                                     long im_num = 0, unsigned long im_den = 1);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  // |x|^2 as an exact rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  // Throws Error(DivisionByZero) on zero.
  GaussianRational inv() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& y);
  GaussianRational& operator-=(const GaussianRational& y);
  GaussianRational& operator*=(const GaussianRational& y);
  GaussianRational& operator/=(const GaussianRational& y);

  // this += a * b without temporaries for the result.
  void add_product(const GaussianRational& a, const GaussianRational& b);
  // this -= a * b
  void sub_product(const GaussianRational& a, const GaussianRational& b);

  friend GaussianRational operator+(GaussianRational x, const GaussianRational& y) { return x += y; }
  friend GaussianRational operator-(GaussianRational x, const GaussianRational& y) { return x -= y; }
  friend GaussianRational operator*(GaussianRational x, const GaussianRational& y) { return x *= y; }
  friend GaussianRational operator/(GaussianRational x, const GaussianRational& y) { return x /= y; }

  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }

  // Re-canonicalizes both parts. Arithmetic already leaves values canonical;
  // this exists for values assembled from raw mpq_t data.
  void normalize();

  std::string to_string() const;
  // Inverse of to_string. Throws Error(Parse) on malformed input.
  static GaussianRational parse(std::string_view text);

  std::size_t hash() const noexcept;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

GaussianRational add(const GaussianRational& x, const GaussianRational& y);
GaussianRational mul(const GaussianRational& x, const GaussianRational& y);
GaussianRational inv(const GaussianRational& x);

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

struct GaussianRationalHash {
  std::size_t operator()(const GaussianRational& x) const noexcept { return x.hash(); }
};

}  // namespace mlinv
