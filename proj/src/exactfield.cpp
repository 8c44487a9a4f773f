#include "mlinv/exactfield.hpp"

#include <cctype>
#include <functional>
#include <ostream>

#include "mlinv/error.hpp"

namespace mlinv {

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  normalize();
}

GaussianRational GaussianRational::i() { return {mpq_class(0), mpq_class(1)}; }

GaussianRational GaussianRational::from_ratio(long num, unsigned long den,
                                              long im_num, unsigned long im_den) {
  if (den == 0 || im_den == 0) {
    throw Error(ErrorCode::DivisionByZero, "zero denominator");
  }
  mpq_class re(num, den);
  mpq_class im(im_num, im_den);
  return {std::move(re), std::move(im)};
}

void GaussianRational::normalize() {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inv() const {
  if (is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  }
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& y) {
  re_ += y.re_;
  im_ += y.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& y) {
  re_ -= y.re_;
  im_ -= y.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& y) {
  if (is_zero()) return *this;
  if (y.is_real()) {
    re_ *= y.re_;
    im_ *= y.re_;
    return *this;
  }
  mpq_class re = re_ * y.re_ - im_ * y.im_;
  mpq_class im = re_ * y.im_ + im_ * y.re_;
  re_.swap(re);
  im_.swap(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& y) {
  return *this *= y.inv();
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_real() && b.is_real()) {
    re_ += a.re_ * b.re_;
    return;
  }
  re_ += a.re_ * b.re_ - a.im_ * b.im_;
  im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

void GaussianRational::sub_product(const GaussianRational& a, const GaussianRational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_real() && b.is_real()) {
    re_ -= a.re_ * b.re_;
    return;
  }
  re_ -= a.re_ * b.re_ - a.im_ * b.im_;
  im_ -= a.re_ * b.im_ + a.im_ * b.re_;
}

namespace {

// Imaginary term without its sign; `leading` is true when there is no real part.
std::string imag_magnitude(const mpq_class& im, bool leading) {
  mpz_class num = abs(im.get_num());
  const mpz_class& den = im.get_den();
  if (num == 1) {
    if (den == 1) return "i";
    if (leading) return "i/" + den.get_str();
    return "1/" + den.get_str() + "*i";
  }
  if (den == 1) return num.get_str() + "*i";
  return num.get_str() + "/" + den.get_str() + "*i";
}

[[noreturn]] void parse_fail(std::string_view text, const char* why) {
  throw Error(ErrorCode::Parse,
              "cannot parse Gaussian rational '" + std::string(text) + "': " + why);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Unsigned "n" or "n/d".
mpq_class parse_unsigned_rational(std::string_view s, std::string_view whole) {
  auto slash = s.find('/');
  std::string_view n = s.substr(0, slash);
  if (!all_digits(n)) parse_fail(whole, "bad numerator");
  mpz_class num(std::string(n), 10);
  mpz_class den(1);
  if (slash != std::string_view::npos) {
    std::string_view d = s.substr(slash + 1);
    if (!all_digits(d)) parse_fail(whole, "bad denominator");
    den = mpz_class(std::string(d), 10);
    if (den == 0) parse_fail(whole, "zero denominator");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

std::string GaussianRational::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_re && !has_im) return "0";
  std::string out;
  if (has_re) out = re_.get_str();
  if (has_im) {
    if (sgn(im_) < 0) {
      out += '-';
    } else if (has_re) {
      out += '+';
    }
    out += imag_magnitude(im_, !has_re);
  }
  return out;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) parse_fail(text, "empty");
  // Split into signed terms at '+'/'-' that are not the leading sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = 1; p < text.size(); ++p) {
    if (text[p] == '+' || text[p] == '-') {
      if (split != std::string_view::npos) parse_fail(text, "too many terms");
      split = p;
    }
  }
  std::string_view terms[2] = {text.substr(0, split), {}};
  if (split != std::string_view::npos) terms[1] = text.substr(split);

  mpq_class re(0), im(0);
  bool seen_re = false, seen_im = false;
  for (std::string_view term : terms) {
    if (term.empty()) continue;
    bool negative = false;
    if (term.front() == '+' || term.front() == '-') {
      negative = term.front() == '-';
      term.remove_prefix(1);
    }
    if (term.empty()) parse_fail(text, "dangling sign");
    mpq_class value;
    bool imaginary = false;
    if (term.front() == 'i') {
      // "i" or "i/d"
      imaginary = true;
      term.remove_prefix(1);
      value = 1;
      if (!term.empty()) {
        if (term.front() != '/') parse_fail(text, "unexpected text after i");
        value = parse_unsigned_rational("1" + std::string(term), text);
      }
    } else if (term.size() >= 2 && term.substr(term.size() - 2) == "*i") {
      imaginary = true;
      value = parse_unsigned_rational(term.substr(0, term.size() - 2), text);
    } else {
      value = parse_unsigned_rational(term, text);
    }
    if (negative) value = -value;
    if (imaginary) {
      if (seen_im) parse_fail(text, "two imaginary terms");
      seen_im = true;
      im = value;
    } else {
      if (seen_re || seen_im) parse_fail(text, "real term must come first");
      seen_re = true;
      re = value;
    }
  }
  return {std::move(re), std::move(im)};
}

std::size_t GaussianRational::hash() const noexcept {
  auto limb_hash = [](const mpz_class& z) {
    std::size_t h = std::hash<long>{}(static_cast<long>(mpz_sgn(z.get_mpz_t())));
    std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t k = 0; k < n; ++k) {
      h = h * 1099511628211ULL ^ static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), k));
    }
    return h;
  };
  std::size_t h = limb_hash(re_.get_num());
  h = h * 31 + limb_hash(re_.get_den());
  h = h * 31 + limb_hash(im_.get_num());
  h = h * 31 + limb_hash(im_.get_den());
  return h;
}

GaussianRational add(const GaussianRational& x, const GaussianRational& y) { return x + y; }
GaussianRational mul(const GaussianRational& x, const GaussianRational& y) { return x * y; }
GaussianRational inv(const GaussianRational& x) { return x.inv(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << x.to_string();
}

}  // namespace mlinv
