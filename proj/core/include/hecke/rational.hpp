#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace hecke {

/// Exact rational number.  Always kept canonical: lowest terms, positive
/// denominator, zero as 0/1.
using Rational = mpq_class;

/// num/den as a canonical Rational.  Throws DivisionByZeroError if den == 0.
Rational make_rational(long num, long den = 1);

/// Complex number with rational real and imaginary parts.  This is the
/// coefficient field for every series and parameter vector in the library;
/// all arithmetic is exact.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long value) : re_(value), im_(0) {}  // NOLINT: implicit by design
  GaussianRational(Rational re) : re_(std::move(re)), im_(0) { normalize(); }
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {
    normalize();
  }

  /// num/den (real).  Throws DivisionByZeroError if den == 0.
  static GaussianRational ratio(long num, long den);
  /// re_num/re_den + im_num/im_den * i.
  static GaussianRational complex_ratio(long re_num, long re_den, long im_num,
                                        long im_den);
  static GaussianRational unit_imaginary() { return {Rational(0), Rational(1)}; }

  const Rational& real() const noexcept { return re_; }
  const Rational& imag() const noexcept { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  /// True when the value is a rational integer (imaginary part zero,
  /// denominator one).
  bool is_integer() const;
  /// True when the value is an integer <= 0; these are the positions where a
  /// Pochhammer denominator can vanish.
  bool is_nonpositive_integer() const;

  GaussianRational conjugate() const { return {re_, -im_}; }
  /// Multiplicative inverse.  Throws DivisionByZeroError on zero.
  GaussianRational reciprocal() const;
  /// Integer power; negative exponents invert (throws DivisionByZeroError on
  /// zero base with negative exponent).
  GaussianRational pow(long exponent) const;

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) {
    lhs /= rhs;
    return lhs;
  }

  friend bool operator==(const GaussianRational& lhs, const GaussianRational& rhs) {
    return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
  }
  friend bool operator!=(const GaussianRational& lhs, const GaussianRational& rhs) {
    return !(lhs == rhs);
  }

  /// Total order, lexicographic on (real, imaginary).  Not compatible with
  /// multiplication; used only to sort parameter vectors canonically.
  static int compare_lex(const GaussianRational& lhs, const GaussianRational& rhs);

  friend bool lex_less(const GaussianRational& lhs, const GaussianRational& rhs) {
    return compare_lex(lhs, rhs) < 0;
  }

  /// Canonical text form: "3", "-1/2", "2/3*i", "1/2-5/4*i".  The imaginary
  /// unit is always written as a trailing "*i".
  std::string str() const;

  /// Inverse of str().  Whitespace is ignored everywhere; each of the two
  /// parts is an optionally signed fraction "p" or "p/q".  Throws ParseError
  /// on anything else (including zero denominators).
  static GaussianRational parse(std::string_view text);

private:
  void normalize();

  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

/// base^exponent as an exact scalar, for a positive integer base.  Negative
/// exponents give the exact reciprocal power.
GaussianRational integer_power(unsigned long base, long exponent);

}  // namespace hecke
