#include "hecke/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "hecke/errors.hpp"

namespace hecke {

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZeroError("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

GaussianRational GaussianRational::ratio(long num, long den) {
  return GaussianRational(make_rational(num, den));
}

GaussianRational GaussianRational::complex_ratio(long re_num, long re_den,
                                                 long im_num, long im_den) {
  return {make_rational(re_num, re_den), make_rational(im_num, im_den)};
}

void GaussianRational::normalize() {
  if (re_.get_den() == 0 || im_.get_den() == 0)
    throw DivisionByZeroError("GaussianRational: zero denominator");
  re_.canonicalize();
  im_.canonicalize();
}

bool GaussianRational::is_integer() const {
  return im_ == 0 && re_.get_den() == 1;
}

bool GaussianRational::is_nonpositive_integer() const {
  return is_integer() && re_ <= 0;
}

GaussianRational GaussianRational::reciprocal() const {
  Rational norm = re_ * re_ + im_ * im_;
  if (norm == 0) throw DivisionByZeroError("GaussianRational: division by zero");
  return {re_ / norm, -im_ / norm};
}

GaussianRational GaussianRational::pow(long exponent) const {
  if (exponent < 0) {
    GaussianRational inv = reciprocal();
    GaussianRational result(1);
    unsigned long e = static_cast<unsigned long>(-(exponent + 1)) + 1;
    GaussianRational base = inv;
    while (true) {
      if (e & 1) result *= base;
      e >>= 1;
      if (!e) break;
      base *= base;
    }
    return result;
  }
  GaussianRational result(1);
  GaussianRational base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (!e) break;
    base *= base;
  }
  return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  return *this *= rhs.reciprocal();
}

int GaussianRational::compare_lex(const GaussianRational& lhs,
                                  const GaussianRational& rhs) {
  int c = cmp(lhs.re_, rhs.re_);
  if (c != 0) return c;
  return cmp(lhs.im_, rhs.im_);
}

std::string GaussianRational::str() const {
  if (im_ == 0) return re_.get_str();
  Rational im_abs = abs(im_);
  std::string tail = im_abs.get_str() + "*i";
  if (re_ == 0) return (im_ < 0 ? "-" : "") + tail;
  return re_.get_str() + (im_ < 0 ? "-" : "+") + tail;
}

namespace {

struct Cursor {
  std::string text;  // input with all whitespace removed
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() { return text[pos++]; }
};

[[noreturn]] void fail(const std::string& original, const std::string& why) {
  throw ParseError("cannot parse scalar \"" + original + "\": " + why);
}

Rational parse_fraction(Cursor& c, const std::string& original) {
  auto digits = [&]() {
    std::string out;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
      out.push_back(c.take());
    if (out.empty()) fail(original, "expected digits");
    return out;
  };
  mpz_class num(digits());
  mpz_class den(1);
  if (!c.done() && c.peek() == '/') {
    c.take();
    den = mpz_class(digits());
    if (den == 0) fail(original, "zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

struct Term {
  bool imaginary = false;
  Rational value;
};

// [sign] ( "i" | fraction ["*"] ["i"] )
Term parse_term(Cursor& c, const std::string& original) {
  int sign = 1;
  if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
    if (c.take() == '-') sign = -1;
  }
  if (c.done()) fail(original, "unexpected end of input");
  Term t;
  if (c.peek() == 'i') {
    c.take();
    t.imaginary = true;
    t.value = sign;
    return t;
  }
  t.value = parse_fraction(c, original);
  if (sign < 0) t.value = -t.value;
  if (!c.done() && c.peek() == '*') {
    c.take();
    if (c.done() || c.peek() != 'i') fail(original, "expected i after *");
    c.take();
    t.imaginary = true;
  } else if (!c.done() && c.peek() == 'i') {
    c.take();
    t.imaginary = true;
  }
  return t;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string original(text);
  Cursor c;
  c.text.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) c.text.push_back(ch);
  if (c.text.empty()) fail(original, "empty input");

  Term first = parse_term(c, original);
  Rational re(0), im(0);
  (first.imaginary ? im : re) = first.value;
  if (!c.done()) {
    if (c.peek() != '+' && c.peek() != '-')
      fail(original, "expected + or - between parts");
    Term second = parse_term(c, original);
    if (second.imaginary == first.imaginary)
      fail(original, "duplicate real or imaginary part");
    (second.imaginary ? im : re) = second.value;
    if (!c.done()) fail(original, "trailing characters");
  }
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) {
  return os << value.str();
}

GaussianRational integer_power(unsigned long base, long exponent) {
  if (base == 0) throw IllegalParameterError("integer_power: zero base");
  mpz_class pw;
  unsigned long mag = exponent < 0
                          ? static_cast<unsigned long>(-(exponent + 1)) + 1
                          : static_cast<unsigned long>(exponent);
  mpz_ui_pow_ui(pw.get_mpz_t(), base, mag);
  Rational r(pw);
  if (exponent < 0) r = 1 / r;
  return GaussianRational(r);
}

}  // namespace hecke
