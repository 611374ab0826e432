#pragma once

#include <cstddef>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

/// Formal power series truncated at a fixed order: exactly the coefficients
/// of x^0 .. x^order are stored, nothing is known beyond them.
class TruncatedSeries {
public:
  /// Takes ownership of the coefficient vector c_0 .. c_K (must be
  /// non-empty); order() becomes K.
  explicit TruncatedSeries(std::vector<GaussianRational> coeffs);

  static TruncatedSeries zero(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const GaussianRational& operator[](std::size_t k) const { return coeffs_.at(k); }
  const std::vector<GaussianRational>& coeffs() const noexcept { return coeffs_; }

  /// Drops coefficients beyond new_order.  Throws InsufficientOrderError when
  /// asked for more than is stored.
  TruncatedSeries truncated(std::size_t new_order) const;

  /// Equality of all coefficients up to the smaller of the two orders.
  bool equal_on_overlap(const TruncatedSeries& other) const;

  friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }
  friend bool operator!=(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    return !(lhs == rhs);
  }

private:
  std::vector<GaussianRational> coeffs_;
};

/// Coefficient decimation: keeps every n-th coefficient, so the result has
/// coefficient c_{nk} at x^k and order floor(order(f)/n).  This is the
/// operator U_n acting on truncated series.  n must be positive.
TruncatedSeries decimate(const TruncatedSeries& f, unsigned long n);

/// Substitution x -> x^n: spreads the coefficients out, leaving zeros in
/// between, truncated at out_order.  This is the operator V_n.  Requires
/// out_order <= n * order(f) so every requested coefficient is determined;
/// throws InsufficientOrderError otherwise.
TruncatedSeries dilate(const TruncatedSeries& f, unsigned long n,
                       std::size_t out_order);

/// Coefficient-wise product, truncated at the smaller order.
TruncatedSeries hadamard(const TruncatedSeries& f, const TruncatedSeries& g);

/// Multiplies every coefficient by the same scalar.
TruncatedSeries scaled(const TruncatedSeries& f, const GaussianRational& factor);

/// Coefficient-wise sum, truncated at the smaller order.
TruncatedSeries sum(const TruncatedSeries& f, const TruncatedSeries& g);

/// A truncated contour pairing evaluated exactly.  The pairing of f and g on
/// the circle of the given radius is 2*pi*i times `value`; only the stated
/// multiplier is stored so everything stays rational.
struct InnerProductValue {
  GaussianRational value;
  Rational radius;
  std::size_t terms_used;  // index of the last coefficient pair included
};

/// Sum of f_k * conj(g_k) * radius^{2k} for k up to the smaller order.
/// The radius must be positive (throws IllegalParameterError otherwise).
InnerProductValue inner_product(const TruncatedSeries& f,
                                const TruncatedSeries& g,
                                const Rational& radius);

}  // namespace hecke
