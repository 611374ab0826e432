#pragma once

#include <cstddef>
#include <vector>

#include "hecke/rational.hpp"
#include "hecke/series.hpp"

namespace hecke {

/// A generalized hypergeometric series with a monomial prefactor:
///
///   prefactor * x^exponent * sum_{k>=0} T_k (scale*x)^k,
///   T_k = prod (upper_i)_k / (prod (lower_i)_k * k!).
///
/// The stored lower vector does NOT include the k! factor; algorithms that
/// need the full denominator system append a unit parameter themselves.
/// Lower parameters must never be integers <= 0 (the coefficients would hit a
/// zero denominator); upper parameters may be, which terminates the series.
class HypSeries {
public:
  HypSeries(GaussianRational prefactor, std::size_t exponent,
            std::vector<GaussianRational> upper,
            std::vector<GaussianRational> lower, GaussianRational scale);

  const GaussianRational& prefactor() const noexcept { return prefactor_; }
  std::size_t exponent() const noexcept { return exponent_; }
  const std::vector<GaussianRational>& upper() const noexcept { return upper_; }
  const std::vector<GaussianRational>& lower() const noexcept { return lower_; }
  const GaussianRational& scale() const noexcept { return scale_; }

  /// Exact coefficient of x^index, computed directly from Pochhammer
  /// products.  Deliberately not implemented via expand(), so the two can
  /// cross-check each other.
  GaussianRational coefficient(std::size_t index) const;

  /// Truncated expansion to the requested order, built incrementally from
  /// the term-to-term ratio.
  TruncatedSeries expand(std::size_t order) const;

  /// Canonical form: common upper/lower entries cancelled (as multisets) and
  /// both vectors sorted.  Prefactor, exponent and scale are untouched.
  HypSeries canonical() const;

  /// Structural equality of all five fields.  Two presentations of the same
  /// function compare unequal unless both are canonical.
  friend bool operator==(const HypSeries& lhs, const HypSeries& rhs) {
    return lhs.prefactor_ == rhs.prefactor_ && lhs.exponent_ == rhs.exponent_ &&
           lhs.upper_ == rhs.upper_ && lhs.lower_ == rhs.lower_ &&
           lhs.scale_ == rhs.scale_;
  }
  friend bool operator!=(const HypSeries& lhs, const HypSeries& rhs) {
    return !(lhs == rhs);
  }

private:
  GaussianRational prefactor_;
  std::size_t exponent_;
  std::vector<GaussianRational> upper_;
  std::vector<GaussianRational> lower_;
  GaussianRational scale_;
};

/// x * 3F2(1,1,1; 2,2; x): the power series with coefficients 1/k^2 for
/// k >= 1, i.e. the dilogarithm.
HypSeries dilogarithm_series();

/// 1F0(1; ; x) = 1/(1-x), the geometric series.
HypSeries geometric_series();

}  // namespace hecke
