#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

enum class CMVerdict { CompletelyMultiplicative, NotCM };

/// Outcome of a complete-multiplicativity probe.  The pairwise test fills in
/// the verdict and, for failures, the first witness pair; the full
/// classifier adds the exponent and leading constant for positive verdicts
/// (the sequence is then constant * n^exponent).
struct CMReport {
  CMVerdict verdict = CMVerdict::NotCM;
  std::optional<long> exponent;
  std::optional<GaussianRational> constant;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// The values c(m) = prod (upper_i)_{m-1} / prod (lower_i)_{m-1} for
/// m = 1..depth; no factorial enters.  Returned 1-based: slot 0 is an unused
/// zero so that result[m] is c(m).  Lower entries must not be non-positive
/// integers (IllegalParameterError).
std::vector<GaussianRational> hyp_coeff_sequence(
    const std::vector<GaussianRational>& upper,
    const std::vector<GaussianRational>& lower, std::size_t depth);

/// Checks c(m k) == c(m) c(k) for every pair 1 <= m <= k with m k within
/// range; c is 1-based with slot 0 ignored (so at least two entries are
/// required).  Failures report the lexicographically first witness.  A zero
/// value at 1 is reported as NotCM with witness (1, 1): a completely
/// multiplicative sequence has c(1) = 1.
CMReport test_complete_multiplicativity(const std::vector<GaussianRational>& c);

/// Full classifier for the coefficient family above.  Decides by the
/// spectral route -- append a unit upper parameter and classify
/// x * F(upper + 1; lower; x) as a decimation eigenfunction -- and
/// cross-checks the verdict against the pairwise probe on the first `depth`
/// values.  The two routes must agree: any disagreement throws
/// OracleMismatchError.  A negative spectral verdict therefore needs `depth`
/// large enough for a witness pair to exist.
CMReport classify_cm(const std::vector<GaussianRational>& upper,
                     const std::vector<GaussianRational>& lower,
                     std::size_t depth);

}  // namespace hecke
