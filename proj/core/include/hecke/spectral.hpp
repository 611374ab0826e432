#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hecke/hyp_series.hpp"
#include "hecke/rational.hpp"

namespace hecke {

enum class EigenVerdict { Eigen, NotEigen };

enum class NotEigenReason {
  BadExponent,        // monomial exponent is neither 0 nor 1
  Unbalanced,         // |upper| != |lower| + 1 after cancellation
  StructureMismatch,  // zero series, non-unit scale, or wrong parameter pattern
  NumericMismatch,    // structure looked right but a decimation disagreed
};

/// Outcome of eigenfunction classification.  For a positive verdict the
/// eigenvalue under coefficient decimation by n is n^exponent, and
/// normalized_form holds the canonical presentation that was analyzed.
struct EigenReport {
  EigenVerdict verdict = EigenVerdict::NotEigen;
  std::optional<long> exponent;
  std::optional<HypSeries> normalized_form;
  std::optional<NotEigenReason> reason;
};

/// Counts of unit parameters on the two sides of the coefficient formula;
/// lower_units includes the implicit factorial parameter, so it is always at
/// least 1.
struct GammaCounts {
  std::size_t upper_units = 0;
  std::size_t lower_units = 0;
};

/// Requires the balanced shape |upper| == |lower| + 1 (UnbalancedError
/// otherwise).  No canonicalization is performed.
GammaCounts gamma_counts(const HypSeries& h);

/// The predicted decimation eigenvalue
///   scale^{n-1} * prod (a_i)_{n-1} / prod (b^_i)_{n-1}
/// over the augmented lower system (stored lower plus a unit).  Requires
/// monomial exponent 1 (BadExponentError) and the balanced shape
/// (UnbalancedError); n must be positive (IllegalParameterError).
GaussianRational eigenvalue_candidate(const HypSeries& h, unsigned long n);

/// Checks n^{upper_units} * prod (a_i)_{n-1} == n^{lower_units} * prod (b^_i)_{n-1}
/// over the augmented lower system: exactly the identity that makes the
/// eigenvalue a pure power of n.  Same preconditions as gamma_counts.
bool gamma_identity_check(const HypSeries& h, unsigned long n);

/// Replaces every entry equal to 1 by 2, leaving the rest alone.  This is
/// the substitution induced on parameters by shifting the coefficient index
/// by one; eigen structure is invariant under it.
std::vector<GaussianRational> unit_shift(std::vector<GaussianRational> params);

/// Compares sum u_i^t against sum v_i^t for t = 1..max_power.  The vectors
/// must have equal length (LengthMismatchError).
bool power_sums_equal(const std::vector<GaussianRational>& u,
                      const std::vector<GaussianRational>& v,
                      std::size_t max_power);

/// Multiset equality decided through Newton's identities: power sums up to
/// the common length are converted to elementary symmetric functions and
/// those are compared.  Equal-length inputs only (LengthMismatchError).
bool multisets_equal_via_newton(const std::vector<GaussianRational>& u,
                                const std::vector<GaussianRational>& v);

/// Decides whether h is an eigenfunction of every coefficient decimation,
/// and if so with which exponent.  The structural test runs on the canonical
/// form; a positive structural answer is then confirmed numerically at two
/// decimation indices before the verdict is issued.
EigenReport classify_eigen(const HypSeries& h);

/// The series x + 2^e x^2 + 3^e x^3 + ... = sum_{k>=1} k^e x^k presented
/// hypergeometrically.  Its decimation by n multiplies it by exactly n^e.
HypSeries make_eigenfunction(long exponent);

}  // namespace hecke
