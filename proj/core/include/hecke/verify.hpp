#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/hyp_series.hpp"
#include "hecke/rational.hpp"
#include "hecke/series.hpp"

namespace hecke::verify {

/// Deterministic random source.  Draws go through raw()/range() only, so a
/// given seed produces the same stream on every platform and build.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform-ish integer in [lo, hi] (inclusive); lo <= hi required.
  long range(long lo, long hi);

  /// True with probability percent/100.
  bool chance(unsigned percent) { return range(0, 99) < static_cast<long>(percent); }

private:
  std::mt19937_64 engine_;
};

/// Random scalar with numerator and denominator drawn from [-bound, bound]
/// and [1, bound]; an imaginary part appears about a quarter of the time
/// when allowed.
GaussianRational random_scalar(Rng& rng, long bound, bool allow_imag);

/// Like random_scalar but never a non-positive integer, so the value is
/// always legal as a lower parameter.
GaussianRational random_lower_param(Rng& rng, long bound);

TruncatedSeries random_series(Rng& rng, std::size_t order, long bound,
                              bool allow_imag);

struct HypOptions {
  std::size_t max_upper = 3;
  std::size_t max_lower = 3;
  unsigned long min_exponent = 0;
  unsigned long max_exponent = 7;
  long bound = 9;            // numerator/denominator bound for parameters
  bool allow_imag = true;
  bool unit_scale = false;   // force scale == 1
  bool terminating_ok = true;  // allow non-positive-integer upper parameters,
                               // which truncate the series to a polynomial
};

HypSeries random_hyp(Rng& rng, const HypOptions& options);

/// Result of one verification suite.  detail is empty on success except for
/// summary statistics; on failure it pins down the first counterexample.
struct SuiteResult {
  std::string suite;
  std::size_t cases_run = 0;
  bool passed = false;
  std::string detail;
};

// The seven suites.  Each is deterministic in its seed; sizes have defaults
// chosen to run in well under a minute together.

/// Composition laws of decimation and dilation on random series: repeated
/// decimation merges, repeated dilation merges, dilation then decimation by
/// the same index is the identity, and the mixed composition commutes after
/// dividing out the gcd.
SuiteResult operator_algebra_suite(std::uint64_t seed, std::size_t cases = 200);

/// The pairing identity <f, dilate(g)> at radius R equals <decimate(f), g>
/// at radius R^n, exactly, for random series pairs.
SuiteResult adjoint_suite(std::uint64_t seed, std::size_t cases = 100,
                          std::size_t half_order = 50);

/// Both Pochhammer splittings against the plain product, the index-shift
/// identity, and the one-step ratio.
SuiteResult pochhammer_suite(std::uint64_t seed, std::size_t cases = 300);

/// Symbolic decimation of random hypergeometric series against numeric
/// decimation of their expansions; both divisibility regimes are forced to
/// appear.
SuiteResult oracle_suite(std::uint64_t seed, std::size_t cases = 120,
                         std::size_t check_order = 40);

/// The k^e eigenfunction grid: classification verdicts, predicted
/// eigenvalues, the power-of-n identity, and actual decimations, plus the
/// dilogarithm and geometric exemplars and a few deliberate non-examples.
SuiteResult spectrum_suite(std::uint64_t seed);

/// Multiset equality via Newton's identities and via power sums against a
/// sort-and-compare oracle on random vectors.
SuiteResult newton_suite(std::uint64_t seed, std::size_t cases = 300);

/// Complete multiplicativity of the k^e coefficient families, perturbed
/// families losing it with an explicit witness, and agreement of the
/// spectral and pairwise routes throughout.
SuiteResult multiplicative_suite(std::uint64_t seed,
                                 std::size_t perturbations = 50,
                                 std::size_t depth = 60);

/// Names accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();

/// Runs one suite by name with default sizes.  Unknown names throw
/// IllegalParameterError.
SuiteResult run_suite(std::string_view name, std::uint64_t seed);

}  // namespace hecke::verify
