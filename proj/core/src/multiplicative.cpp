#include "hecke/multiplicative.hpp"

#include <utility>

#include "hecke/errors.hpp"
#include "hecke/spectral.hpp"

namespace hecke {

std::vector<GaussianRational> hyp_coeff_sequence(
    const std::vector<GaussianRational>& upper,
    const std::vector<GaussianRational>& lower, std::size_t depth) {
  for (const auto& b : lower)
    if (b.is_nonpositive_integer())
      throw IllegalParameterError("lower parameter " + b.str() +
                                  " is a non-positive integer");
  std::vector<GaussianRational> c(depth + 1);
  if (depth == 0) return c;
  c[1] = GaussianRational(1);
  for (std::size_t m = 1; m < depth; ++m) {
    // c(m+1)/c(m) = prod(a + m - 1) / prod(b + m - 1)
    GaussianRational shift(static_cast<long>(m - 1));
    GaussianRational num(1);
    for (const auto& a : upper) num *= a + shift;
    GaussianRational den(1);
    for (const auto& b : lower) den *= b + shift;
    c[m + 1] = c[m] * num / den;
  }
  return c;
}

CMReport test_complete_multiplicativity(const std::vector<GaussianRational>& c) {
  if (c.size() < 2)
    throw IllegalParameterError(
        "test_complete_multiplicativity: need at least the value at 1");
  const std::size_t depth = c.size() - 1;
  CMReport report;
  report.verdict = CMVerdict::CompletelyMultiplicative;
  if (c[1].is_zero()) {
    report.verdict = CMVerdict::NotCM;
    report.witness = {std::size_t{1}, std::size_t{1}};
    return report;
  }
  for (std::size_t m = 1; m * m <= depth; ++m) {
    for (std::size_t k = m; m * k <= depth; ++k) {
      if (c[m * k] != c[m] * c[k]) {
        report.verdict = CMVerdict::NotCM;
        report.witness = {m, k};
        return report;
      }
    }
  }
  return report;
}

CMReport classify_cm(const std::vector<GaussianRational>& upper,
                     const std::vector<GaussianRational>& lower,
                     std::size_t depth) {
  std::vector<GaussianRational> seq = hyp_coeff_sequence(upper, lower, depth);
  CMReport pairwise = test_complete_multiplicativity(seq);

  // Spectral route: c(m) is the coefficient of x^m in x * F(upper, 1; lower; x)
  // (the extra unit upper parameter cancels the factorial), so the sequence
  // is completely multiplicative exactly when that series is a decimation
  // eigenfunction.
  std::vector<GaussianRational> aug_upper = upper;
  aug_upper.emplace_back(1);
  HypSeries h(GaussianRational(1), 1, std::move(aug_upper), lower,
              GaussianRational(1));
  EigenReport eigen = classify_eigen(h);

  const bool spectral_cm = eigen.verdict == EigenVerdict::Eigen;
  const bool pairwise_cm = pairwise.verdict == CMVerdict::CompletelyMultiplicative;
  if (spectral_cm && !pairwise_cm) {
    auto [m, k] = *pairwise.witness;
    throw OracleMismatchError(
        "classify_cm: spectral route accepts the sequence but the pairwise "
        "probe found the witness (" + std::to_string(m) + ", " +
        std::to_string(k) + ")");
  }
  if (!spectral_cm && pairwise_cm)
    throw OracleMismatchError(
        "classify_cm: spectral route rejects the sequence but no witness pair "
        "exists up to depth " + std::to_string(depth) +
        "; increase the probe depth");

  CMReport report;
  if (spectral_cm) {
    long e = *eigen.exponent;
    for (std::size_t m = 1; m <= depth; ++m)
      if (seq[m] != integer_power(m, e))
        throw OracleMismatchError(
            "classify_cm: sequence does not match m^" + std::to_string(e) +
            " at m = " + std::to_string(m));
    report.verdict = CMVerdict::CompletelyMultiplicative;
    report.exponent = e;
    report.constant = seq[1];
  } else {
    report.verdict = CMVerdict::NotCM;
    report.witness = pairwise.witness;
  }
  return report;
}

}  // namespace hecke
