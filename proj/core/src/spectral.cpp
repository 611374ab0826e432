#include "hecke/spectral.hpp"

#include <utility>

#include "hecke/errors.hpp"
#include "hecke/hecke_action.hpp"
#include "hecke/pochhammer.hpp"
#include "hecke/series.hpp"

namespace hecke {

namespace {

std::vector<GaussianRational> augmented_lower(const HypSeries& h) {
  std::vector<GaussianRational> aug = h.lower();
  aug.emplace_back(1);
  return aug;
}

void require_balanced(const HypSeries& h) {
  if (h.upper().size() != h.lower().size() + 1)
    throw UnbalancedError("need |upper| == |lower| + 1, got " +
                          std::to_string(h.upper().size()) + " and " +
                          std::to_string(h.lower().size()));
}

// power sums p_1 .. p_count of the entries
std::vector<GaussianRational> power_sums(const std::vector<GaussianRational>& v,
                                         std::size_t count) {
  std::vector<GaussianRational> sums(count + 1);
  std::vector<GaussianRational> pw = v;
  for (std::size_t t = 1; t <= count; ++t) {
    GaussianRational total(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (t > 1) pw[i] *= v[i];
      total += pw[i];
    }
    sums[t] = total;
  }
  return sums;
}

// elementary symmetric functions e_0 .. e_m from power sums p_1 .. p_m:
//   k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
std::vector<GaussianRational> elementary_from_power_sums(
    const std::vector<GaussianRational>& p) {
  std::size_t m = p.size() - 1;
  std::vector<GaussianRational> e(m + 1);
  e[0] = GaussianRational(1);
  for (std::size_t k = 1; k <= m; ++k) {
    GaussianRational acc(0);
    for (std::size_t i = 1; i <= k; ++i) {
      GaussianRational term = e[k - i] * p[i];
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    e[k] = acc / GaussianRational(static_cast<long>(k));
  }
  return e;
}

}  // namespace

GammaCounts gamma_counts(const HypSeries& h) {
  require_balanced(h);
  GammaCounts counts;
  const GaussianRational one(1);
  for (const auto& a : h.upper())
    if (a == one) ++counts.upper_units;
  counts.lower_units = 1;  // the factorial parameter
  for (const auto& b : h.lower())
    if (b == one) ++counts.lower_units;
  return counts;
}

GaussianRational eigenvalue_candidate(const HypSeries& h, unsigned long n) {
  if (n == 0)
    throw IllegalParameterError("eigenvalue_candidate: index must be positive");
  if (h.exponent() != 1)
    throw BadExponentError("eigenvalue_candidate: monomial exponent must be 1, got " +
                           std::to_string(h.exponent()));
  require_balanced(h);
  GaussianRational value = h.scale().pow(static_cast<long>(n) - 1);
  for (const auto& a : h.upper()) value *= pochhammer(a, n - 1);
  for (const auto& b : augmented_lower(h)) value /= pochhammer(b, n - 1);
  return value;
}

bool gamma_identity_check(const HypSeries& h, unsigned long n) {
  if (n == 0)
    throw IllegalParameterError("gamma_identity_check: index must be positive");
  GammaCounts counts = gamma_counts(h);
  GaussianRational lhs = integer_power(n, static_cast<long>(counts.upper_units));
  for (const auto& a : h.upper()) lhs *= pochhammer(a, n - 1);
  GaussianRational rhs = integer_power(n, static_cast<long>(counts.lower_units));
  for (const auto& b : augmented_lower(h)) rhs *= pochhammer(b, n - 1);
  return lhs == rhs;
}

std::vector<GaussianRational> unit_shift(std::vector<GaussianRational> params) {
  const GaussianRational one(1);
  for (auto& value : params)
    if (value == one) value = GaussianRational(2);
  return params;
}

bool power_sums_equal(const std::vector<GaussianRational>& u,
                      const std::vector<GaussianRational>& v,
                      std::size_t max_power) {
  if (u.size() != v.size())
    throw LengthMismatchError("power_sums_equal: lengths " +
                              std::to_string(u.size()) + " and " +
                              std::to_string(v.size()));
  return power_sums(u, max_power) == power_sums(v, max_power);
}

bool multisets_equal_via_newton(const std::vector<GaussianRational>& u,
                                const std::vector<GaussianRational>& v) {
  if (u.size() != v.size())
    throw LengthMismatchError("multisets_equal_via_newton: lengths " +
                              std::to_string(u.size()) + " and " +
                              std::to_string(v.size()));
  std::size_t m = u.size();
  return elementary_from_power_sums(power_sums(u, m)) ==
         elementary_from_power_sums(power_sums(v, m));
}

EigenReport classify_eigen(const HypSeries& h) {
  auto not_eigen = [](NotEigenReason reason) {
    EigenReport report;
    report.verdict = EigenVerdict::NotEigen;
    report.reason = reason;
    return report;
  };

  // The zero series is excluded by fiat: eigenvectors are nonzero.
  if (h.prefactor().is_zero()) return not_eigen(NotEigenReason::StructureMismatch);
  if (h.exponent() > 1) return not_eigen(NotEigenReason::BadExponent);
  if (h.scale() != GaussianRational(1))
    return not_eigen(NotEigenReason::StructureMismatch);

  HypSeries canon = h.canonical();
  std::vector<GaussianRational> aug = augmented_lower(canon);
  if (canon.upper().size() != aug.size())
    return not_eigen(NotEigenReason::Unbalanced);

  long exponent = 0;
  if (h.exponent() == 1) {
    // Shifting the coefficient index by one turns unit parameters into 2s;
    // the eigen patterns are exactly the shifted-multiset matches.
    if (!multisets_equal_via_newton(unit_shift(canon.upper()), unit_shift(aug)))
      return not_eigen(NotEigenReason::StructureMismatch);
    GammaCounts counts = gamma_counts(canon);
    exponent = static_cast<long>(counts.lower_units) -
               static_cast<long>(counts.upper_units);
  } else {
    // Constant term present: only the geometric series survives decimation.
    if (!multisets_equal_via_newton(canon.upper(), aug))
      return not_eigen(NotEigenReason::StructureMismatch);
  }

  // Structure said yes; confirm against actual decimations before ruling.
  constexpr std::size_t kConfirmOrder = 40;
  for (unsigned long n : {2ul, 3ul}) {
    TruncatedSeries wide = h.expand(n * kConfirmOrder + n);
    TruncatedSeries left = decimate(wide, n).truncated(kConfirmOrder);
    TruncatedSeries right =
        scaled(h.expand(kConfirmOrder), integer_power(n, exponent));
    if (left != right) return not_eigen(NotEigenReason::NumericMismatch);
  }

  EigenReport report;
  report.verdict = EigenVerdict::Eigen;
  report.exponent = exponent;
  report.normalized_form = std::move(canon);
  return report;
}

HypSeries make_eigenfunction(long exponent) {
  std::vector<GaussianRational> upper;
  std::vector<GaussianRational> lower;
  if (exponent > 0) {
    upper.assign(static_cast<std::size_t>(exponent), GaussianRational(2));
    lower.assign(static_cast<std::size_t>(exponent) - 1, GaussianRational(1));
  } else {
    upper.assign(static_cast<std::size_t>(-exponent) + 1, GaussianRational(1));
    lower.assign(static_cast<std::size_t>(-exponent), GaussianRational(2));
  }
  return {GaussianRational(1), 1, std::move(upper), std::move(lower),
          GaussianRational(1)};
}

}  // namespace hecke
