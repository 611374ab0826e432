#include "hecke/verify.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "hecke/errors.hpp"
#include "hecke/hecke_action.hpp"
#include "hecke/multiplicative.hpp"
#include "hecke/pochhammer.hpp"
#include "hecke/spectral.hpp"

namespace hecke::verify {

long Rng::range(long lo, long hi) {
  // plain modulo: the tiny bias is irrelevant and the stream stays identical
  // across standard library implementations
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(raw() % span);
}

GaussianRational random_scalar(Rng& rng, long bound, bool allow_imag) {
  Rational re = make_rational(rng.range(-bound, bound), rng.range(1, bound));
  if (allow_imag && rng.chance(25)) {
    Rational im = make_rational(rng.range(-bound, bound), rng.range(1, bound));
    return {re, im};
  }
  return GaussianRational(re);
}

GaussianRational random_lower_param(Rng& rng, long bound) {
  while (true) {
    GaussianRational value = random_scalar(rng, bound, true);
    if (!value.is_nonpositive_integer()) return value;
  }
}

TruncatedSeries random_series(Rng& rng, std::size_t order, long bound,
                              bool allow_imag) {
  std::vector<GaussianRational> coeffs;
  coeffs.reserve(order + 1);
  for (std::size_t k = 0; k <= order; ++k)
    coeffs.push_back(random_scalar(rng, bound, allow_imag));
  return TruncatedSeries(std::move(coeffs));
}

HypSeries random_hyp(Rng& rng, const HypOptions& options) {
  auto p = static_cast<std::size_t>(
      rng.range(0, static_cast<long>(options.max_upper)));
  auto q = static_cast<std::size_t>(
      rng.range(0, static_cast<long>(options.max_lower)));
  std::vector<GaussianRational> upper;
  std::vector<GaussianRational> lower;
  for (std::size_t i = 0; i < p; ++i)
    upper.push_back(options.terminating_ok
                        ? random_scalar(rng, options.bound, options.allow_imag)
                        : random_lower_param(rng, options.bound));
  for (std::size_t i = 0; i < q; ++i)
    lower.push_back(random_lower_param(rng, options.bound));
  auto exponent = static_cast<std::size_t>(
      rng.range(static_cast<long>(options.min_exponent),
                static_cast<long>(options.max_exponent)));
  GaussianRational prefactor;
  do {
    prefactor = random_scalar(rng, options.bound, options.allow_imag);
  } while (prefactor.is_zero());
  GaussianRational scale(1);
  if (!options.unit_scale && rng.chance(50)) {
    do {
      scale = random_scalar(rng, 3, options.allow_imag);
    } while (scale.is_zero());
  }
  return {std::move(prefactor), exponent, std::move(upper), std::move(lower),
          std::move(scale)};
}

namespace {

SuiteResult pass(std::string suite, std::size_t cases, std::string detail = "") {
  return {std::move(suite), cases, true, std::move(detail)};
}

SuiteResult fail(std::string suite, std::size_t cases, std::string detail) {
  return {std::move(suite), cases, false, std::move(detail)};
}

std::string at_case(std::size_t index, const std::string& what) {
  return "case " + std::to_string(index) + ": " + what;
}

bool proportional(const TruncatedSeries& left, const TruncatedSeries& right,
                  const GaussianRational& factor) {
  std::size_t upto = std::min(left.order(), right.order());
  for (std::size_t k = 0; k <= upto; ++k)
    if (left[k] != factor * right[k]) return false;
  return true;
}

}  // namespace

SuiteResult operator_algebra_suite(std::uint64_t seed, std::size_t cases) {
  const std::string name = "operator-algebra";
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    auto order = static_cast<std::size_t>(rng.range(24, 60));
    TruncatedSeries f = random_series(rng, order, 9, true);
    auto n = static_cast<unsigned long>(rng.range(2, 5));
    auto m = static_cast<unsigned long>(rng.range(2, 5));

    if (decimate(decimate(f, n), m) != decimate(f, n * m))
      return fail(name, i + 1, at_case(i, "repeated decimation does not merge"));

    TruncatedSeries vm = dilate(f, m, m * order);
    if (dilate(vm, n, n * m * order) != dilate(f, n * m, n * m * order))
      return fail(name, i + 1, at_case(i, "repeated dilation does not merge"));

    if (decimate(dilate(f, n, n * order), n) != f)
      return fail(name, i + 1,
                  at_case(i, "dilation then decimation is not the identity"));

    unsigned long g = std::gcd(n, m);
    TruncatedSeries lhs = decimate(dilate(f, m, m * order), n);
    TruncatedSeries reduced = decimate(f, n / g);
    TruncatedSeries rhs = dilate(reduced, m / g, (m / g) * reduced.order());
    if (!lhs.equal_on_overlap(rhs))
      return fail(name, i + 1, at_case(i, "mixed composition does not reduce"));
  }
  return pass(name, cases);
}

SuiteResult adjoint_suite(std::uint64_t seed, std::size_t cases,
                          std::size_t half_order) {
  const std::string name = "adjoint";
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    auto n = static_cast<unsigned long>(rng.range(2, 3));
    TruncatedSeries f = random_series(rng, n * half_order, 6, true);
    TruncatedSeries g = random_series(rng, half_order, 6, true);
    long num = rng.range(1, 3);
    Rational radius = make_rational(num, rng.range(num + 1, 5));

    InnerProductValue left = inner_product(f, dilate(g, n, n * half_order), radius);
    Rational radius_n(1);
    for (unsigned long t = 0; t < n; ++t) radius_n *= radius;
    InnerProductValue right = inner_product(decimate(f, n), g, radius_n);
    if (left.value != right.value)
      return fail(name, i + 1,
                  at_case(i, "pairing against a dilation differs from the "
                             "decimated pairing at n=" + std::to_string(n)));
  }
  return pass(name, cases);
}

SuiteResult pochhammer_suite(std::uint64_t seed, std::size_t cases) {
  const std::string name = "pochhammer";
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    GaussianRational base = random_scalar(rng, 9, true);
    auto n = static_cast<unsigned long>(rng.range(1, 6));
    auto k = static_cast<std::size_t>(rng.range(0, 18));
    if (pochhammer_split(base, n, k) != pochhammer(base, n * k))
      return fail(name, i + 1, at_case(i, "modulus split of (" + base.str() +
                                              ")_" + std::to_string(n * k)));

    if (n >= 2) {
      auto j = static_cast<unsigned long>(rng.range(1, 30));
      if (j % n == 0) ++j;
      auto [parts, value] = pochhammer_split_offset(base, n, j, k);
      if (parts.offset != n - (j % n) - 1 || parts.factors.size() != n)
        return fail(name, i + 1, at_case(i, "offset split shape"));
      if (parts.constant != pochhammer(base, parts.offset + 1))
        return fail(name, i + 1, at_case(i, "offset split constant"));
      if (value != pochhammer(base, n * k + parts.offset + 1))
        return fail(name, i + 1, at_case(i, "offset split value"));
    }

    GaussianRational c = random_lower_param(rng, 9);
    auto t = static_cast<std::size_t>(rng.range(0, 15));
    GaussianRational shift(static_cast<long>(t));
    if (c + shift != c * pochhammer(c + GaussianRational(1), t) / pochhammer(c, t))
      return fail(name, i + 1, at_case(i, "index-shift identity"));

    GaussianRational a = random_scalar(rng, 9, true);
    if (pochhammer(a, t + 1) != pochhammer(a, t) * (a + shift))
      return fail(name, i + 1, at_case(i, "one-step ratio"));
  }
  return pass(name, cases);
}

SuiteResult oracle_suite(std::uint64_t seed, std::size_t cases,
                         std::size_t check_order) {
  const std::string name = "oracle";
  Rng rng(seed);
  std::size_t divisible = 0;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    const bool want_divisible = (i % 2 == 0);
    HypOptions options;
    HypSeries draft = random_hyp(rng, options);
    unsigned long n;
    std::size_t j;
    if (want_divisible) {
      n = static_cast<unsigned long>(rng.range(1, 5));
      j = n * static_cast<std::size_t>(rng.range(0, static_cast<long>(7 / n)));
    } else {
      n = static_cast<unsigned long>(rng.range(2, 5));
      do {
        j = static_cast<std::size_t>(rng.range(1, 7));
      } while (j % n == 0);
    }
    HypSeries h(draft.prefactor(), j, draft.upper(), draft.lower(), draft.scale());

    HypSeries image = decimate(h, n);
    TruncatedSeries symbolic = image.expand(check_order);
    TruncatedSeries numeric =
        decimate(h.expand(n * check_order + n), n).truncated(check_order);
    if (symbolic != numeric)
      return fail(name, i + 1,
                  at_case(i, "symbolic and numeric decimation differ (n=" +
                                 std::to_string(n) + ", exponent=" +
                                 std::to_string(j) + ")"));
    if (image.canonical().expand(check_order) != symbolic)
      return fail(name, i + 1,
                  at_case(i, "canonical form changes the expansion"));
    (want_divisible ? divisible : offset) += 1;
  }
  return pass(name, cases,
              "divisible=" + std::to_string(divisible) +
                  " offset=" + std::to_string(offset));
}

SuiteResult spectrum_suite(std::uint64_t seed) {
  const std::string name = "spectrum";
  std::size_t cases = 0;
  constexpr std::size_t kOrder = 30;

  for (long e = -4; e <= 4; ++e) {
    HypSeries h = make_eigenfunction(e);
    EigenReport report = classify_eigen(h);
    ++cases;
    if (report.verdict != EigenVerdict::Eigen || *report.exponent != e)
      return fail(name, cases,
                  "k^" + std::to_string(e) + " series not classified as eigen");
    for (unsigned long n : {2ul, 3ul, 5ul}) {
      ++cases;
      if (eigenvalue_candidate(h, n) != integer_power(n, e))
        return fail(name, cases,
                    "predicted eigenvalue wrong at e=" + std::to_string(e) +
                        ", n=" + std::to_string(n));
      if (!gamma_identity_check(h, n))
        return fail(name, cases,
                    "power-of-n identity fails at e=" + std::to_string(e) +
                        ", n=" + std::to_string(n));
      TruncatedSeries wide = h.expand(n * kOrder + n);
      TruncatedSeries left = decimate(wide, n).truncated(kOrder);
      if (left != scaled(h.expand(kOrder), integer_power(n, e)))
        return fail(name, cases,
                    "decimation does not scale by n^e at e=" +
                        std::to_string(e) + ", n=" + std::to_string(n));
    }
  }

  {
    EigenReport dilog = classify_eigen(dilogarithm_series());
    ++cases;
    if (dilog.verdict != EigenVerdict::Eigen || *dilog.exponent != -2)
      return fail(name, cases, "dilogarithm should be eigen with exponent -2");
    EigenReport geo = classify_eigen(geometric_series());
    ++cases;
    if (geo.verdict != EigenVerdict::Eigen || *geo.exponent != 0)
      return fail(name, cases, "geometric series should be eigen with exponent 0");
  }

  const struct {
    HypSeries series;
    NotEigenReason reason;
    const char* label;
  } non_examples[] = {
      {HypSeries(GaussianRational(1), 0, {}, {}, GaussianRational(1)),
       NotEigenReason::Unbalanced, "exponential"},
      {HypSeries(GaussianRational(1), 2, {GaussianRational(1)}, {},
                 GaussianRational(1)),
       NotEigenReason::BadExponent, "x^2 prefactor"},
      {HypSeries(GaussianRational(1), 1,
                 {GaussianRational(1), GaussianRational(1), GaussianRational(1)},
                 {GaussianRational(2), GaussianRational(2)}, GaussianRational(2)),
       NotEigenReason::StructureMismatch, "scaled argument"},
      {HypSeries(GaussianRational(0), 1, {GaussianRational(2)}, {},
                 GaussianRational(1)),
       NotEigenReason::StructureMismatch, "zero series"},
      {HypSeries(GaussianRational(1), 1,
                 {GaussianRational(3), GaussianRational(1)},
                 {GaussianRational(2)}, GaussianRational(1)),
       NotEigenReason::StructureMismatch, "wrong parameter pattern"},
  };
  for (const auto& example : non_examples) {
    EigenReport report = classify_eigen(example.series);
    ++cases;
    if (report.verdict != EigenVerdict::NotEigen || *report.reason != example.reason)
      return fail(name, cases,
                  std::string(example.label) + " misclassified");
  }

  // Random high monomial exponents are rejected outright.
  Rng rng(seed);
  for (std::size_t i = 0; i < 25; ++i) {
    HypOptions options;
    options.min_exponent = 2;
    options.max_exponent = 9;
    options.unit_scale = true;
    EigenReport report = classify_eigen(random_hyp(rng, options));
    ++cases;
    if (report.verdict != EigenVerdict::NotEigen ||
        *report.reason != NotEigenReason::BadExponent)
      return fail(name, cases, at_case(i, "high exponent not rejected"));
  }

  // Random constant-term series: the verdict must match an actual
  // proportionality test of the decimations.  Terminating draws are
  // excluded: a polynomial is a different function than its parameters
  // advertise, so presentation-based classification does not speak for it.
  for (std::size_t i = 0; i < 25; ++i) {
    HypOptions options;
    options.max_exponent = 0;
    options.unit_scale = true;
    options.terminating_ok = false;
    HypSeries h = random_hyp(rng, options);
    EigenReport report = classify_eigen(h);
    bool prop = true;
    for (unsigned long n : {2ul, 3ul}) {
      TruncatedSeries wide = h.expand(n * 25 + n);
      prop = prop && proportional(decimate(wide, n).truncated(25), h.expand(25),
                                  GaussianRational(1));
    }
    ++cases;
    if ((report.verdict == EigenVerdict::Eigen) != prop)
      return fail(name, cases,
                  at_case(i, "constant-term verdict disagrees with decimation"));
  }

  return pass(name, cases);
}

SuiteResult newton_suite(std::uint64_t seed, std::size_t cases) {
  const std::string name = "newton";
  Rng rng(seed);
  auto sorted_equal = [](std::vector<GaussianRational> u,
                         std::vector<GaussianRational> v) {
    auto lex = [](const GaussianRational& x, const GaussianRational& y) {
      return GaussianRational::compare_lex(x, y) < 0;
    };
    std::sort(u.begin(), u.end(), lex);
    std::sort(v.begin(), v.end(), lex);
    return u == v;
  };

  for (std::size_t i = 0; i < cases; ++i) {
    auto len = static_cast<std::size_t>(rng.range(0, 6));
    std::vector<GaussianRational> u;
    for (std::size_t t = 0; t < len; ++t) u.push_back(random_scalar(rng, 6, true));
    std::vector<GaussianRational> v = u;
    switch (rng.range(0, 2)) {
      case 0:  // permuted copy: must compare equal
        for (std::size_t t = len; t > 1; --t)
          std::swap(v[t - 1], v[static_cast<std::size_t>(
                                  rng.range(0, static_cast<long>(t) - 1))]);
        break;
      case 1:  // independent draw
        for (auto& value : v) value = random_scalar(rng, 6, true);
        break;
      default:  // one entry nudged
        if (len > 0)
          v[static_cast<std::size_t>(rng.range(0, static_cast<long>(len) - 1))] +=
              GaussianRational(1);
        break;
    }
    bool expected = sorted_equal(u, v);
    if (multisets_equal_via_newton(u, v) != expected)
      return fail(name, i + 1,
                  at_case(i, "Newton route disagrees with sorting"));
    if (power_sums_equal(u, v, len) != expected)
      return fail(name, i + 1,
                  at_case(i, "power sums disagree with sorting"));
  }

  bool threw = false;
  try {
    multisets_equal_via_newton({GaussianRational(1)}, {});
  } catch (const LengthMismatchError&) {
    threw = true;
  }
  if (!threw)
    return fail(name, cases + 1, "length mismatch not rejected");
  return pass(name, cases + 1);
}

SuiteResult multiplicative_suite(std::uint64_t seed, std::size_t perturbations,
                                 std::size_t depth) {
  const std::string name = "multiplicative";
  Rng rng(seed);
  std::size_t cases = 0;

  auto family_vectors = [](long e) {
    HypSeries h = make_eigenfunction(e);
    std::vector<GaussianRational> upper = h.upper();
    std::vector<GaussianRational> lower = h.lower();
    lower.emplace_back(1);  // coefficient ratios carry no implicit factorial
    return std::pair{std::move(upper), std::move(lower)};
  };

  for (long e = -4; e <= 4; ++e) {
    auto [upper, lower] = family_vectors(e);
    CMReport report = classify_cm(upper, lower, depth);
    ++cases;
    if (report.verdict != CMVerdict::CompletelyMultiplicative ||
        *report.exponent != e)
      return fail(name, cases,
                  "k^" + std::to_string(e) + " family not multiplicative");
    std::vector<GaussianRational> seq = hyp_coeff_sequence(upper, lower, depth);
    for (std::size_t m = 1; m <= depth; ++m)
      if (seq[m] != integer_power(m, e))
        return fail(name, cases,
                    "k^" + std::to_string(e) + " family has wrong values");
  }

  auto stays_multiplicative = [](const std::vector<GaussianRational>& upper,
                                 const std::vector<GaussianRational>& lower) {
    // shape test: with a unit appended to both sides, the multiplicative
    // families are exactly the shifted-multiset matches
    std::vector<GaussianRational> u = upper;
    std::vector<GaussianRational> l = lower;
    u.emplace_back(1);
    l.emplace_back(1);
    if (u.size() != l.size()) return false;
    return multisets_equal_via_newton(unit_shift(u), unit_shift(l));
  };

  for (std::size_t i = 0; i < perturbations; ++i) {
    long e = rng.range(-4, 4);
    auto [upper, lower] = family_vectors(e);
    const std::size_t total = upper.size() + lower.size();
    bool found = false;
    for (long delta = 1; delta <= 3 && !found; ++delta) {
      auto start =
          static_cast<std::size_t>(rng.range(0, static_cast<long>(total) - 1));
      for (std::size_t t = 0; t < total && !found; ++t) {
        std::size_t pos = (start + t) % total;
        auto u = upper;
        auto l = lower;
        if (pos < u.size())
          u[pos] += GaussianRational(delta);
        else
          l[pos - u.size()] += GaussianRational(delta);
        if (stays_multiplicative(u, l)) continue;  // slid along the family
        found = true;
        upper = std::move(u);
        lower = std::move(l);
      }
    }
    ++cases;
    if (!found)
      return fail(name, cases, at_case(i, "no symmetry-breaking nudge found"));

    CMReport report = classify_cm(upper, lower, depth);
    if (report.verdict != CMVerdict::NotCM || !report.witness)
      return fail(name, cases,
                  at_case(i, "perturbed family still multiplicative"));
    auto [m, k] = *report.witness;
    if (m * k > 30)
      return fail(name, cases,
                  at_case(i, "witness (" + std::to_string(m) + ", " +
                                 std::to_string(k) + ") appears too late"));
    std::vector<GaussianRational> seq = hyp_coeff_sequence(upper, lower, depth);
    if (seq[m * k] == seq[m] * seq[k])
      return fail(name, cases, at_case(i, "reported witness does not witness"));
  }

  return pass(name, cases);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "operator-algebra", "adjoint",  "pochhammer", "oracle",
      "spectrum",         "newton",   "multiplicative"};
  return names;
}

SuiteResult run_suite(std::string_view name, std::uint64_t seed) {
  if (name == "operator-algebra") return operator_algebra_suite(seed);
  if (name == "adjoint") return adjoint_suite(seed);
  if (name == "pochhammer") return pochhammer_suite(seed);
  if (name == "oracle") return oracle_suite(seed);
  if (name == "spectrum") return spectrum_suite(seed);
  if (name == "newton") return newton_suite(seed);
  if (name == "multiplicative") return multiplicative_suite(seed);
  throw IllegalParameterError("unknown verification suite \"" +
                              std::string(name) + "\"");
}

}  // namespace hecke::verify
