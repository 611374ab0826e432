#include <doctest.h>

#include <vector>

#include "hecke/errors.hpp"
#include "hecke/hyp_series.hpp"
#include "hecke/multiplicative.hpp"
#include "hecke/pochhammer.hpp"
#include "hecke/rational.hpp"
#include "hecke/spectral.hpp"

using hecke::CMVerdict;
using hecke::GaussianRational;
using hecke::Rational;

namespace {

GaussianRational q(long n, long d = 1) { return GaussianRational::ratio(n, d); }

// parameter vectors whose coefficient sequence is m^e: the eigenfunction
// parameters with the factorial made explicit as a unit lower entry
struct Family {
  std::vector<GaussianRational> upper, lower;
};

Family family_vectors(long e) {
  hecke::HypSeries h = hecke::make_eigenfunction(e);
  Family f{h.upper(), h.lower()};
  f.lower.emplace_back(1);
  return f;
}

}  // namespace

TEST_SUITE("multiplicative") {

TEST_CASE("coefficient sequence of the inverse-square family") {
  auto f = family_vectors(-2);
  auto c = hecke::hyp_coeff_sequence(f.upper, f.lower, 12);
  REQUIRE(c.size() == 13);  // 1-based with an unused slot 0
  CHECK(c[0].is_zero());
  for (std::size_t m = 1; m <= 12; ++m)
    CHECK(c[m] == GaussianRational::ratio(1, long(m * m)));
}

TEST_CASE("coefficient sequence agrees with direct products") {
  std::vector<GaussianRational> upper = {q(1, 2), GaussianRational(3)};
  std::vector<GaussianRational> lower = {q(5, 4)};
  auto c = hecke::hyp_coeff_sequence(upper, lower, 10);
  for (std::size_t m = 1; m <= 10; ++m) {
    GaussianRational direct(1);
    for (const auto& a : upper) direct *= hecke::pochhammer(a, m - 1);
    for (const auto& b : lower) direct /= hecke::pochhammer(b, m - 1);
    CHECK(c[m] == direct);
  }
}

TEST_CASE("coefficient sequence rejects illegal lower entries") {
  CHECK_THROWS_AS(
      hecke::hyp_coeff_sequence({q(1)}, {GaussianRational(0)}, 5),
      hecke::IllegalParameterError);
  CHECK_THROWS_AS(
      hecke::hyp_coeff_sequence({q(1)}, {GaussianRational(-2)}, 5),
      hecke::IllegalParameterError);
}

TEST_CASE("pairwise probe accepts a power sequence") {
  std::vector<GaussianRational> c(31, GaussianRational(0));
  for (std::size_t m = 1; m <= 30; ++m)
    c[m] = hecke::integer_power(m, 3);
  auto report = hecke::test_complete_multiplicativity(c);
  CHECK(report.verdict == CMVerdict::CompletelyMultiplicative);
  CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("pairwise probe finds the first broken pair") {
  std::vector<GaussianRational> c(13, GaussianRational(0));
  for (std::size_t m = 1; m <= 12; ++m)
    c[m] = hecke::integer_power(m, 2);
  c[6] += GaussianRational(1);  // damage c(2*3)
  auto report = hecke::test_complete_multiplicativity(c);
  REQUIRE(report.verdict == CMVerdict::NotCM);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->first == 2);
  CHECK(report.witness->second == 3);
}

TEST_CASE("pairwise probe pins the normalization at one") {
  std::vector<GaussianRational> zero_start = {GaussianRational(0),
                                              GaussianRational(0),
                                              GaussianRational(4)};
  auto r1 = hecke::test_complete_multiplicativity(zero_start);
  REQUIRE(r1.verdict == CMVerdict::NotCM);
  CHECK(*r1.witness == std::make_pair(std::size_t{1}, std::size_t{1}));

  // c(1) = 2 fails c(1*1) = c(1)^2
  std::vector<GaussianRational> two_start = {GaussianRational(0),
                                             GaussianRational(2),
                                             GaussianRational(4)};
  auto r2 = hecke::test_complete_multiplicativity(two_start);
  REQUIRE(r2.verdict == CMVerdict::NotCM);
  CHECK(*r2.witness == std::make_pair(std::size_t{1}, std::size_t{1}));
}

TEST_CASE("pairwise probe needs at least one value") {
  CHECK_THROWS_AS(
      hecke::test_complete_multiplicativity({GaussianRational(0)}),
      hecke::IllegalParameterError);
}

TEST_CASE("classifier confirms each power family") {
  for (long e = -3; e <= 3; ++e) {
    auto f = family_vectors(e);
    auto report = hecke::classify_cm(f.upper, f.lower, 60);
    REQUIRE(report.verdict == CMVerdict::CompletelyMultiplicative);
    REQUIRE(report.exponent.has_value());
    CHECK(*report.exponent == e);
    CHECK(*report.constant == GaussianRational(1));
  }
}

TEST_CASE("classifier rejects a perturbed family with an honest witness") {
  std::vector<GaussianRational> upper = {GaussianRational(3),
                                         GaussianRational(1),
                                         GaussianRational(1)};
  std::vector<GaussianRational> lower = {GaussianRational(2),
                                         GaussianRational(2),
                                         GaussianRational(1)};
  auto report = hecke::classify_cm(upper, lower, 60);
  REQUIRE(report.verdict == CMVerdict::NotCM);
  REQUIRE(report.witness.has_value());
  auto [m, k] = *report.witness;
  auto c = hecke::hyp_coeff_sequence(upper, lower, m * k);
  CHECK(c[m * k] != c[m] * c[k]);
}

TEST_CASE("classifier needs enough depth to justify a rejection") {
  // (3) over (2): the spectral route rejects, but two values cannot show a
  // counterexample, so the routes disagree and the mismatch is fatal
  std::vector<GaussianRational> upper = {GaussianRational(3)};
  std::vector<GaussianRational> lower = {GaussianRational(2)};
  CHECK_THROWS_AS(hecke::classify_cm(upper, lower, 2),
                  hecke::OracleMismatchError);

  auto report = hecke::classify_cm(upper, lower, 60);
  REQUIRE(report.verdict == CMVerdict::NotCM);
  CHECK(*report.witness == std::make_pair(std::size_t{2}, std::size_t{2}));
}

TEST_CASE("positive verdicts match the advertised closed form") {
  auto f = family_vectors(2);
  auto report = hecke::classify_cm(f.upper, f.lower, 40);
  REQUIRE(report.verdict == CMVerdict::CompletelyMultiplicative);
  auto c = hecke::hyp_coeff_sequence(f.upper, f.lower, 40);
  for (std::size_t m = 1; m <= 40; ++m)
    CHECK(c[m] == *report.constant * hecke::integer_power(m, *report.exponent));
}

}  // TEST_SUITE
