#include <doctest.h>

#include "hecke/errors.hpp"
#include "hecke/pochhammer.hpp"
#include "hecke/rational.hpp"

using hecke::GaussianRational;
using hecke::Rational;

namespace {

GaussianRational q(long n, long d = 1) { return GaussianRational::ratio(n, d); }

}  // namespace

TEST_SUITE("pochhammer") {

TEST_CASE("rising factorial on small inputs") {
  CHECK(hecke::pochhammer(GaussianRational(3), 4) == GaussianRational(360));
  CHECK(hecke::pochhammer(GaussianRational(1), 5) == GaussianRational(120));
  CHECK(hecke::pochhammer(GaussianRational(-2), 4) == GaussianRational(0));
  CHECK(hecke::pochhammer(GaussianRational(-2), 2) == GaussianRational(2));
  CHECK(hecke::pochhammer(q(1, 2), 3) == q(15, 8));
  CHECK(hecke::pochhammer(GaussianRational(7), 0) == GaussianRational(1));
  // (i)_2 = i(i+1) = -1 + i
  CHECK(hecke::pochhammer(GaussianRational::unit_imaginary(), 2) ==
        GaussianRational::complex_ratio(-1, 1, 1, 1));
}

TEST_CASE("index shift identity") {
  // (c)_{t+k} = (c)_t * (c+t)_k
  GaussianRational c = q(2, 3);
  for (unsigned long t : {0ul, 1ul, 3ul})
    for (unsigned long k : {0ul, 2ul, 5ul})
      CHECK(hecke::pochhammer(c, t + k) ==
            hecke::pochhammer(c, t) * hecke::pochhammer(c + GaussianRational(long(t)), k));
}

TEST_CASE("split product equals a plain rising factorial") {
  // n^{nk} * prod_{l<n} ((c+l)/n)_k == (c)_{nk}
  for (long num : {1l, 2l, 5l, -3l})
    for (long den : {1l, 2l, 3l}) {
      GaussianRational c = q(num, den);
      for (unsigned long n : {1ul, 2ul, 3ul, 4ul})
        for (unsigned long k : {0ul, 1ul, 2ul, 4ul})
          CHECK(hecke::pochhammer_split(c, n, k) == hecke::pochhammer(c, n * k));
    }
  CHECK_THROWS_AS(hecke::pochhammer_split(q(1), 0, 2),
                  hecke::IllegalParameterError);
}

TEST_CASE("offset split has the documented shape") {
  // n = 3, j = 4: remainder j mod n = 1, so offset r = 3 - 1 - 1 = 1.
  GaussianRational base = q(1, 2);
  auto [sys, value] = hecke::pochhammer_split_offset(base, 3, 4, 2);

  CHECK(sys.offset == 1);
  CHECK(sys.modulus == 3);
  CHECK(sys.base == base);
  CHECK(sys.constant == hecke::pochhammer(base, 2));  // (base)_{r+1}
  REQUIRE(sys.factors.size() == 3);
  // factors are (base + i)/n for i = r+1 .. r+n
  CHECK(sys.factors[0] == (base + GaussianRational(2)) / GaussianRational(3));
  CHECK(sys.factors[1] == (base + GaussianRational(3)) / GaussianRational(3));
  CHECK(sys.factors[2] == (base + GaussianRational(4)) / GaussianRational(3));

  GaussianRational expect = sys.constant * hecke::integer_power(3, 3 * 2);
  for (const auto& f : sys.factors) expect *= hecke::pochhammer(f, 2);
  CHECK(value == expect);
}

TEST_CASE("offset split reproduces shifted rising factorials") {
  // constant * n^{nk} * prod (factors)_k == (base)_{r+1+nk}
  for (unsigned long n : {2ul, 3ul, 5ul})
    for (unsigned long j = 1; j < 2 * n + 3; ++j) {
      if (j % n == 0) continue;
      GaussianRational base = q(3, 4);
      for (unsigned long k : {0ul, 1ul, 3ul}) {
        auto [sys, value] = hecke::pochhammer_split_offset(base, n, j, k);
        CHECK(value == hecke::pochhammer(base, sys.offset + 1 + n * k));
      }
    }
}

TEST_CASE("offset split rejects degenerate shapes") {
  CHECK_THROWS_AS(hecke::pochhammer_split_offset(q(1), 1, 1, 2),
                  hecke::IllegalParameterError);
  CHECK_THROWS_AS(hecke::pochhammer_split_offset(q(1), 0, 1, 2),
                  hecke::IllegalParameterError);
  // divisible index belongs to the plain split, not the offset one
  CHECK_THROWS_AS(hecke::pochhammer_split_offset(q(1), 3, 6, 2),
                  hecke::IllegalParameterError);
  CHECK_THROWS_AS(hecke::pochhammer_split_offset(q(1), 2, 0, 2),
                  hecke::IllegalParameterError);
}

TEST_CASE("one-step ratio of rising factorials") {
  // (c)_{k+1} / (c)_k = c + k whenever (c)_k != 0
  GaussianRational c = GaussianRational::complex_ratio(1, 2, 1, 3);
  for (unsigned long k : {0ul, 1ul, 4ul}) {
    GaussianRational num = hecke::pochhammer(c, k + 1);
    GaussianRational den = hecke::pochhammer(c, k);
    CHECK(num == den * (c + GaussianRational(long(k))));
  }
}

}  // TEST_SUITE
