#pragma once

#include "hecke/hyp_series.hpp"
#include "hecke/rational.hpp"

namespace hecke {

/// Symbolic coefficient decimation: returns a hypergeometric presentation of
/// U_n applied to h, i.e. a series whose expansion equals the decimation of
/// the expansion of h, exactly and at every order.
///
/// The construction splits every length-kn (or offset length) Pochhammer in
/// the coefficient formula into n arithmetic progressions modulo n, one unit
/// lower parameter turns back into the factorial, and the leftover powers of
/// n join the argument scale.  When n does not divide the monomial exponent
/// the split-off constants multiply into the prefactor.
///
/// The result is raw: parameters come out in construction order and shared
/// upper/lower entries are not cancelled.  Apply HypSeries::canonical() for
/// the sorted, cancelled form.  n must be positive; n == 1 returns h
/// unchanged.
HypSeries decimate(const HypSeries& h, unsigned long n);

/// How much one decimation step shifts the balance of parameter sums:
///   (sum of new upper - sum of new lower) - (sum of old upper - sum of old lower)
/// computed over the stored vectors.  Equals (n-1)(p-q-1)/2 where p and q
/// count the stored upper and lower parameters; notably independent of the
/// monomial exponent.
GaussianRational parameter_sum_shift(const HypSeries& h, unsigned long n);

}  // namespace hecke
