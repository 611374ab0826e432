#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

/// Rising factorial (base)_count = base (base+1) ... (base+count-1), with the
/// empty product equal to 1.
GaussianRational pochhammer(const GaussianRational& base, std::size_t count);

/// Evaluates (base)_{k*n} through its factorization into n arithmetic
/// progressions modulo n:
///   (base)_{kn} = n^{kn} * prod_{l=0}^{n-1} ((base+l)/n)_k.
/// Requires n >= 1 (throws IllegalParameterError on n == 0).  Exists as an
/// independent route to the plain product, for cross-checking.
GaussianRational pochhammer_split(const GaussianRational& base, unsigned long n,
                                  std::size_t k);

/// The pieces of the offset splitting below, so callers can reuse the
/// factors symbolically instead of just multiplying them out.
struct PochSplitOffset {
  GaussianRational base;
  unsigned long modulus = 1;              // n
  unsigned long offset = 0;               // r, in [0, n-2]
  GaussianRational constant;              // (base)_{r+1}
  std::vector<GaussianRational> factors;  // (base+r+1)/n, ..., (base+r+n)/n
};

/// Splitting of (base)_N for the offset length N = n*k + r + 1, where
/// r = n - (j mod n) - 1 and n does not divide j:
///   (base)_N = n^{nk} * (base)_{r+1} * prod_{i=r+1}^{r+n} ((base+i)/n)_k.
/// Returns the symbolic pieces together with the evaluated product.
/// Throws IllegalParameterError when n < 2 or n divides j (there is no
/// offset to split off in those cases).
std::pair<PochSplitOffset, GaussianRational> pochhammer_split_offset(
    const GaussianRational& base, unsigned long n, unsigned long j,
    std::size_t k);

}  // namespace hecke
