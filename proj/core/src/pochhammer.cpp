#include "hecke/pochhammer.hpp"

#include "hecke/errors.hpp"

namespace hecke {

GaussianRational pochhammer(const GaussianRational& base, std::size_t count) {
  GaussianRational product(1);
  GaussianRational term = base;
  for (std::size_t i = 0; i < count; ++i) {
    product *= term;
    term += GaussianRational(1);
  }
  return product;
}

GaussianRational pochhammer_split(const GaussianRational& base, unsigned long n,
                                  std::size_t k) {
  if (n == 0) throw IllegalParameterError("pochhammer_split: modulus must be positive");
  GaussianRational scale = integer_power(n, static_cast<long>(k * n));
  GaussianRational inv_n = GaussianRational(static_cast<long>(n)).reciprocal();
  GaussianRational product(1);
  for (unsigned long l = 0; l < n; ++l) {
    GaussianRational shifted = (base + GaussianRational(static_cast<long>(l))) * inv_n;
    product *= pochhammer(shifted, k);
  }
  return scale * product;
}

std::pair<PochSplitOffset, GaussianRational> pochhammer_split_offset(
    const GaussianRational& base, unsigned long n, unsigned long j,
    std::size_t k) {
  if (n < 2)
    throw IllegalParameterError("pochhammer_split_offset: modulus must be at least 2");
  if (j % n == 0)
    throw IllegalParameterError(
        "pochhammer_split_offset: exponent must not be divisible by the modulus");

  PochSplitOffset parts;
  parts.base = base;
  parts.modulus = n;
  parts.offset = n - (j % n) - 1;
  parts.constant = pochhammer(base, parts.offset + 1);

  GaussianRational inv_n = GaussianRational(static_cast<long>(n)).reciprocal();
  parts.factors.reserve(n);
  for (unsigned long i = parts.offset + 1; i <= parts.offset + n; ++i)
    parts.factors.push_back((base + GaussianRational(static_cast<long>(i))) * inv_n);

  GaussianRational value = parts.constant * integer_power(n, static_cast<long>(n * k));
  for (const auto& f : parts.factors) value *= pochhammer(f, k);
  return {parts, value};
}

}  // namespace hecke
