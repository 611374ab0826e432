#include "hecke/hecke_action.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/pochhammer.hpp"

namespace hecke {

HypSeries decimate(const HypSeries& h, unsigned long n) {
  if (n == 0) throw IllegalParameterError("decimate: index must be positive");
  if (n == 1) return h;

  const auto p = static_cast<long>(h.upper().size());
  const auto q = static_cast<long>(h.lower().size());
  std::vector<GaussianRational> aug = h.lower();
  aug.emplace_back(1);  // the factorial, as an explicit parameter

  std::vector<GaussianRational> upper_out;
  std::vector<GaussianRational> lower_out;
  upper_out.reserve(h.upper().size() * n);
  lower_out.reserve(aug.size() * n);
  GaussianRational prefactor = h.prefactor();
  std::size_t exponent_out;

  if (h.exponent() % n == 0) {
    // Surviving coefficients sit at offsets kn from the monomial: every
    // Pochhammer of length kn splits into n progressions modulo n.
    exponent_out = h.exponent() / n;
    GaussianRational inv_n = GaussianRational(static_cast<long>(n)).reciprocal();
    for (const auto& a : h.upper())
      for (unsigned long l = 0; l < n; ++l)
        upper_out.push_back((a + GaussianRational(static_cast<long>(l))) * inv_n);
    for (const auto& b : aug)
      for (unsigned long l = 0; l < n; ++l)
        lower_out.push_back((b + GaussianRational(static_cast<long>(l))) * inv_n);
  } else {
    // Offsets are kn + r + 1 with r = n - (j mod n) - 1: the truncated heads
    // of the split become constants on the prefactor, as does the matching
    // power of the argument scale.
    exponent_out = h.exponent() / n + 1;
    unsigned long r = n - h.exponent() % n - 1;
    for (const auto& a : h.upper()) {
      PochSplitOffset parts =
          pochhammer_split_offset(a, n, h.exponent(), 0).first;
      prefactor *= parts.constant;
      upper_out.insert(upper_out.end(), parts.factors.begin(),
                       parts.factors.end());
    }
    for (const auto& b : aug) {
      PochSplitOffset parts =
          pochhammer_split_offset(b, n, h.exponent(), 0).first;
      prefactor /= parts.constant;
      lower_out.insert(lower_out.end(), parts.factors.begin(),
                       parts.factors.end());
    }
    prefactor *= h.scale().pow(static_cast<long>(r) + 1);
  }

  // Exactly one unit lower parameter returns to being the factorial.
  auto unit = std::find(lower_out.begin(), lower_out.end(), GaussianRational(1));
  if (unit == lower_out.end())
    throw Error("decimate: internal error, no unit lower parameter produced");
  lower_out.erase(unit);

  GaussianRational scale = h.scale().pow(static_cast<long>(n)) *
                           integer_power(n, static_cast<long>(n) * (p - q - 1));
  return {std::move(prefactor), exponent_out, std::move(upper_out),
          std::move(lower_out), std::move(scale)};
}

GaussianRational parameter_sum_shift(const HypSeries& h, unsigned long n) {
  if (n == 0) throw IllegalParameterError("parameter_sum_shift: index must be positive");

  std::vector<GaussianRational> aug = h.lower();
  aug.emplace_back(1);
  GaussianRational inv_n = GaussianRational(static_cast<long>(n)).reciprocal();

  GaussianRational old_diff(0);
  for (const auto& a : h.upper()) old_diff += a;
  for (const auto& b : h.lower()) old_diff -= b;

  GaussianRational new_diff(0);
  for (const auto& a : h.upper())
    for (unsigned long l = 0; l < n; ++l)
      new_diff += (a + GaussianRational(static_cast<long>(l))) * inv_n;
  bool removed = false;
  for (const auto& b : aug) {
    for (unsigned long l = 0; l < n; ++l) {
      GaussianRational d = (b + GaussianRational(static_cast<long>(l))) * inv_n;
      if (!removed && d == GaussianRational(1)) {
        removed = true;  // this one is the factorial again
        continue;
      }
      new_diff -= d;
    }
  }

  return new_diff - old_diff;
}

}  // namespace hecke
