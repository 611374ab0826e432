#include "hecke/hyp_series.hpp"

#include <algorithm>
#include <utility>

#include "hecke/errors.hpp"
#include "hecke/pochhammer.hpp"

namespace hecke {

HypSeries::HypSeries(GaussianRational prefactor, std::size_t exponent,
                     std::vector<GaussianRational> upper,
                     std::vector<GaussianRational> lower, GaussianRational scale)
    : prefactor_(std::move(prefactor)),
      exponent_(exponent),
      upper_(std::move(upper)),
      lower_(std::move(lower)),
      scale_(std::move(scale)) {
  for (const auto& b : lower_)
    if (b.is_nonpositive_integer())
      throw IllegalParameterError("lower parameter " + b.str() +
                                  " is a non-positive integer");
}

GaussianRational HypSeries::coefficient(std::size_t index) const {
  if (index < exponent_) return GaussianRational(0);
  std::size_t k = index - exponent_;
  GaussianRational num = prefactor_ * scale_.pow(static_cast<long>(k));
  for (const auto& a : upper_) num *= pochhammer(a, k);
  GaussianRational den = pochhammer(GaussianRational(1), k);  // k!
  for (const auto& b : lower_) den *= pochhammer(b, k);
  return num / den;
}

TruncatedSeries HypSeries::expand(std::size_t order) const {
  std::vector<GaussianRational> out(order + 1);
  if (exponent_ <= order) {
    GaussianRational term = prefactor_;
    for (std::size_t k = 0; exponent_ + k <= order; ++k) {
      out[exponent_ + k] = term;
      // ratio of consecutive terms: scale * prod(a+k) / (prod(b+k) * (k+1))
      GaussianRational shift(static_cast<long>(k));
      GaussianRational num = scale_;
      for (const auto& a : upper_) num *= a + shift;
      GaussianRational den(static_cast<long>(k + 1));
      for (const auto& b : lower_) den *= b + shift;
      term *= num / den;
      if (term.is_zero()) break;  // terminated; the rest stays zero
    }
  }
  return TruncatedSeries(std::move(out));
}

HypSeries HypSeries::canonical() const {
  std::vector<GaussianRational> a = upper_;
  std::vector<GaussianRational> b = lower_;
  for (auto it = a.begin(); it != a.end();) {
    auto match = std::find(b.begin(), b.end(), *it);
    if (match != b.end()) {
      b.erase(match);
      it = a.erase(it);
    } else {
      ++it;
    }
  }
  std::sort(a.begin(), a.end(), [](const auto& x, const auto& y) {
    return GaussianRational::compare_lex(x, y) < 0;
  });
  std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) {
    return GaussianRational::compare_lex(x, y) < 0;
  });
  return {prefactor_, exponent_, std::move(a), std::move(b), scale_};
}

HypSeries dilogarithm_series() {
  return {GaussianRational(1), 1,
          {GaussianRational(1), GaussianRational(1), GaussianRational(1)},
          {GaussianRational(2), GaussianRational(2)},
          GaussianRational(1)};
}

HypSeries geometric_series() {
  return {GaussianRational(1), 0, {GaussianRational(1)}, {}, GaussianRational(1)};
}

}  // namespace hecke
