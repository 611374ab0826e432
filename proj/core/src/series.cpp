#include "hecke/series.hpp"

#include <algorithm>
#include <utility>

#include "hecke/errors.hpp"

namespace hecke {

TruncatedSeries::TruncatedSeries(std::vector<GaussianRational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw IllegalParameterError("TruncatedSeries needs at least the constant term");
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<GaussianRational>(order + 1));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
  if (new_order > order())
    throw InsufficientOrderError("truncated: order " + std::to_string(new_order) +
                                 " exceeds stored order " + std::to_string(order()));
  return TruncatedSeries({coeffs_.begin(), coeffs_.begin() + (new_order + 1)});
}

bool TruncatedSeries::equal_on_overlap(const TruncatedSeries& other) const {
  std::size_t upto = std::min(order(), other.order());
  for (std::size_t k = 0; k <= upto; ++k)
    if (coeffs_[k] != other.coeffs_[k]) return false;
  return true;
}

TruncatedSeries decimate(const TruncatedSeries& f, unsigned long n) {
  if (n == 0) throw IllegalParameterError("decimate: index must be positive");
  std::vector<GaussianRational> out;
  out.reserve(f.order() / n + 1);
  for (std::size_t k = 0; n * k <= f.order(); ++k) out.push_back(f[n * k]);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries dilate(const TruncatedSeries& f, unsigned long n,
                       std::size_t out_order) {
  if (n == 0) throw IllegalParameterError("dilate: index must be positive");
  if (out_order > n * f.order())
    throw InsufficientOrderError(
        "dilate: requested order " + std::to_string(out_order) +
        " needs input order beyond " + std::to_string(f.order()));
  std::vector<GaussianRational> out(out_order + 1);
  for (std::size_t k = 0; k * n <= out_order; ++k) out[k * n] = f[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries hadamard(const TruncatedSeries& f, const TruncatedSeries& g) {
  std::size_t upto = std::min(f.order(), g.order());
  std::vector<GaussianRational> out;
  out.reserve(upto + 1);
  for (std::size_t k = 0; k <= upto; ++k) out.push_back(f[k] * g[k]);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries scaled(const TruncatedSeries& f, const GaussianRational& factor) {
  std::vector<GaussianRational> out;
  out.reserve(f.order() + 1);
  for (const auto& c : f.coeffs()) out.push_back(c * factor);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries sum(const TruncatedSeries& f, const TruncatedSeries& g) {
  std::size_t upto = std::min(f.order(), g.order());
  std::vector<GaussianRational> out;
  out.reserve(upto + 1);
  for (std::size_t k = 0; k <= upto; ++k) out.push_back(f[k] + g[k]);
  return TruncatedSeries(std::move(out));
}

InnerProductValue inner_product(const TruncatedSeries& f,
                                const TruncatedSeries& g,
                                const Rational& radius) {
  if (radius <= 0)
    throw IllegalParameterError("inner_product: radius must be positive");
  std::size_t upto = std::min(f.order(), g.order());
  Rational r2 = radius * radius;
  Rational weight(1);
  GaussianRational acc;
  for (std::size_t k = 0; k <= upto; ++k) {
    acc += f[k] * g[k].conjugate() * GaussianRational(weight);
    weight *= r2;
  }
  return {acc, radius, upto};
}

}  // namespace hecke
