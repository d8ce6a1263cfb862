#pragma once

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ineq/errors.hpp"
#include "ineq/micro_measures.hpp"
#include "ineq/sample.hpp"

namespace ineq {

/// Bottom-share over top-share ratio B_x / T_x, canonical orientation, in [0, 1].
template <typename Scalar = double>
class ShareRatio {
 public:
  static ShareRatio from_b_over_t(Scalar b_over_t) { return ShareRatio(b_over_t); }

  /// From the T_x / B_x orientation printed in published tables. An infinite
  /// value (B_x = 0) maps to zero.
  static ShareRatio from_t_over_b(Scalar t_over_b) {
    if (std::isnan(static_cast<double>(t_over_b)) || t_over_b < Scalar(1))
      throw DomainError("T/B ratio must be >= 1");
    if (std::isinf(static_cast<double>(t_over_b))) return ShareRatio(Scalar(0));
    return ShareRatio(Scalar(1) / t_over_b);
  }

  Scalar value() const { return b_over_t_; }
  Scalar t_over_b() const {
    return b_over_t_ == Scalar(0) ? std::numeric_limits<Scalar>::infinity() : Scalar(1) / b_over_t_;
  }

 private:
  explicit ShareRatio(Scalar b_over_t) : b_over_t_(b_over_t) {
    if (!(b_over_t >= Scalar(0) && b_over_t <= Scalar(1)))
      throw DomainError("B/T ratio must lie in [0, 1]");
  }
  Scalar b_over_t_;
};

/// Exponent that balances the tail term against the Gini term, in (0, 1].
template <typename Scalar = double>
class Weight {
 public:
  explicit Weight(Scalar alpha) : alpha_(alpha) {
    if (!(alpha > Scalar(0) && alpha <= Scalar(1))) throw DomainError("weight must lie in (0, 1]");
  }
  static Weight quarter() { return Weight(Scalar(1) / Scalar(4)); }
  Scalar value() const { return alpha_; }

 private:
  Scalar alpha_;
};

template <typename Scalar = double>
struct CompositeResult {
  Scalar gini;
  ShareRatio<Scalar> ratio;
  Weight<Scalar> weight;
  Scalar h;
  Scalar index_i;
  Scalar alt_index;  // +inf when B_x = 0
};

/// H = 1 - ratio^alpha.
template <typename Scalar>
Scalar h_transform(ShareRatio<Scalar> ratio, Weight<Scalar> weight) {
  return Scalar(1) - std::pow(ratio.value(), weight.value());
}

/// Solves avg_gini = 1 - avg_ratio^alpha for alpha.
///
/// Both averages must lie strictly inside (0, 1). A solution outside (0, 1]
/// is not a usable weight and is reported as CalibrationDomainError as well.
template <typename Scalar>
Weight<Scalar> calibrate_alpha(Scalar avg_gini, Scalar avg_ratio) {
  if (!(avg_gini > Scalar(0) && avg_gini < Scalar(1)))
    throw CalibrationDomainError("average Gini must lie in (0, 1)");
  if (!(avg_ratio > Scalar(0) && avg_ratio < Scalar(1)))
    throw CalibrationDomainError("average B/T ratio must lie in (0, 1)");
  const Scalar alpha = std::log(Scalar(1) - avg_gini) / std::log(avg_ratio);
  if (!(alpha > Scalar(0) && alpha <= Scalar(1)))
    throw CalibrationDomainError("calibrated weight " + std::to_string(static_cast<double>(alpha)) +
                                 " falls outside (0, 1]");
  return Weight<Scalar>(alpha);
}

/// Equal-weighted mean of per-sample weights.
template <typename Scalar>
Weight<Scalar> mean_alpha(std::span<const Weight<Scalar>> alphas) {
  if (alphas.empty()) throw EmptyInputError("no weights to average");
  Scalar sum(0);
  for (const auto& a : alphas) sum += a.value();
  return Weight<Scalar>(sum / Scalar(alphas.size()));
}

template <typename Scalar>
Weight<Scalar> mean_alpha(const std::vector<Weight<Scalar>>& alphas) {
  return mean_alpha(std::span<const Weight<Scalar>>(alphas));
}

/// sqrt((100 g)^2 + (T/B)^2) / 100; 0.01 at perfect equality.
template <typename Scalar>
Scalar alternative_index(Scalar gini, Scalar t_over_b) {
  if (!(gini >= Scalar(0) && gini <= Scalar(1))) throw DomainError("Gini must lie in [0, 1]");
  if (std::isnan(static_cast<double>(t_over_b)) || t_over_b < Scalar(1))
    throw DomainError("T/B ratio must be >= 1");
  if (std::isinf(static_cast<double>(t_over_b))) return std::numeric_limits<Scalar>::infinity();
  const Scalar g = gini * Scalar(100);
  return std::sqrt(g * g + t_over_b * t_over_b) / Scalar(100);
}

/// The composite index I = sqrt(gini^2 + H^2) / sqrt(2).
template <typename Scalar>
CompositeResult<Scalar> composite(Scalar gini, ShareRatio<Scalar> ratio,
                                  Weight<Scalar> weight = Weight<Scalar>::quarter()) {
  if (!(gini >= Scalar(0) && gini <= Scalar(1))) throw DomainError("Gini must lie in [0, 1]");
  const Scalar h = h_transform(ratio, weight);
  const Scalar index = std::sqrt(gini * gini + h * h) / std::sqrt(Scalar(2));
  return {gini, ratio, weight, h, index, alternative_index(gini, ratio.t_over_b())};
}

/// One inter-percentile ratio B_x / T_x of the multi-percentile index.
template <typename Scalar = double>
struct PercentileRatio {
  Scalar percent;
  ShareRatio<Scalar> ratio;
};

/// sqrt(gini^2 + sum_j H_j^2) / sqrt(N + 1) with H_j = 1 - ratio_j^alpha_j.
template <typename Scalar>
Scalar generalized_composite(Scalar gini, std::span<const PercentileRatio<Scalar>> ratios,
                             std::span<const Weight<Scalar>> weights) {
  if (!(gini >= Scalar(0) && gini <= Scalar(1))) throw DomainError("Gini must lie in [0, 1]");
  if (ratios.empty()) throw EmptyInputError("generalized index needs at least one ratio");
  if (ratios.size() != weights.size())
    throw ArityError("got " + std::to_string(ratios.size()) + " ratios but " +
                     std::to_string(weights.size()) + " weights");
  for (std::size_t j = 0; j < ratios.size(); ++j) {
    const Scalar x = ratios[j].percent;
    if (!(x > Scalar(0) && x <= Scalar(50))) throw DomainError("percentile must lie in (0, 50]");
    for (std::size_t k = 0; k < j; ++k)
      if (ratios[k].percent == x) throw DomainError("duplicate percentile in generalized index");
  }

  Scalar sum = gini * gini;
  for (std::size_t j = 0; j < ratios.size(); ++j) {
    const Scalar h = h_transform(ratios[j].ratio, weights[j]);
    sum += h * h;
  }
  return std::sqrt(sum) / std::sqrt(Scalar(ratios.size() + 1));
}

/// Same, with every percentile weighted at 1/4.
template <typename Scalar>
Scalar generalized_composite(Scalar gini, std::span<const PercentileRatio<Scalar>> ratios) {
  const std::vector<Weight<Scalar>> weights(ratios.size(), Weight<Scalar>::quarter());
  return generalized_composite(gini, ratios, std::span<const Weight<Scalar>>(weights));
}

/// B_x / T_x of a micro sample at each requested percentile.
template <typename Scalar>
std::vector<PercentileRatio<Scalar>> percentile_ratios(const IncomeSample<Scalar>& sample,
                                                       std::span<const Scalar> percents) {
  std::vector<PercentileRatio<Scalar>> out;
  out.reserve(percents.size());
  for (Scalar x : percents)
    out.push_back({x, ShareRatio<Scalar>::from_b_over_t(ratio_b_over_t(sample, x))});
  return out;
}

}  // namespace ineq
