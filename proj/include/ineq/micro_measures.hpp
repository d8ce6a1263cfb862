#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>

#include "ineq/errors.hpp"
#include "ineq/sample.hpp"

namespace ineq {

/// Piecewise-linear Lorenz curve: n+1 vertices (k/n, share of the k poorest).
template <typename Scalar = double>
struct LorenzCurve {
  ArrayX<Scalar> population;  // cumulative population share, 0 .. 1
  ArrayX<Scalar> income;      // cumulative income share, 0 .. 1

  Eigen::Index size() const { return population.size(); }

  /// Trapezoidal area under the curve.
  Scalar area() const {
    const Eigen::Index m = population.size() - 1;
    const ArrayX<Scalar> widths = population.tail(m) - population.head(m);
    return (widths * (income.tail(m) + income.head(m))).sum() / Scalar(2);
  }

  /// Linear interpolation at population share p in [0, 1].
  Scalar at(Scalar p) const {
    if (!(p >= Scalar(0) && p <= Scalar(1))) throw DomainError("Lorenz abscissa outside [0, 1]");
    const Scalar* first = population.data();
    const Scalar* last = first + population.size();
    const Scalar* hi = std::lower_bound(first, last, p);
    if (hi == first) return income(0);
    const Eigen::Index k = hi - first;
    const Scalar t = (p - population(k - 1)) / (population(k) - population(k - 1));
    return income(k - 1) + t * (income(k) - income(k - 1));
  }
};

template <typename Scalar>
LorenzCurve<Scalar> lorenz_curve(const IncomeSample<Scalar>& sample) {
  const Eigen::Index n = sample.size();
  LorenzCurve<Scalar> curve;
  curve.population = ArrayX<Scalar>::LinSpaced(n + 1, Scalar(0), Scalar(n)) / Scalar(n);
  curve.income = sample.cumulative() / sample.total();
  curve.population(n) = Scalar(1);
  curve.income(n) = Scalar(1);
  return curve;
}

/// Population Gini coefficient, one minus twice the trapezoidal Lorenz area.
template <typename Scalar>
Scalar gini(const IncomeSample<Scalar>& sample) {
  const Eigen::Index n = sample.size();
  const auto& cum = sample.cumulative();
  const Scalar twice_area = (cum.head(n) + cum.tail(n)).sum() / (Scalar(n) * sample.total());
  return Scalar(1) - twice_area;
}

namespace detail {

// Income held by the poorest `pos` people, pos a fractional head count in
// [0, n]; the boundary observation is split proportionally.
template <typename Scalar>
Scalar mass_below(const IncomeSample<Scalar>& sample, Scalar pos) {
  const Eigen::Index n = sample.size();
  if (pos >= Scalar(n)) return sample.total();
  if (pos <= Scalar(0)) return Scalar(0);
  const auto k = static_cast<Eigen::Index>(std::floor(pos));
  const Scalar frac = pos - Scalar(k);
  return sample.cumulative(k) + frac * sample[k];
}

template <typename Scalar>
void check_share_percent(Scalar percent) {
  if (!(percent > Scalar(0) && percent <= Scalar(50)))
    throw DomainError("share percentile must lie in (0, 50]");
}

}  // namespace detail

/// Income share of the poorest `percent`% of the sample.
template <typename Scalar>
Scalar bottom_share(const IncomeSample<Scalar>& sample, Scalar percent) {
  detail::check_share_percent(percent);
  const Scalar n = Scalar(sample.size());
  return detail::mass_below(sample, percent * n / Scalar(100)) / sample.total();
}

/// Income share of the richest `percent`% of the sample.
template <typename Scalar>
Scalar top_share(const IncomeSample<Scalar>& sample, Scalar percent) {
  detail::check_share_percent(percent);
  const Scalar n = Scalar(sample.size());
  const Scalar below = detail::mass_below(sample, n - percent * n / Scalar(100));
  return (sample.total() - below) / sample.total();
}

/// B_x / T_x. Zero when the bottom group holds nothing; never exceeds one.
template <typename Scalar>
Scalar ratio_b_over_t(const IncomeSample<Scalar>& sample, Scalar percent) {
  const Scalar bottom = bottom_share(sample, percent);
  if (bottom == Scalar(0)) return Scalar(0);
  return std::min(Scalar(1), bottom / top_share(sample, percent));
}

/// Top 10% share over bottom 40% share.
template <typename Scalar>
Scalar palma_ratio(const IncomeSample<Scalar>& sample) {
  const Scalar bottom40 = bottom_share(sample, Scalar(40));
  if (bottom40 == Scalar(0)) throw DivisionByZeroShare("bottom 40% share is zero");
  return top_share(sample, Scalar(10)) / bottom40;
}

}  // namespace ineq
