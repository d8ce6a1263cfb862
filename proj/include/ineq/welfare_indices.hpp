#pragma once

#include <Eigen/Core>

#include <cmath>

#include "ineq/errors.hpp"
#include "ineq/sample.hpp"

namespace ineq {

/// Inequality aversion parameter of the Atkinson index, epsilon >= 0.
template <typename Scalar = double>
class AversionParam {
 public:
  explicit AversionParam(Scalar epsilon) : epsilon_(epsilon) {
    if (!std::isfinite(static_cast<double>(epsilon)) || epsilon < Scalar(0))
      throw DomainError("inequality aversion must be a finite value >= 0");
  }
  Scalar value() const { return epsilon_; }

 private:
  Scalar epsilon_;
};

/// Order of a generalized-entropy index; any finite real.
template <typename Scalar = double>
class EntropyOrder {
 public:
  explicit EntropyOrder(Scalar alpha) : alpha_(alpha) {
    if (!std::isfinite(static_cast<double>(alpha))) throw DomainError("entropy order must be finite");
  }
  Scalar value() const { return alpha_; }

 private:
  Scalar alpha_;
};

// Orders closer than this to 0 or 1 use the closed-form limits.
inline constexpr double kEntropySingularityWindow = 1e-9;

/// Mean logarithmic deviation, GE(0).
template <typename Scalar>
Scalar ge_zero(const IncomeSample<Scalar>& sample) {
  if (sample.has_zero()) throw ZeroIncomeError("mean log deviation is undefined with zero incomes");
  return (sample.mean() / sample.values()).log().mean();
}

/// Theil index, GE(1). Zero incomes contribute nothing.
template <typename Scalar>
Scalar theil(const IncomeSample<Scalar>& sample) {
  const ArrayX<Scalar> rel = sample.values() / sample.mean();
  const ArrayX<Scalar> terms = (rel > Scalar(0)).select(rel * rel.log(), Scalar(0));
  return terms.mean();
}

template <typename Scalar>
Scalar ge_index(const IncomeSample<Scalar>& sample, EntropyOrder<Scalar> order) {
  const Scalar alpha = order.value();
  if (std::abs(alpha) < Scalar(kEntropySingularityWindow)) return ge_zero(sample);
  if (std::abs(alpha - Scalar(1)) < Scalar(kEntropySingularityWindow)) return theil(sample);
  if (alpha < Scalar(0) && sample.has_zero())
    throw ZeroIncomeError("GE index with negative order is undefined with zero incomes");

  const ArrayX<Scalar> rel = sample.values() / sample.mean();
  const Scalar moment = rel.pow(alpha).mean();
  return (moment - Scalar(1)) / (alpha * (alpha - Scalar(1)));
}

/// Atkinson index 1 - y_EDE / mean.
///
/// With a zero income and epsilon >= 1 the equally distributed equivalent
/// income is zero, so the index is exactly 1.
template <typename Scalar>
Scalar atkinson(const IncomeSample<Scalar>& sample, AversionParam<Scalar> aversion) {
  const Scalar eps = aversion.value();
  if (eps >= Scalar(1) && sample.has_zero()) return Scalar(1);

  const ArrayX<Scalar> rel = sample.values() / sample.mean();
  Scalar ede_over_mean;
  if (eps == Scalar(1)) {
    ede_over_mean = std::exp(rel.log().mean());
  } else {
    const Scalar power = Scalar(1) - eps;
    ede_over_mean = std::pow(rel.pow(power).mean(), Scalar(1) / power);
  }
  return Scalar(1) - ede_over_mean;
}

}  // namespace ineq
