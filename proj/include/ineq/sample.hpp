#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <span>
#include <vector>

#include "ineq/errors.hpp"

namespace ineq {

template <typename Scalar>
using ArrayX = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

/// Non-negative size distribution held in ascending order.
///
/// Construction sorts the values and rejects negative or non-finite entries
/// (DomainError) as well as empty or all-zero inputs (DegenerateSample).
/// The prefix sums are kept alongside the values so that Lorenz ordinates
/// and quantile shares are O(1) lookups.
template <typename Scalar = double>
class IncomeSample {
 public:
  explicit IncomeSample(ArrayX<Scalar> values) : values_(std::move(values)) {
    if (values_.size() == 0) throw DegenerateSample("sample is empty");
    for (Eigen::Index i = 0; i < values_.size(); ++i) {
      const Scalar v = values_(i);
      if (!std::isfinite(static_cast<double>(v)) || v < Scalar(0))
        throw DomainError("sample values must be finite and non-negative");
    }
    std::sort(values_.data(), values_.data() + values_.size());

    cumulative_.resize(values_.size() + 1);
    cumulative_(0) = Scalar(0);
    for (Eigen::Index i = 0; i < values_.size(); ++i)
      cumulative_(i + 1) = cumulative_(i) + values_(i);
    if (!(total() > Scalar(0))) throw DegenerateSample("sample total is zero");
  }

  explicit IncomeSample(std::span<const Scalar> values)
      : IncomeSample(ArrayX<Scalar>(
            Eigen::Map<const ArrayX<Scalar>>(values.data(), static_cast<Eigen::Index>(values.size())))) {}

  explicit IncomeSample(const std::vector<Scalar>& values)
      : IncomeSample(std::span<const Scalar>(values)) {}

  IncomeSample(std::initializer_list<Scalar> values)
      : IncomeSample(std::span<const Scalar>(values.begin(), values.size())) {}

  const ArrayX<Scalar>& values() const { return values_; }
  Eigen::Index size() const { return values_.size(); }
  Scalar operator[](Eigen::Index i) const { return values_(i); }

  /// Sum of the k smallest values, k in [0, n].
  Scalar cumulative(Eigen::Index k) const { return cumulative_(k); }
  const ArrayX<Scalar>& cumulative() const { return cumulative_; }

  Scalar total() const { return cumulative_(values_.size()); }
  Scalar mean() const { return total() / static_cast<Scalar>(values_.size()); }
  bool has_zero() const { return values_(0) == Scalar(0); }

 private:
  ArrayX<Scalar> values_;
  ArrayX<Scalar> cumulative_;
};

IncomeSample(std::initializer_list<double>) -> IncomeSample<double>;

}  // namespace ineq
