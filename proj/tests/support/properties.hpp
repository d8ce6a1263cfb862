#pragma once

// Randomised property checks shared by the unit tests and the acceptance
// runner. Each check runs a fixed-seed batch and reports the worst case.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ineq/composite_index.hpp"
#include "ineq/micro_measures.hpp"
#include "ineq/welfare_indices.hpp"
#include "oracles.hpp"

namespace ineq::props {

struct Report {
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst = 0.0;
  std::string first_failure;

  bool ok() const { return trials > 0 && failures == 0; }

  void record(double deviation, double tolerance, const std::string& what) {
    ++trials;
    worst = std::max(worst, deviation);
    if (!(deviation <= tolerance)) {
      if (failures++ == 0) first_failure = what + " deviation " + std::to_string(deviation);
    }
  }
};

using Sample = IncomeSample<double>;
using Measure = std::function<double(const Sample&)>;

struct NamedMeasure {
  std::string name;
  Measure fn;
  bool needs_positive = false;
};

inline std::vector<NamedMeasure> micro_measures() {
  std::vector<NamedMeasure> m = {
      {"gini", [](const Sample& s) { return gini(s); }},
      {"theil", [](const Sample& s) { return theil(s); }},
      {"mld", [](const Sample& s) { return ge_zero(s); }, true},
      {"palma", [](const Sample& s) { return palma_ratio(s); }, true},
  };
  for (double x : {10.0, 20.0, 25.0, 40.0, 50.0}) {
    const std::string p = std::to_string(static_cast<int>(x));
    m.push_back({"bottom" + p, [x](const Sample& s) { return bottom_share(s, x); }});
    m.push_back({"top" + p, [x](const Sample& s) { return top_share(s, x); }});
    m.push_back({"b_over_t" + p, [x](const Sample& s) { return ratio_b_over_t(s, x); }});
  }
  for (double eps : {0.0, 0.5, 1.0, 2.0})
    m.push_back({"atkinson" + std::to_string(eps),
                 [eps](const Sample& s) { return atkinson(s, AversionParam<double>(eps)); }, eps >= 1.0});
  for (double a : {-1.0, 0.5, 2.0, 3.0})
    m.push_back({"ge" + std::to_string(a), [a](const Sample& s) { return ge_index(s, EntropyOrder<double>(a)); },
                 a <= 0.0});
  return m;
}

inline bool all_positive(const std::vector<double>& y) {
  return std::all_of(y.begin(), y.end(), [](double v) { return v > 0.0; });
}

inline Report gini_matches_pairwise(std::size_t trials = 1000, double tol = 1e-10) {
  Report r;
  std::mt19937_64 rng(20240101);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto y = oracle::random_sample(rng, 200, t % 4 == 0 ? 0.2 : 0.0);
    r.record(std::abs(gini(Sample(y)) - oracle::pairwise_gini(y)), tol, "trial " + std::to_string(t));
  }
  return r;
}

inline Report scale_invariance(std::size_t trials = 200, double tol = 1e-12) {
  Report r;
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> log_c(-4.0, 4.0);
  const auto measures = micro_measures();
  for (std::size_t t = 0; t < trials; ++t) {
    auto y = oracle::random_sample(rng, 100, t % 3 == 0 ? 0.1 : 0.0);
    const double c = std::exp(log_c(rng));
    std::vector<double> scaled(y);
    for (auto& v : scaled) v *= c;
    const Sample a(y), b(scaled);
    for (const auto& m : measures) {
      if (m.needs_positive && !all_positive(y)) continue;
      const double va = m.fn(a), vb = m.fn(b);
      if (std::isinf(va) && std::isinf(vb)) continue;
      r.record(std::abs(va - vb), tol, m.name + " trial " + std::to_string(t));
    }
  }
  return r;
}

inline Report replication_invariance(std::size_t trials = 200, double tol = 1e-12) {
  Report r;
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> copies(2, 5);
  const auto measures = micro_measures();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto y = oracle::random_sample(rng, 60, t % 3 == 0 ? 0.1 : 0.0);
    const int k = copies(rng);
    std::vector<double> rep;
    for (int i = 0; i < k; ++i) rep.insert(rep.end(), y.begin(), y.end());
    const Sample a(y), b(rep);
    for (const auto& m : measures) {
      if (m.needs_positive && !all_positive(y)) continue;
      const double va = m.fn(a), vb = m.fn(b);
      if (std::isinf(va) && std::isinf(vb)) continue;
      r.record(std::abs(va - vb), tol, m.name + " trial " + std::to_string(t));
    }
  }
  return r;
}

// Moves delta from a richer to a poorer value, delta at most half the gap, and
// reports any measure that rose by more than rounding noise.
inline Report pigou_dalton(std::size_t trials = 1000) {
  Report r;
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<NamedMeasure> measures = {
      {"gini", [](const Sample& s) { return gini(s); }},
      {"theil", [](const Sample& s) { return theil(s); }},
      {"mld", [](const Sample& s) { return ge_zero(s); }, true},
  };
  for (double eps : {0.5, 1.0, 2.0})
    measures.push_back({"atkinson" + std::to_string(eps),
                        [eps](const Sample& s) { return atkinson(s, AversionParam<double>(eps)); }, eps >= 1.0});
  for (double a : {0.5, 2.0, 3.0})
    measures.push_back({"ge" + std::to_string(a), [a](const Sample& s) { return ge_index(s, EntropyOrder<double>(a)); }});

  std::size_t done = 0;
  while (done < trials) {
    auto y = oracle::random_sample(rng, 50, done % 5 == 0 ? 0.1 : 0.0);
    if (y.size() < 2) continue;
    std::sort(y.begin(), y.end());
    std::uniform_int_distribution<std::size_t> pick(0, y.size() - 1);
    std::size_t i = pick(rng), j = pick(rng);
    if (i > j) std::swap(i, j);
    if (y[j] <= y[i]) continue;
    const double delta = unit(rng) * (y[j] - y[i]) / 2.0;
    std::vector<double> after(y);
    after[i] += delta;
    after[j] -= delta;
    const Sample before_s(y), after_s(after);
    for (const auto& m : measures) {
      if (m.needs_positive && !all_positive(y)) continue;
      const double b = m.fn(before_s), a = m.fn(after_s);
      r.record(std::max(0.0, a - b), 1e-12 * std::max(1.0, std::abs(b)), m.name + " transfer " + std::to_string(done));
    }
    ++done;
  }
  return r;
}

inline Report ge_limits(std::size_t trials = 200, double tol = 1e-4) {
  Report r;
  std::mt19937_64 rng(43);
  for (std::size_t t = 0; t < trials; ++t) {
    const Sample s(oracle::random_sample(rng, 100));
    if (s.has_zero()) continue;
    r.record(std::abs(ge_index(s, EntropyOrder<double>(1e-6)) - ge_zero(s)), tol, "alpha->0 trial " + std::to_string(t));
    r.record(std::abs(ge_index(s, EntropyOrder<double>(1.0 - 1e-6)) - theil(s)), tol,
             "alpha->1 trial " + std::to_string(t));
  }
  return r;
}

// (1 - A_eps)^(1-eps) = 1 + (1-eps)(-eps) GE(1-eps) for positive samples.
inline Report atkinson_ge_identity(std::size_t trials = 200, double tol = 1e-9) {
  Report r;
  std::mt19937_64 rng(47);
  for (std::size_t t = 0; t < trials; ++t) {
    const Sample s(oracle::random_sample(rng, 100));
    if (s.has_zero()) continue;
    for (double eps : {0.25, 0.5, 1.5, 2.0, 3.0}) {
      const double lhs = std::pow(1.0 - atkinson(s, AversionParam<double>(eps)), 1.0 - eps);
      const double rhs = 1.0 + (1.0 - eps) * (-eps) * ge_index(s, EntropyOrder<double>(1.0 - eps));
      r.record(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)), tol,
               "eps " + std::to_string(eps) + " trial " + std::to_string(t));
    }
  }
  return r;
}

inline Report atkinson_monotone_in_aversion(std::size_t trials = 200) {
  Report r;
  std::mt19937_64 rng(53);
  for (std::size_t t = 0; t < trials; ++t) {
    const Sample s(oracle::random_sample(rng, 80, t % 4 == 0 ? 0.1 : 0.0));
    double previous = 0.0;
    for (double eps = 0.0; eps <= 4.0; eps += 0.25) {
      const double a = atkinson(s, AversionParam<double>(eps));
      r.record(std::max(0.0, previous - a), 1e-12, "eps " + std::to_string(eps) + " trial " + std::to_string(t));
      previous = a;
    }
  }
  return r;
}

inline Report composite_grid(std::size_t steps = 100) {
  Report r;
  const auto w = Weight<double>::quarter();
  std::vector<std::vector<double>> grid(steps + 1, std::vector<double>(steps + 1));
  for (std::size_t i = 0; i <= steps; ++i)
    for (std::size_t j = 0; j <= steps; ++j) {
      const double g = static_cast<double>(i) / static_cast<double>(steps);
      const double b = static_cast<double>(j) / static_cast<double>(steps);
      const double v = composite(g, ShareRatio<double>::from_b_over_t(b), w).index_i;
      grid[i][j] = v;
      const double outside = std::max(0.0, std::max(-v, v - 1.0));
      r.record(outside, 0.0, "bounds at " + std::to_string(g) + "," + std::to_string(b));
    }
  for (std::size_t i = 0; i <= steps; ++i)
    for (std::size_t j = 0; j <= steps; ++j) {
      if (i > 0) r.record(std::max(0.0, grid[i - 1][j] - grid[i][j]), 0.0, "gini step " + std::to_string(i));
      if (j > 0) r.record(std::max(0.0, grid[i][j] - grid[i][j - 1]), 0.0, "ratio step " + std::to_string(j));
    }
  return r;
}

inline Report generalized_reduces(std::size_t trials = 1000, double tol = 1e-12) {
  Report r;
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t t = 0; t < trials; ++t) {
    const double g = unit(rng), b = unit(rng), w = 0.01 + 0.99 * unit(rng);
    const auto ratio = ShareRatio<double>::from_b_over_t(b);
    const std::vector<PercentileRatio<double>> one = {{10.0, ratio}};
    const std::vector<Weight<double>> weights = {Weight<double>(w)};
    const double gen = generalized_composite(g, std::span<const PercentileRatio<double>>(one),
                                             std::span<const Weight<double>>(weights));
    r.record(std::abs(gen - composite(g, ratio, Weight<double>(w)).index_i), tol, "trial " + std::to_string(t));
  }
  return r;
}

inline Report gini_bounds(std::size_t trials = 1000) {
  Report r;
  std::mt19937_64 rng(61);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto y = oracle::random_sample(rng, 100, t % 2 == 0 ? 0.3 : 0.0);
    const double g = gini(Sample(y));
    const double cap = 1.0 - 1.0 / static_cast<double>(y.size());
    r.record(std::max(0.0, std::max(-g, g - cap)), 1e-12, "trial " + std::to_string(t));
  }
  return r;
}

}  // namespace ineq::props
