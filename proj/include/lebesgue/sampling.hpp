#pragma once

#include "lebesgue/core.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace lebesgue {

/// Target fraction of retained samples, in (0, 1].
class SampleBudget {
 public:
  explicit SampleBudget(double target_fraction) : target_fraction_(target_fraction) {
    if (!(target_fraction > 0.0 && target_fraction <= 1.0))
      throw InvalidInput("sample budget must lie in (0, 1]");
  }
  double target_fraction() const noexcept { return target_fraction_; }

 private:
  double target_fraction_;
};

struct ThresholdChoice {
  double threshold;
  double achieved_fraction;
};

template <typename Scalar>
ToleratedRegion<Scalar> tolerated_region(Scalar last_sample_value, Scalar threshold) {
  if (!(threshold >= Scalar(0))) throw InvalidInput("threshold must be non-negative");
  return {last_sample_value, threshold};
}

/// Send-on-delta sampling: index 0 is always kept, then a point is kept whenever
/// it differs from the last kept value by at least `threshold`. The final point
/// is not forced.
template <typename Scalar>
SampledSeries<Scalar> lebesgue_sample(const TimeSeries<Scalar>& series, Scalar threshold) {
  if (!(threshold >= Scalar(0))) throw InvalidInput("threshold must be non-negative");
  const auto& v = series.values();
  std::vector<Knot<Scalar>> points;
  points.push_back({0, v[0]});
  Scalar last = v[0];
  for (Index i = 1; i < v.size(); ++i) {
    if (std::abs(v[i] - last) >= threshold) {
      points.push_back({i, v[i]});
      last = v[i];
    }
  }
  return SampledSeries<Scalar>(std::move(points), v.size(), threshold);
}

/// Number of points `riemann_sample` keeps for a series of length n.
inline Index riemann_sample_count(Index n, const SampleBudget& budget) {
  // The small offset keeps products like 0.15 * 100 from rounding up to 16.
  const double raw = std::ceil(budget.target_fraction() * static_cast<double>(n) - 1e-9);
  return std::clamp<Index>(static_cast<Index>(raw), 1, n);
}

/// Periodic sampling on an even linspace of the index domain, endpoints included.
/// Positions are rounded half-to-even.
template <typename Scalar>
SampledSeries<Scalar> riemann_sample(const TimeSeries<Scalar>& series, const SampleBudget& budget) {
  const Index n = series.size();
  const Index k = riemann_sample_count(n, budget);
  std::vector<Knot<Scalar>> points;
  points.reserve(static_cast<std::size_t>(k));
  if (k == 1) {
    points.push_back({0, series[0]});
  } else {
    const double step = static_cast<double>(n - 1) / static_cast<double>(k - 1);
    for (Index j = 0; j < k; ++j) {
      const auto idx = static_cast<Index>(std::nearbyint(static_cast<double>(j) * step));
      if (!points.empty() && points.back().index == idx) continue;
      points.push_back({idx, series[idx]});
    }
  }
  return SampledSeries<Scalar>(std::move(points), n, Scalar(0));
}

/// Mean per-signal fraction of points kept by `lebesgue_sample` at `threshold`.
/// Summation runs in signal order.
inline double lebesgue_fraction(const DatasetBundle& bundle, double threshold) {
  double total = 0.0;
  for (const auto& s : bundle.signals) {
    const auto& v = s.values();
    Index kept = 1;
    double last = v[0];
    for (Index i = 1; i < v.size(); ++i) {
      if (std::abs(v[i] - last) >= threshold) {
        ++kept;
        last = v[i];
      }
    }
    total += static_cast<double>(kept) / static_cast<double>(v.size());
  }
  return total / static_cast<double>(bundle.signals.size());
}

/// Every threshold at which some signal's sampling outcome can change: zero,
/// all within-signal pairwise absolute differences, and the first value above
/// the largest difference (where each signal keeps a single point). The mean
/// fraction is constant between consecutive candidates (left-open intervals),
/// so the grid reaches every achievable fraction.
inline std::vector<double> threshold_candidates(const DatasetBundle& bundle) {
  std::vector<double> out{0.0};
  for (const auto& s : bundle.signals) {
    const auto& v = s.values();
    std::vector<double> diffs;
    diffs.reserve(static_cast<std::size_t>(v.size() * (v.size() - 1) / 2));
    for (Index i = 0; i < v.size(); ++i)
      for (Index j = i + 1; j < v.size(); ++j) diffs.push_back(std::abs(v[j] - v[i]));
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    out.insert(out.end(), diffs.begin(), diffs.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.push_back(std::nextafter(out.back(), std::numeric_limits<double>::infinity()));
  return out;
}

/// Bisects the candidate grid for the smallest threshold whose mean sampled
/// fraction stays within the budget. The returned candidate is always feasible
/// and its predecessor on the grid is not.
inline ThresholdChoice tune_threshold(const DatasetBundle& bundle, const SampleBudget& budget) {
  series_equal_length_check(bundle);
  const double target = budget.target_fraction();
  const auto candidates = threshold_candidates(bundle);

  const double at_zero = lebesgue_fraction(bundle, candidates.front());
  if (at_zero <= target) return {candidates.front(), at_zero};

  std::size_t hi = candidates.size() - 1;
  const double at_max = lebesgue_fraction(bundle, candidates[hi]);
  if (at_max > target) {
    throw InfeasibleBudget("budget " + std::to_string(target) +
                               " is infeasible; minimum achievable fraction is " +
                               std::to_string(at_max),
                           at_max);
  }
  std::size_t lo = 0;
  double hi_fraction = at_max;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const double f = lebesgue_fraction(bundle, candidates[mid]);
    if (f <= target) {
      hi = mid;
      hi_fraction = f;
    } else {
      lo = mid;
    }
  }
  return {candidates[hi], hi_fraction};
}

}  // namespace lebesgue
