#pragma once

#include "lebesgue/baselines.hpp"
#include "lebesgue/core.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace lebesgue {

template <typename Scalar>
Scalar rmse(const Vector<Scalar>& original, const Vector<Scalar>& reconstructed) {
  if (original.size() != reconstructed.size())
    throw ShapeError("rmse: length mismatch (" + std::to_string(original.size()) + " vs " +
                     std::to_string(reconstructed.size()) + ")");
  if (original.size() == 0) throw InvalidInput("rmse: empty input");
  return std::sqrt((original - reconstructed).squaredNorm() / static_cast<Scalar>(original.size()));
}

template <typename Scalar>
Scalar rmse(const TimeSeries<Scalar>& original, const Reconstruction<Scalar>& reconstructed) {
  return rmse<Scalar>(original.values(), reconstructed.values);
}

/// Population standard deviation of first differences.
template <typename Scalar>
Scalar abruptness(const TimeSeries<Scalar>& series) {
  const Index n = series.size();
  if (n < 2) throw InvalidInput("abruptness needs at least two points");
  const auto& v = series.values();
  const Vector<Scalar> diffs = v.tail(n - 1) - v.head(n - 1);
  const Scalar mean = diffs.mean();
  return std::sqrt((diffs.array() - mean).square().mean());
}

struct MethodScore {
  std::string method_name;
  std::vector<double> per_signal_rmse;
  double mean_rmse = 0.0;
  double median_rmse = 0.0;
  int rank_position = 0;

  static MethodScore from_rmse(std::string name, std::vector<double> values) {
    if (values.empty()) throw InvalidInput("method '" + name + "' has no scores");
    MethodScore s{std::move(name), std::move(values)};
    double sum = 0.0;
    for (double v : s.per_signal_rmse) sum += v;
    s.mean_rmse = sum / static_cast<double>(s.per_signal_rmse.size());
    std::vector<double> sorted = s.per_signal_rmse;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    s.median_rmse = m % 2 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
    return s;
  }

  friend bool operator==(const MethodScore&, const MethodScore&) = default;
};

/// Scores of every method on one dataset.
struct DatasetScores {
  std::string dataset;
  std::vector<MethodScore> scores;
  double threshold = 0.0;
  double achieved_fraction = 0.0;
  std::size_t signal_count = 0;

  friend bool operator==(const DatasetScores&, const DatasetScores&) = default;
};

struct MethodSummary {
  std::string method_name;
  double mean_rmse = 0.0;
  double mean_rank = 0.0;
  int wins = 0;

  friend bool operator==(const MethodSummary&, const MethodSummary&) = default;
};

struct MethodReport {
  std::string name;
  std::vector<DatasetScores> datasets;
  std::vector<MethodSummary> summary;

  friend bool operator==(const MethodReport&, const MethodReport&) = default;
};

/// Sorts by mean RMSE (ties by method name) and assigns rank positions 1..M.
inline std::vector<MethodScore> rank_methods(std::vector<MethodScore> scores) {
  if (scores.empty()) throw InvalidInput("rank_methods: no scores");
  const std::size_t signals = scores.front().per_signal_rmse.size();
  for (const auto& s : scores)
    if (s.per_signal_rmse.size() != signals)
      throw InvalidInput("rank_methods: method '" + s.method_name + "' covers a different signal set");
  std::stable_sort(scores.begin(), scores.end(), [](const MethodScore& a, const MethodScore& b) {
    if (a.mean_rmse != b.mean_rmse) return a.mean_rmse < b.mean_rmse;
    return a.method_name < b.method_name;
  });
  for (std::size_t i = 0; i < scores.size(); ++i) scores[i].rank_position = static_cast<int>(i) + 1;
  return scores;
}

/// Cross-dataset summary: mean of per-dataset mean RMSE, mean rank, and wins
/// (rank 1 finishes). Summary rows are ordered by mean RMSE, then name.
inline MethodReport aggregate_report(std::string name, std::vector<DatasetScores> per_dataset) {
  if (per_dataset.empty()) throw InvalidInput("aggregate_report: no datasets");
  std::vector<std::string> methods;
  for (const auto& s : per_dataset.front().scores) methods.push_back(s.method_name);
  std::sort(methods.begin(), methods.end());
  if (methods.empty()) throw InvalidInput("aggregate_report: no methods");

  std::map<std::string, MethodSummary> acc;
  for (const auto& m : methods) acc[m].method_name = m;
  for (auto& ds : per_dataset) {
    std::vector<std::string> here;
    for (const auto& s : ds.scores) here.push_back(s.method_name);
    std::sort(here.begin(), here.end());
    if (here != methods)
      throw InvalidInput("aggregate_report: dataset '" + ds.dataset + "' has a different method set");
    ds.scores = rank_methods(std::move(ds.scores));
    for (const auto& s : ds.scores) {
      auto& m = acc[s.method_name];
      m.mean_rmse += s.mean_rmse;
      m.mean_rank += s.rank_position;
      m.wins += s.rank_position == 1;
    }
  }
  MethodReport report{std::move(name), std::move(per_dataset), {}};
  const auto count = static_cast<double>(report.datasets.size());
  for (auto& [_, m] : acc) {
    m.mean_rmse /= count;
    m.mean_rank /= count;
    report.summary.push_back(m);
  }
  std::stable_sort(report.summary.begin(), report.summary.end(),
                   [](const MethodSummary& a, const MethodSummary& b) {
                     if (a.mean_rmse != b.mean_rmse) return a.mean_rmse < b.mean_rmse;
                     return a.method_name < b.method_name;
                   });
  return report;
}

}  // namespace lebesgue
