#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lebesgue {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

// Error taxonomy. The CLI maps InvalidInput/ShapeError/ParseError/InfeasibleBudget
// to exit code 1 and IoError to exit code 2.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ShapeError : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct ParseError : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct InfeasibleBudget : InvalidInput {
  InfeasibleBudget(const std::string& what, double minimum_fraction)
      : InvalidInput(what), minimum_fraction(minimum_fraction) {}
  double minimum_fraction;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A uniformly indexed signal. Values are finite and the series is never empty.
template <typename Scalar = double>
class TimeSeries {
 public:
  using scalar_type = Scalar;

  explicit TimeSeries(Vector<Scalar> values) : values_(std::move(values)) {
    if (values_.size() == 0) throw InvalidInput("time series must not be empty");
    if (!values_.allFinite()) throw InvalidInput("time series contains non-finite values");
  }

  TimeSeries(std::initializer_list<Scalar> values)
      : TimeSeries(Vector<Scalar>::Map(values.begin(), static_cast<Index>(values.size()))) {}

  static TimeSeries from(const std::vector<Scalar>& values) {
    return TimeSeries(Vector<Scalar>::Map(values.data(), static_cast<Index>(values.size())));
  }

  const Vector<Scalar>& values() const noexcept { return values_; }
  Index size() const noexcept { return values_.size(); }
  Scalar operator[](Index i) const { return values_[i]; }

  friend bool operator==(const TimeSeries& a, const TimeSeries& b) {
    return a.values_.size() == b.values_.size() && a.values_ == b.values_;
  }

 private:
  Vector<Scalar> values_;
};

template <typename Scalar = double>
struct Knot {
  Index index;
  Scalar value;

  friend bool operator==(const Knot&, const Knot&) = default;
};

/// Ordered (index, value) pairs retained by a sampler.
template <typename Scalar = double>
class SampledSeries {
 public:
  SampledSeries(std::vector<Knot<Scalar>> points, Index source_length, Scalar threshold)
      : points_(std::move(points)), source_length_(source_length), threshold_(threshold) {
    if (points_.empty()) throw InvalidInput("sampled series needs at least one point");
    if (points_.front().index != 0) throw InvalidInput("first sampled index must be 0");
    if (!(threshold_ >= Scalar(0))) throw InvalidInput("threshold must be non-negative");
    for (std::size_t k = 0; k < points_.size(); ++k) {
      if (!std::isfinite(points_[k].value)) throw InvalidInput("sampled value is not finite");
      if (k > 0 && points_[k].index <= points_[k - 1].index)
        throw InvalidInput("sampled indices must be strictly increasing");
    }
    if (points_.back().index >= source_length_)
      throw InvalidInput("sampled index beyond source length");
  }

  const std::vector<Knot<Scalar>>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Knot<Scalar>& operator[](std::size_t k) const { return points_[k]; }
  Index source_length() const noexcept { return source_length_; }
  Scalar threshold() const noexcept { return threshold_; }

  /// Fraction of the source grid retained.
  double fraction() const {
    return static_cast<double>(points_.size()) / static_cast<double>(source_length_);
  }

  friend bool operator==(const SampledSeries&, const SampledSeries&) = default;

 private:
  std::vector<Knot<Scalar>> points_;
  Index source_length_;
  Scalar threshold_;
};

/// Band [center - half_width, center + half_width] around the last sampled value.
template <typename Scalar = double>
struct ToleratedRegion {
  Scalar center;
  Scalar half_width;

  Scalar lower() const noexcept { return center - half_width; }
  Scalar upper() const noexcept { return center + half_width; }
  bool contains(Scalar y) const noexcept { return y >= lower() && y <= upper(); }
  // Points left un-sampled by send-on-delta satisfy this strict form.
  bool strictly_contains(Scalar y) const noexcept { return std::abs(y - center) < half_width; }
};

template <typename Scalar = double>
struct ReconstructionParams {
  Scalar threshold = Scalar(0.05);
  Scalar tolerance_ratio = Scalar(1.15);
  Index previous_distance = 3;
  Index subsequent_min_distance = 3;
  std::optional<Index> subsequent_max_distance;

  Scalar tolerance() const noexcept { return threshold * tolerance_ratio; }

  void validate() const {
    if (!(threshold >= Scalar(0))) throw InvalidInput("threshold must be non-negative");
    if (!(tolerance_ratio >= Scalar(1))) throw InvalidInput("tolerance ratio must be >= 1");
    if (previous_distance < 0 || subsequent_min_distance < 0)
      throw InvalidInput("distances must be non-negative");
    if (subsequent_max_distance && *subsequent_max_distance < 0)
      throw InvalidInput("distances must be non-negative");
  }

  /// Parameters used for a signal sampled at `t`, everything else default.
  static ReconstructionParams for_threshold(Scalar t) {
    ReconstructionParams p;
    p.threshold = t;
    return p;
  }
};

/// A named collection of equal-length signals.
struct DatasetBundle {
  std::string name;
  std::vector<TimeSeries<double>> signals;
  std::string source_path;
  std::string source_format;

  Index length() const { return signals.empty() ? 0 : signals.front().size(); }
};

/// Min-max normalization to [0, 1]. A constant series maps to all zeros.
template <typename Scalar>
TimeSeries<Scalar> normalize_unit_interval(const TimeSeries<Scalar>& series) {
  const auto& v = series.values();
  const Scalar lo = v.minCoeff();
  const Scalar hi = v.maxCoeff();
  const Scalar range = hi - lo;
  if (range == Scalar(0)) return TimeSeries<Scalar>(Vector<Scalar>::Zero(v.size()));
  return TimeSeries<Scalar>(Vector<Scalar>((v.array() - lo) / range));
}

inline const DatasetBundle& series_equal_length_check(const DatasetBundle& bundle) {
  if (bundle.signals.empty()) throw InvalidInput("dataset '" + bundle.name + "' is empty");
  const Index n = bundle.signals.front().size();
  for (std::size_t r = 0; r < bundle.signals.size(); ++r) {
    if (bundle.signals[r].size() != n) {
      throw ShapeError("dataset '" + bundle.name + "': row " + std::to_string(r) + " has length " +
                       std::to_string(bundle.signals[r].size()) + ", expected " +
                       std::to_string(n));
    }
  }
  return bundle;
}

}  // namespace lebesgue
