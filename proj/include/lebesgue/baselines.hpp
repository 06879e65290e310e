#pragma once

#include "lebesgue/core.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace lebesgue {

/// Values on the full integer grid of the source series.
template <typename Scalar = double>
struct Reconstruction {
  Vector<Scalar> values;
  std::string method_name;
};

template <typename Scalar>
using KnotList = std::vector<Knot<Scalar>>;

namespace detail {

template <typename Scalar>
int sign(Scalar v) {
  return (v > Scalar(0)) - (v < Scalar(0));
}

template <typename Scalar>
void hold_tail(Vector<Scalar>& out, const Knot<Scalar>& last) {
  const Index from = last.index;
  out.segment(from, out.size() - from).setConstant(last.value);
}

}  // namespace detail

/// Straight segments between consecutive knots, constant after the last one.
template <typename Scalar>
Vector<Scalar> evaluate_piecewise_linear(std::span<const Knot<Scalar>> knots, Index length) {
  Vector<Scalar> out(length);
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const auto& a = knots[k];
    const auto& b = knots[k + 1];
    const Scalar slope = (b.value - a.value) / static_cast<Scalar>(b.index - a.index);
    for (Index x = a.index; x < b.index; ++x)
      out[x] = a.value + slope * static_cast<Scalar>(x - a.index);
  }
  detail::hold_tail(out, knots.back());
  return out;
}

/// Step function holding each knot value until the next knot.
template <typename Scalar>
Vector<Scalar> evaluate_zoh(std::span<const Knot<Scalar>> knots, Index length) {
  Vector<Scalar> out(length);
  for (std::size_t k = 0; k + 1 < knots.size(); ++k)
    out.segment(knots[k].index, knots[k + 1].index - knots[k].index).setConstant(knots[k].value);
  detail::hold_tail(out, knots.back());
  return out;
}

/// Monotone piecewise cubic Hermite curve through a knot list (Fritsch–Carlson
/// slopes with the Brodlie weighted harmonic mean at interior knots).
template <typename Scalar = double>
class PchipCurve {
 public:
  explicit PchipCurve(std::span<const Knot<Scalar>> knots) {
    const auto n = static_cast<Index>(knots.size());
    if (n < 1) throw InvalidInput("PCHIP needs at least one knot");
    x_.resize(n);
    y_.resize(n);
    for (Index k = 0; k < n; ++k) {
      x_[k] = static_cast<Scalar>(knots[static_cast<std::size_t>(k)].index);
      y_[k] = knots[static_cast<std::size_t>(k)].value;
    }
    slopes_ = Vector<Scalar>::Zero(n);
    if (n < 2) return;

    const Vector<Scalar> h = x_.tail(n - 1) - x_.head(n - 1);
    const Vector<Scalar> delta = (y_.tail(n - 1) - y_.head(n - 1)).cwiseQuotient(h);
    if (n == 2) {
      slopes_.setConstant(delta[0]);
      return;
    }
    for (Index k = 1; k < n - 1; ++k) {
      const Scalar d0 = delta[k - 1];
      const Scalar d1 = delta[k];
      if (detail::sign(d0) * detail::sign(d1) <= 0) continue;
      const Scalar w1 = 2 * h[k] + h[k - 1];
      const Scalar w2 = h[k] + 2 * h[k - 1];
      slopes_[k] = (w1 + w2) / (w1 / d0 + w2 / d1);
    }
    slopes_[0] = end_slope(h[0], h[1], delta[0], delta[1]);
    slopes_[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  }

  const Vector<Scalar>& slopes() const noexcept { return slopes_; }

  /// Value at a continuous position; constant outside the knot range.
  Scalar value(Scalar x) const {
    const Index n = x_.size();
    if (n == 1 || x <= x_[0]) return y_[0];
    if (x >= x_[n - 1]) return y_[n - 1];
    const Index k = segment_of(x);
    if (x == x_[k]) return y_[k];
    return hermite(k, x);
  }

  /// Analytic first derivative evaluated on segment `k` (valid for x in [x_k, x_{k+1}]).
  Scalar derivative_on_segment(Index k, Scalar x) const {
    const Scalar h = x_[k + 1] - x_[k];
    const Scalar s = (x - x_[k]) / h;
    const Scalar dh00 = (6 * s * s - 6 * s) / h;
    const Scalar dh10 = 3 * s * s - 4 * s + 1;
    const Scalar dh01 = (-6 * s * s + 6 * s) / h;
    const Scalar dh11 = 3 * s * s - 2 * s;
    return dh00 * y_[k] + dh10 * slopes_[k] + dh01 * y_[k + 1] + dh11 * slopes_[k + 1];
  }

  Index knot_count() const noexcept { return x_.size(); }

  /// Values on the integer grid 0..length-1; knots are reproduced exactly.
  Vector<Scalar> evaluate_grid(Index length) const {
    Vector<Scalar> out(length);
    const Index n = x_.size();
    for (Index k = 0; k + 1 < n; ++k) {
      const auto from = static_cast<Index>(x_[k]);
      const auto to = static_cast<Index>(x_[k + 1]);
      out[from] = y_[k];
      for (Index x = from + 1; x < to; ++x) out[x] = hermite(k, static_cast<Scalar>(x));
    }
    const auto last = static_cast<Index>(x_[n - 1]);
    out.segment(last, length - last).setConstant(y_[n - 1]);
    return out;
  }

 private:
  // Three-point one-sided estimate, clamped to keep shape.
  static Scalar end_slope(Scalar h0, Scalar h1, Scalar m0, Scalar m1) {
    Scalar d = ((2 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
    if (detail::sign(d) != detail::sign(m0)) {
      d = Scalar(0);
    } else if (detail::sign(m0) != detail::sign(m1) && std::abs(d) > 3 * std::abs(m0)) {
      d = 3 * m0;
    }
    return d;
  }

  Index segment_of(Scalar x) const {
    const auto it = std::upper_bound(x_.data(), x_.data() + x_.size(), x);
    return static_cast<Index>(it - x_.data()) - 1;
  }

  Scalar hermite(Index k, Scalar x) const {
    const Scalar h = x_[k + 1] - x_[k];
    const Scalar s = (x - x_[k]) / h;
    const Scalar r = 1 - s;
    return y_[k] + s * s * (3 - 2 * s) * (y_[k + 1] - y_[k]) +
           h * s * r * (r * slopes_[k] - s * slopes_[k + 1]);
  }

  Vector<Scalar> x_;
  Vector<Scalar> y_;
  Vector<Scalar> slopes_;
};

template <typename Scalar>
Vector<Scalar> evaluate_pchip(std::span<const Knot<Scalar>> knots, Index length) {
  return PchipCurve<Scalar>(knots).evaluate_grid(length);
}

template <typename Scalar>
Reconstruction<Scalar> interp_zoh(const SampledSeries<Scalar>& s) {
  return {evaluate_zoh<Scalar>(s.points(), s.source_length()), "ZOH"};
}

template <typename Scalar>
Reconstruction<Scalar> interp_linear(const SampledSeries<Scalar>& s) {
  return {evaluate_piecewise_linear<Scalar>(s.points(), s.source_length()), "Linear"};
}

/// Nearest knot by index distance; equidistant points take the earlier knot.
template <typename Scalar>
Reconstruction<Scalar> interp_nearest(const SampledSeries<Scalar>& s) {
  const auto& knots = s.points();
  Vector<Scalar> out(s.source_length());
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const auto& a = knots[k];
    const auto& b = knots[k + 1];
    for (Index x = a.index; x < b.index; ++x)
      out[x] = (x - a.index <= b.index - x) ? a.value : b.value;
  }
  detail::hold_tail(out, knots.back());
  return {std::move(out), "Nearest"};
}

template <typename Scalar>
Reconstruction<Scalar> interp_pchip(const SampledSeries<Scalar>& s) {
  return {evaluate_pchip<Scalar>(s.points(), s.source_length()), "PCHIP"};
}

}  // namespace lebesgue
