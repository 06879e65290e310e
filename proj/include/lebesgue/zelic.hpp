#pragma once

// Event-aware reconstructors for send-on-delta samples.
//
// Each interval between consecutive samples is classified against the
// increased tolerated region (threshold * tolerance_ratio):
//   Smooth  -> Linear (ZeLi) or PCHIP (ZeChip) through the samples
//   Abrupt  -> hold the left value until one step before the right sample
// The "C" variants additionally insert a midpoint knot when the slope sign
// flips across a sample, placed halfway between the chord and the tolerated
// region bound on the side the signal is assumed to bend toward.
//
// All four methods reduce to one routine: build an augmented knot list, then
// run either piecewise-linear or PCHIP evaluation over it. A held segment is
// represented by the anchor knot (b.index - 1, a.value).

#include "lebesgue/baselines.hpp"
#include "lebesgue/core.hpp"

#include <cmath>
#include <optional>

namespace lebesgue {

enum class IntervalKind { Smooth, Abrupt };

template <typename Scalar = double>
struct IntervalClass {
  IntervalKind kind;
  Knot<Scalar> left;
  Knot<Scalar> right;
};

/// Augmented knots for one interval: the endpoints plus an optional midpoint
/// and an optional hold anchor, strictly increasing in index.
template <typename Scalar = double>
struct KnotPlan {
  KnotList<Scalar> knots;
  bool convex = false;
  std::optional<Knot<Scalar>> midpoint;
  std::optional<Knot<Scalar>> anchor;
};

template <typename Scalar>
IntervalClass<Scalar> classify_interval(const Knot<Scalar>& a, const Knot<Scalar>& b,
                                        const ReconstructionParams<Scalar>& params) {
  const auto kind = std::abs(b.value - a.value) < params.tolerance() ? IntervalKind::Smooth
                                                                      : IntervalKind::Abrupt;
  return {kind, a, b};
}

/// True when the chord from a to b leaves the tolerated region of a at the last
/// interior grid point, i.e. x_{i,n} > t/|slope| + x_i with x_{i,n} = b.index - 1.
template <typename Scalar>
bool abrupt_limit_condition(const Knot<Scalar>& a, const Knot<Scalar>& b, Scalar threshold) {
  const Index last_interior = b.index - 1;
  if (last_interior <= a.index) return false;
  const Scalar slope = (b.value - a.value) / static_cast<Scalar>(b.index - a.index);
  if (slope == Scalar(0)) return false;
  return static_cast<Scalar>(last_interior) >
         threshold / std::abs(slope) + static_cast<Scalar>(a.index);
}

template <typename Scalar>
bool convexity_gate(const Knot<Scalar>& prev, const Knot<Scalar>& a, const Knot<Scalar>& b,
                    const ReconstructionParams<Scalar>& params) {
  const int before = detail::sign(a.value - prev.value);
  const int after = detail::sign(b.value - a.value);
  if (before == 0 || after == 0 || before == after) return false;
  const Index previous_gap = a.index - prev.index;
  const Index gap = b.index - a.index;
  if (previous_gap <= params.previous_distance) return false;
  if (gap <= params.subsequent_min_distance) return false;
  if (params.subsequent_max_distance && gap >= *params.subsequent_max_distance) return false;
  return true;
}

/// Midpoint (and, for abrupt intervals, hold anchor) for an interval whose
/// slope sign flips relative to the previous one.
template <typename Scalar>
KnotPlan<Scalar> convexity_knots(const Knot<Scalar>& prev, const Knot<Scalar>& a,
                                 const Knot<Scalar>& b,
                                 const ReconstructionParams<Scalar>& params, bool abrupt) {
  KnotPlan<Scalar> plan;
  plan.convex = a.value - prev.value < Scalar(0);
  plan.knots.push_back(a);

  const Index mid = (a.index + b.index) / 2;
  if (mid > a.index) {
    const Scalar chord = a.value + (b.value - a.value) * static_cast<Scalar>(mid - a.index) /
                                       static_cast<Scalar>(b.index - a.index);
    const Scalar bound = plan.convex ? a.value - params.threshold : a.value + params.threshold;
    plan.midpoint = Knot<Scalar>{mid, (chord + bound) / Scalar(2)};
    plan.knots.push_back(*plan.midpoint);
  }
  // Anchor only fits when it lands strictly after the midpoint.
  if (abrupt && b.index - 1 > mid) {
    plan.anchor = Knot<Scalar>{b.index - 1, a.value};
    plan.knots.push_back(*plan.anchor);
  }
  plan.knots.push_back(b);
  return plan;
}

/// Global augmented knot list shared by all four reconstructors.
template <typename Scalar>
KnotList<Scalar> augmented_knots(const SampledSeries<Scalar>& s,
                                 const ReconstructionParams<Scalar>& params, bool with_convexity) {
  params.validate();
  const auto& pts = s.points();
  KnotList<Scalar> out;
  out.reserve(pts.size() * 2);
  out.push_back(pts.front());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[i + 1];
    const bool abrupt = classify_interval(a, b, params).kind == IntervalKind::Abrupt;
    if (with_convexity && i > 0 && convexity_gate(pts[i - 1], a, b, params)) {
      const auto plan = convexity_knots(pts[i - 1], a, b, params, abrupt);
      out.insert(out.end(), plan.knots.begin() + 1, plan.knots.end());
      continue;
    }
    if (abrupt && b.index - 1 > a.index) out.push_back({b.index - 1, a.value});
    out.push_back(b);
  }
  return out;
}

template <typename Scalar>
Reconstruction<Scalar> reconstruct_zeli(const SampledSeries<Scalar>& s,
                                        const ReconstructionParams<Scalar>& params) {
  const auto knots = augmented_knots(s, params, false);
  return {evaluate_piecewise_linear<Scalar>(knots, s.source_length()), "ZeLi"};
}

template <typename Scalar>
Reconstruction<Scalar> reconstruct_zelic(const SampledSeries<Scalar>& s,
                                         const ReconstructionParams<Scalar>& params) {
  const auto knots = augmented_knots(s, params, true);
  return {evaluate_piecewise_linear<Scalar>(knots, s.source_length()), "ZeLiC"};
}

template <typename Scalar>
Reconstruction<Scalar> reconstruct_zechip(const SampledSeries<Scalar>& s,
                                          const ReconstructionParams<Scalar>& params) {
  const auto knots = augmented_knots(s, params, false);
  return {evaluate_pchip<Scalar>(knots, s.source_length()), "ZeChip"};
}

template <typename Scalar>
Reconstruction<Scalar> reconstruct_zechipc(const SampledSeries<Scalar>& s,
                                           const ReconstructionParams<Scalar>& params) {
  const auto knots = augmented_knots(s, params, true);
  return {evaluate_pchip<Scalar>(knots, s.source_length()), "ZeChipC"};
}

}  // namespace lebesgue
