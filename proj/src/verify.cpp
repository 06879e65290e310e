#include "lebesgue/verify.hpp"

#include "lebesgue/bench.hpp"
#include "lebesgue/sampling.hpp"
#include "lebesgue/zelic.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace lebesgue {
namespace {

std::vector<double> random_walk(std::mt19937_64& rng, std::size_t n, double step) {
  std::normal_distribution<double> noise(0.0, step);
  std::vector<double> v(n);
  double level = 0.5;
  for (auto& x : v) {
    x = level;
    level += noise(rng);
  }
  return v;
}

// Naive trace: from the current sample, look ahead for the first point that
// leaves the band.
std::vector<Index> naive_lebesgue_indices(const std::vector<double>& v, double t) {
  std::vector<Index> kept{0};
  std::size_t cur = 0;
  for (std::size_t j = 1; j < v.size(); ++j) {
    if (!(std::abs(v[j] - v[cur]) < t)) {
      kept.push_back(static_cast<Index>(j));
      cur = j;
    }
  }
  return kept;
}

CheckResult check_sampler(std::mt19937_64& rng) {
  std::size_t mismatches = 0, violations = 0, cases = 0;
  for (double t : {0.02, 0.05, 0.1}) {
    for (int c = 0; c < 200; ++c, ++cases) {
      const auto v = random_walk(rng, 300, 0.02);
      const auto s = lebesgue_sample(TimeSeries<double>::from(v), t);
      const auto ref = naive_lebesgue_indices(v, t);
      bool same = ref.size() == s.size();
      for (std::size_t k = 0; same && k < ref.size(); ++k) same = ref[k] == s[k].index;
      mismatches += !same;
      for (std::size_t k = 0; k < s.size(); ++k) {
        const Index end = k + 1 < s.size() ? s[k + 1].index : static_cast<Index>(v.size());
        const auto region = tolerated_region(s[k].value, t);
        for (Index x = s[k].index + 1; x < end; ++x)
          violations += !region.strictly_contains(v[static_cast<std::size_t>(x)]);
      }
    }
  }
  std::ostringstream d;
  d << cases << " walks, " << mismatches << " trace mismatches, " << violations
    << " tolerated-region violations";
  return {"lebesgue sampler vs naive trace", mismatches == 0 && violations == 0, d.str()};
}

CheckResult check_limit_condition(std::mt19937_64& rng) {
  std::uniform_int_distribution<Index> start(0, 100), span(1, 60);
  std::uniform_real_distribution<double> value(-1.0, 1.0), thr(0.001, 0.3);
  int disagreements = 0;
  const int cases = 5000;
  for (int c = 0; c < cases; ++c) {
    const Knot<double> a{start(rng), value(rng)};
    const Knot<double> b{a.index + span(rng), value(rng)};
    const double t = thr(rng);
    bool outside = false;
    for (Index x = a.index + 1; x < b.index; ++x) {
      const double p = a.value + (b.value - a.value) * static_cast<double>(x - a.index) /
                                     static_cast<double>(b.index - a.index);
      outside = outside || std::abs(p - a.value) > t;
    }
    disagreements += outside != abrupt_limit_condition(a, b, t);
  }
  return {"limit condition vs interior scan", disagreements == 0,
          std::to_string(cases) + " intervals, " + std::to_string(disagreements) + " disagreements"};
}

CheckResult check_convexity_area(std::uint64_t seed) {
  const double f = monte_carlo_convexity_area(1'000'000, seed);
  std::ostringstream d;
  d.precision(6);
  d << "fraction " << f << " (expected 0.25 +/- 0.005)";
  return {"convexity false-assumption area", std::abs(f - 0.25) <= 0.005, d.str()};
}

CheckResult check_pchip_shape(std::mt19937_64& rng) {
  std::uniform_int_distribution<Index> gap(1, 12);
  std::uniform_real_distribution<double> step(0.0, 0.2);
  int failures = 0;
  const int cases = 500;
  for (int c = 0; c < cases; ++c) {
    std::vector<Knot<double>> knots{{0, 0.0}};
    for (int k = 0; k < 8; ++k)
      knots.push_back({knots.back().index + gap(rng), knots.back().value + step(rng)});
    const SampledSeries<double> s(knots, knots.back().index + 1, 0.0);
    const auto r = interp_pchip(s);
    bool ok = true;
    for (Index x = 1; x < r.values.size(); ++x) ok = ok && r.values[x] >= r.values[x - 1];
    for (std::size_t k = 0; k + 1 < knots.size(); ++k)
      for (Index x = knots[k].index; x <= knots[k + 1].index; ++x)
        ok = ok && r.values[x] >= knots[k].value && r.values[x] <= knots[k + 1].value;
    failures += !ok;
  }
  return {"PCHIP monotonicity and envelope", failures == 0,
          std::to_string(cases) + " monotone knot sets, " + std::to_string(failures) + " failures"};
}

CheckResult check_gate_equivalence(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> step(0.05, 0.3);
  std::uniform_int_distribution<Index> gap(1, 20);
  int failures = 0;
  const int cases = 300;
  for (int c = 0; c < cases; ++c) {
    std::vector<Knot<double>> knots{{0, 0.0}};
    for (int k = 0; k < 10; ++k)
      knots.push_back({knots.back().index + gap(rng), knots.back().value + step(rng)});
    const SampledSeries<double> s(knots, knots.back().index + 5, 0.05);
    const auto params = ReconstructionParams<double>::for_threshold(0.05);
    failures += reconstruct_zelic(s, params).values != reconstruct_zeli(s, params).values;
    failures += reconstruct_zechipc(s, params).values != reconstruct_zechip(s, params).values;
  }
  return {"convexity variants equal base methods without slope reversals", failures == 0,
          std::to_string(cases) + " monotone sample sets, " + std::to_string(failures) + " failures"};
}

}  // namespace

std::vector<CheckResult> run_property_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  out.push_back(check_sampler(rng));
  out.push_back(check_limit_condition(rng));
  out.push_back(check_convexity_area(seed));
  out.push_back(check_pchip_shape(rng));
  out.push_back(check_gate_equivalence(rng));
  return out;
}

}  // namespace lebesgue
