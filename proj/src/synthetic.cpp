#include "lebesgue/bench.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace lebesgue {
namespace {

// Distribution code is written out so corpora are identical across standard
// library implementations; only the engine comes from <random>.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  Index integer(Index lo, Index hi) {  // inclusive
    return lo + static_cast<Index>(uniform() * static_cast<double>(hi - lo + 1));
  }
  bool coin() { return (engine_() >> 63) != 0; }
  double normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

// Plateaus joined by short linear edges of 2 to 5 samples (finite rise time).
Vector<double> step_train(Rng& rng, Index n) {
  Vector<double> v(n);
  double level = rng.uniform();
  Index i = 0;
  bool first = true;
  while (i < n) {
    const Index max_len = first ? std::max<Index>(4, n / 2) : std::max<Index>(4, n / 4);
    const Index len = rng.integer(std::max<Index>(4, n / 12), max_len);
    const Index end = std::min(n, i + len);
    v.segment(i, end - i).setConstant(level);
    i = end;
    first = false;
    double jump = rng.uniform(0.15, 0.5) * (rng.coin() ? 1.0 : -1.0);
    if (level + jump < 0.0 || level + jump > 1.0) jump = -jump;
    const Index edge = rng.integer(2, 5);
    const double next = level + jump;
    for (Index k = 1; k <= edge && i < n; ++k, ++i)
      v[i] = k == edge ? next : level + jump * static_cast<double>(k) / static_cast<double>(edge);
    level = next;
  }
  return v;
}

Vector<double> ramp(Rng& rng, Index n) {
  Vector<double> v(n);
  double level = rng.uniform();
  Index i = 0;
  while (i < n) {
    const Index hold = std::min(n - i, rng.integer(std::max<Index>(2, n / 20), std::max<Index>(3, n / 6)));
    v.segment(i, hold).setConstant(level);
    i += hold;
    if (i >= n) break;
    double target = rng.uniform();
    if (std::abs(target - level) < 0.2) target = level < 0.5 ? level + 0.4 : level - 0.4;
    const Index len = rng.integer(std::max<Index>(4, n / 10), std::max<Index>(5, n / 3));
    for (Index k = 1; k <= len && i < n; ++k, ++i)
      v[i] = level + (target - level) * static_cast<double>(k) / static_cast<double>(len);
    level = target;
  }
  return v;
}

Vector<double> sine(Rng& rng, Index n) {
  Vector<double> v = Vector<double>::Zero(n);
  const int terms = rng.coin() ? 2 : 1;
  for (int t = 0; t < terms; ++t) {
    const double cycles = rng.uniform(1.0, 5.0);
    const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double amplitude = t == 0 ? 1.0 : rng.uniform(0.2, 0.5);
    for (Index i = 0; i < n; ++i)
      v[i] += amplitude * std::sin(2.0 * std::numbers::pi * cycles * static_cast<double>(i) /
                                       static_cast<double>(n) + phase);
  }
  return v;
}

Vector<double> random_walk(Rng& rng, Index n) {
  Vector<double> v(n);
  double level = 0.0;
  for (Index i = 0; i < n; ++i) {
    v[i] = level;
    level += rng.normal();
  }
  return v;
}

// Alternating rising and falling linear legs with random spans and extremes.
Vector<double> triangle(Rng& rng, Index n) {
  Vector<double> v(n);
  double level = rng.uniform(0.0, 0.3);
  bool rising = true;
  Index i = 0;
  v[i++] = level;
  while (i < n) {
    const double target = rising ? rng.uniform(0.6, 1.0) : rng.uniform(0.0, 0.4);
    const Index len = rng.integer(std::max<Index>(4, n / 16), std::max<Index>(5, n / 5));
    for (Index k = 1; k <= len && i < n; ++k, ++i)
      v[i] = level + (target - level) * static_cast<double>(k) / static_cast<double>(len);
    level = target;
    rising = !rising;
  }
  return v;
}

}  // namespace

std::string_view signal_kind_name(SignalKind kind) {
  switch (kind) {
    case SignalKind::StepTrain: return "step";
    case SignalKind::Ramp: return "ramp";
    case SignalKind::Sine: return "sine";
    case SignalKind::RandomWalk: return "random-walk";
    case SignalKind::Triangle: return "triangle";
  }
  return "";
}

DatasetBundle generate_synthetic_corpus(std::uint64_t seed, const CorpusSpec& spec,
                                        std::string name) {
  if (spec.families.empty()) throw InvalidInput("corpus spec has no signal families");
  DatasetBundle bundle;
  bundle.name = std::move(name);
  bundle.source_path = "synthetic:seed=" + std::to_string(seed);
  bundle.source_format = "synthetic";
  Rng rng(seed);
  for (const auto& family : spec.families) {
    if (family.count < 1) throw InvalidInput("signal family count must be >= 1");
    if (family.length < 16) throw InvalidInput("synthetic signals need length >= 16");
    for (std::size_t k = 0; k < family.count; ++k) {
      Vector<double> raw;
      switch (family.kind) {
        case SignalKind::StepTrain: raw = step_train(rng, family.length); break;
        case SignalKind::Ramp: raw = ramp(rng, family.length); break;
        case SignalKind::Sine: raw = sine(rng, family.length); break;
        case SignalKind::RandomWalk: raw = random_walk(rng, family.length); break;
        case SignalKind::Triangle: raw = triangle(rng, family.length); break;
      }
      bundle.signals.push_back(normalize_unit_interval(TimeSeries<double>(std::move(raw))));
    }
  }
  return bundle;
}

}  // namespace lebesgue
