#include "lebesgue/bench.hpp"
#include "lebesgue/sampling.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

namespace lebesgue {
namespace {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
          try {
            body(i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

void check_knots(const SampledSeries<double>& s, const Reconstruction<double>& r) {
  for (const auto& k : s.points())
    if (r.values[k.index] != k.value)
      throw std::logic_error(r.method_name + " does not reproduce the knot at index " +
                             std::to_string(k.index));
}

struct Regime {
  std::string prefix;
  bool periodic;
};

}  // namespace

unsigned threads_from_environment() {
  const char* raw = std::getenv("LEBESGUE_INTERP_THREADS");
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0) throw InvalidInput("LEBESGUE_INTERP_THREADS must be a non-negative integer");
  return static_cast<unsigned>(v);
}

DatasetScores score_dataset(const DatasetBundle& bundle, const ExperimentConfig& config) {
  series_equal_length_check(bundle);
  if (config.methods.empty()) throw InvalidInput("experiment has no methods");

  DatasetBundle normalized{bundle.name, {}, bundle.source_path, bundle.source_format};
  normalized.signals.reserve(bundle.signals.size());
  for (const auto& s : bundle.signals) normalized.signals.push_back(normalize_unit_interval(s));

  DatasetScores out;
  out.dataset = bundle.name;
  out.signal_count = normalized.signals.size();

  std::vector<Regime> regimes;
  std::optional<SampleBudget> periodic_budget;
  if (config.mode == ExperimentMode::FixedThreshold) {
    if (!(config.threshold >= 0.0)) throw InvalidInput("threshold must be non-negative");
    out.threshold = config.threshold;
    out.achieved_fraction = lebesgue_fraction(normalized, config.threshold);
    regimes.push_back({"", false});
  } else {
    const auto choice = tune_threshold(normalized, SampleBudget(config.target_fraction));
    out.threshold = choice.threshold;
    out.achieved_fraction = choice.achieved_fraction;
    periodic_budget.emplace(choice.achieved_fraction);
    regimes.push_back({"L ", false});
    regimes.push_back({"R ", true});
  }

  auto params = config.params;
  params.threshold = out.threshold;
  params.validate();

  const std::size_t columns = regimes.size() * config.methods.size();
  const std::size_t rows = normalized.signals.size();
  std::vector<double> table(rows * columns);

  parallel_for(rows, config.threads, [&](std::size_t i) {
    const auto& signal = normalized.signals[i];
    std::size_t column = 0;
    for (const auto& regime : regimes) {
      const auto sampled = regime.periodic ? riemann_sample(signal, *periodic_budget)
                                           : lebesgue_sample(signal, out.threshold);
      for (const auto method : config.methods) {
        const auto r = reconstruct(method, sampled, params);
        if (i % 100 == 0) check_knots(sampled, r);
        table[i * columns + column++] = rmse(signal, r);
      }
    }
  });

  std::size_t column = 0;
  for (const auto& regime : regimes) {
    for (const auto method : config.methods) {
      std::vector<double> values(rows);
      for (std::size_t i = 0; i < rows; ++i) values[i] = table[i * columns + column];
      out.scores.push_back(
          MethodScore::from_rmse(regime.prefix + std::string(method_display_name(method)), std::move(values)));
      ++column;
    }
  }
  out.scores = rank_methods(std::move(out.scores));
  return out;
}

MethodReport run_experiment(const DatasetBundle& bundle, const ExperimentConfig& config) {
  return aggregate_report(bundle.name, {score_dataset(bundle, config)});
}

MethodReport run_experiments(std::span<const DatasetBundle> bundles, const ExperimentConfig& config,
                             std::string report_name) {
  std::vector<DatasetScores> per_dataset;
  per_dataset.reserve(bundles.size());
  for (const auto& b : bundles) per_dataset.push_back(score_dataset(b, config));
  return aggregate_report(std::move(report_name), std::move(per_dataset));
}

double monte_carlo_convexity_area(std::uint64_t samples, std::uint64_t seed, double threshold,
                                  Index interval_length) {
  if (samples < 10000) throw InvalidInput("monte_carlo_convexity_area needs at least 10^4 samples");
  if (!(threshold >= 0.0)) throw InvalidInput("threshold must be non-negative");
  if (interval_length < 1) throw InvalidInput("interval length must be positive");
  if (threshold == 0.0) return 0.0;

  // Left sample (0, 0), right sample (L, t); region [0, L] x [-t, t].
  const double length = static_cast<double>(interval_length);
  std::mt19937_64 engine(seed);
  const auto unit = [&] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
  std::uint64_t hits = 0;
  for (std::uint64_t k = 0; k < samples; ++k) {
    const double x = unit() * length;
    const double y = (2.0 * unit() - 1.0) * threshold;
    const double chord = threshold * x / length;
    hits += (y > chord && y < threshold);
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace lebesgue
