#pragma once

#include "lebesgue/core.hpp"
#include "lebesgue/methods.hpp"
#include "lebesgue/metrics.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lebesgue {

// ---------------------------------------------------------------------------
// Dataset ingestion

enum class TableFormat { Tsv, Csv };

struct LoadOptions {
  TableFormat format = TableFormat::Tsv;
  // Column holding the class label, dropped on load. nullopt: no label column.
  std::optional<std::size_t> label_column = 0;
};

/// Reads one or two label-prefixed tables (train first, then test) into a bundle.
/// CSV input may start with a header row; it is detected as a first row whose
/// value cells do not parse as numbers.
DatasetBundle load_ucr_dataset(const std::filesystem::path& train,
                               const std::optional<std::filesystem::path>& test,
                               const LoadOptions& options = {});

/// Loads `<root>/<name>/<name>_TRAIN.tsv` and `<name>_TEST.tsv` (test optional).
DatasetBundle load_ucr_directory(const std::filesystem::path& root, const std::string& name);

/// Lists dataset names under a UCR-style archive root, sorted.
std::vector<std::string> list_ucr_datasets(const std::filesystem::path& root);

// ---------------------------------------------------------------------------
// Synthetic corpora

enum class SignalKind { StepTrain, Ramp, Sine, RandomWalk, Triangle };

struct SignalFamily {
  SignalKind kind;
  std::size_t count;
  Index length;
};

struct CorpusSpec {
  std::vector<SignalFamily> families;
};

std::string_view signal_kind_name(SignalKind kind);

/// Deterministic for a fixed seed; every signal is normalized to [0, 1].
/// Signals appear in family order.
DatasetBundle generate_synthetic_corpus(std::uint64_t seed, const CorpusSpec& spec,
                                        std::string name = "synthetic");

// ---------------------------------------------------------------------------
// Experiments

enum class ExperimentMode { FixedThreshold, Budget };

struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::FixedThreshold;
  double threshold = 0.05;
  double target_fraction = 0.15;
  // The threshold field is overwritten with the sampling threshold of each dataset.
  ReconstructionParams<double> params;
  std::vector<Method> methods{kAllMethods.begin(), kAllMethods.end()};
  std::uint64_t seed = 1;
  // Worker count; 0 picks the hardware concurrency. Never affects results.
  unsigned threads = 0;
};

/// Normalizes, samples, reconstructs and scores every signal of one dataset.
/// Budget mode tunes one Lebesgue threshold for the dataset and also samples
/// periodically at the achieved fraction; method names get "L " / "R " prefixes.
DatasetScores score_dataset(const DatasetBundle& bundle, const ExperimentConfig& config);

MethodReport run_experiment(const DatasetBundle& bundle, const ExperimentConfig& config);

/// Scores several datasets, aggregated in the order given.
MethodReport run_experiments(std::span<const DatasetBundle> bundles, const ExperimentConfig& config,
                             std::string report_name);

/// Fraction of uniform points in the tolerated-region rectangle that fall
/// strictly between the chord and the upper bound, for an interval whose right
/// sample sits exactly one threshold above the left one.
double monte_carlo_convexity_area(std::uint64_t samples, std::uint64_t seed,
                                  double threshold = 0.05, Index interval_length = 10);

// ---------------------------------------------------------------------------
// Reports

struct ReportFormats {
  bool csv = true;
  bool json = true;
};

/// Writes `<report.name>_rmse.csv`, `summary.csv`, `boxplot_long.csv` and
/// `report.json`. Returns the paths written.
std::vector<std::filesystem::path> emit_report(const MethodReport& report,
                                               const std::filesystem::path& out_dir,
                                               ReportFormats formats = {},
                                               const ExperimentConfig* config = nullptr);

std::string report_to_json(const MethodReport& report, const ExperimentConfig* config = nullptr);
MethodReport report_from_json(const std::string& text);

/// Formats a double with 17 significant digits.
std::string format_number(double v);

/// Worker count from LEBESGUE_INTERP_THREADS (0 or unset: automatic).
unsigned threads_from_environment();

}  // namespace lebesgue
