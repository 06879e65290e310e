#include "lebesgue/cli.hpp"

#include "lebesgue/bench.hpp"
#include "lebesgue/sampling.hpp"
#include "lebesgue/verify.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lebesgue {
namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << content;
  if (!f) throw IoError("write failed for '" + path + "'");
}

std::optional<double> to_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  const auto sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == ';'; };
  while (i < line.size()) {
    while (i < line.size() && sep(line[i])) ++i;
    const auto start = i;
    while (i < line.size() && !sep(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string method_list() {
  std::string s;
  for (auto m : kAllMethods) s += (s.empty() ? "" : "|") + std::string(method_id(m));
  return s;
}

struct ParamFlags {
  double tolerance_ratio = 1.15;
  Index prev_dist = 3;
  Index min_dist = 3;
  Index max_dist = -1;

  void attach(CLI::App& app) {
    app.add_option("--tolerance-ratio", tolerance_ratio, "Increased tolerated region factor (>= 1)")
        ->capture_default_str();
    app.add_option("--prev-dist", prev_dist, "Convexity gate: gap before the interval must exceed this")
        ->capture_default_str();
    app.add_option("--min-dist", min_dist, "Convexity gate: interval length must exceed this")
        ->capture_default_str();
    app.add_option("--max-dist", max_dist, "Convexity gate: interval length must stay below this (-1: unbounded)")
        ->capture_default_str();
  }

  ReconstructionParams<double> params(double threshold) const {
    ReconstructionParams<double> p;
    p.threshold = threshold;
    p.tolerance_ratio = tolerance_ratio;
    p.previous_distance = prev_dist;
    p.subsequent_min_distance = min_dist;
    if (max_dist >= 0) p.subsequent_max_distance = max_dist;
    p.validate();
    return p;
  }
};

}  // namespace

TimeSeries<double> read_signal_file(const std::filesystem::path& path) {
  const auto text = read_text(path);
  std::vector<double> values;
  bool seen_content = false;
  std::size_t row = 0;
  for (const auto& line : lines_of(text)) {
    ++row;
    if (!line.empty() && line.front() == '#') continue;
    const auto toks = tokens(line);
    if (toks.empty()) continue;
    std::vector<double> row_values;
    bool numeric = true;
    for (const auto& t : toks) {
      const auto v = to_double(t);
      if (!v) {
        numeric = false;
        if (seen_content)
          throw ParseError("'" + path.string() + "' row " + std::to_string(row) + ": cannot parse '" +
                           std::string(t) + "'");
        break;
      }
      row_values.push_back(*v);
    }
    seen_content = true;
    if (!numeric) continue;
    values.insert(values.end(), row_values.begin(), row_values.end());
  }
  if (values.empty()) throw InvalidInput("'" + path.string() + "' contains no values");
  return TimeSeries<double>::from(values);
}

SampledFile read_sampled_file(const std::filesystem::path& path) {
  const auto text = read_text(path);
  SampledFile file;
  std::size_t row = 0;
  for (const auto& line : lines_of(text)) {
    ++row;
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream meta(line.substr(1));
      for (std::string kv; meta >> kv;) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        const auto key = kv.substr(0, eq);
        const auto v = to_double(std::string_view(kv).substr(eq + 1));
        if (!v) throw ParseError("'" + path.string() + "' row " + std::to_string(row) + ": bad metadata '" + kv + "'");
        if (key == "source_length") file.source_length = static_cast<Index>(*v);
        if (key == "threshold") file.threshold = *v;
      }
      continue;
    }
    const auto toks = tokens(line);
    if (toks.empty()) continue;
    if (toks.size() == 2 && toks[0] == "index") continue;
    if (toks.size() != 2)
      throw ShapeError("'" + path.string() + "' row " + std::to_string(row) + ": expected index,value");
    const auto idx = to_double(toks[0]);
    const auto val = to_double(toks[1]);
    if (!idx || !val || *idx != std::floor(*idx))
      throw ParseError("'" + path.string() + "' row " + std::to_string(row) + ": cannot parse '" + line + "'");
    file.points.push_back({static_cast<Index>(*idx), *val});
  }
  if (file.points.empty()) throw InvalidInput("'" + path.string() + "' contains no sampled points");
  return file;
}

std::string write_sampled_csv(const SampledSeries<double>& s) {
  std::string out = "# source_length=" + std::to_string(s.source_length()) +
                    " threshold=" + format_number(s.threshold()) + "\nindex,value\n";
  for (const auto& k : s.points()) out += std::to_string(k.index) + "," + format_number(k.value) + "\n";
  return out;
}

std::string write_values_csv(const Vector<double>& values) {
  std::string out = "index,value\n";
  for (Index i = 0; i < values.size(); ++i) out += std::to_string(i) + "," + format_number(values[i]) + "\n";
  return out;
}

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Event-based (send-on-delta) and periodic sampling with event-aware reconstruction",
               "lebesgue"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "Sample one signal file into a sampled-points CSV");
  std::string sample_in, sample_out, regime = "lebesgue";
  double sample_threshold = 0.05, sample_fraction = 0.15;
  sample->add_option("input", sample_in, "Signal file (one series of numbers)")->required();
  sample->add_option("--regime", regime, "lebesgue|riemann")
      ->check(CLI::IsMember({"lebesgue", "riemann"}))
      ->capture_default_str();
  sample->add_option("--threshold", sample_threshold, "Send-on-delta threshold")->capture_default_str();
  sample->add_option("--fraction", sample_fraction, "Fraction of points kept by periodic sampling")
      ->capture_default_str();
  sample->add_option("-o,--out", sample_out, "Output CSV (default: stdout)");

  // reconstruct
  auto* recon = app.add_subcommand("reconstruct", "Reconstruct a full signal from a sampled-points CSV");
  std::string recon_in, recon_out, method_name;
  std::optional<double> recon_threshold;
  std::optional<Index> recon_length;
  ParamFlags recon_flags;
  recon->add_option("input", recon_in, "Sampled-points CSV")->required();
  recon->add_option("--method", method_name, method_list())->required();
  recon->add_option("--threshold", recon_threshold, "Sampling threshold (default: from file, else 0.05)");
  recon->add_option("--length", recon_length, "Source length (default: from file, else last index + 1)");
  recon_flags.attach(*recon);
  recon->add_option("-o,--out", recon_out, "Output CSV (default: stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Run the RMSE comparison on UCR data or a synthetic corpus");
  int experiment = 1;
  double bench_threshold = 0.05, budget = 0.15;
  std::uint64_t seed = 1;
  std::string out_dir = "bench_out", data_dir;
  std::vector<std::string> dataset_names;
  std::size_t per_family = 40, synthetic_sets = 1;
  Index length = 500;
  std::vector<std::string> methods;
  ParamFlags bench_flags;
  bench->add_option("--experiment", experiment, "1: fixed threshold, 2: sample budget")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  bench->add_option("--threshold", bench_threshold, "Experiment 1 threshold")->capture_default_str();
  bench->add_option("--budget", budget, "Experiment 2 target fraction")->capture_default_str();
  bench->add_option("--seed", seed, "Synthetic corpus seed")->capture_default_str();
  bench->add_option("--out", out_dir, "Report directory")->capture_default_str();
  bench->add_option("--data", data_dir, "UCR archive root (<root>/<Name>/<Name>_TRAIN.tsv); synthetic corpus if absent");
  bench->add_option("--dataset", dataset_names, "Dataset name under --data (repeatable; default: all)");
  bench->add_option("--signals", per_family, "Synthetic signals per family")->capture_default_str();
  bench->add_option("--length", length, "Synthetic signal length")->capture_default_str();
  bench->add_option("--synthetic-datasets", synthetic_sets, "Number of synthetic datasets")
      ->capture_default_str();
  bench->add_option("--methods", methods, "Methods to run (" + method_list() + "); default: all")
      ->delimiter(',');
  bench_flags.attach(*bench);

  // verify
  auto* verify = app.add_subcommand("verify", "Run the randomized property checks");
  std::uint64_t verify_seed = 7;
  verify->add_option("--seed", verify_seed, "Seed for the random cases")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*sample) {
      const auto series = read_signal_file(sample_in);
      const auto sampled = regime == "lebesgue" ? lebesgue_sample(series, sample_threshold)
                                                : riemann_sample(series, SampleBudget(sample_fraction));
      write_output(write_sampled_csv(sampled), sample_out, out);
    } else if (*recon) {
      const auto method = parse_method(method_name);
      if (!method) {
        err << "unknown method '" << method_name << "' (expected " << method_list() << ")\n"
            << app.help();
        return 1;
      }
      const auto file = read_sampled_file(recon_in);
      const double t = recon_threshold.value_or(file.threshold.value_or(0.05));
      const Index n = recon_length.value_or(file.source_length.value_or(file.points.back().index + 1));
      const SampledSeries<double> s(file.points, n, t);
      const auto r = reconstruct(*method, s, recon_flags.params(t));
      write_output(write_values_csv(r.values), recon_out, out);
    } else if (*bench) {
      ExperimentConfig config;
      config.mode = experiment == 1 ? ExperimentMode::FixedThreshold : ExperimentMode::Budget;
      config.threshold = bench_threshold;
      config.target_fraction = budget;
      config.params = bench_flags.params(bench_threshold);
      config.seed = seed;
      config.threads = threads_from_environment();
      if (!methods.empty()) {
        config.methods.clear();
        for (const auto& m : methods) {
          const auto parsed = parse_method(m);
          if (!parsed) {
            err << "unknown method '" << m << "' (expected " << method_list() << ")\n";
            return 1;
          }
          config.methods.push_back(*parsed);
        }
      }
      std::vector<DatasetBundle> bundles;
      std::string report_name;
      if (!data_dir.empty()) {
        const auto names = dataset_names.empty() ? list_ucr_datasets(data_dir) : dataset_names;
        if (names.empty()) throw InvalidInput("no datasets found under '" + data_dir + "'");
        for (const auto& n : names) bundles.push_back(load_ucr_directory(data_dir, n));
        report_name = names.size() == 1 ? names.front() : "ucr";
      } else {
        CorpusSpec spec;
        for (auto kind : {SignalKind::StepTrain, SignalKind::Ramp, SignalKind::Sine, SignalKind::Triangle,
                          SignalKind::RandomWalk})
          spec.families.push_back({kind, per_family, length});
        for (std::size_t k = 0; k < synthetic_sets; ++k) {
          const auto name = synthetic_sets == 1 ? std::string("synthetic") : "synthetic-" + std::to_string(k + 1);
          bundles.push_back(generate_synthetic_corpus(seed + k, spec, name));
        }
        report_name = "synthetic";
      }
      const auto report = run_experiments(bundles, config, report_name);
      for (const auto& p : emit_report(report, out_dir, {}, &config)) out << "wrote " << p.string() << "\n";
      for (const auto& m : report.summary)
        out << m.method_name << "\tmean_rmse=" << format_number(m.mean_rmse)
            << "\tmean_rank=" << format_number(m.mean_rank) << "\twins=" << m.wins << "\n";
    } else if (*verify) {
      bool all = true;
      for (const auto& c : run_property_suite(verify_seed)) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        all = all && c.passed;
      }
      return all ? 0 : 1;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace lebesgue
