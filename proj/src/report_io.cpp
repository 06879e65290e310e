#include "lebesgue/bench.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>

namespace lebesgue {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string file_stem(const std::string& name) {
  std::string out = name.empty() ? "report" : name;
  for (char& c : out)
    if (c == '/' || c == '\\' || c == ':' || c == ' ') c = '_';
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

const MethodScore& find_score(const DatasetScores& ds, const std::string& method) {
  for (const auto& s : ds.scores)
    if (s.method_name == method) return s;
  throw InvalidInput("dataset '" + ds.dataset + "' has no method '" + method + "'");
}

ordered_json config_json(const ExperimentConfig& c) {
  ordered_json j;
  j["mode"] = c.mode == ExperimentMode::FixedThreshold ? "fixed-threshold" : "budget";
  j["threshold"] = c.threshold;
  j["target_fraction"] = c.target_fraction;
  j["tolerance_ratio"] = c.params.tolerance_ratio;
  j["previous_distance"] = c.params.previous_distance;
  j["subsequent_min_distance"] = c.params.subsequent_min_distance;
  if (c.params.subsequent_max_distance)
    j["subsequent_max_distance"] = *c.params.subsequent_max_distance;
  else
    j["subsequent_max_distance"] = nullptr;
  auto& methods = j["methods"] = ordered_json::array();
  for (auto m : c.methods) methods.push_back(std::string(method_id(m)));
  j["seed"] = c.seed;
  return j;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string report_to_json(const MethodReport& report, const ExperimentConfig* config) {
  ordered_json j;
  j["name"] = report.name;
  if (config) j["config"] = config_json(*config);
  auto& datasets = j["datasets"] = ordered_json::array();
  for (const auto& ds : report.datasets) {
    ordered_json d;
    d["dataset"] = ds.dataset;
    d["threshold"] = ds.threshold;
    d["achieved_fraction"] = ds.achieved_fraction;
    d["signal_count"] = ds.signal_count;
    auto& scores = d["scores"] = ordered_json::array();
    for (const auto& s : ds.scores) {
      ordered_json m;
      m["method"] = s.method_name;
      m["mean_rmse"] = s.mean_rmse;
      m["median_rmse"] = s.median_rmse;
      m["rank"] = s.rank_position;
      m["per_signal_rmse"] = s.per_signal_rmse;
      scores.push_back(std::move(m));
    }
    datasets.push_back(std::move(d));
  }
  auto& summary = j["summary"] = ordered_json::array();
  for (const auto& m : report.summary) {
    summary.push_back({{"method", m.method_name},
                       {"mean_rmse", m.mean_rmse},
                       {"mean_rank", m.mean_rank},
                       {"wins", m.wins}});
  }
  return j.dump(2) + "\n";
}

MethodReport report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
  try {
    MethodReport report;
    report.name = j.at("name").get<std::string>();
    for (const auto& d : j.at("datasets")) {
      DatasetScores ds;
      ds.dataset = d.at("dataset").get<std::string>();
      ds.threshold = d.at("threshold").get<double>();
      ds.achieved_fraction = d.at("achieved_fraction").get<double>();
      ds.signal_count = d.at("signal_count").get<std::size_t>();
      for (const auto& m : d.at("scores")) {
        MethodScore s;
        s.method_name = m.at("method").get<std::string>();
        s.mean_rmse = m.at("mean_rmse").get<double>();
        s.median_rmse = m.at("median_rmse").get<double>();
        s.rank_position = m.at("rank").get<int>();
        s.per_signal_rmse = m.at("per_signal_rmse").get<std::vector<double>>();
        ds.scores.push_back(std::move(s));
      }
      report.datasets.push_back(std::move(ds));
    }
    for (const auto& m : j.at("summary")) {
      report.summary.push_back({m.at("method").get<std::string>(), m.at("mean_rmse").get<double>(),
                                m.at("mean_rank").get<double>(), m.at("wins").get<int>()});
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

std::vector<std::filesystem::path> emit_report(const MethodReport& report,
                                               const std::filesystem::path& out_dir,
                                               ReportFormats formats,
                                               const ExperimentConfig* config) {
  if (report.summary.empty() || report.datasets.empty())
    throw InvalidInput("report has no methods or datasets");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());

  std::vector<std::filesystem::path> written;
  if (formats.csv) {
    // Columns follow the overall ranking, as in the summary.
    std::string table = "dataset";
    for (const auto& m : report.summary) table += "," + csv_cell(m.method_name);
    table += "\n";
    std::string long_form = "dataset,method,rmse,rank\n";
    for (const auto& ds : report.datasets) {
      table += csv_cell(ds.dataset);
      for (const auto& m : report.summary) {
        const auto& s = find_score(ds, m.method_name);
        table += "," + format_number(s.mean_rmse);
        long_form += csv_cell(ds.dataset) + "," + csv_cell(s.method_name) + "," +
                     format_number(s.mean_rmse) + "," + std::to_string(s.rank_position) + "\n";
      }
      table += "\n";
    }
    std::string summary = "method,mean_rmse,mean_rank,wins\n";
    for (const auto& m : report.summary)
      summary += csv_cell(m.method_name) + "," + format_number(m.mean_rmse) + "," +
                 format_number(m.mean_rank) + "," + std::to_string(m.wins) + "\n";

    const auto rmse_path = out_dir / (file_stem(report.name) + "_rmse.csv");
    write_file(rmse_path, table);
    write_file(out_dir / "summary.csv", summary);
    write_file(out_dir / "boxplot_long.csv", long_form);
    written.insert(written.end(), {rmse_path, out_dir / "summary.csv", out_dir / "boxplot_long.csv"});
  }
  if (formats.json) {
    write_file(out_dir / "report.json", report_to_json(report, config));
    written.push_back(out_dir / "report.json");
  }
  return written;
}

}  // namespace lebesgue
