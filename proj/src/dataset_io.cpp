#include "lebesgue/bench.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <string_view>

namespace lebesgue {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_row(std::string_view line, TableFormat format) {
  std::vector<std::string_view> cells;
  if (format == TableFormat::Csv) {
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      cells.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return cells;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == '\t' || line[i] == ' ' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const auto start = i;
    while (i < line.size() && line[i] != '\t' && line[i] != ' ' && line[i] != '\r') ++i;
    cells.push_back(line.substr(start, i - start));
  }
  return cells;
}

std::optional<double> parse_double(std::string_view cell) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty()) return std::nullopt;
  return v;
}

void read_table(const std::filesystem::path& path, const LoadOptions& options,
                std::vector<TimeSeries<double>>& out, Index& expected_length) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::string line;
  std::size_t row = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++row;
    const auto body = trim(line);
    if (body.empty()) continue;
    const auto cells = split_row(body, options.format);

    std::vector<double> values;
    values.reserve(cells.size());
    bool header = false;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (options.label_column && c == *options.label_column) continue;
      const auto v = parse_double(cells[c]);
      if (!v) {
        if (first_content && options.format == TableFormat::Csv) {
          header = true;
          break;
        }
        throw ParseError("'" + path.string() + "' row " + std::to_string(row) + " column " +
                         std::to_string(c + 1) + ": cannot parse '" + std::string(cells[c]) + "'");
      }
      values.push_back(*v);
    }
    first_content = false;
    if (header) continue;
    if (options.label_column && *options.label_column >= cells.size())
      throw ShapeError("'" + path.string() + "' row " + std::to_string(row) + " has no label column");
    if (values.empty())
      throw ShapeError("'" + path.string() + "' row " + std::to_string(row) + " has no values");
    const auto length = static_cast<Index>(values.size());
    if (expected_length < 0) expected_length = length;
    if (length != expected_length)
      throw ShapeError("'" + path.string() + "' row " + std::to_string(row) + " has " +
                       std::to_string(length) + " values, expected " +
                       std::to_string(expected_length));
    try {
      out.push_back(TimeSeries<double>::from(values));
    } catch (const InvalidInput& e) {
      throw ParseError("'" + path.string() + "' row " + std::to_string(row) + ": " + e.what());
    }
  }
}

}  // namespace

DatasetBundle load_ucr_dataset(const std::filesystem::path& train,
                               const std::optional<std::filesystem::path>& test,
                               const LoadOptions& options) {
  DatasetBundle bundle;
  bundle.name = train.stem().string();
  if (const auto pos = bundle.name.rfind("_TRAIN"); pos != std::string::npos)
    bundle.name.erase(pos);
  bundle.source_path = train.string();
  if (test) bundle.source_path += ";" + test->string();
  bundle.source_format = options.format == TableFormat::Tsv ? "tsv" : "csv";

  Index length = -1;
  read_table(train, options, bundle.signals, length);
  if (test) read_table(*test, options, bundle.signals, length);
  series_equal_length_check(bundle);
  return bundle;
}

DatasetBundle load_ucr_directory(const std::filesystem::path& root, const std::string& name) {
  const auto dir = root / name;
  const auto train = dir / (name + "_TRAIN.tsv");
  const auto test = dir / (name + "_TEST.tsv");
  if (!std::filesystem::exists(train)) throw IoError("missing '" + train.string() + "'");
  auto bundle = load_ucr_dataset(
      train, std::filesystem::exists(test) ? std::optional(test) : std::nullopt, {});
  bundle.name = name;
  return bundle;
}

std::vector<std::string> list_ucr_datasets(const std::filesystem::path& root) {
  std::error_code ec;
  if (!std::filesystem::is_directory(root, ec)) throw IoError("not a directory: '" + root.string() + "'");
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    const auto name = entry.path().filename().string();
    if (std::filesystem::exists(entry.path() / (name + "_TRAIN.tsv"))) names.push_back(name);
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace lebesgue
