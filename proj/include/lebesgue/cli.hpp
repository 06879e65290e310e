#pragma once

#include "lebesgue/core.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lebesgue {

/// Exit codes: 0 success, 1 validation or usage error, 2 I/O error.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// A sampled-points file as written by `lebesgue sample`.
struct SampledFile {
  std::vector<Knot<double>> points;
  std::optional<Index> source_length;
  std::optional<double> threshold;
};

/// Reads a single signal: numbers separated by commas, whitespace or newlines.
/// Lines starting with '#' and a leading non-numeric header line are skipped.
TimeSeries<double> read_signal_file(const std::filesystem::path& path);

SampledFile read_sampled_file(const std::filesystem::path& path);
std::string write_sampled_csv(const SampledSeries<double>& s);
std::string write_values_csv(const Vector<double>& values);

}  // namespace lebesgue
