#pragma once

// Brute-force reference routines for the test suites. They use plain
// std::vector and deliberately different formulations from the library.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Points = std::vector<std::pair<long, double>>;

/// Send-on-delta: for each candidate point, re-derive the last kept value by
/// scanning the kept list so far.
inline Points lebesgue_trace(const std::vector<double>& v, double t) {
  Points kept{{0, v[0]}};
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double reference = kept.back().second;
    const double d = v[i] > reference ? v[i] - reference : reference - v[i];
    if (d > t || d == t) kept.emplace_back(static_cast<long>(i), v[i]);
  }
  return kept;
}

/// True when some interior grid point of the chord from a to b lies outside
/// [ya - t, ya + t].
inline bool chord_leaves_band(long xa, double ya, long xb, double yb, double t) {
  for (long x = xa + 1; x < xb; ++x) {
    const double lambda = static_cast<double>(x - xa) / static_cast<double>(xb - xa);
    const double p = (1.0 - lambda) * ya + lambda * yb;
    if (std::fabs(p - ya) > t) return true;
  }
  return false;
}

/// Fritsch–Carlson PCHIP (Brodlie weights at interior knots, shape-clamped
/// three-point ends) evaluated in power form on each segment.
inline std::vector<double> pchip(const std::vector<double>& xs, const std::vector<double>& ys,
                                 const std::vector<double>& query) {
  const std::size_t n = xs.size();
  std::vector<double> d(n, 0.0);
  std::vector<double> h(n - 1), m(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = xs[k + 1] - xs[k];
    m[k] = (ys[k + 1] - ys[k]) / h[k];
  }
  const auto sgn = [](double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  if (n == 2) {
    d[0] = d[1] = m[0];
  } else {
    for (std::size_t k = 1; k + 1 < n; ++k) {
      if (m[k - 1] == 0.0 || m[k] == 0.0 || sgn(m[k - 1]) != sgn(m[k])) continue;
      const double a = 2.0 * h[k] + h[k - 1];
      const double b = h[k] + 2.0 * h[k - 1];
      d[k] = (a + b) / (a / m[k - 1] + b / m[k]);
    }
    const auto edge = [&](double h0, double h1, double m0, double m1) {
      double e = ((2.0 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
      if (sgn(e) != sgn(m0)) return 0.0;
      if (sgn(m0) != sgn(m1) && std::fabs(e) > 3.0 * std::fabs(m0)) return 3.0 * m0;
      return e;
    };
    d[0] = edge(h[0], h[1], m[0], m[1]);
    d[n - 1] = edge(h[n - 2], h[n - 3], m[n - 2], m[n - 3]);
  }
  std::vector<double> out;
  out.reserve(query.size());
  for (double q : query) {
    if (q <= xs.front()) { out.push_back(ys.front()); continue; }
    if (q >= xs.back()) { out.push_back(ys.back()); continue; }
    std::size_t k = 0;
    while (xs[k + 1] <= q) ++k;
    const double s = q - xs[k];
    const double c2 = (3.0 * m[k] - 2.0 * d[k] - d[k + 1]) / h[k];
    const double c3 = (d[k] - 2.0 * m[k] + d[k + 1]) / (h[k] * h[k]);
    out.push_back(ys[k] + s * (d[k] + s * (c2 + s * c3)));
  }
  return out;
}

/// Hold-previous reconstruction on the integer grid.
inline std::vector<double> zoh(const Points& pts, long length) {
  std::vector<double> out(static_cast<std::size_t>(length));
  for (long x = 0; x < length; ++x) {
    double v = pts.front().second;
    for (const auto& [i, y] : pts)
      if (i <= x) v = y;
    out[static_cast<std::size_t>(x)] = v;
  }
  return out;
}

/// Chord interpolation on the integer grid, tail held.
inline std::vector<double> linear(const Points& pts, long length) {
  std::vector<double> out(static_cast<std::size_t>(length));
  for (long x = 0; x < length; ++x) {
    double v = pts.back().second;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      if (pts[k].first <= x && x < pts[k + 1].first) {
        const double lambda = static_cast<double>(x - pts[k].first) /
                              static_cast<double>(pts[k + 1].first - pts[k].first);
        v = pts[k].second + lambda * (pts[k + 1].second - pts[k].second);
      }
    }
    out[static_cast<std::size_t>(x)] = v;
  }
  return out;
}

/// Per-interval ZeLi: chord when the step stays inside the increased band,
/// otherwise hold.
inline std::vector<double> zeli(const Points& pts, long length, double t, double ratio) {
  std::vector<double> out(static_cast<std::size_t>(length), pts.back().second);
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const auto [xa, ya] = pts[k];
    const auto [xb, yb] = pts[k + 1];
    const bool smooth = std::fabs(yb - ya) < t * ratio;
    for (long x = xa; x < xb; ++x) {
      const double lambda = static_cast<double>(x - xa) / static_cast<double>(xb - xa);
      out[static_cast<std::size_t>(x)] = smooth ? ya + lambda * (yb - ya) : ya;
    }
  }
  return out;
}

inline double rmse(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s / static_cast<double>(a.size()));
}

inline std::vector<double> random_walk(std::mt19937_64& rng, std::size_t n, double step,
                                       double start = 0.5) {
  std::normal_distribution<double> noise(0.0, step);
  std::vector<double> v(n);
  double level = start;
  for (auto& x : v) {
    x = level;
    level += noise(rng);
  }
  return v;
}

}  // namespace oracle
