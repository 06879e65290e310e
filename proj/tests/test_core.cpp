#include "lebesgue/core.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace lebesgue;

TEST_CASE("normalize_unit_interval maps min to 0 and max to 1") {
  const auto out = normalize_unit_interval(TimeSeries<double>{1.0, 3.0, 5.0});
  CHECK(out[0] == 0.0);
  CHECK(out[1] == 0.5);
  CHECK(out[2] == 1.0);
}

TEST_CASE("constant series normalizes to zeros") {
  const auto out = normalize_unit_interval(TimeSeries<double>{7.0, 7.0, 7.0});
  CHECK(out.values().isZero(0.0));
}

TEST_CASE("normalized input is a fixed point") {
  const auto out = normalize_unit_interval(TimeSeries<double>{0.0, 1.0});
  CHECK(out[0] == 0.0);
  CHECK(out[1] == 1.0);
}

TEST_CASE("normalize works for float scalars") {
  const auto out = normalize_unit_interval(TimeSeries<float>{2.0f, 4.0f, 3.0f});
  CHECK(out[2] == doctest::Approx(0.5f));
}

TEST_CASE("non-finite values are rejected") {
  CHECK_THROWS_AS(TimeSeries<double>({1.0, std::nan(""), 2.0}), InvalidInput);
  CHECK_THROWS_AS(TimeSeries<double>({1.0, INFINITY}), InvalidInput);
  CHECK_THROWS_AS(TimeSeries<double>(Vector<double>()), InvalidInput);
}

TEST_CASE("normalize properties on random series") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int c = 0; c < 200; ++c) {
    std::vector<double> v(37);
    for (auto& x : v) x = u(rng);
    const auto s = TimeSeries<double>::from(v);
    const auto once = normalize_unit_interval(s);
    const auto twice = normalize_unit_interval(once);
    CHECK((once.values() - twice.values()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(once.values().minCoeff() >= 0.0);
    CHECK(once.values().maxCoeff() <= 1.0);

    Index amin_raw, amax_raw, amin_n, amax_n;
    s.values().minCoeff(&amin_raw);
    s.values().maxCoeff(&amax_raw);
    once.values().minCoeff(&amin_n);
    once.values().maxCoeff(&amax_n);
    CHECK(amin_raw == amin_n);
    CHECK(amax_raw == amax_n);
    for (Index i = 1; i < s.size(); ++i)
      CHECK((s[i] < s[i - 1]) == (once[i] < once[i - 1]));
  }
}

TEST_CASE("series_equal_length_check") {
  DatasetBundle ok{"ok", {}, "", ""};
  for (int i = 0; i < 3; ++i) ok.signals.push_back(TimeSeries<double>(Vector<double>::Zero(100)));
  CHECK(&series_equal_length_check(ok) == &ok);

  DatasetBundle ragged{"ragged", {}, "", ""};
  ragged.signals.push_back(TimeSeries<double>(Vector<double>::Zero(100)));
  ragged.signals.push_back(TimeSeries<double>(Vector<double>::Zero(99)));
  try {
    series_equal_length_check(ragged);
    FAIL("expected ShapeError");
  } catch (const ShapeError& e) {
    CHECK(std::string(e.what()).find("row 1") != std::string::npos);
  }

  DatasetBundle empty{"empty", {}, "", ""};
  CHECK_THROWS_AS(series_equal_length_check(empty), InvalidInput);
}

TEST_CASE("SampledSeries validates its invariants") {
  using K = Knot<double>;
  CHECK_NOTHROW(SampledSeries<double>({K{0, 1.0}, K{3, 2.0}}, 5, 0.1));
  CHECK_THROWS_AS(SampledSeries<double>({K{1, 1.0}}, 5, 0.1), InvalidInput);
  CHECK_THROWS_AS(SampledSeries<double>({K{0, 1.0}, K{0, 2.0}}, 5, 0.1), InvalidInput);
  CHECK_THROWS_AS(SampledSeries<double>({K{0, 1.0}, K{5, 2.0}}, 5, 0.1), InvalidInput);
  CHECK_THROWS_AS(SampledSeries<double>({K{0, 1.0}}, 5, -0.1), InvalidInput);
}

TEST_CASE("ReconstructionParams validation and tolerance") {
  ReconstructionParams<double> p;
  CHECK(p.tolerance() == doctest::Approx(0.0575));
  CHECK(p.tolerance() >= p.threshold);
  p.tolerance_ratio = 0.9;
  CHECK_THROWS_AS(p.validate(), InvalidInput);
  p.tolerance_ratio = 1.0;
  p.previous_distance = -1;
  CHECK_THROWS_AS(p.validate(), InvalidInput);
}
