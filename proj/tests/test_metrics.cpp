#include "lebesgue/metrics.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lebesgue;

namespace {

DatasetScores dataset(std::string name, std::vector<std::pair<std::string, double>> means) {
  DatasetScores d{std::move(name), {}, 0.05, 0.1, 1};
  for (auto& [m, v] : means) d.scores.push_back(MethodScore::from_rmse(m, {v}));
  return d;
}

}  // namespace

TEST_CASE("rmse examples") {
  const Vector<double> a = (Vector<double>(3) << 0.1, 0.2, 0.3).finished();
  CHECK(rmse<double>(a, a) == 0.0);
  const Vector<double> shifted = a.array() + 0.1;
  CHECK(rmse<double>(a, shifted) == doctest::Approx(0.1));
  CHECK_THROWS_AS(rmse<double>(a, Vector<double>::Zero(4)), ShapeError);
  CHECK_THROWS_AS(rmse<double>(Vector<double>(), Vector<double>()), InvalidInput);
}

TEST_CASE("rmse properties") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0), scale(0.1, 10.0);
  for (int c = 0; c < 200; ++c) {
    std::vector<double> x(50), y(50);
    for (auto& v : x) v = u(rng);
    for (auto& v : y) v = u(rng);
    const Vector<double> a = Eigen::Map<Vector<double>>(x.data(), 50);
    const Vector<double> b = Eigen::Map<Vector<double>>(y.data(), 50);
    const double r = rmse<double>(a, b);
    CHECK(r >= 0.0);
    CHECK(r == rmse<double>(b, a));
    CHECK(r == doctest::Approx(oracle::rmse(x, y)).epsilon(1e-12));
    const double k = scale(rng);
    CHECK(rmse<double>(Vector<double>(k * a), Vector<double>(k * b)) == doctest::Approx(k * r).epsilon(1e-12));
  }
}

TEST_CASE("rmse against a reconstruction") {
  const TimeSeries<double> s{0.0, 1.0};
  const Reconstruction<double> r{(Vector<double>(2) << 0.0, 0.0).finished(), "ZOH"};
  CHECK(rmse(s, r) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("abruptness") {
  CHECK(abruptness(TimeSeries<double>{0.0, 0.1, 0.2, 0.3}) == doctest::Approx(0.0).scale(1.0));
  CHECK(abruptness(TimeSeries<double>{0.0, 1.0, 0.0, 1.0}) == doctest::Approx(std::sqrt(8.0 / 9.0)));
  CHECK_THROWS_AS(abruptness(TimeSeries<double>{1.0}), InvalidInput);

  std::mt19937_64 rng(4);
  for (int c = 0; c < 50; ++c) {
    const auto v = oracle::random_walk(rng, 64, 0.1);
    const auto s = TimeSeries<double>::from(v);
    const TimeSeries<double> moved(Vector<double>(s.values().array() + 3.5));
    CHECK(abruptness(moved) == doctest::Approx(abruptness(s)).epsilon(1e-9));
    CHECK(abruptness(s) >= 0.0);
  }
}

TEST_CASE("MethodScore summary statistics") {
  const auto s = MethodScore::from_rmse("X", {0.3, 0.1, 0.2, 0.6});
  CHECK(s.mean_rmse == doctest::Approx(0.3));
  CHECK(s.median_rmse == doctest::Approx(0.25));
  CHECK(MethodScore::from_rmse("Y", {0.3, 0.1, 0.2}).median_rmse == 0.2);
  CHECK_THROWS_AS(MethodScore::from_rmse("Z", {}), InvalidInput);
}

TEST_CASE("rank_methods orders by mean and breaks ties by name") {
  const auto ranked = rank_methods({MethodScore::from_rmse("ZOH", {0.3}), MethodScore::from_rmse("Linear", {0.1}),
                                    MethodScore::from_rmse("PCHIP", {0.2})});
  CHECK(ranked[0].method_name == "Linear");
  CHECK(ranked[1].method_name == "PCHIP");
  CHECK(ranked[2].method_name == "ZOH");
  CHECK(ranked[0].rank_position == 1);
  CHECK(ranked[2].rank_position == 3);

  const auto tied = rank_methods({MethodScore::from_rmse("b", {0.1}), MethodScore::from_rmse("a", {0.1})});
  CHECK(tied[0].method_name == "a");
  CHECK(tied[0].rank_position == 1);
  CHECK(tied[1].rank_position == 2);

  CHECK_THROWS_AS(rank_methods({}), InvalidInput);
  CHECK_THROWS_AS(rank_methods({MethodScore::from_rmse("a", {0.1}), MethodScore::from_rmse("b", {0.1, 0.2})}),
                  InvalidInput);
}

TEST_CASE("aggregate_report") {
  const auto report =
      aggregate_report("r", {dataset("d1", {{"A", 0.1}, {"B", 0.2}}), dataset("d2", {{"A", 0.4}, {"B", 0.3}})});
  REQUIRE(report.summary.size() == 2);
  for (const auto& m : report.summary) {
    CHECK(m.mean_rank == 1.5);
    CHECK(m.wins == 1);
  }
  CHECK(report.summary[0].method_name == "A");
  CHECK(report.summary[0].mean_rmse == doctest::Approx(0.25));
  CHECK(report.summary[1].mean_rmse == doctest::Approx(0.25));
  CHECK(report.datasets[1].scores[0].method_name == "B");

  const auto single = aggregate_report("one", {dataset("d", {{"A", 0.3}, {"B", 0.1}, {"C", 0.2}})});
  CHECK(single.summary[0].method_name == "B");
  CHECK(single.summary[0].wins == 1);
  CHECK(single.summary[2].mean_rank == 3.0);

  CHECK_THROWS_AS(aggregate_report("bad", {dataset("d1", {{"A", 0.1}}), dataset("d2", {{"B", 0.1}})}),
                  InvalidInput);
  CHECK_THROWS_AS(aggregate_report("empty", {}), InvalidInput);
}
