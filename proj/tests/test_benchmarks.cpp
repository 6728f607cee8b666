#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "cfo/benchmarks.hpp"
#include "test_util.hpp"

namespace {

using cfo::BenchmarkId;
using cfo::get_benchmark;

double eval(BenchmarkId id, std::vector<double> x, cfo::NoiseSource* noise = nullptr) {
  return cfo::evaluate<double>(get_benchmark(id), std::span<const double>(x), noise);
}

TEST(Registry, HasTwentyThreeFunctionsInOrder) {
  const auto& suite = cfo::benchmark_suite();
  ASSERT_EQ(suite.size(), 23u);
  for (int n = 1; n <= 23; ++n) {
    EXPECT_EQ(static_cast<int>(suite[n - 1].id), n);
    EXPECT_EQ(cfo::to_string(suite[n - 1].id), "F" + std::to_string(n));
  }
}

TEST(Registry, ParseIds) {
  EXPECT_EQ(cfo::parse_benchmark_id("F14"), BenchmarkId::F14);
  EXPECT_EQ(cfo::parse_benchmark_id("f3"), BenchmarkId::F3);
  EXPECT_FALSE(cfo::parse_benchmark_id("F0"));
  EXPECT_FALSE(cfo::parse_benchmark_id("F24"));
  EXPECT_EQ(cfo::parse_benchmark_id("14"), BenchmarkId::F14);
  EXPECT_FALSE(cfo::parse_benchmark_id("G1"));
  EXPECT_FALSE(cfo::parse_benchmark_id(""));
}

TEST(Registry, KnownOptimumEntries) {
  const auto f8 = cfo::known_optimum(BenchmarkId::F8);
  EXPECT_DOUBLE_EQ(f8.f_max, 12569.5);
  EXPECT_EQ(f8.nd, 30);
  const auto f14 = cfo::known_optimum(BenchmarkId::F14);
  EXPECT_DOUBLE_EQ(f14.f_max, -1.0);
  EXPECT_EQ(f14.nd, 2);
  EXPECT_DOUBLE_EQ(f14.lower[0], -65.536);
  EXPECT_DOUBLE_EQ(f14.upper[1], 65.536);
  const auto f19 = cfo::known_optimum(BenchmarkId::F19);
  EXPECT_DOUBLE_EQ(f19.f_max, 3.86);
  EXPECT_EQ(f19.nd, 3);
  EXPECT_DOUBLE_EQ(cfo::known_optimum(BenchmarkId::F15).f_max, -0.0003075);
  EXPECT_DOUBLE_EQ(cfo::known_optimum(BenchmarkId::F21).f_max, 10.0);
}

TEST(Registry, BranninHasPerAxisBounds) {
  const auto& b = get_benchmark(BenchmarkId::F17);
  EXPECT_EQ(b.lower, (std::vector<double>{-5, 0}));
  EXPECT_EQ(b.upper, (std::vector<double>{10, 15}));
}

TEST(Evaluate, SphereAtOrigin) { EXPECT_EQ(eval(BenchmarkId::F1, std::vector<double>(30, 0.0)), 0.0); }

TEST(Evaluate, SchwefelAtLiteraturePoint) {
  EXPECT_NEAR(eval(BenchmarkId::F8, std::vector<double>(30, 420.8687)), 12569.5, 0.1);
}

TEST(Evaluate, GoldsteinPriceMinimum) { EXPECT_DOUBLE_EQ(eval(BenchmarkId::F18, {0.0, -1.0}), -3.0); }

TEST(Evaluate, StepFlatNearOrigin) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.5, std::nextafter(0.5, 0.0));
  for (int k = 0; k < 50; ++k) {
    std::vector<double> x(30);
    for (double& v : x) v = u(rng);
    EXPECT_EQ(eval(BenchmarkId::F6, x), 0.0);
  }
}

TEST(Evaluate, FoxholesAtFirstHole) {
  double s = 0;
  const double holes[5] = {-32, -16, 0, 16, 32};
  for (int j = 0; j < 25; ++j) {
    const double a1 = holes[j % 5], a2 = holes[j / 5];
    s += 1.0 / ((j + 1) + std::pow(-32 - a1, 6) + std::pow(-32 - a2, 6));
  }
  const double expected = -1.0 / (0.002 + s);
  EXPECT_NEAR(eval(BenchmarkId::F14, {-32, -32}), expected, 1e-14);
  EXPECT_NEAR(expected, -0.998, 1e-3);
}

TEST(Evaluate, CamelBackAtPublishedProbe) {
  EXPECT_NEAR(eval(BenchmarkId::F16, {0.0898, -0.7127}), 1.0316285, 1e-6);
}

TEST(Evaluate, DimensionMismatchIsContractViolation) {
  EXPECT_THROW(eval(BenchmarkId::F1, {0.0, 0.0}), cfo::ContractViolation);
  EXPECT_THROW(eval(BenchmarkId::F19, {0.5, 0.5}), cfo::ContractViolation);
}

TEST(Evaluate, QuarticNeedsNoise) {
  EXPECT_THROW(eval(BenchmarkId::F7, std::vector<double>(30, 0.0)), cfo::ConfigError);
}

TEST(Evaluate, QuarticNoiseIsSeeded) {
  std::vector<double> x(30, 0.25);
  cfo::NoiseSource a(42), b(42), c(43);
  const double va = eval(BenchmarkId::F7, x, &a);
  EXPECT_EQ(va, eval(BenchmarkId::F7, x, &b));
  EXPECT_NE(va, eval(BenchmarkId::F7, x, &c));
}

TEST(Noise, UnitInterval) {
  cfo::NoiseSource n(0);
  for (int k = 0; k < 10000; ++k) {
    const double v = n();
    ASSERT_GE(v, 0.0);
    ASSERT_LT(v, 1.0);
  }
}

TEST(PenaltyU, Branches) {
  EXPECT_EQ(cfo::penalty_u(0.0, 10.0, 100.0, 4.0), 0.0);
  EXPECT_EQ(cfo::penalty_u(11.0, 10.0, 100.0, 4.0), 100.0);
  EXPECT_EQ(cfo::penalty_u(-12.0, 10.0, 100.0, 4.0), 1600.0);
  EXPECT_EQ(cfo::penalty_u(10.0, 10.0, 100.0, 4.0), 0.0);
  EXPECT_EQ(cfo::penalty_u(-10.0, 10.0, 100.0, 4.0), 0.0);
}

// Values below come from tests/oracle/benchmark_oracle.py (50-digit
// arithmetic, written separately from the C++ evaluator).
TEST(Oracle, RandomPointsAgreeToRelative1e12) {
  const auto rows = cfo::testing::read_tsv("benchmark_oracle.tsv");
  ASSERT_EQ(rows.size(), 2300u);
  for (const auto& row : rows) {
    const auto id = *cfo::parse_benchmark_id(row[0]);
    const auto x = cfo::testing::split_doubles(row[1]);
    const double ref = std::stod(row[2]);
    double got;
    if (id == BenchmarkId::F7) {
      cfo::NoiseSource n(5), replay(5);
      got = eval(id, x, &n) + replay();
    } else {
      got = eval(id, x);
    }
    EXPECT_LE(std::abs(got - ref), 1e-12 * std::max(1.0, std::abs(ref)))
        << row[0] << " got " << got << " oracle " << ref;
  }
}

TEST(Oracle, OptimaAgree) {
  const auto rows = cfo::testing::read_tsv("benchmark_optima.tsv");
  ASSERT_EQ(rows.size(), 23u);
  for (const auto& row : rows) {
    const auto id = *cfo::parse_benchmark_id(row[0]);
    const auto& bench = get_benchmark(id);
    const double ref = std::stod(row[2]);
    cfo::NoiseSource n(0);
    const auto x = cfo::testing::split_doubles(row[1]);
    if (id == BenchmarkId::F7) {
      cfo::NoiseSource replay(0);
      EXPECT_NEAR(eval(id, bench.argmax, &n) + replay(), ref, 1e-12);
      continue;
    }
    EXPECT_LE(std::abs(eval(id, x) - ref), 1e-12 * std::max(1.0, std::abs(ref))) << row[0];
    EXPECT_NEAR(eval(id, bench.argmax), ref, 1e-4) << row[0];
  }
}

TEST(Evaluate, LongDoubleAgreesWithDouble) {
  std::mt19937_64 rng(11);
  for (const auto& b : cfo::benchmark_suite()) {
    if (b.stochastic) continue;
    std::vector<double> x(b.nd);
    std::vector<long double> xl(b.nd);
    for (int i = 0; i < b.nd; ++i) {
      x[i] = std::uniform_real_distribution<double>(b.lower[i], b.upper[i])(rng);
      xl[i] = x[i];
    }
    const double d = cfo::evaluate<double>(b, std::span<const double>(x));
    const long double l = cfo::evaluate<long double>(b, std::span<const long double>(xl));
    EXPECT_NEAR(d, double(l), 1e-9 * std::max(1.0, std::abs(d))) << cfo::to_string(b.id);
  }
}

}  // namespace
