#pragma once

// The 23-function benchmark suite, in maximization form (each function is the
// negative of the classical minimization problem). Function bodies follow the
// reference implementation operation for operation, including its quirks:
// F5 squares the whole Rosenbrock-like term, F9 squares the whole Rastrigin
// term and F11 is shifted to (100, ..., 100).

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfo/error.hpp"

namespace cfo {

enum class BenchmarkId : int {
  F1 = 1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12,
  F13, F14, F15, F16, F17, F18, F19, F20, F21, F22, F23
};

inline constexpr int kSuiteSize = 23;

inline std::string to_string(BenchmarkId id) {
  return "F" + std::to_string(static_cast<int>(id));
}

/// Accepts "F7", "f7" or "7".
inline std::optional<BenchmarkId> parse_benchmark_id(std::string_view text) {
  if (!text.empty() && (text.front() == 'F' || text.front() == 'f')) text.remove_prefix(1);
  if (text.empty() || text.size() > 2) return std::nullopt;
  int n = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    n = n * 10 + (c - '0');
  }
  if (n < 1 || n > kSuiteSize) return std::nullopt;
  return static_cast<BenchmarkId>(n);
}

/// Deterministic uniform [0, 1) generator for F7's additive noise.
/// Draws are the top 53 bits of a splitmix64 stream, so the sequence does not
/// depend on the standard library's distribution implementations.
class NoiseSource {
public:
  explicit NoiseSource(std::uint64_t seed = 0) : seed_(seed), state_(seed) {}

  double operator()() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  std::uint64_t seed() const { return seed_; }

private:
  // splitmix64
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t state_;
};

struct Benchmark {
  BenchmarkId id;
  std::string_view name;
  int nd;
  std::vector<double> lower;
  std::vector<double> upper;
  double f_max;          // known global maximum as tabulated
  bool stochastic;       // true only for F7
  std::vector<double> argmax;  // a point at (or within rounding of) the global maximum
};

struct KnownOptimum {
  double f_max;
  int nd;
  std::vector<double> lower;
  std::vector<double> upper;
};

// ---------------------------------------------------------------------------
// Coefficient tables. Stored as long double so that extended-precision
// instantiations see the literals at full precision.
namespace tables {

/// Shekel's foxholes centres a[row][column], 2 x 25.
inline constexpr std::array<std::array<long double, 25>, 2> kFoxholes = [] {
  std::array<std::array<long double, 25>, 2> a{};
  constexpr long double grid[5] = {-32.0L, -16.0L, 0.0L, 16.0L, 32.0L};
  for (int j = 0; j < 25; ++j) {
    a[0][j] = grid[j % 5];
    a[1][j] = grid[j / 5];
  }
  return a;
}();

struct Kowalik {
  std::array<long double, 11> a;
  std::array<long double, 11> b;  // reciprocals, b_j = 1 / (tabulated value)
};

inline constexpr Kowalik kKowalik{
    {0.1957L, 0.1947L, 0.1735L, 0.1600L, 0.0844L, 0.0627L, 0.0456L, 0.0342L, 0.0323L, 0.0235L,
     0.0246L},
    {1.0L / 0.25L, 1.0L / 0.50L, 1.0L / 1.00L, 1.0L / 2.00L, 1.0L / 4.00L, 1.0L / 6.00L,
     1.0L / 8.00L, 1.0L / 10.0L, 1.0L / 12.0L, 1.0L / 14.0L, 1.0L / 16.0L}};

template <std::size_t Dim>
struct Hartman {
  std::array<std::array<long double, Dim>, 4> a;
  std::array<long double, 4> c;
  std::array<std::array<long double, Dim>, 4> p;
};

inline constexpr Hartman<3> kHartman3{
    {{{3.0L, 10.0L, 30.0L}, {0.1L, 10.0L, 35.0L}, {3.0L, 10.0L, 30.0L}, {0.1L, 10.0L, 35.0L}}},
    {1.0L, 1.2L, 3.0L, 3.2L},
    {{{0.36890L, 0.1170L, 0.2673L},
      {0.46990L, 0.4387L, 0.7470L},
      {0.10910L, 0.8732L, 0.5547L},
      {0.03815L, 0.5743L, 0.8828L}}}};

inline constexpr Hartman<6> kHartman6{
    {{{10.0L, 3.00L, 17.0L, 3.5L, 1.7L, 8.0L},
      {0.05L, 10.0L, 17.0L, 0.1L, 8.0L, 14.0L},
      {3.00L, 3.50L, 1.70L, 10.0L, 17.0L, 8.0L},
      {17.0L, 8.00L, 0.05L, 10.0L, 0.1L, 14.0L}}},
    {1.0L, 1.2L, 3.0L, 3.2L},
    {{{0.13120L, 0.1696L, 0.5569L, 0.01240L, 0.8283L, 0.5886L},
      {0.23290L, 0.4135L, 0.8307L, 0.37360L, 0.1004L, 0.9991L},
      {0.23480L, 0.1415L, 0.3522L, 0.28830L, 0.3047L, 0.6650L},
      {0.40470L, 0.8828L, 0.8732L, 0.57430L, 0.1091L, 0.0381L}}}};

/// Shekel family rows; m = 5, 7 and 10 use the first m rows.
inline constexpr std::array<std::array<long double, 4>, 10> kShekelA{{
    {4.0L, 4.0L, 4.0L, 4.0L},
    {1.0L, 1.0L, 1.0L, 1.0L},
    {8.0L, 8.0L, 8.0L, 8.0L},
    {6.0L, 6.0L, 6.0L, 6.0L},
    {3.0L, 7.0L, 3.0L, 7.0L},
    {2.0L, 9.0L, 2.0L, 9.0L},
    {5.0L, 5.0L, 3.0L, 3.0L},
    {8.0L, 1.0L, 8.0L, 1.0L},
    {6.0L, 2.0L, 6.0L, 2.0L},
    {7.0L, 3.6L, 7.0L, 3.6L},
}};
inline constexpr std::array<long double, 10> kShekelC{0.1L, 0.2L, 0.2L, 0.4L, 0.4L,
                                                      0.6L, 0.3L, 0.7L, 0.5L, 0.5L};

}  // namespace tables

// ---------------------------------------------------------------------------

/// Penalty term shared by F12 and F13.
template <std::floating_point Real>
Real penalty_u(Real x, Real a, Real k, Real m) {
  if (x > a) return k * std::pow(x - a, m);
  if (x < -a) return k * std::pow(-x - a, m);
  return Real(0);
}

namespace detail {

inline Benchmark make_uniform(BenchmarkId id, std::string_view name, int nd, double lo, double hi,
                              double f_max, std::vector<double> argmax, bool stochastic = false) {
  return Benchmark{id, name, nd, std::vector<double>(nd, lo), std::vector<double>(nd, hi),
                   f_max, stochastic, std::move(argmax)};
}

inline std::vector<Benchmark> build_suite() {
  using B = BenchmarkId;
  std::vector<Benchmark> s;
  s.reserve(kSuiteSize);
  const auto fill = [](int n, double v) { return std::vector<double>(n, v); };
  s.push_back(make_uniform(B::F1, "Sphere", 30, -100, 100, 0, fill(30, 0)));
  s.push_back(make_uniform(B::F2, "Schwefel 2.22", 30, -10, 10, 0, fill(30, 0)));
  s.push_back(make_uniform(B::F3, "Schwefel 1.2", 30, -100, 100, 0, fill(30, 0)));
  s.push_back(make_uniform(B::F4, "Schwefel 2.21", 30, -100, 100, 0, fill(30, 0)));
  s.push_back(make_uniform(B::F5, "Rosenbrock (as implemented)", 30, -30, 30, 0, fill(30, 1)));
  s.push_back(make_uniform(B::F6, "Step", 30, -100, 100, 0, fill(30, 0)));
  s.push_back(make_uniform(B::F7, "Quartic with noise", 30, -1.28, 1.28, 0, fill(30, 0), true));
  s.push_back(make_uniform(B::F8, "Schwefel 2.26", 30, -500, 500, 12569.5,
                           fill(30, 420.96874635998202)));
  s.push_back(make_uniform(B::F9, "Rastrigin (as implemented)", 30, -5.12, 5.12, 0, fill(30, 0)));
  s.push_back(make_uniform(B::F10, "Ackley", 30, -32, 32, 0, fill(30, 0)));
  s.push_back(make_uniform(B::F11, "Griewank (shifted)", 30, -600, 600, 0, fill(30, 100)));
  s.push_back(make_uniform(B::F12, "Penalized 1", 30, -50, 50, 0, fill(30, -1)));
  s.push_back(make_uniform(B::F13, "Penalized 2", 30, -50, 50, 0, fill(30, 1)));
  s.push_back(make_uniform(B::F14, "Shekel's foxholes", 2, -65.536, 65.536, -1,
                           {-31.978328224937977, -31.978328224937977}));
  s.push_back(make_uniform(B::F15, "Kowalik", 4, -5, 5, -0.0003075,
                           {0.19283345, 0.19083623, 0.12311729, 0.13576617}));
  s.push_back(make_uniform(B::F16, "Six-hump camel back", 2, -5, 5, 1.0316285,
                           {0.08984201368301331, -0.7126564032704135}));
  s.push_back(Benchmark{B::F17, "Branin", 2, {-5, 0}, {10, 15}, -0.398, false,
                        {-std::numbers::pi, 12.275}});
  s.push_back(make_uniform(B::F18, "Goldstein-Price", 2, -2, 2, -3, {0, -1}));
  s.push_back(make_uniform(B::F19, "Hartman 3", 3, 0, 1, 3.86,
                           {0.11461434, 0.55564885, 0.85254695}));
  s.push_back(make_uniform(B::F20, "Hartman 6", 6, 0, 1, 3.32,
                           {0.20170762, 0.14678095, 0.47674485, 0.27534239, 0.31165187,
                            0.65727516}));
  s.push_back(make_uniform(B::F21, "Shekel 5", 4, 0, 10, 10,
                           {4.00003715, 4.00013327, 4.00003715, 4.00013327}));
  s.push_back(make_uniform(B::F22, "Shekel 7", 4, 0, 10, 10,
                           {4.00057291, 4.00068936, 3.99948971, 3.99960616}));
  s.push_back(make_uniform(B::F23, "Shekel 10", 4, 0, 10, 10,
                           {4.00074671, 4.00059326, 3.99966290, 3.99950981}));
  return s;
}

template <std::floating_point Real>
Real shekel_family(std::span<const Real> x, int m) {
  Real z = 0;
  for (int j = 0; j < m; ++j) {
    Real sum = 0;
    for (int i = 0; i < 4; ++i) {
      const Real d = x[i] - Real(tables::kShekelA[j][i]);
      sum = sum + d * d;
    }
    z = z + Real(1) / (sum + Real(tables::kShekelC[j]));
  }
  return z;
}

template <std::floating_point Real, std::size_t Dim>
Real hartman(std::span<const Real> x, const tables::Hartman<Dim>& t) {
  Real z = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    Real sum = 0;
    for (std::size_t i = 0; i < Dim; ++i) {
      const Real d = x[i] - Real(t.p[j][i]);
      sum = sum + Real(t.a[j][i]) * (d * d);
    }
    z = z + Real(t.c[j]) * std::exp(-sum);
  }
  return z;
}

}  // namespace detail

/// The full registry, ordered F1..F23.
inline const std::vector<Benchmark>& benchmark_suite() {
  static const std::vector<Benchmark> suite = detail::build_suite();
  return suite;
}

inline const Benchmark& get_benchmark(BenchmarkId id) {
  return benchmark_suite().at(static_cast<std::size_t>(static_cast<int>(id) - 1));
}

inline KnownOptimum known_optimum(BenchmarkId id) {
  const Benchmark& b = get_benchmark(id);
  return KnownOptimum{b.f_max, b.nd, b.lower, b.upper};
}

/// Fitness of `x` under `bench`. No bounds check: any real point is accepted.
/// F7 draws one value from `noise` per call and requires it to be non-null.
template <std::floating_point Real>
Real evaluate(const Benchmark& bench, std::span<const Real> x, NoiseSource* noise = nullptr) {
  using std::cos;
  using std::exp;
  using std::sin;
  using std::sqrt;

  if (x.size() != static_cast<std::size_t>(bench.nd)) {
    throw ContractViolation(to_string(bench.id) + ": expected " + std::to_string(bench.nd) +
                            " coordinates, got " + std::to_string(x.size()));
  }
  constexpr Real pi = std::numbers::pi_v<Real>;
  constexpr Real two_pi = Real(2) * pi;
  const std::size_t nd = x.size();
  const auto sq = [](Real v) { return v * v; };

  switch (bench.id) {
    case BenchmarkId::F1: {
      Real z = 0;
      for (Real xi : x) z = z + sq(xi);
      return -z;
    }
    case BenchmarkId::F2: {
      Real sum = 0, prod = 1;
      for (Real xi : x) {
        sum = sum + std::abs(xi);
        prod = prod * std::abs(xi);
      }
      return -(sum + prod);
    }
    case BenchmarkId::F3: {
      Real z = 0;
      Real partial = 0;
      for (Real xi : x) {
        partial = partial + xi;
        z = z + sq(partial);
      }
      return -z;
    }
    case BenchmarkId::F4: {
      Real max_abs = -std::numeric_limits<Real>::max();
      for (Real xi : x) max_abs = std::max(max_abs, std::abs(xi));
      return -max_abs;
    }
    case BenchmarkId::F5: {
      Real z = 0;
      for (std::size_t i = 0; i + 1 < nd; ++i) {
        z = z + sq(Real(100) * sq(x[i + 1] - sq(x[i])) + (x[i] - Real(1)));
      }
      return -z;
    }
    case BenchmarkId::F6: {
      Real z = 0;
      for (Real xi : x) z = z + sq(std::floor(xi + Real(0.5)));
      return -z;
    }
    case BenchmarkId::F7: {
      if (noise == nullptr) throw ConfigError("F7 requires a noise source");
      Real z = 0;
      for (std::size_t i = 0; i < nd; ++i) z = z + Real(i + 1) * sq(sq(x[i]));
      return -z - Real((*noise)());
    }
    case BenchmarkId::F8: {
      Real z = 0;
      for (Real xi : x) z = z - xi * sin(sqrt(std::abs(xi)));
      return -z;
    }
    case BenchmarkId::F9: {
      Real z = 0;
      for (Real xi : x) z = z + sq(sq(xi) - Real(10) * cos(two_pi * xi) + Real(10));
      return -z;
    }
    case BenchmarkId::F10: {
      Real sum1 = 0, sum2 = 0;
      for (Real xi : x) {
        sum1 = sum1 + sq(xi);
        sum2 = sum2 + cos(two_pi * xi);
      }
      const Real n = Real(nd);
      const Real z = Real(-20) * exp(Real(-0.2L) * sqrt(sum1 / n)) - exp(sum2 / n) + Real(20) +
                     std::numbers::e_v<Real>;
      return -z;
    }
    case BenchmarkId::F11: {
      Real sum = 0, prod = 1;
      for (std::size_t i = 0; i < nd; ++i) {
        const Real s = x[i] - Real(100);
        sum = sum + sq(s);
        prod = prod * cos(s / sqrt(Real(i + 1)));
      }
      return -(sum / Real(4000) - prod + Real(1));
    }
    case BenchmarkId::F12: {
      const auto y = [&](std::size_t i) { return Real(1) + (x[i] + Real(1)) / Real(4); };
      Real sum1 = 0;
      for (std::size_t i = 0; i + 1 < nd; ++i) {
        sum1 = sum1 + sq(y(i) - Real(1)) * (Real(1) + Real(10) * sq(sin(pi * y(i + 1))));
      }
      sum1 = sum1 + Real(10) * sq(sin(pi * y(0))) + sq(y(nd - 1) - Real(1));
      sum1 = pi * sum1 / Real(nd);
      Real sum2 = 0;
      for (Real xi : x) sum2 = sum2 + penalty_u(xi, Real(10), Real(100), Real(4));
      return -(sum1 + sum2);
    }
    case BenchmarkId::F13: {
      Real sum1 = 0;
      for (std::size_t i = 0; i + 1 < nd; ++i) {
        sum1 = sum1 + sq(x[i] - Real(1)) * (Real(1) + sq(sin(Real(3) * pi * x[i + 1])));
      }
      const Real xn = x[nd - 1];
      sum1 = sum1 + sq(sin(pi * Real(3) * x[0])) +
             sq(xn - Real(1)) * (Real(1) + sq(sin(two_pi * xn)));
      Real sum2 = 0;
      for (Real xi : x) sum2 = sum2 + penalty_u(xi, Real(5), Real(100), Real(4));
      return -(sum1 / Real(10) + sum2);
    }
    case BenchmarkId::F14: {
      Real sum1 = 0;
      for (int j = 0; j < 25; ++j) {
        Real sum2 = 0;
        for (int i = 0; i < 2; ++i) {
          sum2 = sum2 + std::pow(x[i] - Real(tables::kFoxholes[i][j]), Real(6));
        }
        sum1 = sum1 + Real(1) / (Real(j + 1) + sum2);
      }
      return -(Real(1) / (Real(0.002L) + sum1));
    }
    case BenchmarkId::F15: {
      Real z = 0;
      for (std::size_t j = 0; j < 11; ++j) {
        const Real a = Real(tables::kKowalik.a[j]);
        const Real b = Real(tables::kKowalik.b[j]);
        const Real num = x[0] * (sq(b) + b * x[1]);
        const Real den = sq(b) + b * x[2] + x[3];
        z = z + sq(a - num / den);
      }
      return -z;
    }
    case BenchmarkId::F16: {
      const Real x1 = x[0], x2 = x[1];
      const Real x1_2 = sq(x1);
      const Real z = Real(4) * x1_2 - Real(2.1L) * sq(x1_2) + x1_2 * sq(x1_2) / Real(3) +
                     x1 * x2 - Real(4) * sq(x2) + Real(4) * sq(sq(x2));
      return -z;
    }
    case BenchmarkId::F17: {
      const Real x1 = x[0], x2 = x[1];
      const Real z = sq(x2 - Real(5.1L) * sq(x1) / (Real(4) * sq(pi)) + Real(5) * x1 / pi - Real(6)) +
                     Real(10) * (Real(1) - Real(1) / (Real(8) * pi)) * cos(x1) + Real(10);
      return -z;
    }
    case BenchmarkId::F18: {
      const Real x1 = x[0], x2 = x[1];
      const Real t1 = Real(1) + sq(x1 + x2 + Real(1)) *
                                    (Real(19) - Real(14) * x1 + Real(3) * sq(x1) - Real(14) * x2 +
                                     Real(6) * x1 * x2 + Real(3) * sq(x2));
      const Real t2 = Real(30) + sq(Real(2) * x1 - Real(3) * x2) *
                                     (Real(18) - Real(32) * x1 + Real(12) * sq(x1) + Real(48) * x2 -
                                      Real(36) * x1 * x2 + Real(27) * sq(x2));
      return -(t1 * t2);
    }
    case BenchmarkId::F19:
      return detail::hartman(x, tables::kHartman3);
    case BenchmarkId::F20:
      return detail::hartman(x, tables::kHartman6);
    case BenchmarkId::F21:
      return detail::shekel_family(x, 5);
    case BenchmarkId::F22:
      return detail::shekel_family(x, 7);
    case BenchmarkId::F23:
      return detail::shekel_family(x, 10);
  }
  throw ContractViolation("unknown benchmark id");
}

}  // namespace cfo
