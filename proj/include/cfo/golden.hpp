#pragma once

// Published sweep results used by `verify`: for each function, the best run
// of the full paper-grid sweep and the total evaluation count.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "cfo/benchmarks.hpp"
#include "cfo/sweep.hpp"

namespace cfo {

struct GoldenSweep {
  BenchmarkId function;
  double best_fitness;       // best run fitness, 8 decimals
  double gamma_best;
  int best_probes_per_axis;
  int best_run_number;
  int best_last_step;
  std::int64_t neval_best_run;
  std::int64_t neval_total;
  bool comparable;           // false for the stochastic F7
};

// clang-format off
inline constexpr std::array<GoldenSweep, kSuiteSize> kGoldenSweeps{{
    {BenchmarkId::F1,             0.0,         0.5,  2,  6,  45,  2760, 405780, true},
    {BenchmarkId::F2,             0.0,         0.5,  2,  6, 265, 15960, 330300, true},
    {BenchmarkId::F3,            -0.00003857,  0.5,  2,  6,  72,  4380, 859740, true},
    {BenchmarkId::F4,             0.0,         0.5,  2,  6, 288, 17340, 178140, true},
    {BenchmarkId::F5,            -0.00205081,  0.1,  4, 13,  84, 10200, 477540, true},
    {BenchmarkId::F6,             0.0,         0.5,  2,  6,  45,  2760, 227940, true},
    {BenchmarkId::F7,            -0.00023835,  0.9,  6, 32, 100, 18180, 399960, false},
    {BenchmarkId::F8,         12569.48661622,  0.5,  4, 17,  61,  7440, 326820, true},
    {BenchmarkId::F9,             0.0,         0.5,  2,  6,  45,  2760, 359040, true},
    {BenchmarkId::F10,            0.0,         0.5,  2,  6,  45,  2760, 478560, true},
    {BenchmarkId::F11,           -0.04419764,  0.1,  6, 24, 195, 35280, 266700, true},
    {BenchmarkId::F12,           -0.00002067,  0.5,  2,  6,  35,  2160, 233280, true},
    {BenchmarkId::F13,           -0.00102803,  0.7,  4, 19,  90, 10920, 317280, true},
    {BenchmarkId::F14,           -0.99800396,  0.2, 12, 58, 115,  2784,  79136, true},
    {BenchmarkId::F15,           -0.00036196,  0.5, 12, 61, 145,  7008, 171216, true},
    {BenchmarkId::F16,            1.03162821,  0.5, 12, 61, 150,  3624,  74832, true},
    {BenchmarkId::F17,           -0.39795354,  0.6,  4, 18,  51,   416,  73444, true},
    {BenchmarkId::F18,           -3.00000010,  0.6,  6, 29, 178,  2148,  94668, true},
    {BenchmarkId::F19,            3.86268376,  0.2, 14, 69,  49,  2100, 128286, true},
    {BenchmarkId::F20,            3.32157899,  0.5, 12, 61, 144, 10440, 408084, true},
    {BenchmarkId::F21,           10.15319585,  0.4,  6, 27,  98,  2376, 210296, true},
    {BenchmarkId::F22,           10.40291080,  0.4, 10, 49, 190,  7640, 256776, true},
    {BenchmarkId::F23,           10.53633734,  1.0, 12, 66, 192,  9264, 242848, true},
}};
// clang-format on

inline const GoldenSweep& golden_sweep(BenchmarkId id) {
  return kGoldenSweeps[static_cast<std::size_t>(static_cast<int>(id) - 1)];
}

/// Fitness tolerance: max(1e-6, 1e-6 |f|) plus half a unit in the eighth
/// printed decimal.
inline double fitness_tolerance(double reference) {
  return std::max(1e-6, 1e-6 * std::abs(reference)) + 5e-9;
}

/// Relative band allowed on the total evaluation count when terminal steps
/// differ.
inline constexpr double kTotalNevalBand = 0.10;

struct VerifyCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyReport {
  BenchmarkId function;
  bool comparable = true;
  std::vector<VerifyCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
  }
};

namespace detail {

inline std::string fmt_double(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v + 0.0);
  return buf;
}

}  // namespace detail

/// Compare a completed paper-grid sweep with the published results.
/// Best fitness passes within tolerance or when it is at least as good.
/// gamma_best and probes per axis must match, unless the best fitness is at
/// least as good as published (an equal-or-better point was found elsewhere).
/// The evaluation total must lie within kTotalNevalBand of the published one;
/// the best run's neval must match exactly when its step count does.
inline VerifyReport verify_sweep(const SweepResult& sweep) {
  const GoldenSweep& g = golden_sweep(sweep.function);
  VerifyReport rep{sweep.function, g.comparable, {}};
  if (!g.comparable) return rep;

  const RunRecord& b = sweep.best_record;
  const double tol = fitness_tolerance(g.best_fitness);
  const bool within = std::abs(b.best_fitness - g.best_fitness) <= tol;
  const bool at_least = b.best_fitness >= g.best_fitness - tol;
  rep.checks.push_back({"best_fitness", within || at_least,
                        "got " + detail::fmt_double(b.best_fitness, 8) + ", published " +
                            detail::fmt_double(g.best_fitness, 8) + ", tol " +
                            detail::fmt_double(tol, 9)});

  const bool config_match = std::abs(b.gamma - g.gamma_best) < 1e-9 &&
                            b.probes_per_axis == g.best_probes_per_axis;
  rep.checks.push_back({"best_configuration", config_match || at_least,
                        "got gamma " + detail::fmt_double(b.gamma, 1) + " Np/Nd " +
                            std::to_string(b.probes_per_axis) + ", published gamma " +
                            detail::fmt_double(g.gamma_best, 1) + " Np/Nd " +
                            std::to_string(g.best_probes_per_axis)});

  const bool steps_match = config_match && b.last_step == g.best_last_step;
  const double rel = double(sweep.total_neval - g.neval_total) / double(g.neval_total);
  const bool total_ok = std::abs(rel) <= kTotalNevalBand;
  rep.checks.push_back({"total_neval", total_ok,
                        "got " + std::to_string(sweep.total_neval) + ", published " +
                            std::to_string(g.neval_total) + " (" +
                            detail::fmt_double(100.0 * rel, 1) + "%)"});

  bool identity = true;
  for (const RunRecord& r : sweep.records) {
    identity = identity && r.neval == std::int64_t(r.last_step + 1) * r.np;
  }
  rep.checks.push_back({"neval_identity", identity, "neval == (last_step + 1) * np for every run"});
  if (steps_match) {
    rep.checks.push_back({"best_run_neval", b.neval == g.neval_best_run,
                          "got " + std::to_string(b.neval) + ", published " +
                              std::to_string(g.neval_best_run)});
  }
  return rep;
}

}  // namespace cfo
