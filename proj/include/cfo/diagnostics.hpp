#pragma once

// Running-best bookkeeping, the early-termination test and the D_avg family
// of convergence diagnostics.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "cfo/dynamics.hpp"
#include "cfo/error.hpp"

namespace cfo {

/// Fitness of every probe at every completed step, indexed [step][probe].
template <std::floating_point Real = double>
using FitnessHistory = std::vector<std::vector<Real>>;

template <std::floating_point Real = double>
struct BestEntry {
  Real fitness;
  std::size_t probe;  // 0-based
  int step;
};

/// Fold one step's fitness row into a running best. Replacement uses >=, so
/// among equal values the later step (then the higher probe index) wins.
template <std::floating_point Real>
void update_best(BestEntry<Real>& best, std::span<const Real> row, int step) {
  for (std::size_t p = 0; p < row.size(); ++p) {
    if (row[p] >= best.fitness) best = {row[p], p, step};
  }
}

/// Maximum fitness over steps 0..j (step-major scan, >= replacement).
template <std::floating_point Real>
BestEntry<Real> best_fitness_so_far(const FitnessHistory<Real>& m, int j) {
  if (m.empty() || m.front().empty() || j < 0 || static_cast<std::size_t>(j) >= m.size()) {
    throw ContractViolation("best_fitness_so_far: step outside populated history");
  }
  BestEntry<Real> best{m[0][0], 0, 0};
  for (int k = 0; k <= j; ++k) update_best<Real>(best, m[static_cast<std::size_t>(k)], k);
  return best;
}

/// Largest value in one step's fitness row.
template <std::floating_point Real>
Real step_best(std::span<const Real> row) {
  Real best = row[0];
  for (Real v : row) {
    if (v >= best) best = v;
  }
  return best;
}

/// Early-termination test. `per_step_best[k]` is the best fitness among the
/// probes at step k. False until j >= window + guard; afterwards true when the
/// mean of the last `window` per-step bests (ending at j) is within `tol` of
/// the per-step best at j.
template <std::floating_point Real>
bool fitness_saturated(std::span<const Real> per_step_best, int j, int window, Real tol,
                       int guard) {
  if (j < window + guard) return false;
  if (static_cast<std::size_t>(j) >= per_step_best.size()) {
    throw ContractViolation("fitness_saturated: step outside populated history");
  }
  Real sum = 0;
  for (int k = j - window + 1; k <= j; ++k) sum = sum + per_step_best[static_cast<std::size_t>(k)];
  const Real current = per_step_best[static_cast<std::size_t>(j)];
  return std::abs(sum / Real(window) - current) <= tol;
}

/// Average distance from every probe at the current step to the best probe's
/// position at its best step, normalized by the starting diagonal length L
/// and by (np - 1).
template <std::floating_point Real>
Real davg(const ProbeMatrix<Real>& r, std::span<const Real> best_position, Real diagonal_length) {
  if (r.np() < 2) throw ContractViolation("davg needs at least two probes");
  Real total = 0;
  for (std::size_t p = 0; p < r.np(); ++p) {
    Real sum_sq = 0;
    for (std::size_t i = 0; i < r.nd(); ++i) {
      const Real d = best_position[i] - r(p, i);
      sum_sq = sum_sq + d * d;
    }
    total = total + std::sqrt(sum_sq);
  }
  return total / (diagonal_length * Real(r.np() - 1));
}

/// True when D_avg changed direction at least three times over the ten steps
/// before j. Always false before step 15.
template <std::floating_point Real>
bool davg_oscillating(std::span<const Real> davg_series, int j) {
  if (j < 15) return false;
  if (static_cast<std::size_t>(j) >= davg_series.size()) {
    throw ContractViolation("davg_oscillating: step outside populated series");
  }
  int changes = 0;
  for (int k = j - 10; k <= j - 1; ++k) {
    const auto at = [&](int s) { return davg_series[static_cast<std::size_t>(s)]; };
    if ((at(k) - at(k - 1)) * (at(k + 1) - at(k)) < Real(0)) ++changes;
  }
  return changes >= 3;
}

/// Same window/guard rule as fitness_saturated, applied to the D_avg series.
template <std::floating_point Real>
bool davg_saturated(std::span<const Real> davg_series, int j, int window = 25,
                    Real tol = Real(0.0005L), int guard = 10) {
  return fitness_saturated<Real>(davg_series, j, window, tol, guard);
}

}  // namespace cfo
