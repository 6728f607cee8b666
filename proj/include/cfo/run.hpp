#pragma once

// One complete CFO run: initial probe distribution, then the time-step loop
// (move, retrieve, evaluate, accelerate, track best, adjust F_rep, shrink,
// test for saturation).

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cfo/benchmarks.hpp"
#include "cfo/decision_space.hpp"
#include "cfo/diagnostics.hpp"
#include "cfo/dynamics.hpp"
#include "cfo/error.hpp"
#include "cfo/params.hpp"

namespace cfo {

inline constexpr const char* kIpdLabel = "UNIFORM P-AXIS";

/// One row of the run table.
struct RunRecord {
  int run_number = 0;
  double gamma = 0;
  int nt = 0;
  int nd = 0;
  int np = 0;
  int probes_per_axis = 0;
  double g = 0;
  double delta_t = 0;
  double alpha = 0;
  double beta = 0;
  int last_step = 0;
  std::int64_t neval = 0;      // (last_step + 1) * np
  double frep_final = 0;
  double best_fitness = 0;
  int best_probe = 0;          // 1-based probe number
  int best_step = 0;
  std::vector<double> best_position;
  std::string ipd_kind = kIpdLabel;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Per-step diagnostics, recorded when RunOptions::trace is set.
struct StepTrace {
  int step = 0;
  double frep = 0;
  double step_best = 0;       // best fitness among probes at this step
  double global_best = 0;     // best fitness over steps 0..step
  int best_probe = 0;         // 1-based probe number of the global best
  double davg = 0;
  double volume = 0;          // product of current edge lengths

  friend bool operator==(const StepTrace&, const StepTrace&) = default;
};

struct RunOptions {
  bool trace = false;
  bool keep_history = false;     // store positions for every step
  bool check_invariants = false; // verify feasibility/containment every step
};

template <std::floating_point Real = double>
struct RunResult {
  RunRecord record;
  std::vector<StepTrace> trace;
  std::vector<ProbeMatrix<Real>> positions;  // [step], only with keep_history
  FitnessHistory<Real> fitness;              // [step][probe], always populated
};

/// Execute one run. `space` must hold the benchmark's starting bounds; it is
/// left in its final (shrunk) state so callers can inspect it, and is reset
/// by the sweep runner before the next run.
template <std::floating_point Real = double>
RunResult<Real> run_single(const Benchmark& bench, const CfoParams& params,
                           DecisionSpace<Real>& space, const RunOptions& options = {}) {
  params.validate(bench.nd);
  if (space.nd() != static_cast<std::size_t>(bench.nd)) {
    throw ConfigError("decision space dimension does not match " + to_string(bench.id));
  }

  NoiseSource noise(params.seed);
  const Real diag = space.diagonal_length();

  ProbeMatrix<Real> r = initial_probe_distribution(space, params.probes_per_axis, Real(params.gamma));
  const std::size_t np = r.np();
  const std::size_t nd = r.nd();

  RunResult<Real> out;
  out.fitness.reserve(static_cast<std::size_t>(params.nt) + 1);
  std::vector<Real> per_step_best;
  per_step_best.reserve(static_cast<std::size_t>(params.nt) + 1);

  const auto evaluate_all = [&](const ProbeMatrix<Real>& pos) {
    std::vector<Real> row(np);
    for (std::size_t p = 0; p < np; ++p) row[p] = evaluate<Real>(bench, pos.row(p), &noise);
    return row;
  };

  out.fitness.push_back(evaluate_all(r));
  per_step_best.push_back(step_best<Real>(out.fitness.back()));
  ProbeMatrix<Real> a(np, nd);  // zero initial acceleration
  FrepSequence<Real> frep_seq(Real(params.frep_init), Real(params.delta_frep), params.frep_schedule);
  Real frep = frep_seq.value();

  BestEntry<Real> best{out.fitness[0][0], 0, 0};
  update_best<Real>(best, out.fitness[0], 0);
  std::vector<Real> best_position(r.row(best.probe).begin(), r.row(best.probe).end());

  const auto record_step = [&](int j) {
    if (options.keep_history) out.positions.push_back(r);
    if (!options.trace) return;
    out.trace.push_back(StepTrace{j, double(frep), double(per_step_best.back()), double(best.fitness),
                                  static_cast<int>(best.probe) + 1,
                                  double(davg<Real>(r, best_position, diag)),
                                  double(space.volume())});
  };
  const auto check_feasible = [&](int j) {
    if (!options.check_invariants) return;
    for (std::size_t p = 0; p < np; ++p) {
      if (!space.contains(r.row(p))) {
        throw ContractViolation("probe " + std::to_string(p + 1) + " outside bounds at step " +
                                std::to_string(j));
      }
    }
  };

  record_step(0);
  int last_step = params.nt;

  for (int j = 1; j <= params.nt; ++j) {
    ProbeMatrix<Real> prev = std::move(r);
    r = step_positions(prev, a, Real(params.delta_t));
    retrieve_errant_probes(r, prev, space, frep);
    check_feasible(j);

    out.fitness.push_back(evaluate_all(r));
    const std::vector<Real>& row = out.fitness.back();
    per_step_best.push_back(step_best<Real>(row));
    a = compute_accelerations<Real>(r, row, params);

    const int prior_step = best.step;
    const std::size_t prior_probe = best.probe;
    update_best<Real>(best, row, j);
    if (best.step != prior_step || best.probe != prior_probe) {
      best_position.assign(r.row(best.probe).begin(), r.row(best.probe).end());
    }

    const bool saturated = params.early_termination &&
                           fitness_saturated<Real>(per_step_best, j, params.sat_window,
                                                   Real(params.sat_tol), params.sat_guard);
    frep = frep_seq.advance();

    // Fitness at step j is not re-evaluated after this second retrieval.
    if (shrink_space<Real>(space, best_position, j, params)) {
      if (options.check_invariants && !space.contains(best_position)) {
        throw ContractViolation("shrink centre left the bounds at step " + std::to_string(j));
      }
      retrieve_errant_probes(r, prev, space, frep);
      check_feasible(j);
    }

    record_step(j);
    if (saturated) {
      last_step = j;
      break;
    }
  }

  RunRecord& rec = out.record;
  rec.gamma = params.gamma;
  rec.nt = params.nt;
  rec.nd = static_cast<int>(nd);
  rec.np = static_cast<int>(np);
  rec.probes_per_axis = params.probes_per_axis;
  rec.g = params.g;
  rec.delta_t = params.delta_t;
  rec.alpha = params.alpha;
  rec.beta = params.beta;
  rec.last_step = last_step;
  rec.neval = static_cast<std::int64_t>(last_step + 1) * static_cast<std::int64_t>(np);
  rec.frep_final = double(frep);
  rec.best_fitness = double(best.fitness);
  rec.best_probe = static_cast<int>(best.probe) + 1;
  rec.best_step = best.step;
  rec.best_position.assign(best_position.begin(), best_position.end());
  return out;
}

/// Convenience overload that builds the starting space from the benchmark.
template <std::floating_point Real = double>
RunResult<Real> run_single(const Benchmark& bench, const CfoParams& params,
                           const RunOptions& options = {}) {
  auto space = DecisionSpace<Real>::from_benchmark(bench);
  return run_single<Real>(bench, params, space, options);
}

}  // namespace cfo
