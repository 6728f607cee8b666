#pragma once

// The (probes-per-axis x gamma) sweep: run numbering, evaluation totals,
// best-run selection and the re-run of the best configuration.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "cfo/benchmarks.hpp"
#include "cfo/error.hpp"
#include "cfo/params.hpp"
#include "cfo/run.hpp"

namespace cfo {

struct SweepConfig {
  BenchmarkId function = BenchmarkId::F1;
  int ppa_min = 2;
  int ppa_max = 6;
  int ppa_step = 2;
  double gamma_start = 0.0;
  double gamma_stop = 1.0;
  int gamma_count = 11;
  CfoParams base;       // gamma and probes_per_axis are overwritten per run
  unsigned threads = 1;

  /// The grid behind the published tables: probes per axis 2..6 (F1-F13) or
  /// 2..14 (F14-F23) by 2, gamma 0..1 by 0.1, nt 1000 (100 for F7).
  static SweepConfig paper_grid(BenchmarkId id) {
    SweepConfig c;
    c.function = id;
    c.ppa_max = static_cast<int>(id) <= 13 ? 6 : 14;
    c.base.nt = id == BenchmarkId::F7 ? 100 : 1000;
    return c;
  }

  double gamma_at(int index) const {
    if (gamma_count == 1) return gamma_start;
    return gamma_start + index * (gamma_stop - gamma_start) / (gamma_count - 1);
  }

  std::vector<int> ppa_grid() const {
    std::vector<int> out;
    for (int n = ppa_min; n <= ppa_max; n += ppa_step) out.push_back(n);
    return out;
  }

  int run_count() const { return static_cast<int>(ppa_grid().size()) * gamma_count; }

  void validate() const {
    if (ppa_step < 1 || ppa_min > ppa_max) throw ConfigError("malformed probes-per-axis grid");
    if (gamma_count < 1) throw ConfigError("gamma_count must be >= 1");
    if (!(gamma_start >= 0.0 && gamma_stop <= 1.0 && gamma_start <= gamma_stop)) {
      throw ConfigError("gamma grid must lie in [0, 1]");
    }
    const int nd = get_benchmark(function).nd;
    for (int n : ppa_grid()) {
      CfoParams p = base;
      p.probes_per_axis = n;
      p.validate(nd);
    }
  }
};

struct SweepResult {
  BenchmarkId function = BenchmarkId::F1;
  std::vector<RunRecord> records;  // run_number 1..N, probes-per-axis outer, gamma inner
  std::int64_t total_neval = 0;
  int best_run_number = 0;
  RunRecord best_record;
  RunRecord rerun_record;
  bool valid = true;

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// Summary fields of one published summary row.
struct Table1Row {
  double best_fitness = 0;
  double gamma_best = 0;
  int best_probes_per_axis = 0;
  std::int64_t neval_best_run = 0;
  std::int64_t neval_total = 0;

  friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

/// Called after each completed run (from the worker that ran it).
using SweepProgress = std::function<void(const RunRecord&)>;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  if (b > 0 && a > std::numeric_limits<std::int64_t>::max() - b) {
    throw ContractViolation("total_neval overflow");
  }
  return a + b;
}

}  // namespace detail

template <std::floating_point Real = double>
RunRecord run_configuration(const Benchmark& bench, const CfoParams& base, int ppa, double gamma,
                            int run_number) {
  CfoParams p = base;
  p.probes_per_axis = ppa;
  p.gamma = gamma;
  auto space = DecisionSpace<Real>::from_benchmark(bench);
  RunRecord rec = run_single<Real>(bench, p, space).record;
  rec.run_number = run_number;
  return rec;
}

/// Execute the whole sweep. Runs are independent; with threads > 1 they are
/// spread over workers and merged by run number, so the result does not
/// depend on scheduling. On a run error the partial result is returned with
/// valid = false when `partial` is non-null, otherwise the error propagates.
template <std::floating_point Real = double>
SweepResult run_sweep(const SweepConfig& config, const SweepProgress& progress = {},
                      SweepResult* partial = nullptr) {
  config.validate();
  const Benchmark& bench = get_benchmark(config.function);
  const std::vector<int> ppas = config.ppa_grid();
  const int total = config.run_count();

  struct Slot {
    int ppa;
    double gamma;
  };
  std::vector<Slot> slots;
  slots.reserve(static_cast<std::size_t>(total));
  for (int n : ppas) {
    for (int k = 0; k < config.gamma_count; ++k) slots.push_back({n, config.gamma_at(k)});
  }

  std::vector<RunRecord> records(slots.size());
  std::vector<bool> done(slots.size(), false);
  std::exception_ptr failure;
  std::mutex mu;
  std::size_t next = 0;

  const auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (failure || next >= slots.size()) return;
        i = next++;
      }
      try {
        RunRecord rec = run_configuration<Real>(bench, config.base, slots[i].ppa, slots[i].gamma,
                                                static_cast<int>(i) + 1);
        std::lock_guard lock(mu);
        records[i] = std::move(rec);
        done[i] = true;
        if (progress) progress(records[i]);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  const unsigned nthreads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(slots.size())));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  }

  SweepResult out;
  out.function = config.function;
  if (failure) {
    if (!partial) std::rethrow_exception(failure);
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (done[i]) {
        out.records.push_back(records[i]);
        out.total_neval = detail::checked_add(out.total_neval, records[i].neval);
      }
    }
    out.valid = false;
    *partial = out;
    std::rethrow_exception(failure);
  }

  out.records = std::move(records);
  for (const RunRecord& rec : out.records) {
    out.total_neval = detail::checked_add(out.total_neval, rec.neval);
    if (out.best_run_number == 0 || rec.best_fitness >= out.best_record.best_fitness) {
      out.best_record = rec;
      out.best_run_number = rec.run_number;
    }
  }
  if (!out.records.empty()) {
    out.rerun_record = run_configuration<Real>(bench, config.base, out.best_record.probes_per_axis,
                                               out.best_record.gamma, out.best_run_number);
  }
  return out;
}

inline Table1Row table1_row(const SweepResult& sweep) {
  if (sweep.records.empty()) throw ContractViolation("table1_row needs a completed sweep");
  const RunRecord& b = sweep.best_record;
  return {b.best_fitness, b.gamma, b.probes_per_axis, b.neval, sweep.total_neval};
}

}  // namespace cfo
