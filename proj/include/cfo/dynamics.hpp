#pragma once

// Equations of motion and the per-step position bookkeeping of CFO.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "cfo/decision_space.hpp"
#include "cfo/error.hpp"
#include "cfo/params.hpp"

namespace cfo {

/// np x nd matrix of per-probe vectors (positions or accelerations), row-major.
template <std::floating_point Real = double>
class ProbeMatrix {
public:
  ProbeMatrix() = default;
  ProbeMatrix(std::size_t np, std::size_t nd, Real fill = Real(0))
      : np_(np), nd_(nd), data_(np * nd, fill) {}

  std::size_t np() const { return np_; }
  std::size_t nd() const { return nd_; }

  Real& operator()(std::size_t p, std::size_t i) { return data_[p * nd_ + i]; }
  Real operator()(std::size_t p, std::size_t i) const { return data_[p * nd_ + i]; }

  std::span<Real> row(std::size_t p) { return {data_.data() + p * nd_, nd_}; }
  std::span<const Real> row(std::size_t p) const { return {data_.data() + p * nd_, nd_}; }

  std::span<const Real> data() const { return data_; }

  friend bool operator==(const ProbeMatrix&, const ProbeMatrix&) = default;

private:
  std::size_t np_ = 0;
  std::size_t nd_ = 0;
  std::vector<Real> data_;
};

/// Heaviside step with U(0) = 1.
template <std::floating_point Real>
constexpr Real unit_step(Real z) {
  return z < Real(0) ? Real(0) : Real(1);
}

/// Step-0 layout: nd probe lines parallel to the axes, each holding
/// `probes_per_axis` evenly spaced probes, intersecting at the diagonal point
/// x_min + gamma * (x_max - x_min). Probe k on axis i has index
/// i * probes_per_axis + k.
template <std::floating_point Real>
ProbeMatrix<Real> initial_probe_distribution(const DecisionSpace<Real>& space, int probes_per_axis,
                                             Real gamma) {
  const std::size_t nd = space.nd();
  if (probes_per_axis < 2 || (nd == 1 && probes_per_axis < 3)) {
    throw ConfigError("initial_probe_distribution: too few probes per axis");
  }
  if (!(gamma >= Real(0) && gamma <= Real(1))) {
    throw ConfigError("initial_probe_distribution: gamma outside [0, 1]");
  }
  const auto ppa = static_cast<std::size_t>(probes_per_axis);
  ProbeMatrix<Real> r(ppa * nd, nd);
  for (std::size_t i = 0; i < nd; ++i) {
    const Real d = space.x_min(i) + gamma * (space.x_max(i) - space.x_min(i));
    for (std::size_t p = 0; p < r.np(); ++p) r(p, i) = d;
  }
  for (std::size_t i = 0; i < nd; ++i) {
    const Real delta = (space.x_max(i) - space.x_min(i)) / Real(ppa - 1);
    for (std::size_t k = 0; k < ppa; ++k) {
      r(k + ppa * i, i) = space.x_min(i) + Real(k) * delta;
    }
  }
  return r;
}

namespace detail {

// Mass factor U(dm) * dm raised to alpha; a zero base always yields zero.
template <std::floating_point Real>
Real mass(Real dm, Real alpha) {
  const Real base = unit_step(dm) * dm;
  if (base == Real(0)) return Real(0);
  return std::pow(base, alpha);
}

}  // namespace detail

/// Gravitational acceleration of every probe from the current positions and
/// fitnesses:
///   a_p = G * sum_{k != p} U(M_k - M_p) (M_k - M_p)^alpha (r_k - r_p) / |r_k - r_p|^beta
/// A pair whose probes coincide is handled per `params.coincident`.
template <std::floating_point Real>
ProbeMatrix<Real> compute_accelerations(const ProbeMatrix<Real>& r, std::span<const Real> fitness,
                                        const CfoParams& params) {
  const std::size_t np = r.np();
  const std::size_t nd = r.nd();
  if (fitness.size() != np) throw ContractViolation("fitness size must equal probe count");
  const Real g = Real(params.g);
  const Real alpha = Real(params.alpha);
  const Real beta = Real(params.beta);
  const bool reposition = params.coincident == CoincidentProbes::kReposition;

  ProbeMatrix<Real> a(np, nd);
  std::vector<Real> mass(np);
  std::vector<Real> dist_pow(np);
  for (std::size_t p = 0; p < np; ++p) {
    bool undefined = false;
    for (std::size_t k = 0; k < np; ++k) {
      if (k == p) continue;
      Real sum_sq = 0;
      for (std::size_t l = 0; l < nd; ++l) {
        const Real d = r(k, l) - r(p, l);
        sum_sq = sum_sq + d * d;
      }
      if (sum_sq == Real(0)) {
        undefined = undefined || reposition;
        mass[k] = 0;
        continue;
      }
      mass[k] = detail::mass(fitness[k] - fitness[p], alpha);
      dist_pow[k] = std::pow(std::sqrt(sum_sq), beta);
    }
    for (std::size_t i = 0; i < nd; ++i) {
      if (undefined) {
        a(p, i) = std::numeric_limits<Real>::quiet_NaN();
        continue;
      }
      Real acc = 0;
      for (std::size_t k = 0; k < np; ++k) {
        if (k == p || mass[k] == Real(0)) continue;
        acc = acc + g * (r(k, i) - r(p, i)) * mass[k] / dist_pow[k];
      }
      a(p, i) = acc;
    }
  }
  return a;
}

/// r_j = r_{j-1} + 1/2 a_{j-1} dt^2
template <std::floating_point Real>
ProbeMatrix<Real> step_positions(const ProbeMatrix<Real>& prev, const ProbeMatrix<Real>& accel,
                                 Real delta_t) {
  ProbeMatrix<Real> next(prev.np(), prev.nd());
  const Real dt2 = delta_t * delta_t;
  for (std::size_t p = 0; p < prev.np(); ++p) {
    for (std::size_t i = 0; i < prev.nd(); ++i) {
      next(p, i) = prev(p, i) + Real(0.5) * accel(p, i) * dt2;
    }
  }
  return next;
}

/// Pull coordinates that left the box back inside, using the previous-step
/// coordinate and the repositioning factor; the result never leaves the box.
/// An undefined (NaN) coordinate is treated as lying below x_min. When the
/// previous coordinate lies beyond the opposite boundary (possible after a
/// shrink) the result is clamped onto the box.
template <std::floating_point Real>
void retrieve_errant_probes(ProbeMatrix<Real>& r, const ProbeMatrix<Real>& prev,
                            const DecisionSpace<Real>& space, Real frep) {
  for (std::size_t p = 0; p < r.np(); ++p) {
    for (std::size_t i = 0; i < r.nd(); ++i) {
      const Real lo = space.x_min(i);
      const Real hi = space.x_max(i);
      Real& x = r(p, i);
      if (!(x >= lo)) x = std::max(lo + frep * (prev(p, i) - lo), lo);
      if (x > hi) x = std::min(hi - frep * (hi - prev(p, i)), hi);
      if (!(x >= lo)) x = lo;
    }
  }
}

/// Variable repositioning factor: add the increment, wrap to the increment
/// once the sum exceeds 1.
template <std::floating_point Real>
constexpr Real update_frep(Real frep, Real delta_frep) {
  const Real next = frep + delta_frep;
  return next > Real(1) ? delta_frep : next;
}

/// F_rep state for a whole run, following `FrepSchedule`.
template <std::floating_point Real>
class FrepSequence {
public:
  FrepSequence(Real init, Real delta, FrepSchedule schedule)
      : value_(init), delta_(delta), schedule_(schedule),
        count_(static_cast<long>(std::lround(init / delta))) {}

  Real value() const { return value_; }

  Real advance() {
    if (schedule_ == FrepSchedule::kAccumulate) {
      value_ = update_frep(value_, delta_);
    } else {
      ++count_;
      if (Real(count_) * delta_ > Real(1)) count_ = 1;
      value_ = Real(count_) * delta_;
    }
    return value_;
  }

private:
  Real value_;
  Real delta_;
  FrepSchedule schedule_;
  long count_;
};

/// Shrink the box around `r_best` when step j is on the shrink schedule.
/// Returns true if the bounds changed.
template <std::floating_point Real>
bool shrink_space(DecisionSpace<Real>& space, std::span<const Real> r_best, int step,
                  const CfoParams& params) {
  if (!params.shrink || step < params.shrink_start || step % params.shrink_interval != 0) {
    return false;
  }
  space.shrink_toward(r_best);
  return true;
}

}  // namespace cfo
