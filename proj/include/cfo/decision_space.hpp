#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cfo/benchmarks.hpp"
#include "cfo/error.hpp"

namespace cfo {

/// Axis-aligned box of feasible points. The current bounds shrink during a
/// run; the starting bounds never change and are used for reset and for the
/// D_avg normalization length.
template <std::floating_point Real = double>
class DecisionSpace {
public:
  DecisionSpace(std::vector<Real> lower, std::vector<Real> upper)
      : x_min_(std::move(lower)), x_max_(std::move(upper)), start_min_(x_min_), start_max_(x_max_) {
    if (x_min_.size() != x_max_.size() || x_min_.empty()) {
      throw ConfigError("decision space bounds must be non-empty and of equal length");
    }
    for (std::size_t i = 0; i < x_min_.size(); ++i) {
      if (!std::isfinite(x_min_[i]) || !std::isfinite(x_max_[i]) || !(x_min_[i] < x_max_[i])) {
        throw ConfigError("decision space axis " + std::to_string(i) +
                          " must satisfy finite x_min < x_max");
      }
    }
  }

  static DecisionSpace from_benchmark(const Benchmark& b) {
    return DecisionSpace(std::vector<Real>(b.lower.begin(), b.lower.end()),
                         std::vector<Real>(b.upper.begin(), b.upper.end()));
  }

  std::size_t nd() const { return x_min_.size(); }

  std::span<const Real> x_min() const { return x_min_; }
  std::span<const Real> x_max() const { return x_max_; }
  std::span<const Real> start_min() const { return start_min_; }
  std::span<const Real> start_max() const { return start_max_; }

  Real x_min(std::size_t i) const { return x_min_[i]; }
  Real x_max(std::size_t i) const { return x_max_[i]; }

  void reset() {
    x_min_ = start_min_;
    x_max_ = start_max_;
  }

  /// Halve the distance from each boundary to `center`, axis by axis.
  void shrink_toward(std::span<const Real> center) {
    for (std::size_t i = 0; i < nd(); ++i) {
      x_min_[i] = x_min_[i] + (center[i] - x_min_[i]) / Real(2);
      x_max_[i] = x_max_[i] - (x_max_[i] - center[i]) / Real(2);
    }
  }

  /// Principal-diagonal length of the starting box.
  Real diagonal_length() const {
    Real sum = 0;
    for (std::size_t i = 0; i < nd(); ++i) {
      const Real d = start_max_[i] - start_min_[i];
      sum = sum + d * d;
    }
    return std::sqrt(sum);
  }

  /// Product of current edge lengths.
  Real volume() const {
    Real v = 1;
    for (std::size_t i = 0; i < nd(); ++i) v = v * (x_max_[i] - x_min_[i]);
    return v;
  }

  bool contains(std::span<const Real> point) const {
    for (std::size_t i = 0; i < nd(); ++i) {
      if (point[i] < x_min_[i] || point[i] > x_max_[i]) return false;
    }
    return true;
  }

private:
  std::vector<Real> x_min_;
  std::vector<Real> x_max_;
  std::vector<Real> start_min_;
  std::vector<Real> start_max_;
};

}  // namespace cfo
