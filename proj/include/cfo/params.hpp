#pragma once

#include <cmath>
#include <cstdint>

#include "cfo/error.hpp"

namespace cfo {

/// What a pair of probes at the same position contributes to the
/// acceleration sum, where the pair term is 0/0.
enum class CoincidentProbes {
  kSkip,        // the pair contributes nothing
  kReposition,  // the probe's acceleration is undefined (NaN); retrieval then
                // places it between x_min and its previous position
};

/// How F_rep advances. kAccumulate adds delta_frep in floating point, so the
/// sum can exceed 1 one update before the decimal arithmetic would. kExactSteps
/// keeps an integer step count and multiplies by delta_frep.
enum class FrepSchedule { kAccumulate, kExactSteps };

/// Scalar knobs of one CFO run. Defaults are the values used for every
/// reported benchmark run.
struct CfoParams {
  double g = 2.0;           // gravitational constant
  double alpha = 2.0;       // exponent on the fitness difference
  double beta = 2.0;        // exponent on the probe separation
  double delta_t = 1.0;
  double frep_init = 0.5;   // starting repositioning factor
  double delta_frep = 0.05;
  double gamma = 0.5;       // position of the probe-line intersection on the diagonal
  int probes_per_axis = 2;
  int nt = 1000;            // maximum time step index

  int shrink_start = 20;
  int shrink_interval = 10;
  bool shrink = true;

  int sat_window = 25;
  double sat_tol = 1e-5;
  int sat_guard = 10;
  bool early_termination = true;

  FrepSchedule frep_schedule = FrepSchedule::kAccumulate;
  CoincidentProbes coincident = CoincidentProbes::kReposition;

  std::uint64_t seed = 0;   // F7 noise seed

  /// Throws ConfigError on the first inconsistency found. `nd` is the
  /// dimension of the problem the params will be used with.
  void validate(int nd) const {
    if (nd < 1) throw ConfigError("dimension must be >= 1");
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw ConfigError("gamma must lie in [0, 1]");
    if (probes_per_axis < 2) throw ConfigError("probes_per_axis must be >= 2");
    if (nd == 1 && probes_per_axis < 3) throw ConfigError("1-D problems need >= 3 probes");
    if (nd > 1 && probes_per_axis % 2 != 0) throw ConfigError("probes_per_axis must be even");
    if (!(delta_frep > 0.0 && delta_frep <= frep_init && frep_init <= 1.0)) {
      throw ConfigError("require 0 < delta_frep <= frep_init <= 1");
    }
    if (nt < 0) throw ConfigError("nt must be >= 0");
    if (!(delta_t > 0.0)) throw ConfigError("delta_t must be positive");
    if (!std::isfinite(g) || !std::isfinite(alpha) || !std::isfinite(beta)) {
      throw ConfigError("g, alpha and beta must be finite");
    }
    if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");
    if (shrink_start < 0 || shrink_interval < 1) throw ConfigError("bad shrink schedule");
    if (sat_window < 1 || sat_guard < 0 || !(sat_tol >= 0.0)) {
      throw ConfigError("bad saturation settings");
    }
  }
};

}  // namespace cfo
