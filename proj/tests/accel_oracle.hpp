#pragma once

// Term-by-term gravitational acceleration in long double, used to check
// compute_accelerations on small random instances.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cfo/dynamics.hpp"
#include "cfo/params.hpp"

namespace cfo::testing {

struct AccelInstance {
  int np = 0;
  int nd = 0;
  std::vector<std::vector<double>> r;  // [probe][dim]
  std::vector<double> m;               // fitness per probe
  double g = 2, alpha = 2, beta = 2;
};

struct AccelReference {
  std::vector<std::vector<long double>> a;      // [probe][dim]
  std::vector<std::vector<long double>> scale;  // sum of |terms|, same shape
  bool min_mass_nonnegative = true;
};

inline AccelInstance random_instance(std::mt19937_64& rng) {
  AccelInstance in;
  in.np = std::uniform_int_distribution<int>(2, 4)(rng);
  in.nd = std::uniform_int_distribution<int>(1, 3)(rng);
  std::uniform_real_distribution<double> pos(-10.0, 10.0), fit(-5.0, 5.0), expo(0.5, 3.0);
  in.g = std::uniform_real_distribution<double>(0.1, 5.0)(rng);
  in.alpha = expo(rng);
  in.beta = expo(rng);
  in.r.assign(in.np, std::vector<double>(in.nd));
  for (auto& p : in.r)
    for (double& v : p) v = pos(rng);
  in.m.resize(in.np);
  for (double& v : in.m) v = fit(rng);
  // occasional ties in fitness
  if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) in.m[1] = in.m[0];
  return in;
}

inline AccelReference reference_acceleration(const AccelInstance& in) {
  AccelReference out;
  out.a.assign(in.np, std::vector<long double>(in.nd, 0.0L));
  out.scale.assign(in.np, std::vector<long double>(in.nd, 0.0L));
  for (int p = 0; p < in.np; ++p) {
    for (int k = 0; k < in.np; ++k) {
      if (k == p) continue;
      const long double dm = (long double)in.m[k] - (long double)in.m[p];
      const long double u = dm >= 0 ? 1.0L : 0.0L;
      long double dist2 = 0;
      for (int l = 0; l < in.nd; ++l) {
        const long double d = (long double)in.r[k][l] - (long double)in.r[p][l];
        dist2 += d * d;
      }
      const long double massf = u * dm == 0 ? 0.0L : std::pow(u * dm, (long double)in.alpha);
      if (massf < 0) out.min_mass_nonnegative = false;
      if (dist2 == 0) continue;
      const long double denom = std::pow(std::sqrt(dist2), (long double)in.beta);
      for (int i = 0; i < in.nd; ++i) {
        const long double term =
            (long double)in.g * massf * ((long double)in.r[k][i] - (long double)in.r[p][i]) / denom;
        out.a[p][i] += term;
        out.scale[p][i] += std::abs(term);
      }
    }
  }
  return out;
}

/// Largest |library - reference| / max(|reference|, sum |terms|, tiny) over
/// all components.
inline double acceleration_discrepancy(const AccelInstance& in) {
  cfo::ProbeMatrix<double> r(static_cast<std::size_t>(in.np), static_cast<std::size_t>(in.nd));
  for (int p = 0; p < in.np; ++p)
    for (int i = 0; i < in.nd; ++i) r(p, i) = in.r[p][i];
  cfo::CfoParams params;
  params.g = in.g;
  params.alpha = in.alpha;
  params.beta = in.beta;
  const auto a = cfo::compute_accelerations<double>(r, std::span<const double>(in.m), params);
  const auto ref = reference_acceleration(in);
  double worst = 0;
  for (int p = 0; p < in.np; ++p) {
    for (int i = 0; i < in.nd; ++i) {
      const long double denom = std::max({std::abs(ref.a[p][i]), ref.scale[p][i], 1e-300L});
      const double rel = double(std::abs((long double)a(p, i) - ref.a[p][i]) / denom);
      if (!(rel <= worst)) worst = std::isnan(rel) ? INFINITY : rel;
    }
  }
  return worst;
}

}  // namespace cfo::testing
