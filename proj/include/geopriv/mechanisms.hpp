//
// Copyright 2026 The geopriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef GEOPRIV_MECHANISMS_HPP_
#define GEOPRIV_MECHANISMS_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "geopriv/rng.hpp"
#include "geopriv/trace.hpp"

namespace geopriv {

// Geo-indistinguishability parameter in 1/meters. epsilon = l / r grants
// privacy level l within radius r.
class Epsilon {
 public:
  explicit Epsilon(double per_meter);
  static Epsilon from_level_radius(double level, double radius_m);

  double value() const { return value_; }

 private:
  double value_;
};

// Lambert W, branch -1, on [-1/e, 0). Halley iteration to 1e-12 absolute
// tolerance from a branch-point / asymptotic initial guess.
double lambert_w_m1(double x);

// Inverse radial CDF of planar Laplace noise:
//   r = -(1/eps) * (W_{-1}((p - 1)/e) + 1),   p in [0, 1).
// Nonnegative and strictly increasing in p.
double inverse_cdf_radius(double p, Epsilon eps);

// Radial CDF C_eps(r) = 1 - (1 + eps*r) * exp(-eps*r); the closed form the
// sampler inverts. Exposed for metrics and verification.
double planar_laplace_cdf(double r, Epsilon eps);

// One planar Laplace draw around x: angle uniform in [0, 2*pi), radius from
// the inverse CDF. Consumes exactly two uniforms (angle first).
GeoPoint planar_laplace_point(const GeoPoint& x, Epsilon eps, Rng& rng);

// Independently obfuscates every point. Preserves length and timestamps.
Trace obfuscate_pl(const Trace& tr, Epsilon eps, Seed seed);

// Adaptive mechanism parameters. The effective epsilon is multiplied by
// alpha when the adversary's predicted error drops below delta1, kept when
// it lies in [delta1, delta2), and multiplied by beta at or above delta2.
struct AdaptiveParams {
  double delta1_m = 693.0;
  double delta2_m = 1948.0;
  std::size_t window = 5;
  double alpha = 0.1;
  double beta = 5.0;
  Epsilon base_epsilon;

  AdaptiveParams(double d1, double d2, std::size_t ws, double a, double b,
                 Epsilon base);
};

// One step of the three-case epsilon update (no clamping).
double adaptive_epsilon_update(double epsilon, double estimation_error_m,
                               const AdaptiveParams& params);

// Least-squares linear extrapolation of a short point history: independent
// x(t), y(t) fits in the tangent frame of the last point, evaluated at
// t_query. Falls back to the last point when all timestamps coincide.
GeoPoint linreg_predict(
    std::span<const std::pair<std::int64_t, GeoPoint>> pts,
    std::int64_t t_query);

// Adaptive geo-indistinguishability: the first `window` points use the base
// epsilon; afterwards each point is obfuscated with the compounded epsilon,
// updated from the linear-regression prediction error and clamped to
// [base/1000, base*1000].
Trace obfuscate_adaptive(const Trace& tr, const AdaptiveParams& params,
                         Seed seed);

struct ClusterParams {
  double radius_m;
  Epsilon epsilon;

  ClusterParams(double radius, Epsilon eps);
};

// Memoryless clustering: a single active cluster centered on the real
// location that spawned it. Points within the radius re-report the stored
// obfuscated location; leaving the cluster spawns a fresh one and forgets
// the old.
Trace obfuscate_clustering(const Trace& tr, const ClusterParams& params,
                           Seed seed);

// Clustering with memory of every previously spawned cluster: a point within
// the radius of any stored real location re-reports that cluster's
// obfuscated location; otherwise a new (real, obfuscated) pair is appended.
Trace obfuscate_memory_clustering(const Trace& tr, const ClusterParams& params,
                                  Seed seed);

struct NoiseTableRow {
  double epsilon;
  double avg_noise_m;
  double max_noise_m;
};

// Monte-Carlo average and maximum planar Laplace noise per epsilon.
std::vector<NoiseTableRow> epsilon_noise_table(std::span<const double> eps_list,
                                               std::size_t n_samples,
                                               Seed seed);

}  // namespace geopriv

#endif  // GEOPRIV_MECHANISMS_HPP_
