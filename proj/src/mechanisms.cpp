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

#include "geopriv/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "geopriv/errors.hpp"

namespace geopriv {

namespace {

constexpr double kInvE = 1.0 / std::numbers::e;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Contraction step w <- ln(-x) - ln(-w); stays on the -1 branch (w < -1
// maps to w' < -1) and contracts with factor 1/|w|.
double log_step(double x, double w) { return std::log(-x) - std::log(-w); }

}  // namespace

Epsilon::Epsilon(double per_meter) : value_(per_meter) {
  if (!(std::isfinite(per_meter) && per_meter > 0.0)) {
    throw DomainError("epsilon must be positive and finite");
  }
}

Epsilon Epsilon::from_level_radius(double level, double radius_m) {
  if (!(radius_m > 0.0)) throw DomainError("radius must be positive");
  return Epsilon(level / radius_m);
}

double lambert_w_m1(double x) {
  if (!(x >= -kInvE && x < 0.0)) {
    throw DomainError("lambert_w_m1 domain is [-1/e, 0), got " +
                      std::to_string(x));
  }
  const double q = 1.0 + std::numbers::e * x;  // 0 at the branch point
  if (q <= 0.0) return -1.0;

  // Series around the branch point, p = -sqrt(2(1 + e*x)):
  //   W = -1 + p - p^2/3 + (11/72) p^3 + O(p^4)
  const double p = -std::sqrt(2.0 * q);
  if (q < 1e-8) {
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  }

  double w;
  if (x < -0.25) {
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  } else {
    // Asymptotic for x -> 0-: W ~ ln(-x) - ln(-ln(-x)).
    const double l1 = std::log(-x);
    w = l1 - std::log(-l1);
  }

  for (int i = 0; i < 64; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double fp = ew * (w + 1.0);
    const double fpp = ew * (w + 2.0);
    const double denom = 2.0 * fp * fp - f * fpp;
    double w_next;
    if (denom != 0.0) {
      w_next = w - 2.0 * f * fp / denom;
    } else {
      w_next = log_step(x, w);
    }
    if (!(w_next < -1.0) || !std::isfinite(w_next)) {
      // A Halley step escaped the branch; fall back to the safe contraction.
      w_next = log_step(x, w);
    }
    const double dw = std::abs(w_next - w);
    w = w_next;
    if (dw < 1e-12) break;
  }
  return w;
}

double inverse_cdf_radius(double p, Epsilon eps) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw DomainError("probability must lie in [0, 1), got " + std::to_string(p));
  }
  if (p == 0.0) return 0.0;
  const double w = lambert_w_m1((p - 1.0) * kInvE);
  return std::max(0.0, -(w + 1.0) / eps.value());
}

double planar_laplace_cdf(double r, Epsilon eps) {
  if (r <= 0.0) return 0.0;
  const double er = eps.value() * r;
  return 1.0 - (1.0 + er) * std::exp(-er);
}

GeoPoint planar_laplace_point(const GeoPoint& x, Epsilon eps, Rng& rng) {
  const double theta = rng.uniform(0.0, kTwoPi);
  const double r = inverse_cdf_radius(rng.uniform(), eps);
  LocalXY v;
  v.x = r * std::cos(theta);
  v.y = r * std::sin(theta);
  v.reference = x;
  return from_local(v);
}

Trace obfuscate_pl(const Trace& tr, Epsilon eps, Seed seed) {
  Rng rng(seed);
  Trace out;
  out.user_id = tr.user_id;
  out.points.reserve(tr.points.size());
  for (const auto& p : tr.points) {
    out.points.push_back({p.t, planar_laplace_point(p.pos, eps, rng)});
  }
  return out;
}

AdaptiveParams::AdaptiveParams(double d1, double d2, std::size_t ws, double a,
                               double b, Epsilon base)
    : delta1_m(d1),
      delta2_m(d2),
      window(ws),
      alpha(a),
      beta(b),
      base_epsilon(base) {
  if (!(0.0 < d1 && d1 < d2)) {
    throw DomainError("require 0 < delta1 < delta2");
  }
  if (!(0.0 < a && a < 1.0 && b > 1.0)) {
    throw DomainError("require 0 < alpha < 1 < beta");
  }
  if (ws < 2) throw DomainError("window must be at least 2");
}

double adaptive_epsilon_update(double epsilon, double estimation_error_m,
                               const AdaptiveParams& params) {
  if (estimation_error_m < params.delta1_m) return params.alpha * epsilon;
  if (estimation_error_m < params.delta2_m) return epsilon;
  return params.beta * epsilon;
}

GeoPoint linreg_predict(
    std::span<const std::pair<std::int64_t, GeoPoint>> pts,
    std::int64_t t_query) {
  if (pts.size() < 2) throw DomainError("linreg_predict needs at least 2 points");
  const GeoPoint ref = pts.back().second;

  double t_mean = 0.0;
  for (const auto& [t, _] : pts) t_mean += static_cast<double>(t);
  t_mean /= static_cast<double>(pts.size());

  double x_mean = 0.0, y_mean = 0.0;
  std::vector<LocalXY> local;
  local.reserve(pts.size());
  for (const auto& [t, g] : pts) {
    local.push_back(detail::to_local_unchecked(g, ref));
    x_mean += local.back().x;
    y_mean += local.back().y;
  }
  x_mean /= static_cast<double>(pts.size());
  y_mean /= static_cast<double>(pts.size());

  double stt = 0.0, stx = 0.0, sty = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double dt = static_cast<double>(pts[i].first) - t_mean;
    stt += dt * dt;
    stx += dt * (local[i].x - x_mean);
    sty += dt * (local[i].y - y_mean);
  }
  if (stt == 0.0) return ref;  // all timestamps equal: degenerate fit

  const double dtq = static_cast<double>(t_query) - t_mean;
  LocalXY v;
  v.x = x_mean + (stx / stt) * dtq;
  v.y = y_mean + (sty / stt) * dtq;
  v.reference = ref;
  return detail::from_local_unchecked(v);
}

Trace obfuscate_adaptive(const Trace& tr, const AdaptiveParams& params,
                         Seed seed) {
  Rng rng(seed);
  Trace out;
  out.user_id = tr.user_id;
  out.points.reserve(tr.points.size());

  const double base = params.base_epsilon.value();
  const double eps_lo = base / 1000.0;
  const double eps_hi = base * 1000.0;
  double effective = base;

  std::vector<std::pair<std::int64_t, GeoPoint>> history;
  history.reserve(tr.points.size());
  for (std::size_t i = 0; i < tr.points.size(); ++i) {
    const auto& p = tr.points[i];
    double use_eps = base;
    if (i >= params.window) {
      const std::span<const std::pair<std::int64_t, GeoPoint>> window(
          history.data() + (history.size() - params.window), params.window);
      const GeoPoint predicted = linreg_predict(window, p.t);
      const double err = distance(p.pos, predicted);
      effective = std::clamp(adaptive_epsilon_update(effective, err, params),
                             eps_lo, eps_hi);
      use_eps = effective;
    }
    const GeoPoint z = planar_laplace_point(p.pos, Epsilon(use_eps), rng);
    out.points.push_back({p.t, z});
    history.emplace_back(p.t, z);
  }
  return out;
}

ClusterParams::ClusterParams(double radius, Epsilon eps)
    : radius_m(radius), epsilon(eps) {
  if (!(radius > 0.0)) throw DomainError("cluster radius must be positive");
}

Trace obfuscate_clustering(const Trace& tr, const ClusterParams& params,
                           Seed seed) {
  Rng rng(seed);
  Trace out;
  out.user_id = tr.user_id;
  out.points.reserve(tr.points.size());

  bool active = false;
  GeoPoint center;    // real location that spawned the cluster
  GeoPoint reported;  // its obfuscated stand-in
  for (const auto& p : tr.points) {
    if (!active || distance(p.pos, center) > params.radius_m) {
      center = p.pos;
      reported = planar_laplace_point(center, params.epsilon, rng);
      active = true;
    }
    out.points.push_back({p.t, reported});
  }
  return out;
}

Trace obfuscate_memory_clustering(const Trace& tr, const ClusterParams& params,
                                  Seed seed) {
  Rng rng(seed);
  Trace out;
  out.user_id = tr.user_id;
  out.points.reserve(tr.points.size());

  std::vector<GeoPoint> real_mem;
  std::vector<GeoPoint> obf_mem;
  for (const auto& p : tr.points) {
    GeoPoint z;
    if (real_mem.empty()) {
      z = planar_laplace_point(p.pos, params.epsilon, rng);
      real_mem.push_back(p.pos);
      obf_mem.push_back(z);
    } else {
      // Exact nearest stored real location by linear scan.
      std::size_t idx = 0;
      double best = distance(p.pos, real_mem[0]);
      for (std::size_t i = 1; i < real_mem.size(); ++i) {
        const double d = distance(p.pos, real_mem[i]);
        if (d < best) {
          best = d;
          idx = i;
        }
      }
      if (best <= params.radius_m) {
        z = obf_mem[idx];
      } else {
        z = planar_laplace_point(p.pos, params.epsilon, rng);
        real_mem.push_back(p.pos);
        obf_mem.push_back(z);
      }
    }
    out.points.push_back({p.t, z});
  }
  return out;
}

std::vector<NoiseTableRow> epsilon_noise_table(std::span<const double> eps_list,
                                               std::size_t n_samples,
                                               Seed seed) {
  if (n_samples < 1) throw DomainError("n_samples must be at least 1");
  std::vector<NoiseTableRow> rows;
  rows.reserve(eps_list.size());
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    const Epsilon eps(eps_list[i]);
    Rng rng(derive_seed(seed.value, {i}));
    double sum = 0.0;
    double max = 0.0;
    for (std::size_t k = 0; k < n_samples; ++k) {
      const double r = inverse_cdf_radius(rng.uniform(), eps);
      sum += r;
      max = std::max(max, r);
    }
    rows.push_back({eps_list[i], sum / static_cast<double>(n_samples), max});
  }
  return rows;
}

}  // namespace geopriv
