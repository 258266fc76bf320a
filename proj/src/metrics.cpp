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

#include "geopriv/metrics.hpp"

#include <algorithm>
#include <string>

#include "geopriv/errors.hpp"

namespace geopriv {

namespace {

void check_pointwise(const Trace& orig, const Trace& other) {
  if (orig.points.size() != other.points.size()) {
    throw LengthMismatch("trace lengths differ: " +
                         std::to_string(orig.points.size()) + " vs " +
                         std::to_string(other.points.size()));
  }
  for (std::size_t i = 0; i < orig.points.size(); ++i) {
    if (orig.points[i].t != other.points[i].t) {
      throw TimestampMismatch("timestamps differ at index " + std::to_string(i));
    }
  }
}

}  // namespace

double average_error(const Trace& orig, const Trace& other) {
  check_pointwise(orig, other);
  if (orig.points.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < orig.points.size(); ++i) {
    sum += distance(orig.points[i].pos, other.points[i].pos);
  }
  return sum / static_cast<double>(orig.points.size());
}

UsefulnessCurve usefulness_curve(const Trace& orig, const Trace& other,
                                 std::span<const double> alphas) {
  check_pointwise(orig, other);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] >= 0.0) || (i > 0 && alphas[i] <= alphas[i - 1])) {
      throw DomainError("alphas must be nonnegative and strictly ascending");
    }
  }
  std::vector<double> disp;
  disp.reserve(orig.points.size());
  for (std::size_t i = 0; i < orig.points.size(); ++i) {
    disp.push_back(distance(orig.points[i].pos, other.points[i].pos));
  }
  std::sort(disp.begin(), disp.end());

  UsefulnessCurve curve;
  curve.alphas.assign(alphas.begin(), alphas.end());
  curve.deltas.reserve(alphas.size());
  const double n = static_cast<double>(disp.size());
  for (const double a : alphas) {
    const auto it = std::upper_bound(disp.begin(), disp.end(), a);
    curve.deltas.push_back(disp.empty()
                               ? 1.0
                               : static_cast<double>(it - disp.begin()) / n);
  }
  return curve;
}

PoiReport poi_report(const std::vector<Poi>& orig,
                     const std::vector<Poi>& attacked) {
  PoiReport report;
  report.n_orig = orig.size();
  report.n_attacked = attacked.size();
  if (orig.empty()) return report;  // recall undefined

  const std::vector<PoiMatch> matches = match_pois(orig, attacked);
  std::vector<bool> covered(orig.size(), false);
  double dist_sum = 0.0;
  for (const auto& m : matches) {
    covered[m.orig_index] = true;
    dist_sum += m.distance_m;
  }
  std::size_t n_covered = 0;
  for (const bool c : covered) n_covered += c ? 1 : 0;
  report.recall =
      static_cast<double>(n_covered) / static_cast<double>(orig.size());
  if (!matches.empty()) {
    report.mean_matched_distance_m =
        dist_sum / static_cast<double>(matches.size());
  }
  return report;
}

}  // namespace geopriv
