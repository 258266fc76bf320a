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

#ifndef GEOPRIV_METRICS_HPP_
#define GEOPRIV_METRICS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "geopriv/attacks.hpp"
#include "geopriv/trace.hpp"

namespace geopriv {

// Mean pointwise distance between two traces with matching timestamps.
// Throws LengthMismatch / TimestampMismatch when correspondence is broken.
double average_error(const Trace& orig, const Trace& other);

// Empirical (alpha, delta)-usefulness: deltas[i] is the fraction of points
// whose displacement is <= alphas[i]. Nondecreasing in alpha.
struct UsefulnessCurve {
  std::vector<double> alphas;
  std::vector<double> deltas;
};

UsefulnessCurve usefulness_curve(const Trace& orig, const Trace& other,
                                 std::span<const double> alphas);

// POI recall and companion distance. recall is null when there are no
// original POIs (undefined denominator); mean_matched_distance_m is null
// when nothing was matched.
struct PoiReport {
  std::optional<double> recall;
  std::optional<double> mean_matched_distance_m;
  std::size_t n_orig = 0;
  std::size_t n_attacked = 0;
};

PoiReport poi_report(const std::vector<Poi>& orig,
                     const std::vector<Poi>& attacked);

}  // namespace geopriv

#endif  // GEOPRIV_METRICS_HPP_
