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

#ifndef GEOPRIV_DATASETS_HPP_
#define GEOPRIV_DATASETS_HPP_

#include <cstddef>
#include <filesystem>
#include <variant>

#include "geopriv/trace.hpp"

namespace geopriv {

// --- Loaders ---------------------------------------------------------------
//
// All loaders produce traces sorted by user id with time-sorted points, so a
// dataset's content does not depend on directory iteration order.

// Geolife tree: <root>/<user>/**/*.plt. Each .plt has 6 header lines, then
// CSV rows `lat,lon,0,altitude_feet,days_since_1899,date,time` with GMT
// date/time. Altitude is parsed for validation and discarded.
Dataset load_geolife(const std::filesystem::path& root);

// San Francisco cabs: one whitespace-separated file per cab under <root>,
// rows `lat lon occupancy unix_time`, newest first. Files whose name starts
// with '_' (archive metadata) are skipped. Occupancy is kept per point for
// the empty-cab preprocessing filter.
Dataset load_sf_cabs(const std::filesystem::path& root);

// SNAP check-ins (Brightkite/Gowalla): rows
// `user<TAB>ISO8601<TAB>lat<TAB>lon<TAB>location_id`. Rows with missing or
// empty fields are skipped and counted; otherwise-malformed rows raise
// ParseError with the line number.
Dataset load_checkins(const std::filesystem::path& path);

// Canonical interchange CSV: header `user_id,unix_time,lat,lon`, coordinates
// at 1e-7 degree precision. save/load round-trips are byte-exact.
Dataset load_canonical_csv(const std::filesystem::path& path);
void save_canonical_csv(const Dataset& ds, const std::filesystem::path& path);

// --- Preprocessing ----------------------------------------------------------

// Drop, per user, the local calendar days (UTC+8; the data is from Beijing)
// with fewer than min_points records.
struct GeolifeDays {
  std::size_t min_points = 480;
};

// Drop points where the cab carries no passenger (occupancy == 0). Requires
// occupancy annotations; raises RuleMismatch otherwise.
struct SfDropEmpty {};

// Drop users with fewer than min_points records.
struct MinPointsPerUser {
  std::size_t min_points;
};

using PreprocessRule = std::variant<GeolifeDays, SfDropEmpty, MinPointsPerUser>;

// Returns a filtered copy; never alters surviving point values. The applied
// rule is appended to provenance.
Dataset preprocess(const Dataset& ds, const PreprocessRule& rule);

// --- Sub-sampling -----------------------------------------------------------
//
// Greedy scan from the first point: keep a point iff its gap from the last
// kept point is >= the threshold. Idempotent.

Trace temporal_subsample(const Trace& tr, double min_dt_s);
Trace spatial_subsample(const Trace& tr, double min_d_m);

// --- Attribute profile ------------------------------------------------------

// Median-over-users dataset attributes. NaN marks attributes no user could
// contribute to (e.g. area of single-point traces); such per-user
// contributions are skipped and counted, not fatal.
struct DatasetProfile {
  std::size_t n_users = 0;
  double points_per_user = 0.0;
  double consecutive_distance_m = 0.0;
  double frequency_hz = 0.0;
  double velocity_mps = 0.0;
  double time_window_days = 0.0;
  double density_pts_per_km2 = 0.0;
  double area_km2 = 0.0;
  std::size_t degenerate_skipped = 0;
};

// Per user: point count; median consecutive-pair distance; frequency
// (n-1)/duration; velocity path/duration; time window in days; convex-hull
// area (km^2); density points/area. The profile reports the median of each
// attribute across users.
DatasetProfile profile(const Dataset& ds);

}  // namespace geopriv

#endif  // GEOPRIV_DATASETS_HPP_
