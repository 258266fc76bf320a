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

#include "geopriv/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace geopriv {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

}  // namespace

double normalize_lon(double lon_deg) {
  if (!std::isfinite(lon_deg)) {
    throw DomainError("longitude is not finite");
  }
  double lon = std::fmod(lon_deg, 360.0);
  if (lon <= -180.0) lon += 360.0;
  if (lon > 180.0) lon -= 360.0;
  return lon;
}

GeoPoint::GeoPoint(double lat_deg, double lon_deg) {
  if (!(lat_deg >= -90.0 && lat_deg <= 90.0)) {
    throw DomainError("latitude out of range [-90, 90]: " +
                      std::to_string(lat_deg));
  }
  lat_ = lat_deg;
  lon_ = normalize_lon(lon_deg);
}

double distance(const GeoPoint& a, const GeoPoint& b) {
  // hav(d) = hav(dlat) + cos(lat_a) cos(lat_b) hav(dlon); stable for nearby
  // points where the plain spherical law of cosines loses precision.
  const double sin_dlat = std::sin((b.lat() - a.lat()) * kDegToRad / 2.0);
  const double sin_dlon = std::sin((b.lon() - a.lon()) * kDegToRad / 2.0);
  const double h = sin_dlat * sin_dlat + std::cos(a.lat() * kDegToRad) *
                                             std::cos(b.lat() * kDegToRad) *
                                             sin_dlon * sin_dlon;
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

namespace detail {

LocalXY to_local_unchecked(const GeoPoint& p, const GeoPoint& ref) {
  double dlon = p.lon() - ref.lon();
  if (dlon > 180.0) dlon -= 360.0;
  if (dlon < -180.0) dlon += 360.0;
  LocalXY v;
  v.x = kEarthRadiusM * dlon * kDegToRad * std::cos(ref.lat() * kDegToRad);
  v.y = kEarthRadiusM * (p.lat() - ref.lat()) * kDegToRad;
  v.reference = ref;
  return v;
}

GeoPoint from_local_unchecked(const LocalXY& v) {
  const GeoPoint& ref = v.reference;
  double lat = ref.lat() + (v.y / kEarthRadiusM) * kRadToDeg;
  const double cos_ref = std::cos(ref.lat() * kDegToRad);
  double dlon = 0.0;
  if (cos_ref > 1e-12) {
    dlon = (v.x / (kEarthRadiusM * cos_ref)) * kRadToDeg;
  }
  lat = std::clamp(lat, -90.0, 90.0);
  return GeoPoint(lat, normalize_lon(ref.lon() + dlon));
}

}  // namespace detail

LocalXY to_local(const GeoPoint& p, const GeoPoint& ref) {
  const double d = distance(p, ref);
  if (d >= kProjectionRangeM) {
    throw OutOfProjectionRange("point is " + std::to_string(d) +
                               " m from projection reference");
  }
  return detail::to_local_unchecked(p, ref);
}

GeoPoint from_local(const LocalXY& v) {
  const double r = std::hypot(v.x, v.y);
  if (r >= kProjectionRangeM) {
    throw OutOfProjectionRange("local offset is " + std::to_string(r) +
                               " m from projection reference");
  }
  return detail::from_local_unchecked(v);
}

}  // namespace geopriv
