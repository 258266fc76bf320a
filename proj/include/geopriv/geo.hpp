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

#ifndef GEOPRIV_GEO_HPP_
#define GEOPRIV_GEO_HPP_

#include "geopriv/errors.hpp"

namespace geopriv {

// Spherical Earth model used for every metric quantity in this library.
// Noise mechanisms and attacks are specified in meters; at city scale the
// spherical approximation is accurate to well under 0.1%.
inline constexpr double kEarthRadiusM = 6'371'000.0;

// Projection validity bound for the local tangent plane, in meters.
inline constexpr double kProjectionRangeM = 100'000.0;

// Wraps a longitude in degrees into (-180, 180].
double normalize_lon(double lon_deg);

// Geodetic position. Latitude in [-90, 90] degrees, longitude normalized to
// (-180, 180] on construction.
class GeoPoint {
 public:
  GeoPoint() : lat_(0.0), lon_(0.0) {}
  GeoPoint(double lat_deg, double lon_deg);

  double lat() const { return lat_; }
  double lon() const { return lon_; }

  friend bool operator==(const GeoPoint& a, const GeoPoint& b) {
    return a.lat_ == b.lat_ && a.lon_ == b.lon_;
  }

 private:
  double lat_;
  double lon_;
};

// Offset in a local tangent plane: meters east (x) and north (y) of the
// reference point.
struct LocalXY {
  double x = 0.0;
  double y = 0.0;
  GeoPoint reference;
};

// Great-circle (haversine) distance in meters. Symmetric, nonnegative, zero
// iff the coordinates are equal.
double distance(const GeoPoint& a, const GeoPoint& b);

// Equirectangular projection of p into the tangent plane at ref:
//   x = R * dlon * cos(lat_ref),  y = R * dlat   (angles in radians).
// Throws OutOfProjectionRange when distance(p, ref) >= 100 km.
LocalXY to_local(const GeoPoint& p, const GeoPoint& ref);

// Inverse projection. Throws OutOfProjectionRange when hypot(x, y) >= 100 km.
GeoPoint from_local(const LocalXY& v);

namespace detail {

// Unchecked variants for internal consumers (window centroids, convex hulls)
// that must tolerate offsets beyond the 100 km contract. Accuracy degrades
// with distance; results are clamped back into valid coordinate ranges.
LocalXY to_local_unchecked(const GeoPoint& p, const GeoPoint& ref);
GeoPoint from_local_unchecked(const LocalXY& v);

}  // namespace detail

}  // namespace geopriv

#endif  // GEOPRIV_GEO_HPP_
