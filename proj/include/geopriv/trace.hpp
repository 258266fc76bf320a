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

#ifndef GEOPRIV_TRACE_HPP_
#define GEOPRIV_TRACE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "geopriv/geo.hpp"

namespace geopriv {

// One geolocation record: UTC timestamp (unix seconds) and position. The
// owning user id lives on the Trace.
struct TracePoint {
  std::int64_t t = 0;
  GeoPoint pos;
};

// Per-user, time-ordered sequence of records. The universal currency between
// datasets, mechanisms, attacks, and metrics.
struct Trace {
  std::string user_id;
  std::vector<TracePoint> points;

  // Per-point passenger flag for the San Francisco cabs format; empty for
  // every other source. When present, occupancy.size() == points.size().
  std::vector<int> occupancy;

  bool has_occupancy() const { return !occupancy.empty(); }
  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

// Named collection of traces with provenance (source format, applied
// filters and sub-sampling). Immutable once built; user ids are unique and
// traces are sorted by user id.
struct Dataset {
  std::string name;
  std::vector<Trace> traces;
  std::vector<std::string> provenance;
  // Rows skipped by tolerant loaders (sparse corruption in public files).
  std::size_t skipped_rows = 0;

  std::size_t n_points() const {
    std::size_t n = 0;
    for (const auto& tr : traces) n += tr.size();
    return n;
  }
};

}  // namespace geopriv

#endif  // GEOPRIV_TRACE_HPP_
