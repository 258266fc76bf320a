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

#ifndef GEOPRIV_ATTACKS_HPP_
#define GEOPRIV_ATTACKS_HPP_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "geopriv/trace.hpp"

namespace geopriv {

// A dwell episode: consecutive points within a small diameter over at least
// a minimum time span.
struct Poi {
  GeoPoint centroid;
  std::int64_t t_start = 0;
  std::int64_t t_end = 0;
  std::size_t n_points = 0;
};

// Road network reduced to its nodes, for nearest-node map matching.
struct RoadGraph {
  struct Node {
    std::int64_t id;
    GeoPoint pos;
  };
  std::vector<Node> nodes;
};

// CSV `node_id,lat,lon` with a one-line header.
RoadGraph load_road_graph(const std::filesystem::path& path);

// Replaces each point by the centroid of the window [i-k, i+k] (clipped to
// the trace bounds), computed in the tangent frame of point i. Timestamps
// are preserved.
Trace sliding_average(const Trace& tr, std::size_t k);

// Greedy consecutive grouping: extend the current group while the next point
// keeps the max pairwise distance <= max_diameter; on violation close the
// group and start a new one at the violating point. Emits groups whose time
// span is >= min_dwell.
std::vector<Poi> extract_pois(const Trace& tr, double max_diameter_m = 250.0,
                              double min_dwell_s = 3600.0);

// Snaps every point to the nearest graph node (ties to the lowest node id).
// Throws EmptyGraph on an empty graph.
Trace map_match(const Trace& tr, const RoadGraph& graph);

struct PoiMatch {
  std::size_t attacked_index;
  std::size_t orig_index;
  double distance_m;
};

// Maps each attacked POI to its nearest original POI by centroid distance;
// many-to-one allowed. Empty when either list is empty.
std::vector<PoiMatch> match_pois(const std::vector<Poi>& orig,
                                 const std::vector<Poi>& attacked);

}  // namespace geopriv

#endif  // GEOPRIV_ATTACKS_HPP_
