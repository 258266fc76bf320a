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

#include "geopriv/attacks.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <string>
#include <string_view>

#include "geopriv/errors.hpp"

namespace geopriv {

namespace {

std::string_view rstrip(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' ||
                        s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view tok, const std::string& file,
                    std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
    throw ParseError(file, line, "bad number: '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

RoadGraph load_road_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::string fname = path.string();

  RoadGraph g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view row = rstrip(line);
    if (lineno == 1 || row.empty()) continue;  // header
    const std::size_t c1 = row.find(',');
    const std::size_t c2 = c1 == std::string_view::npos
                               ? std::string_view::npos
                               : row.find(',', c1 + 1);
    if (c2 == std::string_view::npos) {
      throw ParseError(fname, lineno, "expected 'node_id,lat,lon'");
    }
    RoadGraph::Node node;
    const std::string_view id_tok = row.substr(0, c1);
    const auto res = std::from_chars(id_tok.data(), id_tok.data() + id_tok.size(),
                                     node.id);
    if (res.ec != std::errc{} || res.ptr != id_tok.data() + id_tok.size()) {
      throw ParseError(fname, lineno, "bad node id: '" + std::string(id_tok) + "'");
    }
    const double lat = parse_double(row.substr(c1 + 1, c2 - c1 - 1), fname, lineno);
    const double lon = parse_double(row.substr(c2 + 1), fname, lineno);
    try {
      node.pos = GeoPoint(lat, lon);
    } catch (const DomainError& e) {
      throw ParseError(fname, lineno, e.what());
    }
    g.nodes.push_back(node);
  }
  return g;
}

Trace sliding_average(const Trace& tr, std::size_t k) {
  if (k < 1) throw DomainError("window radius must be at least 1");
  Trace out;
  out.user_id = tr.user_id;
  out.points.reserve(tr.points.size());

  const std::size_t n = tr.points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= k ? i - k : 0;
    const std::size_t hi = std::min(n - 1, i + k);
    const GeoPoint ref = tr.points[i].pos;
    double sx = 0.0, sy = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) {
      const LocalXY v = detail::to_local_unchecked(tr.points[j].pos, ref);
      sx += v.x;
      sy += v.y;
    }
    const double m = static_cast<double>(hi - lo + 1);
    LocalXY c;
    c.x = sx / m;
    c.y = sy / m;
    c.reference = ref;
    out.points.push_back({tr.points[i].t, detail::from_local_unchecked(c)});
  }
  return out;
}

std::vector<Poi> extract_pois(const Trace& tr, double max_diameter_m,
                              double min_dwell_s) {
  if (!(max_diameter_m > 0.0)) throw DomainError("max_diameter must be positive");
  if (!(min_dwell_s > 0.0)) throw DomainError("min_dwell must be positive");

  std::vector<Poi> pois;
  std::vector<const TracePoint*> group;

  const auto close_group = [&]() {
    if (group.empty()) return;
    const double span =
        static_cast<double>(group.back()->t - group.front()->t);
    if (span >= min_dwell_s) {
      const GeoPoint ref = group.front()->pos;
      double sx = 0.0, sy = 0.0;
      for (const TracePoint* p : group) {
        const LocalXY v = detail::to_local_unchecked(p->pos, ref);
        sx += v.x;
        sy += v.y;
      }
      const double m = static_cast<double>(group.size());
      LocalXY c;
      c.x = sx / m;
      c.y = sy / m;
      c.reference = ref;
      Poi poi;
      poi.centroid = detail::from_local_unchecked(c);
      poi.t_start = group.front()->t;
      poi.t_end = group.back()->t;
      poi.n_points = group.size();
      pois.push_back(poi);
    }
    group.clear();
  };

  for (const auto& p : tr.points) {
    // Incremental diameter: the new max pairwise distance is the old one or
    // involves the candidate point.
    bool fits = true;
    for (const TracePoint* q : group) {
      if (distance(p.pos, q->pos) > max_diameter_m) {
        fits = false;
        break;
      }
    }
    if (!fits) close_group();
    group.push_back(&p);
  }
  close_group();
  return pois;
}

Trace map_match(const Trace& tr, const RoadGraph& graph) {
  if (graph.nodes.empty()) throw EmptyGraph();
  Trace out;
  out.user_id = tr.user_id;
  out.points.reserve(tr.points.size());
  for (const auto& p : tr.points) {
    const RoadGraph::Node* best = &graph.nodes.front();
    double best_d = distance(p.pos, best->pos);
    for (const auto& node : graph.nodes) {
      const double d = distance(p.pos, node.pos);
      if (d < best_d || (d == best_d && node.id < best->id)) {
        best_d = d;
        best = &node;
      }
    }
    out.points.push_back({p.t, best->pos});
  }
  return out;
}

std::vector<PoiMatch> match_pois(const std::vector<Poi>& orig,
                                 const std::vector<Poi>& attacked) {
  std::vector<PoiMatch> matches;
  if (orig.empty()) return matches;
  matches.reserve(attacked.size());
  for (std::size_t a = 0; a < attacked.size(); ++a) {
    std::size_t best = 0;
    double best_d = distance(attacked[a].centroid, orig[0].centroid);
    for (std::size_t o = 1; o < orig.size(); ++o) {
      const double d = distance(attacked[a].centroid, orig[o].centroid);
      if (d < best_d) {
        best_d = d;
        best = o;
      }
    }
    matches.push_back({a, best, best_d});
  }
  return matches;
}

}  // namespace geopriv
