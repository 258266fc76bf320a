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

#include "geopriv/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>

namespace geopriv {

namespace fs = std::filesystem;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Beijing local offset for the Geolife per-day activity filter.
constexpr std::int64_t kGeolifeUtcOffsetS = 8 * 3600;

std::string_view rstrip(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' ||
                        s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_double(std::string_view tok, const std::string& file,
                    std::size_t line, const char* what) {
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
    throw ParseError(file, line,
                     std::string("bad ") + what + ": '" + std::string(tok) + "'");
  }
  return v;
}

std::int64_t parse_int(std::string_view tok, const std::string& file,
                       std::size_t line, const char* what) {
  std::int64_t v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
    throw ParseError(file, line,
                     std::string("bad ") + what + ": '" + std::string(tok) + "'");
  }
  return v;
}

GeoPoint parse_position(std::string_view lat_tok, std::string_view lon_tok,
                        const std::string& file, std::size_t line) {
  const double lat = parse_double(lat_tok, file, line, "latitude");
  const double lon = parse_double(lon_tok, file, line, "longitude");
  try {
    return GeoPoint(lat, lon);
  } catch (const DomainError& e) {
    throw ParseError(file, line, e.what());
  }
}

// Civil UTC date/time to unix seconds via the C++20 calendar (no local
// timezone involved).
std::int64_t civil_to_unix(int y, unsigned mo, unsigned d, unsigned h,
                           unsigned mi, unsigned s, const std::string& file,
                           std::size_t line) {
  using namespace std::chrono;
  const year_month_day ymd{year{y}, month{mo}, day{d}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 60) {
    throw ParseError(file, line, "invalid date/time");
  }
  const auto days = sys_days{ymd}.time_since_epoch().count();
  return static_cast<std::int64_t>(days) * 86400 + h * 3600 + mi * 60 + s;
}

// "YYYY-MM-DD" + "HH:MM:SS"
std::int64_t parse_date_time(std::string_view date, std::string_view time,
                             const std::string& file, std::size_t line) {
  if (date.size() != 10 || date[4] != '-' || date[7] != '-' ||
      time.size() != 8 || time[2] != ':' || time[5] != ':') {
    throw ParseError(file, line, "bad date/time format");
  }
  const int y = static_cast<int>(parse_int(date.substr(0, 4), file, line, "year"));
  const auto mo = static_cast<unsigned>(parse_int(date.substr(5, 2), file, line, "month"));
  const auto d = static_cast<unsigned>(parse_int(date.substr(8, 2), file, line, "day"));
  const auto h = static_cast<unsigned>(parse_int(time.substr(0, 2), file, line, "hour"));
  const auto mi = static_cast<unsigned>(parse_int(time.substr(3, 2), file, line, "minute"));
  const auto s = static_cast<unsigned>(parse_int(time.substr(6, 2), file, line, "second"));
  return civil_to_unix(y, mo, d, h, mi, s, file, line);
}

// "YYYY-MM-DDTHH:MM:SSZ"
std::int64_t parse_iso8601(std::string_view ts, const std::string& file,
                           std::size_t line) {
  if (ts.size() != 20 || ts[10] != 'T' || ts.back() != 'Z') {
    throw ParseError(file, line, "bad ISO-8601 timestamp: '" + std::string(ts) + "'");
  }
  return parse_date_time(ts.substr(0, 10), ts.substr(11, 8), file, line);
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

void sort_points(Trace& tr) {
  if (tr.has_occupancy()) {
    std::vector<std::size_t> idx(tr.points.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return tr.points[a].t < tr.points[b].t;
    });
    std::vector<TracePoint> pts(tr.points.size());
    std::vector<int> occ(tr.points.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      pts[i] = tr.points[idx[i]];
      occ[i] = tr.occupancy[idx[i]];
    }
    tr.points = std::move(pts);
    tr.occupancy = std::move(occ);
  } else {
    std::stable_sort(tr.points.begin(), tr.points.end(),
                     [](const TracePoint& a, const TracePoint& b) { return a.t < b.t; });
  }
}

void finalize(Dataset& ds) {
  std::sort(ds.traces.begin(), ds.traces.end(),
            [](const Trace& a, const Trace& b) { return a.user_id < b.user_id; });
  for (auto& tr : ds.traces) sort_points(tr);
}

std::vector<fs::path> sorted_entries(const fs::path& root, bool dirs) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(root)) {
    if (dirs ? e.is_directory() : e.is_regular_file()) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

double median(std::vector<double> v) {
  if (v.empty()) return kNaN;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Convex-hull area in m^2 via Andrew's monotone chain on a tangent plane at
// the points' mean latitude/longitude. Unbounded projection: profile areas
// for continent-spanning users are indicative only.
double hull_area_m2(const std::vector<TracePoint>& pts) {
  if (pts.size() < 3) return 0.0;
  GeoPoint ref = pts.front().pos;
  {
    double mlat = 0.0, mlon = 0.0;
    for (const auto& p : pts) {
      mlat += p.pos.lat();
      mlon += p.pos.lon();
    }
    ref = GeoPoint(mlat / static_cast<double>(pts.size()),
                   normalize_lon(mlon / static_cast<double>(pts.size())));
  }
  std::vector<std::pair<double, double>> xy;
  xy.reserve(pts.size());
  for (const auto& p : pts) {
    const LocalXY v = detail::to_local_unchecked(p.pos, ref);
    xy.emplace_back(v.x, v.y);
  }
  std::sort(xy.begin(), xy.end());
  xy.erase(std::unique(xy.begin(), xy.end()), xy.end());
  const std::size_t n = xy.size();
  if (n < 3) return 0.0;

  const auto cross = [](const std::pair<double, double>& o,
                        const std::pair<double, double>& a,
                        const std::pair<double, double>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<double, double>> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], xy[i]) <= 0) --k;
    hull[k++] = xy[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], xy[i]) <= 0) --k;
    hull[k++] = xy[i];
  }
  hull.resize(k > 0 ? k - 1 : 0);
  double area2 = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    area2 += a.first * b.second - b.first * a.second;
  }
  return std::abs(area2) / 2.0;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Dataset load_geolife(const fs::path& root) {
  if (!fs::is_directory(root)) throw MissingDirectory(root.string());
  Dataset ds;
  ds.name = root.filename().string();
  ds.provenance.push_back("format=geolife root=" + root.string());

  for (const fs::path& user_dir : sorted_entries(root, /*dirs=*/true)) {
    Trace tr;
    tr.user_id = user_dir.filename().string();
    std::vector<fs::path> plts;
    for (const auto& e : fs::recursive_directory_iterator(user_dir)) {
      if (e.is_regular_file() && e.path().extension() == ".plt") {
        plts.push_back(e.path());
      }
    }
    std::sort(plts.begin(), plts.end());
    for (const fs::path& plt : plts) {
      const std::vector<std::string> lines = read_lines(plt);
      const std::string fname = plt.string();
      for (std::size_t i = 6; i < lines.size(); ++i) {
        const std::string_view row = rstrip(lines[i]);
        if (row.empty()) continue;
        const auto f = split(row, ',');
        if (f.size() != 7) {
          throw ParseError(fname, i + 1, "expected 7 fields, got " +
                                             std::to_string(f.size()));
        }
        TracePoint p;
        p.pos = parse_position(f[0], f[1], fname, i + 1);
        parse_double(f[3], fname, i + 1, "altitude");  // validated, discarded
        parse_double(f[4], fname, i + 1, "serial day");
        p.t = parse_date_time(f[5], f[6], fname, i + 1);
        tr.points.push_back(p);
      }
    }
    if (!tr.points.empty()) ds.traces.push_back(std::move(tr));
  }
  finalize(ds);
  return ds;
}

Dataset load_sf_cabs(const fs::path& root) {
  if (!fs::is_directory(root)) throw MissingDirectory(root.string());
  Dataset ds;
  ds.name = root.filename().string();
  ds.provenance.push_back("format=sf_cabs root=" + root.string());

  for (const fs::path& file : sorted_entries(root, /*dirs=*/false)) {
    const std::string base = file.filename().string();
    if (base.empty() || base[0] == '_' || base[0] == '.') continue;
    Trace tr;
    tr.user_id = file.stem().string();
    const std::vector<std::string> lines = read_lines(file);
    const std::string fname = file.string();
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const std::string_view row = rstrip(lines[i]);
      if (row.empty()) continue;
      const auto f = split_ws(row);
      if (f.size() != 4) {
        throw ParseError(fname, i + 1,
                         "expected 4 fields, got " + std::to_string(f.size()));
      }
      TracePoint p;
      p.pos = parse_position(f[0], f[1], fname, i + 1);
      const std::int64_t occ = parse_int(f[2], fname, i + 1, "occupancy");
      p.t = parse_int(f[3], fname, i + 1, "unix time");
      tr.points.push_back(p);
      tr.occupancy.push_back(static_cast<int>(occ));
    }
    if (!tr.points.empty()) ds.traces.push_back(std::move(tr));
  }
  finalize(ds);
  return ds;
}

Dataset load_checkins(const fs::path& path) {
  if (!fs::is_regular_file(path)) throw IoError("missing file: " + path.string());
  Dataset ds;
  ds.name = path.stem().string();
  ds.provenance.push_back("format=checkins file=" + path.string());

  const std::vector<std::string> lines = read_lines(path);
  const std::string fname = path.string();
  std::map<std::string, Trace, std::less<>> by_user;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view row = rstrip(lines[i]);
    if (row.empty()) continue;
    const auto f = split(row, '\t');
    bool sparse = f.size() < 5;
    for (const auto& tok : f) sparse = sparse || tok.empty();
    if (sparse) {
      // The public SNAP files contain occasional truncated rows.
      ++ds.skipped_rows;
      continue;
    }
    TracePoint p;
    p.t = parse_iso8601(f[1], fname, i + 1);
    p.pos = parse_position(f[2], f[3], fname, i + 1);
    auto [it, inserted] = by_user.try_emplace(std::string(f[0]));
    if (inserted) it->second.user_id = std::string(f[0]);
    it->second.points.push_back(p);
  }
  for (auto& [_, tr] : by_user) ds.traces.push_back(std::move(tr));
  finalize(ds);
  return ds;
}

Dataset load_canonical_csv(const fs::path& path) {
  if (!fs::is_regular_file(path)) throw IoError("missing file: " + path.string());
  Dataset ds;
  ds.name = path.stem().string();
  ds.provenance.push_back("format=canonical file=" + path.string());

  const std::vector<std::string> lines = read_lines(path);
  const std::string fname = path.string();
  if (lines.empty() || rstrip(lines[0]) != "user_id,unix_time,lat,lon") {
    throw ParseError(fname, 1, "expected header 'user_id,unix_time,lat,lon'");
  }
  std::map<std::string, Trace, std::less<>> by_user;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view row = rstrip(lines[i]);
    if (row.empty()) continue;
    const auto f = split(row, ',');
    if (f.size() != 4) {
      throw ParseError(fname, i + 1,
                       "expected 4 fields, got " + std::to_string(f.size()));
    }
    if (f[0].empty()) throw ParseError(fname, i + 1, "empty user id");
    TracePoint p;
    p.t = parse_int(f[1], fname, i + 1, "unix time");
    p.pos = parse_position(f[2], f[3], fname, i + 1);
    auto [it, inserted] = by_user.try_emplace(std::string(f[0]));
    if (inserted) it->second.user_id = std::string(f[0]);
    it->second.points.push_back(p);
  }
  for (auto& [_, tr] : by_user) ds.traces.push_back(std::move(tr));
  finalize(ds);
  return ds;
}

void save_canonical_csv(const Dataset& ds, const fs::path& path) {
  std::vector<const Trace*> order;
  order.reserve(ds.traces.size());
  for (const auto& tr : ds.traces) order.push_back(&tr);
  std::sort(order.begin(), order.end(),
            [](const Trace* a, const Trace* b) { return a->user_id < b->user_id; });

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << "user_id,unix_time,lat,lon\n";
  char buf[64];
  for (const Trace* tr : order) {
    if (tr->user_id.find_first_of(",\n\r") != std::string::npos) {
      throw IoError("user id not representable in CSV: " + tr->user_id);
    }
    for (const auto& p : tr->points) {
      out << tr->user_id << ',' << p.t << ',';
      std::snprintf(buf, sizeof(buf), "%.7f,%.7f", p.pos.lat(), p.pos.lon());
      out << buf << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path.string());
}

Dataset preprocess(const Dataset& ds, const PreprocessRule& rule) {
  Dataset out;
  out.name = ds.name;
  out.provenance = ds.provenance;
  out.skipped_rows = ds.skipped_rows;

  if (const auto* gd = std::get_if<GeolifeDays>(&rule)) {
    out.provenance.push_back("filter=days_min_points:" +
                             std::to_string(gd->min_points));
    for (const auto& tr : ds.traces) {
      std::map<std::int64_t, std::size_t> per_day;
      for (const auto& p : tr.points) {
        ++per_day[floor_div(p.t + kGeolifeUtcOffsetS, 86400)];
      }
      Trace kept;
      kept.user_id = tr.user_id;
      for (std::size_t i = 0; i < tr.points.size(); ++i) {
        const auto day = floor_div(tr.points[i].t + kGeolifeUtcOffsetS, 86400);
        if (per_day[day] >= gd->min_points) {
          kept.points.push_back(tr.points[i]);
          if (tr.has_occupancy()) kept.occupancy.push_back(tr.occupancy[i]);
        }
      }
      if (!kept.points.empty()) out.traces.push_back(std::move(kept));
    }
  } else if (std::holds_alternative<SfDropEmpty>(rule)) {
    out.provenance.push_back("filter=drop_empty_cab");
    for (const auto& tr : ds.traces) {
      if (!tr.has_occupancy()) {
        throw RuleMismatch("drop-empty-cab filter requires occupancy, which '" +
                           tr.user_id + "' lacks");
      }
      Trace kept;
      kept.user_id = tr.user_id;
      for (std::size_t i = 0; i < tr.points.size(); ++i) {
        if (tr.occupancy[i] != 0) {
          kept.points.push_back(tr.points[i]);
          kept.occupancy.push_back(tr.occupancy[i]);
        }
      }
      if (!kept.points.empty()) out.traces.push_back(std::move(kept));
    }
  } else {
    const auto& mp = std::get<MinPointsPerUser>(rule);
    out.provenance.push_back("filter=min_points_per_user:" +
                             std::to_string(mp.min_points));
    for (const auto& tr : ds.traces) {
      if (tr.points.size() >= mp.min_points) out.traces.push_back(tr);
    }
  }
  return out;
}

Trace temporal_subsample(const Trace& tr, double min_dt_s) {
  if (min_dt_s <= 0) throw DomainError("min_dt must be positive");
  Trace out;
  out.user_id = tr.user_id;
  for (std::size_t i = 0; i < tr.points.size(); ++i) {
    if (out.points.empty() ||
        static_cast<double>(tr.points[i].t - out.points.back().t) >= min_dt_s) {
      out.points.push_back(tr.points[i]);
      if (tr.has_occupancy()) out.occupancy.push_back(tr.occupancy[i]);
    }
  }
  return out;
}

Trace spatial_subsample(const Trace& tr, double min_d_m) {
  if (min_d_m <= 0) throw DomainError("min_d must be positive");
  Trace out;
  out.user_id = tr.user_id;
  for (std::size_t i = 0; i < tr.points.size(); ++i) {
    if (out.points.empty() ||
        distance(tr.points[i].pos, out.points.back().pos) >= min_d_m) {
      out.points.push_back(tr.points[i]);
      if (tr.has_occupancy()) out.occupancy.push_back(tr.occupancy[i]);
    }
  }
  return out;
}

DatasetProfile profile(const Dataset& ds) {
  DatasetProfile prof;
  prof.n_users = ds.traces.size();

  std::vector<double> points, consec, freq, vel, window, density, area;
  for (const auto& tr : ds.traces) {
    const std::size_t n = tr.points.size();
    points.push_back(static_cast<double>(n));
    if (n >= 2) {
      const double duration =
          static_cast<double>(tr.points.back().t - tr.points.front().t);
      std::vector<double> gaps;
      gaps.reserve(n - 1);
      double path = 0.0;
      for (std::size_t i = 1; i < n; ++i) {
        const double d = distance(tr.points[i - 1].pos, tr.points[i].pos);
        gaps.push_back(d);
        path += d;
      }
      consec.push_back(median(std::move(gaps)));
      if (duration > 0) {
        freq.push_back(static_cast<double>(n - 1) / duration);
        vel.push_back(path / duration);
        window.push_back(duration / 86400.0);
      } else {
        ++prof.degenerate_skipped;
      }
    } else {
      ++prof.degenerate_skipped;
    }
    const double a_m2 = hull_area_m2(tr.points);
    if (a_m2 > 0) {
      const double a_km2 = a_m2 / 1e6;
      area.push_back(a_km2);
      density.push_back(static_cast<double>(n) / a_km2);
    } else {
      ++prof.degenerate_skipped;
    }
  }
  prof.points_per_user = median(std::move(points));
  prof.consecutive_distance_m = median(std::move(consec));
  prof.frequency_hz = median(std::move(freq));
  prof.velocity_mps = median(std::move(vel));
  prof.time_window_days = median(std::move(window));
  prof.density_pts_per_km2 = median(std::move(density));
  prof.area_km2 = median(std::move(area));
  return prof;
}

}  // namespace geopriv
