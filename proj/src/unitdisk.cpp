// Copyright 2026 The oneext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oneext/unitdisk.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "oneext/errors.hpp"

namespace oneext {
namespace {

constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 30;
constexpr std::size_t kMaxLattice = 10'000'000;

std::string point_string(const GridPoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::int64_t coordinate(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(0, std::string(what) + " must be an integer");
  const auto c = j.get<std::int64_t>();
  if (c < -kMaxCoordinate || c > kMaxCoordinate) throw ParseError(0, std::string(what) + " out of range");
  return c;
}

std::int64_t seg_length(const GridPoint& a, const GridPoint& b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

/// Pieces per segment of one edge at scale f, or nullopt if no odd total fits.
std::optional<std::vector<std::int64_t>> pieces_for(const std::vector<std::int64_t>& lengths, std::int64_t f) {
  // A piece of length f*L/k must lie in (sqrt 2, 2]: 2k >= fL and 2k^2 < (fL)^2.
  auto fits = [](std::int64_t fl, std::int64_t k) { return k >= 2 && 2 * k >= fl && 2 * k * k < fl * fl; };
  std::vector<std::int64_t> k;
  std::int64_t total = 0;
  for (auto len : lengths) {
    const std::int64_t fl = f * len;
    const std::int64_t lo = std::max<std::int64_t>(2, (fl + 1) / 2);
    if (!fits(fl, lo)) return std::nullopt;
    k.push_back(lo);
    total += lo;
  }
  if (total % 2 == 1) return k;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (fits(f * lengths[i], k[i] + 1)) {
      ++k[i];
      return k;
    }
  return std::nullopt;
}

}  // namespace

std::vector<GridPoint> OrthogonalEmbedding::polyline(std::size_t i) const {
  const auto& e = edges.at(i);
  std::vector<GridPoint> pts{position.at(static_cast<std::size_t>(e.u))};
  pts.insert(pts.end(), e.bends.begin(), e.bends.end());
  pts.push_back(position.at(static_cast<std::size_t>(e.v)));
  return pts;
}

OrthogonalEmbedding parse_embedding(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array() || !doc.contains("edges") ||
      !doc["edges"].is_array())
    throw ParseError(0, "embedding needs 'vertices' and 'edges' arrays");
  OrthogonalEmbedding emb;
  const std::size_t n = doc["vertices"].size();
  emb.position.resize(n);
  std::vector<bool> seen(n, false);
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v.contains("x") || !v.contains("y"))
      throw ParseError(0, "embedding vertex needs id, x and y");
    const auto id = coordinate(v["id"], "vertex id");
    if (id < 0 || static_cast<std::size_t>(id) >= n || seen[static_cast<std::size_t>(id)])
      throw ParseError(0, "vertex ids must be 0.." + std::to_string(n) + "-1, each once");
    seen[static_cast<std::size_t>(id)] = true;
    emb.position[static_cast<std::size_t>(id)] = {coordinate(v["x"], "x"), coordinate(v["y"], "y")};
  }
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("u") || !e.contains("v")) throw ParseError(0, "embedding edge needs u and v");
    EmbeddedEdge ee;
    ee.u = static_cast<Vertex>(coordinate(e["u"], "u"));
    ee.v = static_cast<Vertex>(coordinate(e["v"], "v"));
    if (ee.u < 0 || ee.v < 0 || static_cast<std::size_t>(ee.u) >= n || static_cast<std::size_t>(ee.v) >= n)
      throw ParseError(0, "edge endpoint out of range");
    if (e.contains("bends")) {
      if (!e["bends"].is_array()) throw ParseError(0, "bends must be an array");
      for (const auto& b : e["bends"]) {
        if (!b.is_array() || b.size() != 2) throw ParseError(0, "bend must be [x, y]");
        ee.bends.push_back({coordinate(b[0], "bend x"), coordinate(b[1], "bend y")});
      }
    }
    emb.edges.push_back(std::move(ee));
  }
  return emb;
}

nlohmann::json to_json(const OrthogonalEmbedding& emb) {
  nlohmann::json out{{"vertices", nlohmann::json::array()}, {"edges", nlohmann::json::array()}};
  for (std::size_t v = 0; v < emb.position.size(); ++v)
    out["vertices"].push_back({{"id", v}, {"x", emb.position[v].x}, {"y", emb.position[v].y}});
  for (const auto& e : emb.edges) {
    auto bends = nlohmann::json::array();
    for (const auto& b : e.bends) bends.push_back({b.x, b.y});
    out["edges"].push_back({{"u", e.u}, {"v", e.v}, {"bends", bends}});
  }
  return out;
}

Graph embedded_graph(const OrthogonalEmbedding& emb) {
  GraphBuilder b(emb.position.size());
  for (const auto& e : emb.edges) {
    if (e.u == e.v) throw InvalidArgument("embedding has a loop at " + std::to_string(e.u));
    if (b.has_edge(e.u, e.v))
      throw InvalidArgument("embedding draws " + std::to_string(e.u) + "-" + std::to_string(e.v) + " twice");
    b.add_edge(e.u, e.v);
  }
  return std::move(b).build();
}

void validate_embedding(const Graph& g, const OrthogonalEmbedding& emb) {
  if (emb.position.size() != g.vertex_count())
    throw InvalidArgument("embedding has " + std::to_string(emb.position.size()) + " vertices, graph has " +
                          std::to_string(g.vertex_count()));
  const Graph drawn = embedded_graph(emb);
  if (drawn.edges() != g.edges()) throw InvalidArgument("embedding edges differ from the graph's edges");

  std::map<std::pair<std::int64_t, std::int64_t>, std::string> owner;
  for (std::size_t v = 0; v < emb.position.size(); ++v) {
    const auto& p = emb.position[v];
    if (!owner.emplace(std::pair{p.x, p.y}, "vertex " + std::to_string(v)).second)
      throw InvalidArgument("two vertices share the point " + point_string(p));
  }
  std::size_t lattice = 0;
  for (std::size_t i = 0; i < emb.edges.size(); ++i) {
    const auto pts = emb.polyline(i);
    const std::string name = "edge " + std::to_string(emb.edges[i].u) + "-" + std::to_string(emb.edges[i].v);
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
      const GridPoint a = pts[s], b = pts[s + 1];
      if (a == b) throw InvalidArgument(name + " has a zero-length segment at " + point_string(a));
      if (a.x != b.x && a.y != b.y) throw InvalidArgument(name + " has a diagonal segment at " + point_string(a));
      lattice += static_cast<std::size_t>(seg_length(a, b));
      if (lattice > kMaxLattice) throw InvalidArgument("embedding too large to check");
      const std::int64_t dx = (b.x > a.x) - (b.x < a.x), dy = (b.y > a.y) - (b.y < a.y);
      // Every lattice point strictly inside the polyline must be unused.
      GridPoint p = a;
      const std::size_t steps = static_cast<std::size_t>(seg_length(a, b));
      for (std::size_t t = 1; t <= steps; ++t) {
        p = {p.x + dx, p.y + dy};
        if (s + 2 == pts.size() && t == steps) break;
        auto [it, fresh] = owner.emplace(std::pair{p.x, p.y}, name);
        if (!fresh) throw InvalidArgument(name + " meets " + it->second + " at " + point_string(p));
      }
    }
  }
}

nlohmann::json DiskLayout::to_json() const {
  nlohmann::json out{{"radius", "1"}, {"centers", nlohmann::json::array()}};
  for (std::size_t v = 0; v < centers.size(); ++v)
    out["centers"].push_back(
        {{"id", v}, {"x", rational_string(centers[v].x)}, {"y", rational_string(centers[v].y)}});
  return out;
}

DiskLayout parse_layout(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("centers") || !doc["centers"].is_array())
    throw ParseError(0, "layout needs a 'centers' array");
  if (doc.contains("radius") && !(doc["radius"] == "1" || doc["radius"] == 1))
    throw ParseError(0, "only radius 1 is supported");
  DiskLayout layout;
  const std::size_t n = doc["centers"].size();
  layout.centers.resize(n);
  std::vector<bool> seen(n, false);
  auto value = [](const nlohmann::json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw ParseError(0, "centre coordinate must be an integer or a \"p/q\" string");
  };
  for (const auto& c : doc["centers"]) {
    if (!c.is_object() || !c.contains("id") || !c.contains("x") || !c.contains("y"))
      throw ParseError(0, "centre needs id, x and y");
    const auto id = coordinate(c["id"], "centre id");
    if (id < 0 || static_cast<std::size_t>(id) >= n || seen[static_cast<std::size_t>(id)])
      throw ParseError(0, "centre ids must be 0.." + std::to_string(n) + "-1, each once");
    seen[static_cast<std::size_t>(id)] = true;
    layout.centers[static_cast<std::size_t>(id)] = {value(c["x"]), value(c["y"])};
  }
  return layout;
}

UnitDiskResult to_unit_disk(const Graph& g, const OrthogonalEmbedding& emb) {
  validate_embedding(g, emb);
  // Edges in ascending order, each polyline oriented from the lower endpoint.
  std::map<std::pair<Vertex, Vertex>, std::vector<GridPoint>> lines;
  std::int64_t shortest = 0;
  for (std::size_t i = 0; i < emb.edges.size(); ++i) {
    auto pts = emb.polyline(i);
    const auto& e = emb.edges[i];
    if (e.u > e.v) std::reverse(pts.begin(), pts.end());
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
      const auto len = seg_length(pts[s], pts[s + 1]);
      shortest = shortest ? std::min(shortest, len) : len;
    }
    lines.emplace(std::pair{std::min(e.u, e.v), std::max(e.u, e.v)}, std::move(pts));
  }

  // Pieces of length <= 2 stay within half the shortest scaled segment once f * shortest >= 4.
  std::int64_t f = std::max<std::int64_t>(3, shortest ? (4 + shortest - 1) / shortest : 3);
  std::map<std::pair<Vertex, Vertex>, std::vector<std::int64_t>> pieces;
  for (;; ++f) {
    if (f > 64) throw InvalidArgument("no admissible scale factor up to 64");
    pieces.clear();
    bool ok = true;
    for (const auto& [key, pts] : lines) {
      std::vector<std::int64_t> lengths;
      for (std::size_t s = 0; s + 1 < pts.size(); ++s) lengths.push_back(seg_length(pts[s], pts[s + 1]));
      auto k = pieces_for(lengths, f);
      if (!k) {
        ok = false;
        break;
      }
      pieces.emplace(key, std::move(*k));
    }
    if (ok) break;
  }

  UnitDiskResult r;
  GraphBuilder b(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    b.set_label(static_cast<Vertex>(v), g.label(static_cast<Vertex>(v)));
    r.layout.centers.push_back({Rational(f * emb.position[v].x), Rational(f * emb.position[v].y)});
  }
  r.certificate.transform = "unitdisk";
  r.certificate.parameters["scale"] = f;
  r.certificate.parameters["radius"] = 1;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) r.certificate.vertex_map.push_back({static_cast<Vertex>(v)});
  auto& edge_map = r.certificate.extra["edge_map"] = nlohmann::json::array();

  for (const auto& [key, pts] : lines) {
    const auto& k = pieces.at(key);
    const std::string prefix = "ud:" + g.label(key.first) + "-" + g.label(key.second) + ":";
    Vertex prev = key.first;
    std::vector<Vertex> inner;
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
      const Rational ax(f * pts[s].x), ay(f * pts[s].y);
      const Rational dx(f * (pts[s + 1].x - pts[s].x)), dy(f * (pts[s + 1].y - pts[s].y));
      const bool last = s + 2 == pts.size();
      // Interior division points, then the turn itself unless it is the far endpoint.
      for (std::int64_t j = 1; j <= k[s] - (last ? 1 : 0); ++j) {
        const Rational t(j, k[s]);
        const Vertex w = b.add_vertex(prefix + std::to_string(inner.size() + 1));
        r.layout.centers.push_back({ax + t * dx, ay + t * dy});
        b.add_edge(prev, w);
        inner.push_back(w);
        prev = w;
      }
    }
    b.add_edge(prev, key.second);
    edge_map.push_back({{"edge", {key.first, key.second}}, {"pieces", k}, {"path", inner}});
  }
  r.graph = std::move(b).build();
  return r;
}

Graph intersection_graph(const DiskLayout& layout) {
  const std::size_t n = layout.centers.size();
  GraphBuilder b(n);
  // Sweep by x so only centres within horizontal distance 2 are compared.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t c) { return layout.centers[a].x < layout.centers[c].x; });
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = layout.centers[order[i]];
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& q = layout.centers[order[j]];
      const Rational dx = q.x - p.x;
      if (dx > 2) break;
      const Rational dy = q.y - p.y;
      if (dx * dx + dy * dy <= 4) b.add_edge(static_cast<Vertex>(order[i]), static_cast<Vertex>(order[j]));
    }
  }
  return std::move(b).build();
}

nlohmann::json DiskVerification::to_json() const {
  auto pairs = [](const std::vector<Edge>& es) {
    auto out = nlohmann::json::array();
    for (const auto& e : es) out.push_back({e.u, e.v});
    return out;
  };
  return {{"ok", ok}, {"missing", pairs(missing)}, {"unexpected", pairs(unexpected)}};
}

DiskVerification verify_disks(const Graph& g, const DiskLayout& layout) {
  if (layout.centers.size() != g.vertex_count())
    throw InvalidArgument("layout has " + std::to_string(layout.centers.size()) + " centres, graph has " +
                          std::to_string(g.vertex_count()) + " vertices");
  const Graph realized = intersection_graph(layout);
  const auto want = g.edges(), got = realized.edges();
  DiskVerification out;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(out.missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(out.unexpected));
  out.ok = out.missing.empty() && out.unexpected.empty();
  return out;
}

}  // namespace oneext
