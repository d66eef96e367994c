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

#include "oneext/transforms.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "oneext/errors.hpp"

namespace oneext {
namespace {

std::string str(Vertex v) { return std::to_string(v); }

std::vector<std::vector<Vertex>> identity_map(std::size_t n) {
  std::vector<std::vector<Vertex>> m(n);
  for (std::size_t v = 0; v < n; ++v) m[v] = {static_cast<Vertex>(v)};
  return m;
}

/// Builder pre-filled with G (labels become the input label or decimal id).
GraphBuilder copy_of(const Graph& g) {
  GraphBuilder b(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) b.set_label(static_cast<Vertex>(v), g.label(static_cast<Vertex>(v)));
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  return b;
}

void check_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw InvalidArgument("vertex " + str(v) + " not in graph");
}

}  // namespace

nlohmann::json TransformCertificate::to_json() const {
  nlohmann::json out{{"transform", transform}, {"parameters", parameters}, {"vertex_map", vertex_map}};
  for (auto it = extra.begin(); it != extra.end(); ++it) out[it.key()] = it.value();
  return out;
}

// ---- T1, T2, T3 ----------------------------------------------------------------

TransformResult t1_pendant(const Graph& g) {
  const std::size_t n = g.vertex_count();
  GraphBuilder b = copy_of(g);
  TransformResult r;
  r.certificate.transform = "t1";
  r.certificate.vertex_map.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto uv = static_cast<Vertex>(u);
    const Vertex p = b.add_vertex("pendant:" + g.label(uv));
    b.add_edge(uv, p);
    r.certificate.vertex_map[u] = {uv, p};
  }
  r.graph = std::move(b).build();
  return r;
}

TransformResult t2_subdivide(const Graph& g, std::size_t s) {
  if (s == 0) throw InvalidArgument("t2 needs s >= 1");
  GraphBuilder b(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) b.set_label(static_cast<Vertex>(v), g.label(static_cast<Vertex>(v)));
  TransformResult r;
  r.certificate.transform = "t2";
  r.certificate.parameters["s"] = s;
  r.certificate.vertex_map = identity_map(g.vertex_count());
  auto& edge_map = r.certificate.extra["edge_map"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    Vertex prev = e.u;
    std::vector<Vertex> inner;
    for (std::size_t i = 1; i <= 2 * s; ++i) {
      const Vertex w = b.add_vertex("sub:" + g.label(e.u) + "-" + g.label(e.v) + ":" + std::to_string(i));
      b.add_edge(prev, w);
      inner.push_back(w);
      prev = w;
    }
    b.add_edge(prev, e.v);
    edge_map.push_back({{"edge", {e.u, e.v}}, {"path", inner}});
  }
  r.graph = std::move(b).build();
  return r;
}

TransformResult t3_degree_reduce(const Graph& g, const std::optional<NeighborOrder>& order,
                                 std::optional<std::size_t> delta) {
  const std::size_t n = g.vertex_count();
  std::size_t d = std::max<std::size_t>(g.max_degree(), 1);
  if (delta) {
    if (*delta < g.max_degree())
      throw InvalidArgument("t3 delta " + std::to_string(*delta) + " below maximum degree " +
                            std::to_string(g.max_degree()));
    d = std::max<std::size_t>(*delta, 1);
  }
  const std::size_t len = 2 * d - 1;

  // slot[u][v] = path index on P_u used for the edge towards v.
  std::vector<std::map<Vertex, std::size_t>> slot(n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto uv = static_cast<Vertex>(u);
    std::vector<Vertex> seq;
    if (order) {
      if (order->size() != n) throw InvalidArgument("neighbour order must list every vertex");
      seq = (*order)[u];
      std::vector<Vertex> sorted = seq;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != g.neighbors(uv).to_vector())
        throw InvalidArgument("neighbour order of vertex " + str(uv) + " is not a permutation of its neighbours");
    } else {
      seq = g.neighbors(uv).to_vector();
    }
    for (std::size_t j = 0; j < seq.size(); ++j) slot[u][seq[j]] = 2 * j;
  }

  GraphBuilder b(n * len);
  TransformResult r;
  r.certificate.transform = "t3";
  r.certificate.parameters["delta"] = d;
  r.certificate.parameters["path_length"] = len;
  r.certificate.vertex_map.resize(n);
  auto at = [len](std::size_t u, std::size_t i) { return static_cast<Vertex>(u * len + i); };
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < len; ++i) {
      b.set_label(at(u, i), "path:" + g.label(static_cast<Vertex>(u)) + ":" + std::to_string(i));
      r.certificate.vertex_map[u].push_back(at(u, i));
      if (i) b.add_edge(at(u, i - 1), at(u, i));
    }
  }
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    b.add_edge(at(u, slot[u].at(e.v)), at(v, slot[v].at(e.u)));
  }
  r.graph = std::move(b).build();
  return r;
}

// ---- G+_r, gap, W[1] ---------------------------------------------------------

TransformResult g_plus(const Graph& g, std::size_t r) {
  const std::size_t n = g.vertex_count();
  if (r > n) throw InvalidArgument("g_plus needs 0 <= r <= n (r = " + std::to_string(r) + ", n = " + std::to_string(n) + ")");
  GraphBuilder b = copy_of(g);
  TransformResult out;
  out.certificate.transform = "gplus";
  out.certificate.parameters["r"] = r;
  out.certificate.vertex_map.resize(n);
  std::vector<Vertex> pendants, s;
  for (std::size_t u = 0; u < n; ++u) {
    const auto uv = static_cast<Vertex>(u);
    const Vertex p = b.add_vertex("pendant:" + g.label(uv));
    b.add_edge(uv, p);
    pendants.push_back(p);
    out.certificate.vertex_map[u] = {uv, p};
  }
  for (std::size_t i = 0; i < n - r; ++i) s.push_back(b.add_vertex("S:" + std::to_string(i)));
  for (Vertex a : s)
    for (Vertex p : pendants) b.add_edge(a, p);
  out.certificate.extra["S"] = s;
  out.certificate.extra["T"] = pendants;
  out.graph = std::move(b).build();
  return out;
}

void validate_clique_partition(const Graph& g, const CliquePartition& parts) {
  std::vector<int> seen(g.vertex_count(), 0);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].empty()) throw InvalidArgument("clique " + std::to_string(j) + " is empty");
    for (Vertex v : parts[j]) {
      check_vertex(g, v);
      if (seen[static_cast<std::size_t>(v)]++) throw InvalidArgument("vertex " + str(v) + " appears in two cliques");
    }
    for (std::size_t a = 0; a < parts[j].size(); ++a)
      for (std::size_t c = a + 1; c < parts[j].size(); ++c)
        if (!g.adjacent(parts[j][a], parts[j][c]))
          throw InvalidArgument("part " + std::to_string(j) + " is not a clique: " + str(parts[j][a]) + " and " +
                                str(parts[j][c]) + " are not adjacent");
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) throw InvalidArgument("vertex " + std::to_string(v) + " is not covered by the partition");
}

CliquePartition parse_clique_partition(std::string_view text) {
  CliquePartition parts;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<Vertex> part;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0) throw ParseError(line_no, "expected a vertex id, got '" + tok + "'");
      part.push_back(static_cast<Vertex>(v));
    }
    if (!part.empty()) parts.push_back(std::move(part));
  }
  return parts;
}

TransformResult gap_construction(const Graph& g, const CliquePartition& parts) {
  validate_clique_partition(g, parts);
  const std::size_t n = g.vertex_count(), k = parts.size();
  GraphBuilder b;
  b.append(g, "copy1:");
  b.append(g, "copy2:");
  std::vector<std::vector<Vertex>> p(2);
  for (int i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < k; ++j) p[i].push_back(b.add_vertex("P" + std::to_string(i + 1) + ":" + std::to_string(j)));
  for (Vertex a : p[0])
    for (Vertex c : p[1]) b.add_edge(a, c);
  for (int i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (Vertex v : parts[j]) b.add_edge(p[i][j], static_cast<Vertex>(i * n) + v);

  TransformResult r;
  r.certificate.transform = "gap";
  r.certificate.parameters["k"] = k;
  r.certificate.vertex_map.resize(n);
  for (std::size_t v = 0; v < n; ++v)
    r.certificate.vertex_map[v] = {static_cast<Vertex>(v), static_cast<Vertex>(n + v)};
  r.certificate.extra["P1"] = p[0];
  r.certificate.extra["P2"] = p[1];
  r.graph = std::move(b).build();
  return r;
}

TransformResult w1_construction(const Graph& g, const CliquePartition& parts) {
  validate_clique_partition(g, parts);
  GraphBuilder b = copy_of(g);
  std::vector<Vertex> pis;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const Vertex p = b.add_vertex("pi:" + std::to_string(j));
    for (Vertex v : parts[j]) b.add_edge(p, v);
    pis.push_back(p);
  }
  const Vertex omega = b.add_vertex("omega");
  for (Vertex p : pis) b.add_edge(p, omega);
  const Vertex pi_omega = b.add_vertex("pi_omega");
  b.add_edge(omega, pi_omega);

  TransformResult r;
  r.certificate.transform = "w1";
  r.certificate.parameters["k"] = parts.size();
  r.certificate.vertex_map = identity_map(g.vertex_count());
  r.certificate.extra["pi"] = pis;
  r.certificate.extra["omega"] = omega;
  r.certificate.extra["pi_omega"] = pi_omega;
  r.graph = std::move(b).build();
  return r;
}

bool has_multicolored_independent_set(const Graph& g, const CliquePartition& parts, const SolverOptions& opts) {
  validate_clique_partition(g, parts);
  // Parts are cliques, so an independent set meets each at most once.
  return find_independent_set_of_size(g, g.vertices(), parts.size(), opts).has_value();
}

// ---- gadget ----------------------------------------------------------------------

namespace {

// Ids: 0 x, 1 x', 2 y, 3 y', 4+q z_q, 8+q b_q, 12+q a_q, 16..21 the C6 in
// cycle order; q indexes (x,y), (x,y'), (x',y), (x',y').
constexpr std::array<std::pair<int, int>, 39> kGadgetEdges{{
    {0, 4},   {0, 5},   {1, 6},   {1, 7},   {2, 4},   {2, 6},   {2, 13},  {2, 20},  {3, 5},   {3, 7},
    {3, 9},   {3, 11},  {4, 5},   {4, 8},   {5, 8},   {5, 9},   {6, 7},   {6, 10},  {7, 10},  {7, 11},
    {8, 12},  {9, 12},  {9, 13},  {9, 16},  {9, 21},  {10, 14}, {11, 14}, {11, 15}, {12, 13}, {13, 19},
    {13, 20}, {14, 20}, {15, 21}, {16, 17}, {16, 21}, {17, 18}, {18, 19}, {19, 20}, {20, 21},
}};

GadgetGraph make_gadget() {
  static const std::array<const char*, 4> pair{"xy", "xy'", "x'y", "x'y'"};
  GadgetGraph gg;
  GraphBuilder b(22);
  b.set_label(0, "x");
  b.set_label(1, "x'");
  b.set_label(2, "y");
  b.set_label(3, "y'");
  for (int q = 0; q < 4; ++q) {
    gg.z[q] = 4 + q;
    gg.b[q] = 8 + q;
    gg.a[q] = 12 + q;
    b.set_label(4 + q, std::string("z_") + pair[q]);
    b.set_label(8 + q, std::string("b_") + pair[q]);
    b.set_label(12 + q, std::string("a_") + pair[q]);
  }
  for (int i = 0; i < 6; ++i) {
    gg.c6[i] = 16 + i;
    b.set_label(16 + i, "c6_" + std::to_string(i));
  }
  for (auto [u, v] : kGadgetEdges) b.add_edge(u, v);
  gg.graph = std::move(b).build();
  return gg;
}

}  // namespace

const GadgetGraph& gjs_gadget() {
  static const GadgetGraph g = make_gadget();
  return g;
}

GadgetTable gadget_table(const GadgetGraph& gadget) {
  const Graph& g = gadget.graph;
  const std::array<Vertex, 2> xs{gadget.x, gadget.x_prime}, ys{gadget.y, gadget.y_prime};
  VertexSet inner = g.vertices();
  for (Vertex t : {gadget.x, gadget.x_prime, gadget.y, gadget.y_prime}) inner.erase(t);
  GadgetTable table{};
  for (unsigned xm = 0; xm < 4; ++xm) {
    for (unsigned ym = 0; ym < 4; ++ym) {
      VertexSet chosen(g.vertex_count());
      for (int i = 0; i < 2; ++i) {
        if ((xm >> i) & 1u) chosen.insert(xs[i]);
        if ((ym >> i) & 1u) chosen.insert(ys[i]);
      }
      if (!is_independent(g, chosen)) continue;
      VertexSet cand = inner;
      for (Vertex c : chosen) cand -= g.neighbors(c);
      const std::size_t size = chosen.size() + max_independent_set_within(g, cand).alpha;
      auto& cell = table[std::popcount(ym)][std::popcount(xm)];
      cell = std::max(cell, size);
    }
  }
  return table;
}

// ---- crossing replacement -----------------------------------------------------

TransformResult splice_crossings(const Graph& g, const std::vector<CrossingPoint>& points) {
  const std::size_t n = g.vertex_count();
  const GadgetGraph& gadget = gjs_gadget();

  // Per unordered edge: its orientation and the (rank, gadget, is_through) stops along it.
  struct Stop {
    long long rank;
    std::size_t gadget;
    bool through;
  };
  std::map<Edge, std::pair<std::pair<Vertex, Vertex>, std::vector<Stop>>> routes;
  std::set<std::pair<Edge, Edge>> pairs;

  auto register_stop = [&](std::pair<Vertex, Vertex> oriented, long long rank, std::size_t i, bool through) {
    auto [a, c] = oriented;
    check_vertex(g, a);
    check_vertex(g, c);
    if (a == c || !g.adjacent(a, c))
      throw InvalidArgument("crossing " + std::to_string(i) + " refers to missing edge " + str(a) + "-" + str(c));
    const Edge e = Edge::of(a, c);
    auto [it, fresh] = routes.try_emplace(e, oriented, std::vector<Stop>{});
    if (!fresh && it->second.first != oriented)
      throw InvalidArgument("edge " + str(e.u) + "-" + str(e.v) + " is used with both orientations");
    it->second.second.push_back({rank, i, through});
  };

  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    register_stop(p.through, p.rank_on_through, i, true);
    register_stop(p.crossed, p.rank_on_crossed, i, false);
    const Edge e = Edge::of(p.through.first, p.through.second), f = Edge::of(p.crossed.first, p.crossed.second);
    if (e == f) throw InvalidArgument("crossing " + std::to_string(i) + " crosses an edge with itself");
    if (!pairs.insert(std::minmax(e, f)).second)
      throw InvalidArgument("edges " + str(e.u) + "-" + str(e.v) + " and " + str(f.u) + "-" + str(f.v) +
                            " cross more than once");
  }

  GraphBuilder b(n);
  for (std::size_t v = 0; v < n; ++v) b.set_label(static_cast<Vertex>(v), g.label(static_cast<Vertex>(v)));
  for (const Edge& e : g.edges())
    if (!routes.count(e)) b.add_edge(e.u, e.v);

  TransformResult r;
  r.certificate.transform = "replace-crossings";
  r.certificate.parameters["crossings"] = points.size();
  r.certificate.vertex_map = identity_map(n);
  auto& gadgets = r.certificate.extra["gadgets"] = nlohmann::json::array();
  std::vector<Vertex> base;
  for (std::size_t i = 0; i < points.size(); ++i) {
    base.push_back(b.append(gadget.graph, "gadget" + std::to_string(i) + ":"));
    const Vertex o = base.back();
    gadgets.push_back({{"first", o},
                       {"x", o + gadget.x},
                       {"x'", o + gadget.x_prime},
                       {"y", o + gadget.y},
                       {"y'", o + gadget.y_prime}});
  }

  for (auto& [e, route] : routes) {
    auto& [oriented, stops] = route;
    std::sort(stops.begin(), stops.end(), [](const Stop& s, const Stop& t) { return s.rank < t.rank; });
    for (std::size_t j = 1; j < stops.size(); ++j)
      if (stops[j].rank == stops[j - 1].rank)
        throw InvalidArgument("two crossings share a position on edge " + str(e.u) + "-" + str(e.v));
    Vertex prev = oriented.first;
    for (const Stop& s : stops) {
      const Vertex o = base[s.gadget];
      b.add_edge(prev, o + (s.through ? gadget.x : gadget.y));
      prev = o + (s.through ? gadget.x_prime : gadget.y_prime);
    }
    b.add_edge(prev, oriented.second);
  }
  r.graph = std::move(b).build();
  return r;
}

TransformResult replace_crossings(const Graph& g, const std::vector<CrossingSpec>& specs) {
  std::vector<CrossingPoint> points;
  long long counter = 0;
  for (const auto& s : specs) {
    for (const auto& c : s.crossed) {
      const long long rank = counter++;
      points.push_back({s.through, c, rank, rank});
    }
  }
  auto r = splice_crossings(g, points);
  r.certificate.transform = "replace-crossings";
  return r;
}

std::vector<CrossingSpec> crossing_specs_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError(0, "crossings document must be a JSON array");
  auto pair_of = [](const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
      throw ParseError(0, "edge must be a pair of integer vertex ids");
    return std::pair<Vertex, Vertex>{j[0].get<Vertex>(), j[1].get<Vertex>()};
  };
  std::vector<CrossingSpec> specs;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("through") || !item.contains("crossed") || !item["crossed"].is_array())
      throw ParseError(0, "each crossing needs 'through' and 'crossed'");
    CrossingSpec s;
    s.through = pair_of(item["through"]);
    for (const auto& c : item["crossed"]) s.crossed.push_back(pair_of(c));
    specs.push_back(std::move(s));
  }
  return specs;
}

}  // namespace oneext
