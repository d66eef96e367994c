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

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <random>
#include <set>

#include "brute_force.hpp"
#include "doctest.h"
#include "oneext/errors.hpp"
#include "oneext/extendability.hpp"
#include "oneext/transforms.hpp"

using namespace oneext;
using namespace oneext::testing;

namespace {

bool is_cycle_graph(const Graph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<Vertex>(v)) != 2) return false;
  // Connected 2-regular graph.
  VertexSet seen(g.vertex_count(), {0});
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(g.vertex_count());
    for (Vertex f : frontier) next |= g.neighbors(f);
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen.size() == g.vertex_count();
}

bool is_path_graph(const Graph& g) {
  std::size_t ends = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto d = g.degree(static_cast<Vertex>(v));
    if (d > 2) return false;
    ends += d == 1;
  }
  return ends == 2 && g.edge_count() + 1 == g.vertex_count();
}

Graph two_k2() { return graph_from_edges(4, {{0, 1}, {2, 3}}); }

}  // namespace

// ---- gadget -------------------------------------------------------------------------

TEST_CASE("gadget: alpha and the constrained table by enumeration") {
  const auto& gg = gjs_gadget();
  const Graph& g = gg.graph;
  REQUIRE(g.vertex_count() == 22);
  CHECK(g.max_degree() == 6);

  std::size_t alpha = 0, count = 0;
  std::array<std::array<std::size_t, 3>, 3> table{};
  std::map<std::pair<Mask, Mask>, std::size_t> per_subset;
  const Mask xm = (Mask{1} << gg.x) | (Mask{1} << gg.x_prime);
  const Mask ym = (Mask{1} << gg.y) | (Mask{1} << gg.y_prime);
  for_each_independent_set(g, [&](Mask s) {
    ++count;
    const std::size_t size = std::popcount(s);
    alpha = std::max(alpha, size);
    auto& cell = table[std::popcount(s & ym)][std::popcount(s & xm)];
    cell = std::max(cell, size);
    auto& sub = per_subset[{s & xm, s & ym}];
    sub = std::max(sub, size);
  });
  CHECK(alpha == 9);
  CHECK(count == 10680);
  const std::array<std::array<std::size_t, 3>, 3> expected{{{7, 8, 8}, {8, 9, 9}, {7, 8, 9}}};
  CHECK(table == expected);
  // The table holds for every individual choice of endpoints, not just per size.
  for (const auto& [key, size] : per_subset)
    CHECK(size == expected[std::popcount(key.second)][std::popcount(key.first)]);

  CHECK(max_independent_set(g).alpha == 9);
  CHECK(gadget_table(gg) == expected);
}

TEST_CASE("gadget: S_ab is unique and the four cover the gadget") {
  const auto& gg = gjs_gadget();
  const Graph& g = gg.graph;
  Mask all = 0;
  for (Vertex a : {gg.x, gg.x_prime}) {
    for (Vertex b : {gg.y, gg.y_prime}) {
      const Mask want = (Mask{1} << a) | (Mask{1} << b);
      const Mask ends = (Mask{1} << gg.x) | (Mask{1} << gg.x_prime) | (Mask{1} << gg.y) | (Mask{1} << gg.y_prime);
      std::vector<Mask> found;
      for_each_independent_set(g, [&](Mask s) {
        if (std::popcount(s) == 9 && (s & ends) == want) found.push_back(s);
      });
      CHECK(found.size() == 1);
      if (!found.empty()) all |= found.front();
    }
  }
  CHECK(all == full_mask(22));
}

TEST_CASE("gadget: roles and the worked example") {
  const auto& gg = gjs_gadget();
  const Graph& g = gg.graph;
  const std::array<std::pair<Vertex, Vertex>, 4> ends{
      {{gg.x, gg.y}, {gg.x, gg.y_prime}, {gg.x_prime, gg.y}, {gg.x_prime, gg.y_prime}}};
  for (int q = 0; q < 4; ++q) {
    CHECK(g.adjacent(gg.z[q], ends[q].first));
    CHECK(g.adjacent(gg.z[q], ends[q].second));
    const auto common = g.neighbors(gg.z[q]) & g.neighbors(gg.a[q]);
    CHECK(common.to_vector() == std::vector<Vertex>{gg.b[q]});
  }
  for (int i = 0; i < 6; ++i) CHECK(g.adjacent(gg.c6[i], gg.c6[(i + 1) % 6]));
  VertexSet c6(22);
  for (Vertex c : gg.c6) c6.insert(c);
  CHECK(induced_subgraph(g, c6).graph.edge_count() == 6);
  CHECK(g.label(gg.a[2]) == "a_x'y");

  // A largest set through x, y, y' has 8 vertices, one of them using a_x^y, a_x'^y and three C6 vertices.
  bool example = false;
  const Mask must = (Mask{1} << gg.x) | (Mask{1} << gg.y) | (Mask{1} << gg.y_prime) | (Mask{1} << gg.a[0]) |
                    (Mask{1} << gg.a[2]);
  Mask c6m = 0;
  for (Vertex c : gg.c6) c6m |= Mask{1} << c;
  for_each_independent_set(g, [&](Mask s) {
    if (std::popcount(s) == 8 && (s & must) == must && std::popcount(s & c6m) == 3 &&
        !((s >> gg.x_prime) & 1u))
      example = true;
  });
  CHECK(example);
}

TEST_CASE("gadget: planar with the endpoints on one face in order x, y, x', y'") {
  const auto& gg = gjs_gadget();
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(23);
  for (const Edge& e : gg.graph.edges()) boost::add_edge(e.u, e.v, bg);
  CHECK(boost::boyer_myrvold_planarity_test(bg));
  // A hub joined to the endpoints plus the cycle x-y-x'-y' stays planar only if
  // the endpoints share a face in that cyclic order.
  const std::array<Vertex, 4> ring{gg.x, gg.y, gg.x_prime, gg.y_prime};
  for (int i = 0; i < 4; ++i) {
    boost::add_edge(22, ring[i], bg);
    boost::add_edge(ring[i], ring[(i + 1) % 4], bg);
  }
  CHECK(boost::boyer_myrvold_planarity_test(bg));
}

// ---- T1 -------------------------------------------------------------------------------

TEST_CASE("t1 examples") {
  auto r = t1_pendant(complete(2));
  CHECK(r.graph.vertex_count() == 4);
  CHECK(is_path_graph(r.graph));
  CHECK(max_independent_set(r.graph).alpha == 2);
  CHECK(r.graph.label(2) == "pendant:0");
  CHECK(r.certificate.vertex_map[1] == std::vector<Vertex>{1, 3});

  auto e = t1_pendant(edgeless(3));
  CHECK(e.graph.edge_count() == 3);
  CHECK(max_independent_set(e.graph).alpha == 3);
}

TEST_CASE("t1 property") {
  std::mt19937_64 rng(30);
  for (int i = 0; i < 40; ++i) {
    auto g = random_graph(rng, 1 + rng() % 10, 0.4);
    auto r = t1_pendant(g);
    CHECK(r.graph.vertex_count() == 2 * g.vertex_count());
    CHECK(r.graph.edge_count() == g.edge_count() + g.vertex_count());
    CHECK(bf_alpha(r.graph) == g.vertex_count());
    CHECK(bf_one_extendable(r.graph));
  }
}

// ---- T2 -------------------------------------------------------------------------------

TEST_CASE("t2 examples") {
  auto c9 = t2_subdivide(complete(3), 1).graph;
  CHECK(c9.vertex_count() == 9);
  CHECK(is_cycle_graph(c9));
  CHECK(bf_one_extendable(complete(3)));
  CHECK(bf_one_extendable(c9));

  auto p13 = t2_subdivide(path(5), 1).graph;
  CHECK(p13.vertex_count() == 13);
  CHECK(is_path_graph(p13));
  CHECK_FALSE(bf_one_extendable(path(5)));
  CHECK_FALSE(bf_one_extendable(p13));

  auto p4 = t2_subdivide(complete(2), 1).graph;
  CHECK(is_path_graph(p4));
  CHECK(bf_alpha(p4) == 2);
  CHECK(p4.label(2) == "sub:0-1:1");
  CHECK_THROWS_AS(t2_subdivide(path(3), 0), InvalidArgument);
}

TEST_CASE("t2 property") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    auto g = random_graph(rng, 1 + rng() % 7, 0.4);
    for (std::size_t s : {1u, 2u}) {
      auto h = t2_subdivide(g, s).graph;
      CHECK(h.vertex_count() == g.vertex_count() + 2 * s * g.edge_count());
      CHECK(max_independent_set(h).alpha == bf_alpha(g) + s * g.edge_count());
      CHECK(is_one_extendable(h).extendable == bf_one_extendable(g));
    }
  }
}

// ---- T3 -------------------------------------------------------------------------------

TEST_CASE("t3 examples") {
  auto k3 = t3_degree_reduce(complete(3)).graph;
  CHECK(k3.vertex_count() == 9);
  CHECK(bf_alpha(k3) == 4);
  auto k13 = t3_degree_reduce(star(3));
  CHECK(k13.graph.vertex_count() == 20);
  CHECK(bf_alpha(k13.graph) == 11);
  CHECK(k13.certificate.vertex_map[0] == std::vector<Vertex>{0, 1, 2, 3, 4});
  // Centre's neighbours 1, 2, 3 sit at path indices 0, 2, 4; each leaf uses index 0.
  CHECK(k13.graph.adjacent(0, 5));
  CHECK(k13.graph.adjacent(2, 10));
  CHECK(k13.graph.adjacent(4, 15));

  auto iso = t3_degree_reduce(edgeless(3));
  CHECK(iso.graph.vertex_count() == 3);
  CHECK(iso.graph.edge_count() == 0);
}

TEST_CASE("t3 with a neighbour order and a degree override") {
  auto g = star(3);
  NeighborOrder order{{3, 1, 2}, {0}, {0}, {0}};
  auto r = t3_degree_reduce(g, order).graph;
  CHECK(r.adjacent(0, 15));
  CHECK(r.adjacent(2, 5));
  CHECK(r.adjacent(4, 10));
  CHECK_THROWS_AS(t3_degree_reduce(g, NeighborOrder{{1, 2}, {0}, {0}, {0}}), InvalidArgument);

  auto wide = t3_degree_reduce(complete(3), std::nullopt, 4);
  CHECK(wide.graph.vertex_count() == 21);
  CHECK(bf_alpha(wide.graph) == 3 * 3 + 1);
  CHECK_THROWS_AS(t3_degree_reduce(complete(4), std::nullopt, 2), InvalidArgument);
}

TEST_CASE("t3 property") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 50; ++i) {
    auto g = random_graph(rng, 1 + rng() % 7, 0.45);
    auto h = t3_degree_reduce(g).graph;
    const std::size_t d = std::max<std::size_t>(g.max_degree(), 1);
    CHECK(h.max_degree() <= 3);
    CHECK(max_independent_set(h).alpha == g.vertex_count() * (d - 1) + bf_alpha(g));
    bool isolated = false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) isolated = isolated || g.degree(static_cast<Vertex>(v)) == 0;
    if (!bf_one_extendable(g)) continue;
    // An isolated vertex becomes a bare odd path whose even positions lie in no
    // MIS, so preservation needs every vertex to have a neighbour once D >= 2.
    if (isolated && d >= 2)
      CHECK_FALSE(is_one_extendable(h).extendable);
    else
      CHECK(is_one_extendable(h).extendable);
  }
}

// ---- G+_r -----------------------------------------------------------------------------

TEST_CASE("g_plus examples") {
  CHECK(is_one_extendable(g_plus(complete(2), 1).graph).extendable);
  CHECK_FALSE(bf_one_extendable(g_plus(complete(2), 0).graph));
  CHECK(g_plus(complete(2), 0).graph.vertex_count() == 6);
  CHECK_THROWS_AS(g_plus(complete(2), 3), InvalidArgument);
}

TEST_CASE("g_plus with r = n adds no S and equals t1") {
  // S is empty, so the output is G with pendants and is always 1-extendable,
  // even though alpha(K2) = 1 != 2.
  auto h = g_plus(complete(2), 2).graph;
  CHECK(h.vertex_count() == 4);
  CHECK(h.edges() == t1_pendant(complete(2)).graph.edges());
  CHECK(bf_one_extendable(h));
}

TEST_CASE("g_plus property") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 15; ++i) {
    auto g = random_graph(rng, 1 + rng() % 8, 0.4);
    const std::size_t n = g.vertex_count(), a = bf_alpha(g);
    for (std::size_t r = 0; r <= n; ++r) {
      auto h = g_plus(g, r).graph;
      CHECK(h.vertex_count() == 3 * n - r);
      CHECK(max_independent_set(h).alpha == std::max(n, n - r + a));
      const bool expected = r < n ? a == r : true;
      CHECK(is_one_extendable(h).extendable == expected);
    }
  }
}

// ---- gap / W[1] ---------------------------------------------------------------------------

TEST_CASE("clique partitions") {
  auto g = graph_from_edges(3, {{0, 1}});
  CHECK_NOTHROW(validate_clique_partition(g, {{0, 1}, {2}}));
  CHECK_THROWS_AS(validate_clique_partition(g, {{0, 2}, {1}}), InvalidArgument);
  CHECK_THROWS_AS(validate_clique_partition(g, {{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(validate_clique_partition(g, {{0, 1}, {1, 2}}), InvalidArgument);
  CHECK(parse_clique_partition("0 1\n\n# c\n2\n") == CliquePartition{{0, 1}, {2}});
  CHECK_THROWS_AS(parse_clique_partition("0 a\n"), ParseError);
}

TEST_CASE("gap examples") {
  auto h = gap_construction(edgeless(2), {{0}, {1}}).graph;
  CHECK(h.vertex_count() == 8);
  CHECK(bf_alpha(h) == 4);
  CHECK(bf_one_extendable(h));

  auto h2 = gap_construction(complete(2), {{0, 1}}).graph;
  CHECK(bf_alpha(h2) == 2);
  CHECK(bf_one_extendable(h2));
  CHECK_THROWS_AS(gap_construction(edgeless(2), {{0, 1}}), InvalidArgument);
}

TEST_CASE("gap property") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 30; ++i) {
    auto g = random_graph(rng, 1 + rng() % 8, 0.5);
    auto parts = random_clique_partition(rng, g);
    auto h = gap_construction(g, parts).graph;
    const std::size_t k = parts.size();
    CHECK(bf_alpha(h) == k + bf_alpha(g));
    CHECK(bf_one_extendable(h));
    CHECK((bf_alpha(h) >= 2 * k) == bf_multicolored(g, parts));
  }
}

TEST_CASE("w1 examples and property") {
  auto a = w1_construction(complete(2), {{0}, {1}});
  CHECK(a.graph.vertex_count() == 6);
  CHECK_FALSE(bf_param_extendable(a.graph, 3));
  auto b = w1_construction(edgeless(2), {{0}, {1}});
  CHECK(bf_param_extendable(b.graph, 3));

  std::mt19937_64 rng(35);
  for (int i = 0; i < 40; ++i) {
    auto g = random_graph(rng, 1 + rng() % 8, 0.5);
    auto parts = random_clique_partition(rng, g);
    auto r = w1_construction(g, parts);
    VertexSet sol(r.graph.vertex_count());
    for (Vertex p : r.certificate.extra["pi"].get<std::vector<Vertex>>()) sol.insert(p);
    sol.insert(r.certificate.extra["pi_omega"].get<Vertex>());
    CHECK(sol.size() == parts.size() + 1);
    CHECK(is_independent(r.graph, sol));
    const bool multi = bf_multicolored(g, parts);
    CHECK(bf_param_extendable(r.graph, parts.size() + 1) == multi);
    CHECK(has_multicolored_independent_set(g, parts) == multi);
  }
}

// ---- crossings ----------------------------------------------------------------------------

TEST_CASE("single crossing on 2K2") {
  auto g = two_k2();
  auto r = replace_crossings(g, {CrossingSpec{{0, 1}, {{2, 3}}}});
  const Graph& h = r.graph;
  CHECK(h.vertex_count() == 26);
  CHECK(bf_alpha(h) == 11);
  CHECK_FALSE(h.adjacent(0, 1));
  CHECK(h.adjacent(0, 4 + 0));   // u - x
  CHECK(h.adjacent(4 + 1, 1));   // x' - u'
  CHECK(h.adjacent(2, 4 + 2));   // v - y
  CHECK(h.adjacent(4 + 3, 3));   // y' - v'
  CHECK(h.label(4 + 1) == "gadget0:x'");

  // Every MIS of G extends by exactly 9 gadget vertices.
  const Mask original = full_mask(4);
  for (Mask m : {Mask{0b0101}, Mask{0b0110}, Mask{0b1001}, Mask{0b1010}}) {
    VertexSet cand(26);
    for (Vertex v = 4; v < 26; ++v)
      if (!(h.neighbors(v).words()[0] & m)) cand.insert(v);
    CHECK(max_independent_set_within(h, cand).alpha == 9);
  }

  // Restricting an MIS of G+ to V(G) always leaves a set containing an MIS of G,
  // but not always an independent one: all four endpoints plus 7 gadget
  // vertices (the |S∩X| = |S∩Y| = 0 cell) also reach 11.
  bool restriction_contains_mis = true, some_restriction_is_mis = false, literal_counterexample = false;
  for_each_independent_set(h, [&](Mask s) {
    if (std::popcount(s) != 11) return;
    const Mask r = s & original;
    const bool independent = !((r & 0b0011) == 0b0011 || (r & 0b1100) == 0b1100);
    const int best = ((r & 0b0011) ? 1 : 0) + ((r & 0b1100) ? 1 : 0);
    restriction_contains_mis = restriction_contains_mis && best == 2;
    if (independent && std::popcount(r) == 2) some_restriction_is_mis = true;
    if (!independent) literal_counterexample = true;
  });
  CHECK(restriction_contains_mis);
  CHECK(some_restriction_is_mis);
  CHECK(literal_counterexample);
}

TEST_CASE("lambda = 0 is the identity") {
  std::mt19937_64 rng(36);
  auto g = random_graph(rng, 9, 0.4);
  auto r = replace_crossings(g, {});
  CHECK(r.graph.edges() == g.edges());
  CHECK(r.graph.vertex_count() == g.vertex_count());
}

TEST_CASE("chained crossings") {
  // Edge 0-1 crossed by 2-3 and 4-5, in that order.
  auto g = graph_from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
  auto r = replace_crossings(g, {CrossingSpec{{0, 1}, {{2, 3}, {4, 5}}}});
  const Graph& h = r.graph;
  CHECK(h.vertex_count() == 6 + 44);
  CHECK(max_independent_set(h).alpha == 3 + 18);
  CHECK(h.adjacent(0, 6 + 0));        // u - x_1
  CHECK(h.adjacent(6 + 1, 28 + 0));   // x_1' - x_2
  CHECK(h.adjacent(28 + 1, 1));       // x_2' - u'

  // An edge that is crossed twice as the crossed edge, by two through edges.
  auto g2 = graph_from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
  auto r2 = replace_crossings(g2, {CrossingSpec{{0, 1}, {{4, 5}}}, CrossingSpec{{2, 3}, {{4, 5}}}});
  CHECK(r2.graph.adjacent(4, 6 + 2));
  CHECK(r2.graph.adjacent(6 + 3, 28 + 2));
  CHECK(r2.graph.adjacent(28 + 3, 5));
  CHECK(max_independent_set(r2.graph).alpha == 3 + 18);
}

TEST_CASE("crossing errors") {
  auto g = two_k2();
  CHECK_THROWS_AS(replace_crossings(g, {CrossingSpec{{0, 2}, {{2, 3}}}}), InvalidArgument);
  CHECK_THROWS_AS(replace_crossings(g, {CrossingSpec{{0, 1}, {{2, 3}, {2, 3}}}}), InvalidArgument);
  CHECK_THROWS_AS(replace_crossings(g, {CrossingSpec{{0, 1}, {{2, 3}}}, CrossingSpec{{1, 0}, {{2, 3}}}}),
                  InvalidArgument);
  CHECK_THROWS_AS(replace_crossings(g, {CrossingSpec{{0, 1}, {{0, 1}}}}), InvalidArgument);
  CHECK_THROWS_AS(replace_crossings(g, {CrossingSpec{{0, 1}, {{3, 2}}}, CrossingSpec{{2, 3}, {{0, 1}}}}),
                  InvalidArgument);
  auto specs = crossing_specs_from_json(nlohmann::json::parse(R"([{"through":[0,1],"crossed":[[2,3]]}])"));
  CHECK(specs.size() == 1);
  CHECK(specs[0].crossed[0] == std::pair<Vertex, Vertex>{2, 3});
  CHECK_THROWS_AS(crossing_specs_from_json(nlohmann::json::parse(R"({"a":1})")), ParseError);
}

TEST_CASE("alpha shifts by 9 per crossing on random instances") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 15; ++i) {
    auto g = random_graph(rng, 6 + rng() % 4, 0.35);
    auto edges = g.edges();
    if (edges.size() < 3) continue;
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<CrossingSpec> specs{{{edges[0].u, edges[0].v}, {{edges[1].u, edges[1].v}}}};
    if (rng() % 2) specs[0].crossed.push_back({edges[2].u, edges[2].v});
    std::size_t lambda = specs[0].crossed.size();
    auto h = replace_crossings(g, specs).graph;
    CHECK(max_independent_set(h).alpha == bf_alpha(g) + 9 * lambda);
  }
}

TEST_CASE("1-extendability is preserved when the crossing hypotheses hold") {
  // For each crossing {uu', vv'}: MISs S_u, S_u' of G with u in S_u, u' in S_u'
  // and v, v' outside both. Checked by enumeration, then compared.
  std::mt19937_64 rng(38);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 12; ++i) {
    auto g = random_graph(rng, 5 + rng() % 4, 0.3);
    auto edges = g.edges();
    if (edges.size() < 2) continue;
    std::shuffle(edges.begin(), edges.end(), rng);
    const Edge e = edges[0], f = edges[1];
    if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
    const std::size_t a = bf_alpha(g);
    bool su = false, su2 = false;
    for_each_independent_set(g, [&](Mask s) {
      if (static_cast<std::size_t>(std::popcount(s)) != a) return;
      if ((s >> f.u) & 1u || (s >> f.v) & 1u) return;
      su = su || ((s >> e.u) & 1u);
      su2 = su2 || ((s >> e.v) & 1u);
    });
    if (!su || !su2) continue;
    ++checked;
    auto h = replace_crossings(g, {CrossingSpec{{e.u, e.v}, {{f.u, f.v}}}}).graph;
    CHECK(is_one_extendable(h).extendable == bf_one_extendable(g));
  }
  CHECK(checked > 0);
}
