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

#include "oneext/reduce3sat.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "oneext/errors.hpp"

namespace oneext {
namespace {

std::int64_t integer(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(0, what + " must be an integer");
  return j.get<std::int64_t>();
}

bool parse_sign(const nlohmann::json& j, const std::string& what) {
  if (j == "+") return true;
  if (j == "-") return false;
  throw ParseError(0, what + " must be \"+\" or \"-\"");
}

std::string clause_name(std::size_t j) { return "clause " + std::to_string(j + 1); }

int sign_of(const Rational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

Rational orient(const PlanePoint& o, const PlanePoint& a, const PlanePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// p lies on segment ab, given that the three points are collinear.
bool within(const PlanePoint& p, const PlanePoint& a, const PlanePoint& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// One drawn edge on one side of the axis, in coordinates where that side is y > 0.
struct Drawn {
  enum Kind { kPendant, kTEdge, kTent, kLeg } kind;
  std::pair<Vertex, Vertex> ends;  // orientation handed to the splicer
  PlanePoint p, q;
};

struct Hit {
  std::size_t a, b;  // indices into the side's drawn edges
  PlanePoint at;
  bool tent = false;  // one of the two is a tent, crossed just above its base height
};

std::string edge_name(const Graph& g, std::pair<Vertex, Vertex> e) {
  return g.label(e.first) + "-" + g.label(e.second);
}

/// Crossing of two straight drawn edges, if they cross properly.
std::optional<PlanePoint> cross_segments(const Graph& g, const Drawn& s, const Drawn& t) {
  const Rational o1 = orient(s.p, s.q, t.p), o2 = orient(s.p, s.q, t.q);
  const Rational o3 = orient(t.p, t.q, s.p), o4 = orient(t.p, t.q, s.q);
  const int d1 = sign_of(o1), d2 = sign_of(o2), d3 = sign_of(o3), d4 = sign_of(o4);
  if (d1 * d2 < 0 && d3 * d4 < 0) {
    const Rational u = o3 / (o3 - o4);
    return PlanePoint{s.p.x + u * (s.q.x - s.p.x), s.p.y + u * (s.q.y - s.p.y)};
  }
  if ((d1 == 0 && within(t.p, s.p, s.q)) || (d2 == 0 && within(t.q, s.p, s.q)) ||
      (d3 == 0 && within(s.p, t.p, t.q)) || (d4 == 0 && within(s.q, t.p, t.q)))
    throw InvalidArgument("degenerate geometry: edges " + edge_name(g, s.ends) + " and " + edge_name(g, t.ends) +
                          " touch");
  return std::nullopt;
}

/// Crossing of straight edge s with the tent over p..q at base height h, which
/// rises by an infinitesimal amount towards the middle vertex.
std::optional<PlanePoint> cross_tent(const Graph& g, const Drawn& tent, const Drawn& s) {
  if (s.kind == Drawn::kTent) return std::nullopt;
  PlanePoint lo = s.p, hi = s.q;
  if (hi.y < lo.y) std::swap(lo, hi);
  const Rational h = tent.p.y;
  if (lo.y == hi.y || !(lo.y <= h && h < hi.y)) return std::nullopt;
  const Rational x = lo.x + (h - lo.y) * (hi.x - lo.x) / (hi.y - lo.y);
  if (x == tent.p.x || x == tent.q.x)
    throw InvalidArgument("degenerate geometry: edge " + edge_name(g, s.ends) + " meets an end of " +
                          edge_name(g, tent.ends));
  if (tent.p.x < x && x < tent.q.x) return PlanePoint{x, h};
  return std::nullopt;
}

}  // namespace

std::vector<std::vector<int>> RectilinearFormula::cnf() const {
  std::vector<std::vector<int>> out;
  for (const auto& c : clauses) {
    std::vector<int> lits;
    for (const auto& l : c.legs) lits.push_back((c.positive ? 1 : -1) * static_cast<int>(l.var + 1));
    out.push_back(std::move(lits));
  }
  return out;
}

nlohmann::json RectilinearFormula::to_json() const {
  nlohmann::json out{{"variables", nlohmann::json::array()}, {"clauses", nlohmann::json::array()}};
  for (const auto& v : variables) {
    nlohmann::json j{{"name", v.name}, {"x", v.x}};
    if (v.width) j["width"] = v.width;
    out["variables"].push_back(std::move(j));
  }
  for (const auto& c : clauses) {
    auto legs = nlohmann::json::array();
    for (const auto& l : c.legs) legs.push_back({{"var", variables[l.var].name}, {"x", l.x}});
    out["clauses"].push_back({{"sign", c.positive ? "+" : "-"}, {"y", c.y}, {"legs", legs}});
  }
  return out;
}

RectilinearFormula parse_pmr3sat(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("formula is not valid JSON: ") + e.what());
  }
  return pmr3sat_from_json(doc);
}

RectilinearFormula pmr3sat_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("variables") || !doc["variables"].is_array() || !doc.contains("clauses") ||
      !doc["clauses"].is_array())
    throw ParseError(0, "formula needs 'variables' and 'clauses' arrays");
  RectilinearFormula f;
  std::map<std::string, std::size_t> index;
  for (const auto& v : doc["variables"]) {
    if (!v.is_object() || !v.contains("name") || !v["name"].is_string() || !v.contains("x"))
      throw ParseError(0, "variable needs a name and x");
    PmrVariable var{v["name"].get<std::string>(), integer(v["x"], "variable x"), 0};
    if (v.contains("width")) var.width = integer(v["width"], "variable width");
    if (!index.emplace(var.name, f.variables.size()).second)
      throw InvalidArgument("variable '" + var.name + "' declared twice");
    f.variables.push_back(std::move(var));
  }
  for (const auto& c : doc["clauses"]) {
    const std::string name = clause_name(f.clauses.size());
    if (!c.is_object() || !c.contains("sign") || !c.contains("y") || !c.contains("legs") || !c["legs"].is_array())
      throw ParseError(0, name + " needs sign, y and legs");
    PmrClause clause;
    clause.positive = parse_sign(c["sign"], name + " sign");
    clause.y = integer(c["y"], name + " y");
    if (c["legs"].size() != 3) throw InvalidArgument(name + " must have exactly 3 legs");
    for (std::size_t q = 0; q < 3; ++q) {
      const auto& l = c["legs"][q];
      if (!l.is_object() || !l.contains("var") || !l["var"].is_string() || !l.contains("x"))
        throw ParseError(0, name + " leg needs var and x");
      const auto it = index.find(l["var"].get<std::string>());
      if (it == index.end()) throw InvalidArgument(name + " uses unknown variable '" + l["var"].get<std::string>() + "'");
      if (l.contains("sign") && parse_sign(l["sign"], name + " leg sign") != clause.positive)
        throw InvalidArgument(name + " is non-monotone: it mixes positive and negative literals");
      clause.legs[q] = {it->second, integer(l["x"], name + " leg x")};
    }
    std::sort(clause.legs.begin(), clause.legs.end(), [](const PmrLeg& a, const PmrLeg& b) { return a.x < b.x; });
    f.clauses.push_back(clause);
  }
  validate_formula(f);
  return f;
}

void validate_formula(const RectilinearFormula& f) {
  for (std::size_t i = 0; i < f.variables.size(); ++i) {
    const auto& v = f.variables[i];
    if (v.width < 0) throw InvalidArgument("variable '" + v.name + "' has negative width");
    if (i && f.variables[i - 1].x + f.variables[i - 1].width >= v.x)
      throw InvalidArgument("variable '" + v.name + "' must lie strictly right of '" + f.variables[i - 1].name + "'");
  }
  std::set<std::int64_t> heights;
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    const std::string name = clause_name(j);
    if (c.y == 0 || (c.y > 0) != c.positive)
      throw InvalidArgument(name + ": positive clauses need y > 0 and negative ones y < 0");
    if (!heights.insert(c.y).second) throw InvalidArgument(name + " repeats the height " + std::to_string(c.y));
    for (std::size_t q = 0; q < 3; ++q) {
      const auto& l = c.legs[q];
      if (l.var >= f.variables.size()) throw InvalidArgument(name + " uses an unknown variable");
      const auto& v = f.variables[l.var];
      if (l.x < v.x || l.x > v.x + v.width)
        throw InvalidArgument(name + " has a leg at x=" + std::to_string(l.x) + " outside the zone of '" + v.name +
                              "'");
      if (q && c.legs[q - 1].x >= l.x) throw InvalidArgument(name + " needs three distinct leg positions");
    }
  }
  // A leg runs from the axis up to its segment, so it must avoid every closer segment on its side.
  for (std::size_t j = 0; j < f.clauses.size(); ++j)
    for (std::size_t k = 0; k < f.clauses.size(); ++k) {
      const auto &c = f.clauses[j], &d = f.clauses[k];
      if (j == k || c.positive != d.positive || std::abs(d.y) >= std::abs(c.y)) continue;
      for (const auto& l : c.legs)
        if (d.legs.front().x <= l.x && l.x <= d.legs.back().x)
          throw InvalidArgument("a leg of " + clause_name(j) + " at x=" + std::to_string(l.x) +
                                " crosses the segment of " + clause_name(k));
    }
}

nlohmann::json EmbeddedGraph::to_json() const {
  nlohmann::json out{{"vertices", graph.vertex_count()},
                     {"edges", graph.edge_count()},
                     {"alpha", alpha()},
                     {"cycle_vertices", cycle_vertices},
                     {"crossings", nlohmann::json::array()}};
  for (const auto& c : crossings)
    out["crossings"].push_back({{"type", c.type == CrossingType::A ? "A" : "B"},
                                {"through", {c.point.through.first, c.point.through.second}},
                                {"crossed", {c.point.crossed.first, c.point.crossed.second}},
                                {"at", {rational_string(c.at.x), rational_string(c.at.y)}}});
  auto& pos = out["positions"] = nlohmann::json::array();
  for (const auto& p : position) pos.push_back({rational_string(p.x), rational_string(p.y)});
  return out;
}

EmbeddedGraph build_double_prime(const RectilinearFormula& f) {
  validate_formula(f);
  const std::size_t m = f.clauses.size();
  EmbeddedGraph eg;
  GraphBuilder b;
  const Rational quarter(1, 4), half(1, 2);

  // Variable cycles: x̄ vertices take the upper legs left to right, x vertices the
  // lower legs right to left, with fillers keeping the colours alternating.
  struct Appearance {
    std::int64_t x;
    std::size_t clause, q;
  };
  std::vector<std::array<Vertex, 3>> attach(m);
  for (std::size_t i = 0; i < f.variables.size(); ++i) {
    std::vector<Appearance> top, bottom;
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t q = 0; q < 3; ++q)
        if (f.clauses[j].legs[q].var == i)
          (f.clauses[j].positive ? top : bottom).push_back({f.clauses[j].legs[q].x, j, q});
    std::sort(top.begin(), top.end(), [](const Appearance& a, const Appearance& c) { return a.x < c.x; });
    std::sort(bottom.begin(), bottom.end(), [](const Appearance& a, const Appearance& c) { return a.x > c.x; });

    const std::string& name = f.variables[i].name;
    std::size_t bars = 0, plains = 0;
    std::vector<Vertex> cycle;
    auto add = [&](bool bar, PlanePoint at, const Appearance* leg) {
      const Vertex v = b.add_vertex((bar ? "xbar:" : "x:") + name + ":" + std::to_string(bar ? ++bars : ++plains));
      eg.position.push_back(at);
      if (leg) attach[leg->clause][leg->q] = v;
      cycle.push_back(v);
    };
    for (const auto& a : top) {
      add(true, {Rational(a.x), quarter}, &a);
      add(false, {Rational(a.x) + half, quarter}, nullptr);
    }
    for (const auto& a : bottom) {
      add(true, {Rational(a.x) + half, -quarter}, nullptr);
      add(false, {Rational(a.x), -quarter}, &a);
    }
    for (std::size_t k = 0; k < cycle.size() && cycle.size() >= 2; ++k) {
      const Vertex u = cycle[k], w = cycle[(k + 1) % cycle.size()];
      if (!b.has_edge(u, w)) b.add_edge(u, w);
    }
    eg.cycle_vertices += cycle.size();
  }

  std::int64_t top_axis = 1, bottom_axis = -1;
  for (const auto& c : f.clauses) {
    top_axis = std::max(top_axis, c.y + 1);
    bottom_axis = std::min(bottom_axis, c.y - 1);
  }
  for (std::size_t j = 0; j < m; ++j) {
    const auto& c = f.clauses[j];
    std::array<Vertex, 3> t{};
    for (std::size_t q = 0; q < 3; ++q) {
      t[q] = b.add_vertex("v:" + std::to_string(j + 1) + ":" + std::to_string(q + 1));
      eg.position.push_back({Rational(c.legs[q].x), Rational(c.y)});
    }
    const Vertex pi = b.add_vertex("pi:" + std::to_string(j + 1));
    eg.position.push_back({Rational(c.legs[1].x), Rational(c.positive ? top_axis : bottom_axis)});
    b.add_edge(t[0], t[1]);
    b.add_edge(t[1], t[2]);
    b.add_edge(t[0], t[2]);
    for (std::size_t q = 0; q < 3; ++q) {
      b.add_edge(t[q], pi);
      b.add_edge(t[q], attach[j][q]);
    }
    eg.triangle.push_back(t);
    eg.pendant.push_back(pi);
  }
  eg.graph = std::move(b).build();
  const Graph& g = eg.graph;

  for (bool positive : {true, false}) {
    const Rational flip = positive ? 1 : -1;
    auto up = [&](Vertex v) { return PlanePoint{eg.position[static_cast<std::size_t>(v)].x, eg.position[static_cast<std::size_t>(v)].y * flip}; };
    std::vector<Drawn> drawn;
    for (std::size_t j = 0; j < m; ++j) {
      if (f.clauses[j].positive != positive) continue;
      const auto& t = eg.triangle[j];
      const Vertex pi = eg.pendant[j];
      drawn.push_back({Drawn::kTEdge, {t[0], t[1]}, up(t[0]), up(t[1])});
      drawn.push_back({Drawn::kTEdge, {t[1], t[2]}, up(t[1]), up(t[2])});
      drawn.push_back({Drawn::kTent, {t[0], t[2]}, up(t[0]), up(t[2])});
      for (std::size_t q = 0; q < 3; ++q) {
        drawn.push_back({Drawn::kPendant, {t[q], pi}, up(t[q]), up(pi)});
        drawn.push_back({Drawn::kLeg, {attach[j][q], t[q]}, up(attach[j][q]), up(t[q])});
      }
    }

    std::vector<Hit> hits;
    for (std::size_t a = 0; a < drawn.size(); ++a)
      for (std::size_t c = a + 1; c < drawn.size(); ++c) {
        const Drawn &s = drawn[a], &t = drawn[c];
        if (s.ends.first == t.ends.first || s.ends.first == t.ends.second || s.ends.second == t.ends.first ||
            s.ends.second == t.ends.second)
          continue;
        std::optional<PlanePoint> at;
        bool tent = false;
        if (s.kind == Drawn::kTent || t.kind == Drawn::kTent) {
          at = s.kind == Drawn::kTent ? cross_tent(g, s, t) : cross_tent(g, t, s);
          tent = true;
        } else {
          at = cross_segments(g, s, t);
        }
        if (!at) continue;
        const bool ps = s.kind == Drawn::kPendant, pt = t.kind == Drawn::kPendant;
        if (!ps && !pt)
          throw IntegrityError("edges " + edge_name(g, s.ends) + " and " + edge_name(g, t.ends) +
                               " cross without a pendant edge");
        if ((ps && t.kind == Drawn::kLeg) || (pt && s.kind == Drawn::kLeg))
          throw IntegrityError("pendant edge crosses leg " + edge_name(g, (ps ? t : s).ends));
        hits.push_back({a, c, *at, tent});
      }

    // Position of each hit along each of its two edges: pendants by height (a tent
    // sits just above its base), T-edges and tents by x.
    std::vector<std::vector<std::pair<std::pair<Rational, int>, std::size_t>>> along(drawn.size());
    for (std::size_t h = 0; h < hits.size(); ++h)
      for (std::size_t e : {hits[h].a, hits[h].b}) {
        const bool pendant = drawn[e].kind == Drawn::kPendant;
        along[e].push_back({{pendant ? hits[h].at.y : hits[h].at.x, pendant && hits[h].tent ? 1 : 0}, h});
      }
    std::vector<std::map<std::size_t, long long>> rank(drawn.size());
    for (std::size_t e = 0; e < drawn.size(); ++e) {
      auto& list = along[e];
      std::sort(list.begin(), list.end());
      for (std::size_t k = 0; k < list.size(); ++k) {
        if (k && list[k].first == list[k - 1].first)
          throw InvalidArgument("degenerate geometry: two crossings coincide on edge " + edge_name(g, drawn[e].ends));
        rank[e][list[k].second] = static_cast<long long>(k);
      }
    }

    for (std::size_t h = 0; h < hits.size(); ++h) {
      std::size_t through = hits[h].a, crossed = hits[h].b;
      const bool both = drawn[through].kind == Drawn::kPendant && drawn[crossed].kind == Drawn::kPendant;
      // The pendant is the through edge; of two pendants, the one starting lower.
      if (drawn[through].kind != Drawn::kPendant || (both && drawn[crossed].p.y < drawn[through].p.y))
        std::swap(through, crossed);
      EmbeddedCrossing x;
      x.type = both ? CrossingType::B : CrossingType::A;
      x.point = {drawn[through].ends, drawn[crossed].ends, rank[through].at(h), rank[crossed].at(h)};
      x.at = {hits[h].at.x, hits[h].at.y * flip};
      eg.crossings.push_back(x);
    }
  }
  return eg;
}

ReductionResult build_g_phi(const RectilinearFormula& f, bool apply_t3) {
  const EmbeddedGraph eg = build_double_prime(f);
  const std::size_t m = f.clauses.size();
  std::vector<CrossingPoint> points;
  for (const auto& c : eg.crossings) points.push_back(c.point);
  TransformResult spliced = splice_crossings(eg.graph, points);

  ReductionResult r;
  r.expected_alpha = eg.alpha() + 9 * points.size();
  std::vector<std::vector<Vertex>> image;
  for (std::size_t v = 0; v < eg.graph.vertex_count(); ++v) image.push_back({static_cast<Vertex>(v)});
  Graph current = std::move(spliced.graph);
  if (apply_t3) {
    TransformResult t3 = t3_degree_reduce(current, std::nullopt, 6);
    r.expected_alpha += current.vertex_count() * 5;
    for (auto& img : image) img = t3.certificate.vertex_map[static_cast<std::size_t>(img.front())];
    current = std::move(t3.graph);
  }

  GraphBuilder b;
  b.append(current);
  for (std::size_t j = 0; j < m; ++j) {
    r.z.push_back(b.add_vertex("z:" + std::to_string(j + 1)));
    r.z_bar.push_back(b.add_vertex("zbar:" + std::to_string(j + 1)));
  }
  for (std::size_t j = 0; j < m; ++j) {
    b.add_edge(r.z[j], r.z_bar[j]);
    const Vertex next = r.z[(j + 1) % m];
    if (!b.has_edge(r.z_bar[j], next)) b.add_edge(r.z_bar[j], next);
    // Lowest vertex of the pendant's image with room for one more edge.
    const auto& img = image[static_cast<std::size_t>(eg.pendant[j])];
    Vertex target = img.front();
    if (apply_t3)
      for (Vertex v : img)
        if (b.degree(v) <= 2) {
          target = v;
          break;
        }
    b.add_edge(r.z[j], target);
  }
  r.expected_alpha += m;
  r.graph = std::move(b).build();

  auto& cert = r.certificate;
  cert.transform = "reduce-3sat";
  cert.parameters = {{"t3", apply_t3}, {"variables", f.variables.size()}, {"clauses", m}};
  cert.vertex_map = image;
  std::size_t type_a = 0;
  for (const auto& c : eg.crossings) type_a += c.type == CrossingType::A;
  cert.extra = {{"double_prime_vertices", eg.graph.vertex_count()},
                {"alpha_double_prime", eg.alpha()},
                {"crossings", {{"A", type_a}, {"B", eg.crossings.size() - type_a}}},
                {"z", r.z},
                {"zbar", r.z_bar},
                {"expected_alpha", r.expected_alpha}};
  return r;
}

}  // namespace oneext
