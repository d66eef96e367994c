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

#include "oneext/kernelize.hpp"

#include <algorithm>

#include "oneext/errors.hpp"

namespace oneext {
namespace {

std::string set_string(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

/// Repeatedly take a minimum-degree vertex of G[w] and drop its closed neighbourhood.
VertexSet greedy_min_degree(const Graph& g, VertexSet w) {
  VertexSet out(g.vertex_count());
  while (!w.empty()) {
    Vertex best = -1;
    std::size_t best_deg = 0;
    for (Vertex v : w) {
      const std::size_t d = g.neighbors(v).intersection_size(w);
      if (best < 0 || d < best_deg) {
        best = v;
        best_deg = d;
      }
    }
    out.insert(best);
    w -= g.neighbors(best);
    w.erase(best);
  }
  return out;
}

VertexSet ramsey(const Graph& g, const VertexSet& w, std::size_t r, std::vector<Vertex>& chain) {
  if (w.empty()) return w;
  if (r <= 2) {
    for (Vertex v : w) {
      const VertexSet nv = g.neighbors(v) & w;
      if (auto u = nv.first()) {
        auto clique = chain;
        clique.push_back(v);
        clique.push_back(*u);
        std::sort(clique.begin(), clique.end());
        throw InvalidArgument("graph is not K" + std::to_string(chain.size() + 2) + "-free: clique " +
                              set_string(clique));
      }
    }
    return w;
  }
  const std::size_t s = integer_root(w.size(), static_cast<unsigned>(r - 1));
  std::size_t need = 1;
  for (std::size_t i = 0; i + 2 < r; ++i) need *= s;
  Vertex hub = -1;
  std::size_t hub_deg = 0;
  for (Vertex v : w) {
    const std::size_t d = g.neighbors(v).intersection_size(w);
    if (d >= need && (hub < 0 || d > hub_deg)) {
      hub = v;
      hub_deg = d;
    }
  }
  if (hub < 0) return greedy_min_degree(g, w);
  chain.push_back(hub);
  VertexSet out = ramsey(g, g.neighbors(hub) & w, r - 1, chain);
  chain.pop_back();
  return out;
}

Rational power(Rational base, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

std::size_t integer_root(std::size_t n, unsigned e) {
  if (e == 0) throw InvalidArgument("root of order 0");
  auto fits = [&](std::size_t s) {
    BigInt p = 1;
    for (unsigned i = 0; i < e; ++i) p *= s;
    return p <= n;
  };
  std::size_t lo = 0, hi = n + 1;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (fits(mid) ? lo : hi) = mid;
  }
  return lo;
}

FriendlyOracle oracle_degenerate(std::size_t d) {
  FriendlyOracle o;
  o.name = "degen(d=" + std::to_string(d) + ")";
  o.inverse_c = 1;
  o.t = Rational(1, d + 1);
  o.promised = [d](std::size_t m) { return (m + d) / (d + 1); };
  o.extract = [d](const Graph& g, const VertexSet& within) {
    const auto sub = induced_subgraph(g, within);
    const auto order = degeneracy_order(sub.graph);
    if (order.degeneracy > d)
      throw InvalidArgument("graph is " + std::to_string(order.degeneracy) + "-degenerate, oracle expects " +
                            std::to_string(d));
    const std::size_t m = sub.graph.vertex_count();
    std::vector<int> colour(m, -1);
    std::vector<std::size_t> count(d + 1, 0);
    for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
      std::vector<bool> used(d + 1, false);
      for (Vertex w : sub.graph.neighbors(*it))
        if (colour[static_cast<std::size_t>(w)] >= 0) used[static_cast<std::size_t>(colour[static_cast<std::size_t>(w)])] = true;
      std::size_t c = 0;
      while (used[c]) ++c;
      colour[static_cast<std::size_t>(*it)] = static_cast<int>(c);
      ++count[c];
    }
    const auto best = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
    VertexSet out(g.vertex_count());
    for (std::size_t i = 0; i < m; ++i)
      if (colour[i] == best) out.insert(sub.to_original[i]);
    return out;
  };
  return o;
}

FriendlyOracle oracle_degenerate(const Graph& g) { return oracle_degenerate(degeneracy_order(g).degeneracy); }

FriendlyOracle oracle_krfree(std::size_t r) {
  if (r < 2) throw InvalidArgument("krfree oracle needs r >= 2");
  FriendlyOracle o;
  o.name = "krfree(r=" + std::to_string(r) + ")";
  o.inverse_c = static_cast<unsigned>(r - 1);
  o.t = 1;
  o.promised = [r](std::size_t m) { return integer_root(m, static_cast<unsigned>(r - 1)); };
  o.extract = [r](const Graph& g, const VertexSet& within) {
    std::vector<Vertex> chain;
    return ramsey(g, within, r, chain);
  };
  return o;
}

std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t r) {
  if (r == 0) return std::vector<Vertex>{};
  std::vector<Vertex> clique;
  auto rec = [&](auto&& self, const VertexSet& cand) -> bool {
    if (clique.size() == r) return true;
    if (clique.size() + cand.size() < r) return false;
    for (Vertex v : cand) {
      clique.push_back(v);
      VertexSet next = cand & g.neighbors(v);
      // Only extend with larger ids so each clique is visited once.
      for (Vertex w : next) {
        if (w > v) break;
        next.erase(w);
      }
      if (self(self, next)) return true;
      clique.pop_back();
    }
    return false;
  };
  if (rec(rec, g.vertices())) return clique;
  return std::nullopt;
}

nlohmann::json KernelTrace::to_json() const {
  nlohmann::json out{{"k", k},
                     {"oracle", oracle},
                     {"threshold", rational_string(threshold)},
                     {"marking_bound", rational_string(marking_bound)},
                     {"kept", kept}};
  auto& list = out["rounds"] = nlohmann::json::array();
  for (const auto& r : rounds)
    list.push_back({{"layers", r.layers}, {"residue", r.residue}, {"marked", r.marked}, {"removed", r.removed}});
  return out;
}

KernelResult kernelize(const Graph& g, std::size_t k, const FriendlyOracle& oracle) {
  if (k == 0) throw InvalidArgument("kernelize needs k >= 1");
  KernelTrace trace;
  trace.k = k;
  trace.oracle = oracle.name;
  trace.threshold = power(Rational(k) / oracle.t, oracle.inverse_c);
  trace.marking_bound = Rational(k) + Rational(k - 1) * trace.threshold;

  auto extract = [&](const VertexSet& within) {
    VertexSet s = oracle.extract(g, within);
    if (!s.is_subset_of(within) || !is_independent(g, s))
      throw IntegrityError(oracle.name + " returned a set that is not independent in the given subgraph");
    const std::size_t want = oracle.promised(within.size());
    if (s.size() < want)
      throw IntegrityError(oracle.name + " returned " + std::to_string(s.size()) + " vertices on " +
                           std::to_string(within.size()) + ", promised " + std::to_string(want));
    return s;
  };

  VertexSet alive = g.vertices();
  while (Rational(alive.size()) >= trace.threshold) {
    KernelRound round;
    const VertexSet s0 = extract(alive);
    if (s0.size() < k)
      throw IntegrityError("first layer has " + std::to_string(s0.size()) + " < k vertices above the threshold");
    round.layers.push_back(s0.to_vector());
    VertexSet rest = alive - s0;
    while (true) {
      const VertexSet si = extract(rest);
      if (si.size() < k) break;
      round.layers.push_back(si.to_vector());
      rest -= si;
    }
    round.residue = rest.to_vector();
    if (Rational(rest.size()) >= trace.threshold)
      throw IntegrityError("residue of " + std::to_string(rest.size()) + " vertices is not below the threshold");

    VertexSet marked(g.vertex_count());
    for (Vertex v : s0) {
      if (marked.size() >= k) break;
      marked.insert(v);
    }
    for (Vertex x : rest) {
      std::size_t budget = k - 1;
      for (Vertex v : s0 - g.neighbors(x)) {
        if (!budget) break;
        marked.insert(v);
        --budget;
      }
    }
    const VertexSet removed = s0 - marked;
    round.marked = marked.to_vector();
    round.removed = removed.to_vector();
    if (Rational(marked.size()) > trace.marking_bound)
      throw IntegrityError("marked " + std::to_string(marked.size()) + " vertices, above the bound " +
                           rational_string(trace.marking_bound));
    trace.rounds.push_back(std::move(round));
    if (removed.empty()) break;
    alive -= removed;
  }

  auto sub = induced_subgraph(g, alive);
  trace.kept = sub.to_original;
  return {std::move(sub.graph), std::move(trace)};
}

}  // namespace oneext
