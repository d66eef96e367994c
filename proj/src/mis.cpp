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

#include "oneext/mis.hpp"

#include <algorithm>
#include <unordered_map>

#include "oneext/errors.hpp"

namespace oneext {
namespace {

constexpr std::size_t kMemoCap = 1u << 20;
constexpr std::size_t kMemoMinSize = 6;

/// Connected components of G[p], each listed once, ordered by lowest member.
std::vector<VertexSet> components(const Graph& g, VertexSet p) {
  std::vector<VertexSet> out;
  while (auto s = p.first()) {
    VertexSet comp(p.universe(), {*s});
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next(p.universe());
      for (Vertex f : frontier) next |= g.neighbors(f);
      next &= p;
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    p -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

/// Highest degree inside G[p], lowest id on ties.
Vertex branch_vertex(const Graph& g, const VertexSet& p) {
  Vertex best = -1;
  std::size_t best_deg = 0;
  for (Vertex v : p) {
    const std::size_t d = g.neighbors(v).intersection_size(p);
    if (best < 0 || d > best_deg) {
      best = v;
      best_deg = d;
    }
  }
  return best;
}

class MisSearch {
 public:
  MisSearch(const Graph& g, std::size_t budget) : g_(g), budget_(budget) {}

  std::size_t nodes() const noexcept { return nodes_; }

  /// A maximum independent set of G[p] when alpha(G[p]) > lb, else nullopt.
  /// With `satisfice`, any independent set larger than lb is accepted.
  std::optional<VertexSet> search(VertexSet p, long lb, bool satisfice) {
    if (++nodes_ > budget_) throw BudgetExceeded(nodes_ - 1);

    VertexSet taken(p.universe());
    reduce(p, taken);
    const long forced = static_cast<long>(taken.size());
    const long need = lb - forced;

    if (p.empty()) {
      if (forced > lb) return taken;
      return std::nullopt;
    }

    auto hit = memo_.find(p);
    if (hit != memo_.end()) {
      const Entry& e = hit->second;
      if (e.exact) {
        if (e.value > need) return taken | e.witness;
        return std::nullopt;
      }
      if (need >= e.value) return std::nullopt;
    }

    const long ub = static_cast<long>(clique_cover(p));
    if (ub <= need) {
      remember_bound(p, ub);
      return std::nullopt;
    }

    auto comps = components(g_, p);
    if (comps.size() > 1) return split(p, std::move(comps), taken, need, satisfice);

    const Vertex v = branch_vertex(g_, p);
    std::optional<VertexSet> best;
    long floor = need;

    VertexSet with = p - g_.neighbors(v);
    with.erase(v);
    if (auto r = search(std::move(with), floor - 1, satisfice)) {
      r->insert(v);
      floor = static_cast<long>(r->size());
      best = std::move(r);
      if (satisfice) return taken | *best;
    }
    VertexSet without = p;
    without.erase(v);
    if (auto r = search(std::move(without), floor, satisfice)) best = std::move(r);

    if (!best) {
      remember_bound(p, need);
      return std::nullopt;
    }
    if (!satisfice) remember_exact(p, *best);
    return taken | *best;
  }

 private:
  struct Entry {
    bool exact = false;
    long value = 0;  // alpha when exact, otherwise an upper bound on it
    VertexSet witness;
  };

  std::optional<VertexSet> split(const VertexSet& p, std::vector<VertexSet> comps, const VertexSet& taken, long need,
                                 bool satisfice) {
    std::vector<long> ubs;
    long rest = 0;
    for (const auto& c : comps) {
      ubs.push_back(static_cast<long>(clique_cover(c)));
      rest += ubs.back();
    }
    VertexSet result(p.universe());
    long acc = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      rest -= ubs[i];
      const long lb_i = std::max(need - acc - rest, -1L);
      const bool last = i + 1 == comps.size();
      auto r = search(std::move(comps[i]), lb_i, satisfice && last);
      if (!r) {
        remember_bound(p, need);
        return std::nullopt;
      }
      acc += static_cast<long>(r->size());
      result |= *r;
    }
    if (!satisfice) remember_exact(p, result);
    return taken | result;
  }

  // Degree-0 and degree-1 vertices are taken; a vertex whose closed
  // neighbourhood contains that of a neighbour is dropped.
  void reduce(VertexSet& p, VertexSet& taken) {
    VertexSet scratch(p.universe());
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v : p.to_vector()) {
        if (!p.contains(v)) continue;
        VertexSet nv = g_.neighbors(v) & p;
        const std::size_t d = nv.size();
        if (d <= 1) {
          taken.insert(v);
          p -= nv;
          p.erase(v);
          changed = true;
          continue;
        }
        nv.insert(v);
        for (Vertex u : nv) {
          if (u == v) continue;
          scratch = g_.neighbors(u);
          scratch &= p;
          if (scratch.is_subset_of(nv)) {
            p.erase(v);
            changed = true;
            break;
          }
        }
      }
    }
  }

  std::size_t clique_cover(const VertexSet& p) const {
    VertexSet rest = p;
    std::size_t cliques = 0;
    while (auto v = rest.first()) {
      VertexSet cand = g_.neighbors(*v) & rest;
      rest.erase(*v);
      while (auto w = cand.first()) {
        rest.erase(*w);
        cand &= g_.neighbors(*w);
      }
      ++cliques;
    }
    return cliques;
  }

  void remember_bound(const VertexSet& p, long bound) {
    if (p.size() < kMemoMinSize) return;
    auto it = memo_.find(p);
    if (it != memo_.end()) {
      if (!it->second.exact) it->second.value = std::min(it->second.value, bound);
      return;
    }
    if (memo_.size() < kMemoCap) memo_.emplace(p, Entry{false, bound, {}});
  }

  void remember_exact(const VertexSet& p, const VertexSet& witness) {
    if (p.size() < kMemoMinSize) return;
    auto it = memo_.find(p);
    if (it != memo_.end()) {
      it->second = Entry{true, static_cast<long>(witness.size()), witness};
      return;
    }
    if (memo_.size() < kMemoCap) memo_.emplace(p, Entry{true, static_cast<long>(witness.size()), witness});
  }

  const Graph& g_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::unordered_map<VertexSet, Entry, VertexSetHash> memo_;
};

void check_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw InvalidArgument("vertex set universe does not match graph order");
}

class PolynomialEngine {
 public:
  PolynomialEngine(const Graph& g, std::size_t budget) : g_(g), budget_(budget) {}

  IndependencePolynomial compute(const VertexSet& p) {
    if (++nodes_ > budget_) throw BudgetExceeded(nodes_ - 1);
    if (p.empty()) return {{BigInt(1)}};
    if (p.size() == 1) return {{BigInt(1), BigInt(1)}};
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;

    IndependencePolynomial out;
    auto comps = components(g_, p);
    if (comps.size() > 1) {
      out = {{BigInt(1)}};
      for (const auto& c : comps) out = out * compute(c);
    } else {
      const Vertex v = branch_vertex(g_, p);
      VertexSet without = p;
      without.erase(v);
      VertexSet with = without - g_.neighbors(v);
      out = compute(without);
      const auto shifted = compute(with);
      if (out.coefficients.size() < shifted.coefficients.size() + 1)
        out.coefficients.resize(shifted.coefficients.size() + 1);
      for (std::size_t s = 0; s < shifted.coefficients.size(); ++s) out.coefficients[s + 1] += shifted.coefficients[s];
    }
    if (memo_.size() < kMemoCap) memo_.emplace(p, out);
    return out;
  }

 private:
  const Graph& g_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::unordered_map<VertexSet, IndependencePolynomial, VertexSetHash> memo_;
};

}  // namespace

MisResult max_independent_set_within(const Graph& g, const VertexSet& candidates, const SolverOptions& opts) {
  check_universe(g, candidates);
  MisSearch s(g, opts.node_budget);
  auto r = s.search(candidates, -1, false);
  MisResult out;
  out.witness = std::move(*r);
  out.alpha = out.witness.size();
  out.nodes = s.nodes();
  return out;
}

MisResult max_independent_set(const Graph& g, const SolverOptions& opts) {
  return max_independent_set_within(g, g.vertices(), opts);
}

std::optional<VertexSet> find_independent_set_of_size(const Graph& g, const VertexSet& candidates,
                                                      std::size_t target, const SolverOptions& opts) {
  check_universe(g, candidates);
  MisSearch s(g, opts.node_budget);
  return s.search(candidates, static_cast<long>(target) - 1, true);
}

ContainingResult has_k_is_containing(const Graph& g, Vertex v, std::size_t k, const SolverOptions& opts) {
  VertexSet rest = non_neighborhood(g, v);
  rest.erase(v);
  ContainingResult out;
  if (k == 0) {
    out.found = true;
    out.witness = VertexSet(g.vertex_count(), {v});
    return out;
  }
  if (auto r = find_independent_set_of_size(g, rest, k - 1, opts)) {
    out.found = true;
    out.witness = std::move(*r);
    out.witness.insert(v);
  }
  return out;
}

BigInt IndependencePolynomial::total() const {
  BigInt t = 0;
  for (const auto& c : coefficients) t += c;
  return t;
}

IndependencePolynomial operator*(const IndependencePolynomial& a, const IndependencePolynomial& b) {
  IndependencePolynomial out;
  if (a.coefficients.empty() || b.coefficients.empty()) return out;
  out.coefficients.assign(a.coefficients.size() + b.coefficients.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coefficients.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients.size(); ++j) out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
  return out;
}

IndependencePolynomial independence_polynomial_within(const Graph& g, const VertexSet& candidates,
                                                      const SolverOptions& opts) {
  check_universe(g, candidates);
  return PolynomialEngine(g, opts.node_budget).compute(candidates);
}

IndependencePolynomial independence_polynomial(const Graph& g, const SolverOptions& opts) {
  return independence_polynomial_within(g, g.vertices(), opts);
}

NeighborhoodPolynomials neighborhood_polynomials(const Graph& g, const SolverOptions& opts) {
  PolynomialEngine engine(g, opts.node_budget);
  NeighborhoodPolynomials out;
  const VertexSet all = g.vertices();
  out.whole = engine.compute(all);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    VertexSet rest = all - g.neighbors(static_cast<Vertex>(v));
    rest.erase(static_cast<Vertex>(v));
    out.without_closed_neighborhood.push_back(engine.compute(rest));
  }
  return out;
}

MisCounts mis_counts(const Graph& g, std::optional<Vertex> v, const SolverOptions& opts) {
  PolynomialEngine engine(g, opts.node_budget);
  const auto whole = engine.compute(g.vertices());
  MisCounts out;
  out.alpha = whole.degree();
  out.total = whole.coefficient(out.alpha);
  if (v) {
    VertexSet rest = non_neighborhood(g, *v);
    rest.erase(*v);
    const auto part = engine.compute(rest);
    out.containing_v = out.alpha == 0 ? BigInt(0) : part.coefficient(out.alpha - 1);
  }
  return out;
}

AllMisCounts mis_counts_all(const Graph& g, const SolverOptions& opts) {
  const auto polys = neighborhood_polynomials(g, opts);
  AllMisCounts out;
  out.alpha = polys.whole.degree();
  out.total = polys.whole.coefficient(out.alpha);
  for (const auto& p : polys.without_closed_neighborhood)
    out.containing.push_back(out.alpha == 0 ? BigInt(0) : p.coefficient(out.alpha - 1));
  return out;
}

}  // namespace oneext
