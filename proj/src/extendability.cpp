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

#include "oneext/extendability.hpp"

namespace oneext {
namespace {

/// v plus the target-1 lowest other members of s.
VertexSet trim(const VertexSet& s, Vertex v, std::size_t target) {
  VertexSet out(s.universe(), {v});
  for (Vertex w : s) {
    if (out.size() >= target) break;
    out.insert(w);
  }
  return out;
}

// Vertices are queried in ascending order; every witness found also settles
// the other vertices it contains.
ExtendabilityReport sweep(const Graph& g, std::size_t alpha, std::size_t target, const SolverOptions& opts) {
  const std::size_t n = g.vertex_count();
  ExtendabilityReport r;
  r.alpha = alpha;
  r.target = target;
  r.vertices.resize(n);
  std::vector<bool> settled(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<Vertex>(i);
    auto& verdict = r.vertices[i];
    verdict.id = v;
    if (settled[i]) continue;
    settled[i] = true;
    auto q = has_k_is_containing(g, v, target, opts);
    if (q.found) {
      verdict.covered = true;
      verdict.witness = trim(q.witness, v, target);
      for (Vertex w : q.witness) {
        auto wi = static_cast<std::size_t>(w);
        if (settled[wi]) continue;
        settled[wi] = true;
        r.vertices[wi].covered = true;
        r.vertices[wi].witness = trim(q.witness, w, target);
      }
    } else {
      VertexSet rest = non_neighborhood(g, v);
      rest.erase(v);
      verdict.best_size = 1 + max_independent_set_within(g, rest, opts).alpha;
    }
  }
  r.extendable = true;
  for (const auto& verdict : r.vertices) r.extendable = r.extendable && verdict.covered;
  return r;
}

}  // namespace

std::vector<Vertex> ExtendabilityReport::uncovered() const {
  std::vector<Vertex> out;
  for (const auto& v : vertices)
    if (!v.covered) out.push_back(v.id);
  return out;
}

ExtendabilityReport is_one_extendable(const Graph& g, const SolverOptions& opts) {
  const auto mis = max_independent_set(g, opts);
  return sweep(g, mis.alpha, mis.alpha, opts);
}

ExtendabilityReport param_one_extendability(const Graph& g, std::size_t k, const SolverOptions& opts) {
  const auto mis = max_independent_set(g, opts);
  return sweep(g, mis.alpha, k, opts);
}

nlohmann::json to_json(const ExtendabilityReport& r) {
  nlohmann::json out;
  out["alpha"] = r.alpha;
  out["one_extendable"] = r.extendable;
  if (r.target != r.alpha) out["k"] = r.target;
  out["uncovered"] = r.uncovered();
  auto& list = out["vertices"] = nlohmann::json::array();
  for (const auto& v : r.vertices) {
    nlohmann::json item{{"id", v.id}, {"covered", v.covered}};
    if (v.covered)
      item["witness"] = v.witness.to_vector();
    else
      item["best_size"] = v.best_size;
    list.push_back(std::move(item));
  }
  return out;
}

}  // namespace oneext
