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

#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "oneext/vertex_set.hpp"

namespace oneext {

/// Undirected edge, normalised so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph over vertex ids 0..n-1 with optional
/// per-vertex provenance labels. Build one with GraphBuilder.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return adjacency_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(Vertex v) const noexcept { return adjacency_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const noexcept { return degrees_[static_cast<std::size_t>(v)]; }
  std::size_t max_degree() const noexcept;

  VertexSet vertices() const { return VertexSet::full(vertex_count()); }
  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  bool contains(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < vertex_count(); }

  /// All edges with u < v, in ascending (u, v) order.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Label of `v`, or its decimal id when the graph carries no labels.
  std::string label(Vertex v) const;
  std::optional<Vertex> find_label(std::string_view name) const;

 private:
  friend class GraphBuilder;

  std::vector<VertexSet> adjacency_;
  std::vector<std::size_t> degrees_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> label_index_;
};

/// Single-owner construction of a Graph. Duplicate edges collapse; self-loops
/// and out-of-range ids throw InvalidArgument.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n = 0);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  Vertex add_vertex(std::string label = {});
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  void remove_edge(Vertex u, Vertex v);
  std::size_t degree(Vertex v) const;
  void set_label(Vertex v, std::string label);

  /// Copy the vertices and edges of `g` as a block; returns the id offset. New
  /// vertices are labelled prefix + g.label(v) when `g` is labelled or a prefix is given.
  Vertex append(const Graph& g, std::string_view label_prefix = {});

  /// Finalise. Throws InvalidArgument when two vertices share a non-empty label
  /// or when only some vertices are labelled.
  Graph build() &&;

 private:
  void check(Vertex v) const;

  std::vector<std::set<Vertex>> adjacency_;
  std::vector<std::string> labels_;
};

// ---- edge-list text format ------------------------------------------------

/// Parse "n m" followed by m edge lines "u v". Lines "# label v name" attach a
/// label; other lines starting with '#' and blank lines are ignored.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

/// Canonical form: header, edges in ascending (u, v) order, then label lines.
std::string serialize_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::filesystem::path& path);

// ---- elementary operations ------------------------------------------------

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;    // new id -> old id
  std::vector<Vertex> from_original;  // old id -> new id, or -1
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// V(G) \ N(v); always contains v itself.
VertexSet non_neighborhood(const Graph& g, Vertex v);

/// N[v] = N(v) ∪ {v}.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

struct DegeneracyOrder {
  std::vector<Vertex> order;  // removal order
  std::size_t degeneracy = 0;
};

/// Repeatedly remove a minimum-degree vertex (lowest id on ties).
DegeneracyOrder degeneracy_order(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);

VertexSet make_set(const Graph& g, std::initializer_list<Vertex> members);

}  // namespace oneext
