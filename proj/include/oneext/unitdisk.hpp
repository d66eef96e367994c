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

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "oneext/csma.hpp"
#include "oneext/graph.hpp"
#include "oneext/transforms.hpp"

namespace oneext {

struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const GridPoint&) const = default;
};

/// Polyline from position[u] through `bends` to position[v].
struct EmbeddedEdge {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<GridPoint> bends;
};

struct OrthogonalEmbedding {
  std::vector<GridPoint> position;  // indexed by vertex id
  std::vector<EmbeddedEdge> edges;

  /// Full polyline of edge i, endpoints included.
  std::vector<GridPoint> polyline(std::size_t i) const;
};

/// {"vertices":[{"id","x","y"}], "edges":[{"u","v","bends":[[x,y],...]}]}
OrthogonalEmbedding parse_embedding(const nlohmann::json& doc);
nlohmann::json to_json(const OrthogonalEmbedding& emb);

/// Graph with the embedding's vertices and edges.
Graph embedded_graph(const OrthogonalEmbedding& emb);

/// Throws InvalidArgument unless `emb` draws exactly `g` with axis-parallel,
/// non-degenerate, pairwise non-touching polylines.
void validate_embedding(const Graph& g, const OrthogonalEmbedding& emb);

struct PlanePoint {
  Rational x;
  Rational y;
};

/// Disk centres; every disk has radius 1.
struct DiskLayout {
  std::vector<PlanePoint> centers;

  /// {"radius":"1","centers":[{"id","x":"p/q","y":"p/q"}]}
  nlohmann::json to_json() const;
};

DiskLayout parse_layout(const nlohmann::json& doc);

struct UnitDiskResult {
  Graph graph;
  DiskLayout layout;
  TransformCertificate certificate;
};

/// Scales the grid by the smallest admissible integer factor and subdivides every
/// edge with a vertex at each turn and an even number of internal vertices overall.
/// Consecutive centres on a chain lie in (sqrt 2, 2] of each other.
UnitDiskResult to_unit_disk(const Graph& g, const OrthogonalEmbedding& emb);

/// Edge iff the squared centre distance is at most 4 (tangent disks intersect).
Graph intersection_graph(const DiskLayout& layout);

struct DiskVerification {
  bool ok = true;
  std::vector<Edge> missing;     // in the graph, disks apart
  std::vector<Edge> unexpected;  // disks meet, no edge

  nlohmann::json to_json() const;
};

/// Compares the intersection graph of `layout` with `g` vertex by vertex.
DiskVerification verify_disks(const Graph& g, const DiskLayout& layout);

}  // namespace oneext
