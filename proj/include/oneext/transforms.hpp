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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "oneext/graph.hpp"
#include "oneext/mis.hpp"

namespace oneext {

/// Where each input vertex went. vertex_map[u] lists the output vertices
/// standing for u (for T3 the whole path P_u in path order, for T1 {u, pendant}).
struct TransformCertificate {
  std::string transform;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<std::vector<Vertex>> vertex_map;
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
};

struct TransformResult {
  Graph graph;
  TransformCertificate certificate;
};

/// Pendant vertex attached to every vertex. Pendant of u is n + u, labelled "pendant:<u>".
TransformResult t1_pendant(const Graph& g);

/// Every edge uv (u < v) becomes a path u, w_1, ..., w_{2s}, v. Internal vertices
/// are appended edge by edge in ascending edge order, labelled "sub:<u>-<v>:<i>".
TransformResult t2_subdivide(const Graph& g, std::size_t s);

/// Per-vertex cyclic order of neighbours; order[u] must be a permutation of N(u).
using NeighborOrder = std::vector<std::vector<Vertex>>;

/// Each vertex u becomes a path P_u on 2D - 1 vertices (ids u(2D-1) ...), where D is
/// the maximum degree, or `delta` when given (must be >= the maximum degree).
/// The j-th neighbour of u, in ascending id or in `order`, attaches to path index 2j.
/// An edgeless input uses D = 1, so every path is a single vertex.
TransformResult t3_degree_reduce(const Graph& g, const std::optional<NeighborOrder>& order = std::nullopt,
                                 std::optional<std::size_t> delta = std::nullopt);

/// Adds an independent set S of n - r vertices, a pendant per vertex (set T) and
/// all S-T edges. 1-extendable iff alpha(G) = r.
TransformResult g_plus(const Graph& g, std::size_t r);

using CliquePartition = std::vector<std::vector<Vertex>>;

/// Throws InvalidArgument unless the parts are cliques partitioning V(G).
void validate_clique_partition(const Graph& g, const CliquePartition& parts);

/// One clique per line, vertex ids separated by blanks; '#' starts a comment.
CliquePartition parse_clique_partition(std::string_view text);

/// Two copies of G, endpoint sets P1 and P2 with |Pi| = k fully joined to each
/// other, and P_i^j adjacent to the j-th clique of copy i.
TransformResult gap_construction(const Graph& g, const CliquePartition& parts);

/// Adds pi_j adjacent to clique j, omega adjacent to every pi_j, and pi_omega
/// adjacent to omega only.
TransformResult w1_construction(const Graph& g, const CliquePartition& parts);

/// Whether some independent set meets every part in exactly one vertex.
bool has_multicolored_independent_set(const Graph& g, const CliquePartition& parts, const SolverOptions& opts = {});

// ---- crossing gadget -----------------------------------------------------------

struct GadgetGraph {
  Graph graph;
  Vertex x = 0, x_prime = 1, y = 2, y_prime = 3;
  std::array<Vertex, 4> z{}, a{}, b{};  // indexed (x,y), (x,y'), (x',y), (x',y')
  std::array<Vertex, 6> c6{};           // in cycle order
};

/// The 22-vertex planar crossover gadget; alpha = 9.
const GadgetGraph& gjs_gadget();

/// table[i][j] = size of a largest independent set S with |S ∩ Y| = i and |S ∩ X| = j.
using GadgetTable = std::array<std::array<std::size_t, 3>, 3>;
GadgetTable gadget_table(const GadgetGraph& gadget);

/// A crossing of the through edge (u, u') by the edges (v_i, v_i'), listed in
/// order from u to u'. Orientation matters: x sits nearest u and y nearest v_i.
struct CrossingSpec {
  std::pair<Vertex, Vertex> through;
  std::vector<std::pair<Vertex, Vertex>> crossed;
};

/// One crossing point with explicit positions along both edges; smaller rank
/// means closer to the first endpoint of that edge.
struct CrossingPoint {
  std::pair<Vertex, Vertex> through;
  std::pair<Vertex, Vertex> crossed;
  long long rank_on_through = 0;
  long long rank_on_crossed = 0;
};

/// Replaces every crossing point by a fresh gadget. An edge crossed several times
/// becomes a chain a - (entry, exit) - ... - b through its gadgets: the X pair
/// (x, x') when it is the through edge of that crossing, the Y pair otherwise.
/// Gadget i occupies ids n + 22i .. n + 22i + 21, labelled "gadget<i>:<role>".
TransformResult splice_crossings(const Graph& g, const std::vector<CrossingPoint>& points);

/// splice_crossings with ranks taken from order of appearance in `specs`.
TransformResult replace_crossings(const Graph& g, const std::vector<CrossingSpec>& specs);

/// Parses [{"through":[u,u'],"crossed":[[v,v'],...]}, ...].
std::vector<CrossingSpec> crossing_specs_from_json(const nlohmann::json& doc);

}  // namespace oneext
