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

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "oneext/csma.hpp"
#include "oneext/graph.hpp"

namespace oneext {

/// Polynomial-time extractor for a hereditary class in which every n-vertex
/// member has an independent set of size at least t * n^c, with c = 1 / inverse_c.
struct FriendlyOracle {
  std::string name;
  unsigned inverse_c = 1;
  Rational t = 1;
  /// Independent set of G[within]. Throws InvalidArgument when G[within] is outside the class.
  std::function<VertexSet(const Graph&, const VertexSet&)> extract;
  /// Lower bound the extractor guarantees on an m-vertex member of the class.
  std::function<std::size_t(std::size_t)> promised;
};

/// Largest s with s^e <= n.
std::size_t integer_root(std::size_t n, unsigned e);

/// d-degenerate graphs: colour greedily along the reverse degeneracy order with
/// d + 1 colours and return the largest class (c = 1, t = 1/(d+1)).
FriendlyOracle oracle_degenerate(std::size_t d);
FriendlyOracle oracle_degenerate(const Graph& g);

/// K_r-free graphs (r >= 2): returns at least floor(n^(1/(r-1))) vertices
/// (c = 1/(r-1), t = 1). Throws InvalidArgument naming a K_r if it meets one.
FriendlyOracle oracle_krfree(std::size_t r);

/// A clique on r vertices, if any (lowest ids first in the search order).
std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t r);

struct KernelRound {
  std::vector<std::vector<Vertex>> layers;  // S_0 .. S_q
  std::vector<Vertex> residue;              // R_{q+1}
  std::vector<Vertex> marked;
  std::vector<Vertex> removed;
};

struct KernelTrace {
  std::size_t k = 0;
  std::string oracle;
  Rational threshold;        // (k/t)^(1/c)
  Rational marking_bound;    // k + (k-1) * threshold
  std::vector<KernelRound> rounds;
  std::vector<Vertex> kept;  // output vertex i is input vertex kept[i]

  nlohmann::json to_json() const;
};

struct KernelResult {
  Graph graph;
  KernelTrace trace;
};

/// Repeats the layer-peeling and S_0 marking rule until it removes nothing or
/// the graph drops below the threshold. Marks use lowest ids.
KernelResult kernelize(const Graph& g, std::size_t k, const FriendlyOracle& oracle);

}  // namespace oneext
