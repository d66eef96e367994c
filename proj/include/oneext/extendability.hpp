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
#include <vector>

#include "json.hpp"
#include "oneext/graph.hpp"
#include "oneext/mis.hpp"

namespace oneext {

struct VertexVerdict {
  Vertex id = 0;
  bool covered = false;
  VertexSet witness;          // covered: independent, contains id, size = target
  std::size_t best_size = 0;  // uncovered: largest independent set containing id
};

struct ExtendabilityReport {
  std::size_t alpha = 0;
  std::size_t target = 0;  // size every vertex was tested against
  bool extendable = false;
  std::vector<VertexVerdict> vertices;

  std::vector<Vertex> uncovered() const;
};

/// Every vertex in some maximum independent set? Uncovered vertices carry
/// 1 + alpha(G - N[v]) as best_size.
ExtendabilityReport is_one_extendable(const Graph& g, const SolverOptions& opts = {});

/// Every vertex in some independent set of size k?
ExtendabilityReport param_one_extendability(const Graph& g, std::size_t k, const SolverOptions& opts = {});

/// {alpha, one_extendable, vertices:[{id, covered, witness|best_size}]}
nlohmann::json to_json(const ExtendabilityReport& r);

}  // namespace oneext
