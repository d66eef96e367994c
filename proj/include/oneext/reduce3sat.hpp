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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "oneext/graph.hpp"
#include "oneext/transforms.hpp"
#include "oneext/unitdisk.hpp"

namespace oneext {

/// A variable sits on the x-axis; legs of its literals attach anywhere in [x, x + width].
struct PmrVariable {
  std::string name;
  std::int64_t x = 0;
  std::int64_t width = 0;
};

struct PmrLeg {
  std::size_t var = 0;
  std::int64_t x = 0;
};

/// Three literals of one sign on a horizontal segment at height y
/// (y > 0 for positive clauses, y < 0 for negative ones). Legs sorted by x.
struct PmrClause {
  bool positive = true;
  std::int64_t y = 0;
  std::array<PmrLeg, 3> legs{};
};

struct RectilinearFormula {
  std::vector<PmrVariable> variables;
  std::vector<PmrClause> clauses;

  /// Literal lists with variable i written as i + 1 or -(i + 1).
  std::vector<std::vector<int>> cnf() const;
  nlohmann::json to_json() const;
};

/// {"variables":[{"name","x",("width")}],
///  "clauses":[{"sign":"+"|"-","y","legs":[{"var","x",("sign")}]}]}
RectilinearFormula pmr3sat_from_json(const nlohmann::json& doc);
RectilinearFormula parse_pmr3sat(std::string_view text);

/// Throws InvalidArgument on a non-monotone clause, a leg outside its variable's
/// zone, a repeated height on one side, or a leg meeting another clause's segment.
void validate_formula(const RectilinearFormula& f);

enum class CrossingType { A, B };  // pendant x T-edge, pendant x pendant

struct EmbeddedCrossing {
  CrossingType type = CrossingType::A;
  CrossingPoint point;
  PlanePoint at;
};

/// Variable cycles, clause triangles with their pendants, a drawing and every crossing.
struct EmbeddedGraph {
  Graph graph;
  std::vector<PlanePoint> position;
  std::vector<EmbeddedCrossing> crossings;
  std::vector<std::array<Vertex, 3>> triangle;  // v_j^1, v_j^2, v_j^3 left to right
  std::vector<Vertex> pendant;
  std::size_t cycle_vertices = 0;

  std::size_t alpha() const { return pendant.size() + cycle_vertices / 2; }
  nlohmann::json to_json() const;
};

EmbeddedGraph build_double_prime(const RectilinearFormula& f);

struct ReductionResult {
  Graph graph;
  TransformCertificate certificate;  // vertex_map: G'' vertex -> vertices of the output
  std::vector<Vertex> z, z_bar;
  std::size_t expected_alpha = 0;
};

/// Gadgets at every crossing, optionally degree reduction with D = 6, then the
/// cycle z_1, z̄_1, ..., z_m, z̄_m with z_j joined to pendant j.
ReductionResult build_g_phi(const RectilinearFormula& f, bool apply_t3);

}  // namespace oneext
