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
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oneext/graph.hpp"

namespace oneext {

using BigInt = boost::multiprecision::cpp_int;

struct SolverOptions {
  /// Cap on search nodes per call; exceeding it throws BudgetExceeded.
  std::size_t node_budget = 200'000'000;
};

struct MisResult {
  std::size_t alpha = 0;
  VertexSet witness;
  std::size_t nodes = 0;
};

/// Exact maximum independent set. Deterministic: same graph, same witness.
MisResult max_independent_set(const Graph& g, const SolverOptions& opts = {});

/// Exact maximum independent set of G[candidates]; witness is over V(G).
MisResult max_independent_set_within(const Graph& g, const VertexSet& candidates, const SolverOptions& opts = {});

/// Some independent set of G[candidates] with at least `target` vertices, or
/// nullopt when none exists. Stops at the first one found.
std::optional<VertexSet> find_independent_set_of_size(const Graph& g, const VertexSet& candidates,
                                                      std::size_t target, const SolverOptions& opts = {});

struct ContainingResult {
  bool found = false;
  VertexSet witness;  // meaningful when found; |witness| >= k and v in witness
};

/// Whether some independent set of size k contains v, searched in G[V \ N(v)].
ContainingResult has_k_is_containing(const Graph& g, Vertex v, std::size_t k, const SolverOptions& opts = {});

/// Coefficients N_0..N_alpha; N_s counts independent sets of size s, the empty set included.
struct IndependencePolynomial {
  std::vector<BigInt> coefficients;

  std::size_t degree() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  BigInt coefficient(std::size_t s) const { return s < coefficients.size() ? coefficients[s] : BigInt(0); }
  BigInt total() const;

  friend IndependencePolynomial operator*(const IndependencePolynomial& a, const IndependencePolynomial& b);
  friend bool operator==(const IndependencePolynomial&, const IndependencePolynomial&) = default;
};

IndependencePolynomial independence_polynomial(const Graph& g, const SolverOptions& opts = {});
IndependencePolynomial independence_polynomial_within(const Graph& g, const VertexSet& candidates,
                                                      const SolverOptions& opts = {});

/// I(G) together with I(G - N[v]) for every v, sharing one memo table.
struct NeighborhoodPolynomials {
  IndependencePolynomial whole;
  std::vector<IndependencePolynomial> without_closed_neighborhood;
};

NeighborhoodPolynomials neighborhood_polynomials(const Graph& g, const SolverOptions& opts = {});

struct MisCounts {
  std::size_t alpha = 0;
  BigInt total;                          // number of maximum independent sets
  std::optional<BigInt> containing_v;    // those containing the queried vertex
};

MisCounts mis_counts(const Graph& g, std::optional<Vertex> v = std::nullopt, const SolverOptions& opts = {});

/// Number of maximum independent sets containing each vertex, plus the total.
struct AllMisCounts {
  std::size_t alpha = 0;
  BigInt total;
  std::vector<BigInt> containing;
};

AllMisCounts mis_counts_all(const Graph& g, const SolverOptions& opts = {});

}  // namespace oneext
