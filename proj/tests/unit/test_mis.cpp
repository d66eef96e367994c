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

#include <random>

#include "brute_force.hpp"
#include "doctest.h"
#include "oneext/errors.hpp"
#include "oneext/mis.hpp"

using namespace oneext;
using namespace oneext::testing;

namespace {

std::vector<std::uint64_t> as_u64(const IndependencePolynomial& p) {
  std::vector<std::uint64_t> out;
  for (const auto& c : p.coefficients) out.push_back(c.convert_to<std::uint64_t>());
  return out;
}

}  // namespace

TEST_CASE("max_independent_set examples") {
  auto r = max_independent_set(path(5));
  CHECK(r.alpha == 3);
  CHECK(r.witness.to_vector() == std::vector<Vertex>{0, 2, 4});
  CHECK(max_independent_set(cycle(9)).alpha == 4);
  CHECK(max_independent_set(edgeless(0)).alpha == 0);
  CHECK(max_independent_set(petersen()).alpha == 4);
  CHECK(max_independent_set(complete(6)).alpha == 1);
}

TEST_CASE("max_independent_set agrees with enumeration") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = rng() % 13;
    auto g = random_graph(rng, n, std::uniform_real_distribution<>(0.05, 0.9)(rng));
    auto r = max_independent_set(g);
    CHECK(r.alpha == bf_alpha(g));
    CHECK(r.witness.size() == r.alpha);
    CHECK(is_independent(g, r.witness));
    CHECK(max_independent_set(g).witness == r.witness);
  }
}

TEST_CASE("larger instances against enumeration") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    auto g = random_graph(rng, 40, 0.15);
    CHECK(max_independent_set(g).alpha == bf_alpha(g));
  }
}

TEST_CASE("has_k_is_containing") {
  CHECK_FALSE(has_k_is_containing(path(5), 1, 3).found);
  auto r = has_k_is_containing(path(4), 1, 2);
  CHECK(r.found);
  CHECK(r.witness.to_vector() == std::vector<Vertex>{1, 3});
  CHECK(has_k_is_containing(edgeless(1), 0, 1).found);
  CHECK(has_k_is_containing(complete(3), 2, 0).found);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 1 + rng() % 12;
    auto g = random_graph(rng, n, 0.35);
    for (std::size_t k = 0; k <= 5; ++k) {
      const Mask cov = bf_covered(g, k);
      for (std::size_t v = 0; v < n; ++v) {
        auto q = has_k_is_containing(g, static_cast<Vertex>(v), k);
        CHECK(q.found == bool((cov >> v) & 1u));
        if (q.found) {
          CHECK(q.witness.contains(static_cast<Vertex>(v)));
          CHECK(q.witness.size() >= k);
          CHECK(is_independent(g, q.witness));
        }
      }
    }
  }
}

TEST_CASE("budget is enforced") {
  std::mt19937_64 rng(14);
  auto g = random_graph(rng, 60, 0.1);
  SolverOptions tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_AS(max_independent_set(g, tiny), BudgetExceeded);
  CHECK_THROWS_AS(independence_polynomial(g, tiny), BudgetExceeded);
}

TEST_CASE("independence_polynomial examples") {
  CHECK(as_u64(independence_polynomial(complete(2))) == std::vector<std::uint64_t>{1, 2});
  CHECK(as_u64(independence_polynomial(path(3))) == std::vector<std::uint64_t>{1, 3, 1});
  CHECK(as_u64(independence_polynomial(edgeless(3))) == std::vector<std::uint64_t>{1, 3, 3, 1});
  CHECK(as_u64(independence_polynomial(edgeless(0))) == std::vector<std::uint64_t>{1});
}

TEST_CASE("independence_polynomial agrees with enumeration") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 200; ++i) {
    auto g = random_graph(rng, rng() % 13, 0.3);
    auto p = independence_polynomial(g);
    CHECK(as_u64(p) == bf_size_counts(g));
    CHECK(p.coefficient(0) == 1);
    CHECK(p.degree() == bf_alpha(g));
  }
  auto big = edgeless(70);
  CHECK(independence_polynomial(big).total() == BigInt(1) << 70);
}

TEST_CASE("independence_polynomial of a disjoint union is the product") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 40; ++i) {
    auto a = random_graph(rng, rng() % 9, 0.4);
    auto b = random_graph(rng, rng() % 9, 0.4);
    GraphBuilder u;
    u.append(a);
    u.append(b);
    auto g = std::move(u).build();
    CHECK(independence_polynomial(g) == independence_polynomial(a) * independence_polynomial(b));
  }
}

TEST_CASE("mis_counts") {
  auto p5 = mis_counts(path(5), 1);
  CHECK(p5.total == 1);
  CHECK(*p5.containing_v == 0);
  CHECK(*mis_counts(path(5), 0).containing_v == 1);
  auto p4 = mis_counts(path(4), 0);
  CHECK(p4.total == 3);
  CHECK(*p4.containing_v == 2);
  CHECK(*mis_counts(path(4), 1).containing_v == 1);
  for (Vertex v = 0; v < 3; ++v) {
    auto k3 = mis_counts(complete(3), v);
    CHECK(k3.total == 3);
    CHECK(*k3.containing_v == 1);
  }
  CHECK_FALSE(mis_counts(path(4)).containing_v);

  std::mt19937_64 rng(17);
  for (int i = 0; i < 80; ++i) {
    auto g = random_graph(rng, 1 + rng() % 12, 0.35);
    auto all = mis_counts_all(g);
    auto bf = bf_mis_counts(g);
    CHECK(all.total == bf.total);
    BigInt sum = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      CHECK(all.containing[v] == bf.containing[v]);
      sum += all.containing[v];
    }
    if (all.alpha > 0) CHECK(sum == all.total * all.alpha);
  }
}
