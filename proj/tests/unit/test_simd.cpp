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
#include <vector>

#include "doctest.h"
#include "oneext/simd/bitops.hpp"
#include "oneext/vertex_set.hpp"

using namespace oneext;
using simd::Word;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<Word> w(n);
  std::bernoulli_distribution coin(density);
  for (auto& x : w)
    for (int b = 0; b < 64; ++b)
      if (coin(rng)) x |= Word{1} << b;
  return w;
}

void compare(const simd::Kernels& a, const simd::Kernels& b) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 13u, 64u, 67u}) {
    for (double density : {0.0, 0.05, 0.5, 1.0}) {
      auto x = random_words(rng, n, density);
      auto y = random_words(rng, n, density);
      CHECK(a.popcount(x.data(), n) == b.popcount(x.data(), n));
      CHECK(a.and_popcount(x.data(), y.data(), n) == b.and_popcount(x.data(), y.data(), n));
      CHECK(a.intersects(x.data(), y.data(), n) == b.intersects(x.data(), y.data(), n));
      CHECK(a.is_subset(x.data(), y.data(), n) == b.is_subset(x.data(), y.data(), n));
      auto sub = x;
      for (std::size_t i = 0; i < n; ++i) sub[i] &= y[i];
      CHECK(a.is_subset(sub.data(), y.data(), n));
      CHECK(b.is_subset(sub.data(), y.data(), n));
      for (auto op : {&simd::Kernels::and_assign, &simd::Kernels::andnot_assign, &simd::Kernels::or_assign}) {
        auto p = x, q = x;
        (a.*op)(p.data(), y.data(), n);
        (b.*op)(q.data(), y.data(), n);
        CHECK(p == q);
      }
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels match the obvious definitions") {
  const auto& k = simd::scalar::kernels();
  std::vector<Word> a{0b1011, ~Word{0}}, b{0b0010, 0};
  CHECK(k.popcount(a.data(), 2) == 67);
  CHECK(k.and_popcount(a.data(), b.data(), 2) == 1);
  CHECK(k.intersects(a.data(), b.data(), 2));
  CHECK(k.is_subset(b.data(), a.data(), 2));
  CHECK_FALSE(k.is_subset(a.data(), b.data(), 2));
}

TEST_CASE("avx2 kernels agree with scalar kernels") {
  if (!simd::avx2_available()) {
    MESSAGE("AVX2 unavailable on this machine; equivalence not exercised");
    return;
  }
  compare(simd::scalar::kernels(), *simd::avx2::kernels());
}

TEST_CASE("dispatch can be pinned") {
  const auto before = simd::active().name;
  CHECK(simd::select("scalar"));
  CHECK(simd::active().name == "scalar");
  CHECK_FALSE(simd::select("sse9"));
  CHECK(simd::select(before));
}

TEST_CASE("VertexSet behaves the same under both kernel tables") {
  std::vector<std::string_view> names{"scalar"};
  if (simd::avx2_available()) names.push_back("avx2");
  const auto before = simd::active().name;
  std::vector<std::vector<Vertex>> results;
  for (auto name : names) {
    REQUIRE(simd::select(name));
    std::mt19937_64 rng(11);
    std::vector<Vertex> trace;
    for (int round = 0; round < 50; ++round) {
      const std::size_t n = 1 + rng() % 300;
      VertexSet a(n), b(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (rng() % 3 == 0) a.insert(static_cast<Vertex>(i));
        if (rng() % 2 == 0) b.insert(static_cast<Vertex>(i));
      }
      trace.push_back(static_cast<Vertex>(a.size()));
      trace.push_back(static_cast<Vertex>(a.intersection_size(b)));
      trace.push_back(a.intersects(b));
      trace.push_back((a & b).is_subset_of(b));
      for (Vertex v : a - b) trace.push_back(v);
      for (Vertex v : a | b) trace.push_back(v);
    }
    results.push_back(std::move(trace));
  }
  simd::select(before);
  for (const auto& r : results) CHECK(r == results.front());
}

TEST_CASE("VertexSet basics") {
  VertexSet s(130, {0, 64, 129});
  CHECK(s.size() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(63));
  CHECK(s.to_vector() == std::vector<Vertex>{0, 64, 129});
  CHECK(*s.first() == 0);
  s.erase(0);
  CHECK(*s.first() == 64);
  CHECK(VertexSet::full(130).size() == 130);
  CHECK(VertexSet(5).empty());
  CHECK_FALSE(VertexSet(5).first());
}
