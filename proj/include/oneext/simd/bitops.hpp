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

// Word-array kernels behind VertexSet. Each kernel has a portable scalar
// implementation and, on x86-64, an AVX2 one; the variant is picked once at
// startup from CPUID and can be pinned with ONEEXT_SIMD=scalar|avx2.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace oneext::simd {

using Word = std::uint64_t;

struct Kernels {
  std::string_view name;
  std::size_t (*popcount)(const Word* a, std::size_t n);
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
  void (*and_assign)(Word* dst, const Word* src, std::size_t n);
  void (*andnot_assign)(Word* dst, const Word* src, std::size_t n);
  void (*or_assign)(Word* dst, const Word* src, std::size_t n);
  bool (*intersects)(const Word* a, const Word* b, std::size_t n);
  bool (*is_subset)(const Word* a, const Word* b, std::size_t n);  // a ⊆ b
};

namespace scalar {
const Kernels& kernels() noexcept;
}

namespace avx2 {
/// Null when the build has no AVX2 translation unit.
const Kernels* kernels() noexcept;
}

/// True when AVX2 code was compiled in and the running CPU supports it.
bool avx2_available() noexcept;

/// The dispatched kernel table.
const Kernels& active() noexcept;

/// Force a variant ("scalar" or "avx2"); returns false if unavailable.
/// Not thread-safe with concurrent kernel use; meant for tests and startup.
bool select(std::string_view name) noexcept;

inline std::size_t popcount(std::span<const Word> a) noexcept {
  return active().popcount(a.data(), a.size());
}
inline std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) noexcept {
  return active().and_popcount(a.data(), b.data(), a.size());
}
inline bool intersects(std::span<const Word> a, std::span<const Word> b) noexcept {
  return active().intersects(a.data(), b.data(), a.size());
}
inline bool is_subset(std::span<const Word> a, std::span<const Word> b) noexcept {
  return active().is_subset(a.data(), b.data(), a.size());
}
inline void and_assign(std::span<Word> dst, std::span<const Word> src) noexcept {
  active().and_assign(dst.data(), src.data(), dst.size());
}
inline void andnot_assign(std::span<Word> dst, std::span<const Word> src) noexcept {
  active().andnot_assign(dst.data(), src.data(), dst.size());
}
inline void or_assign(std::span<Word> dst, std::span<const Word> src) noexcept {
  active().or_assign(dst.data(), src.data(), dst.size());
}

}  // namespace oneext::simd
