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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "oneext/simd/bitops.hpp"

#if !defined(ONEEXT_HAVE_AVX2)
namespace oneext::simd::avx2 {
const Kernels* kernels() noexcept { return nullptr; }
}  // namespace oneext::simd::avx2
#endif

namespace oneext::simd {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(ONEEXT_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const Kernels* initial() noexcept {
  if (const char* env = std::getenv("ONEEXT_SIMD")) {
    if (std::string_view(env) == "scalar") return &scalar::kernels();
  }
  if (cpu_has_avx2()) return avx2::kernels();
  return &scalar::kernels();
}

std::atomic<const Kernels*>& slot() noexcept {
  static std::atomic<const Kernels*> table{initial()};
  return table;
}

}  // namespace

bool avx2_available() noexcept { return avx2::kernels() != nullptr && cpu_has_avx2(); }

const Kernels& active() noexcept { return *slot().load(std::memory_order_relaxed); }

bool select(std::string_view name) noexcept {
  if (name == "scalar") {
    slot().store(&scalar::kernels());
    return true;
  }
  if (name == "avx2" && avx2_available()) {
    slot().store(avx2::kernels());
    return true;
  }
  return false;
}

}  // namespace oneext::simd
