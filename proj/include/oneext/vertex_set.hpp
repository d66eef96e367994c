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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "oneext/simd/bitops.hpp"

namespace oneext {

using Vertex = int;

/// Subset of [0, universe) stored as a packed bitset. Iteration is in ascending order.
class VertexSet {
 public:
  using Word = simd::Word;
  static constexpr std::size_t kBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool contains(Vertex v) const noexcept {
    auto i = static_cast<std::size_t>(v);
    return i < universe_ && ((words_[i / kBits] >> (i % kBits)) & 1u);
  }
  void insert(Vertex v) noexcept {
    auto i = static_cast<std::size_t>(v);
    words_[i / kBits] |= Word{1} << (i % kBits);
  }
  void erase(Vertex v) noexcept {
    auto i = static_cast<std::size_t>(v);
    words_[i / kBits] &= ~(Word{1} << (i % kBits));
  }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t size() const noexcept { return simd::popcount(words_); }
  bool empty() const noexcept {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  std::optional<Vertex> first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<Vertex>(i * kBits + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return std::nullopt;
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    simd::and_assign(words_, o.words_);
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    simd::or_assign(words_, o.words_);
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept {
    simd::andnot_assign(words_, o.words_);
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

  bool intersects(const VertexSet& o) const noexcept { return simd::intersects(words_, o.words_); }
  bool is_subset_of(const VertexSet& o) const noexcept { return simd::is_subset(words_, o.words_); }
  std::size_t intersection_size(const VertexSet& o) const noexcept { return simd::and_popcount(words_, o.words_); }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const VertexSet* set, std::size_t word) : set_(set), word_(word) { settle(); }

    Vertex operator*() const noexcept {
      return static_cast<Vertex>(word_ * kBits + static_cast<std::size_t>(std::countr_zero(bits_)));
    }
    iterator& operator++() noexcept {
      bits_ &= bits_ - 1;
      if (!bits_) {
        ++word_;
        settle();
      }
      return *this;
    }
    iterator operator++(int) noexcept {
      auto t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.word_ == b.word_ && a.bits_ == b.bits_;
    }

   private:
    void settle() noexcept {
      const auto n = set_->words_.size();
      while (word_ < n && set_->words_[word_] == 0) ++word_;
      bits_ = word_ < n ? set_->words_[word_] : 0;
    }
    const VertexSet* set_ = nullptr;
    std::size_t word_ = 0;
    Word bits_ = 0;
  };

  iterator begin() const noexcept { return iterator(this, 0); }
  iterator end() const noexcept { return iterator(this, words_.size()); }

  std::size_t hash() const noexcept {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
    for (Word w : words_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return h;
  }

 private:
  void trim() noexcept {
    if (universe_ % kBits && !words_.empty()) words_.back() &= (Word{1} << (universe_ % kBits)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace oneext
