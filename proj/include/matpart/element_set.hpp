// Copyright 2026 The matpart Authors
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
#include <initializer_list>
#include <vector>

namespace matpart {

/// Set of element indices, bitset-backed. Storage is normalized (no
/// trailing zero words) so that equality and hashing are canonical.
class ElementSet {
 public:
  ElementSet() = default;

  ElementSet(std::initializer_list<std::size_t> items) {
    for (std::size_t e : items) insert(e);
  }

  static ElementSet full(std::size_t n) {
    ElementSet s;
    for (std::size_t e = 0; e < n; ++e) s.insert(e);
    return s;
  }

  static ElementSet from_indices(const std::vector<std::size_t>& items) {
    ElementSet s;
    for (std::size_t e : items) s.insert(e);
    return s;
  }

  bool contains(std::size_t e) const {
    const std::size_t w = e >> 6;
    if (w >= words_.size()) return false;
    return (words_[w] >> (e & 63)) & 1u;
  }

  void insert(std::size_t e) {
    const std::size_t w = e >> 6;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (!(words_[w] & bit)) {
      words_[w] |= bit;
      ++count_;
    }
  }

  void erase(std::size_t e) {
    const std::size_t w = e >> 6;
    if (w >= words_.size()) return;
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (words_[w] & bit) {
      words_[w] &= ~bit;
      --count_;
      shrink();
    }
  }

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  ElementSet with(std::size_t e) const {
    ElementSet s = *this;
    s.insert(e);
    return s;
  }
  ElementSet without(std::size_t e) const {
    ElementSet s = *this;
    s.erase(e);
    return s;
  }

  ElementSet united(const ElementSet& o) const {
    ElementSet s = *this;
    if (o.words_.size() > s.words_.size()) s.words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) s.words_[i] |= o.words_[i];
    s.recount();
    return s;
  }

  ElementSet intersected(const ElementSet& o) const {
    ElementSet s;
    const std::size_t m = std::min(words_.size(), o.words_.size());
    s.words_.resize(m, 0);
    for (std::size_t i = 0; i < m; ++i) s.words_[i] = words_[i] & o.words_[i];
    s.shrink();
    s.recount();
    return s;
  }

  ElementSet minus(const ElementSet& o) const {
    ElementSet s = *this;
    const std::size_t m = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < m; ++i) s.words_[i] &= ~o.words_[i];
    s.shrink();
    s.recount();
    return s;
  }

  bool subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
      if (words_[i] & ~other) return false;
    }
    return true;
  }

  bool intersects(const ElementSet& o) const {
    const std::size_t m = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < m; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count_);
    for_each([&](std::size_t e) { out.push_back(e); });
    return out;
  }

  /// Visits members in ascending order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int b = std::countr_zero(w);
        fn(i * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.words_ == b.words_;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ull;
    }
    return h;
  }

  struct Hash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
  };

 private:
  void shrink() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }
  void recount() {
    count_ = 0;
    for (std::uint64_t w : words_) count_ += static_cast<std::size_t>(std::popcount(w));
  }

  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

/// Bijection between the re-indexed ground set of a deletion/contraction
/// and the original indices. `to_old[i]` is the original index of new
/// element i.
struct IndexMap {
  std::vector<std::size_t> to_old;

  std::size_t old_of(std::size_t new_index) const { return to_old.at(new_index); }

  ElementSet to_old_set(const ElementSet& s) const {
    ElementSet out;
    s.for_each([&](std::size_t e) { out.insert(to_old.at(e)); });
    return out;
  }
};

}  // namespace matpart
