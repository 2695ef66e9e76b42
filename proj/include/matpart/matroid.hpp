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

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matpart/element_set.hpp"
#include "matpart/errors.hpp"

namespace matpart {

/// Independence oracle over a ground set indexed [0, ground_size).
/// Oracles are immutable after construction; is_independent is pure and
/// safe to call from concurrent workers.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;
  virtual std::size_t ground_size() const = 0;
  virtual bool is_independent(const ElementSet& s) const = 0;
};

using MatroidPtr = std::shared_ptr<const MatroidOracle>;

/// Bounds-checked independence test.
inline bool is_independent(const MatroidOracle& m, const ElementSet& s) {
  std::size_t top = 0;
  bool any = false;
  s.for_each([&](std::size_t e) {
    top = e;
    any = true;
  });
  if (any && top >= m.ground_size())
    throw InvalidArgumentError("element index " + std::to_string(top) +
                               " out of range for ground size " +
                               std::to_string(m.ground_size()));
  return m.is_independent(s);
}

/// Size of a maximal independent subset of s, by greedy insertion in
/// ascending element order.
inline std::size_t rank_of(const MatroidOracle& m, const ElementSet& s) {
  ElementSet acc;
  std::size_t r = 0;
  s.for_each([&](std::size_t e) {
    if (e >= m.ground_size())
      throw InvalidArgumentError("element index out of range in rank_of");
    acc.insert(e);
    if (m.is_independent(acc)) {
      ++r;
    } else {
      acc.erase(e);
    }
  });
  return r;
}

/// Greedy maximal independent subset of s (ascending element order).
inline ElementSet greedy_basis_of(const MatroidOracle& m, const ElementSet& s) {
  ElementSet acc;
  s.for_each([&](std::size_t e) {
    acc.insert(e);
    if (!m.is_independent(acc)) acc.erase(e);
  });
  return acc;
}

// ---------------------------------------------------------------------------
// Concrete families

class FreeMatroid final : public MatroidOracle {
 public:
  explicit FreeMatroid(std::size_t n) : n_(n) {}
  std::size_t ground_size() const override { return n_; }
  bool is_independent(const ElementSet&) const override { return true; }

 private:
  std::size_t n_;
};

class UniformMatroid final : public MatroidOracle {
 public:
  UniformMatroid(std::size_t n, std::size_t rank) : n_(n), rank_(rank) {}
  std::size_t ground_size() const override { return n_; }
  bool is_independent(const ElementSet& s) const override { return s.size() <= rank_; }

 private:
  std::size_t n_;
  std::size_t rank_;
};

/// Per-class cardinality caps. Classes must partition [0, n).
class PartitionMatroid final : public MatroidOracle {
 public:
  PartitionMatroid(std::vector<std::vector<std::size_t>> classes,
                   std::vector<std::size_t> capacities)
      : classes_(std::move(classes)), capacities_(std::move(capacities)) {
    if (classes_.size() != capacities_.size())
      throw InvalidArgumentError("partition matroid: classes/capacities size mismatch");
    std::size_t n = 0;
    for (const auto& c : classes_) n += c.size();
    class_of_.assign(n, classes_.size());
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      for (std::size_t e : classes_[i]) {
        if (e >= n || class_of_[e] != classes_.size())
          throw InvalidArgumentError("partition matroid: classes must partition the ground set");
        class_of_[e] = i;
      }
    }
  }

  std::size_t ground_size() const override { return class_of_.size(); }

  bool is_independent(const ElementSet& s) const override {
    std::vector<std::size_t> used(classes_.size(), 0);
    bool ok = true;
    s.for_each([&](std::size_t e) {
      if (!ok) return;
      const std::size_t c = class_of_[e];
      if (++used[c] > capacities_[c]) ok = false;
    });
    return ok;
  }

  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  const std::vector<std::size_t>& capacities() const { return capacities_; }

 private:
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> capacities_;
  std::vector<std::size_t> class_of_;
};

/// Forest matroid of a multigraph; element i is edge i. Self-loops are
/// matroid loops.
class GraphicMatroid final : public MatroidOracle {
 public:
  GraphicMatroid(std::size_t vertex_count,
                 std::vector<std::pair<std::size_t, std::size_t>> edges)
      : vertices_(vertex_count), edges_(std::move(edges)) {
    for (const auto& [u, v] : edges_) {
      if (u >= vertices_ || v >= vertices_)
        throw InvalidArgumentError("graphic matroid: edge endpoint out of range");
    }
  }

  std::size_t ground_size() const override { return edges_.size(); }

  bool is_independent(const ElementSet& s) const override {
    std::vector<std::size_t> parent(vertices_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    bool acyclic = true;
    s.for_each([&](std::size_t e) {
      if (!acyclic) return;
      const auto [u, v] = edges_[e];
      const std::size_t ru = find(u), rv = find(v);
      if (ru == rv) {
        acyclic = false;
      } else {
        parent[ru] = rv;
      }
    });
    return acyclic;
  }

 private:
  std::size_t vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// ---------------------------------------------------------------------------
// Derived constructions

class TruncatedMatroid final : public MatroidOracle {
 public:
  TruncatedMatroid(std::size_t limit, MatroidPtr inner)
      : limit_(limit), inner_(std::move(inner)) {}
  std::size_t ground_size() const override { return inner_->ground_size(); }
  bool is_independent(const ElementSet& s) const override {
    return s.size() <= limit_ && inner_->is_independent(s);
  }

 private:
  std::size_t limit_;
  MatroidPtr inner_;
};

/// Ground-set-preserving restriction: elements outside `allowed` become
/// loops, all other independence is inherited. Instance-level indices
/// therefore never shift under weight-threshold restrictions.
class LoopifiedMatroid final : public MatroidOracle {
 public:
  LoopifiedMatroid(ElementSet allowed, MatroidPtr inner)
      : allowed_(std::move(allowed)), inner_(std::move(inner)) {}
  std::size_t ground_size() const override { return inner_->ground_size(); }
  bool is_independent(const ElementSet& s) const override {
    return s.subset_of(allowed_) && inner_->is_independent(s);
  }

 private:
  ElementSet allowed_;
  MatroidPtr inner_;
};

/// Deletion: ground set E \ removed, re-indexed densely. Coincides with
/// the restriction to the complement by heredity.
class DeletedMatroid final : public MatroidOracle {
 public:
  DeletedMatroid(MatroidPtr inner, const ElementSet& removed) : inner_(std::move(inner)) {
    for (std::size_t e = 0; e < inner_->ground_size(); ++e)
      if (!removed.contains(e)) map_.to_old.push_back(e);
  }
  std::size_t ground_size() const override { return map_.to_old.size(); }
  bool is_independent(const ElementSet& s) const override {
    return inner_->is_independent(map_.to_old_set(s));
  }
  const IndexMap& index_map() const { return map_; }

 private:
  MatroidPtr inner_;
  IndexMap map_;
};

/// Contraction by A: ground set E \ A re-indexed, X independent iff
/// rank(X ∪ A) − rank(A) = |X|. Rank is evaluated greedily with the A
/// elements offered first, so each query costs O(n) oracle calls.
class ContractedMatroid final : public MatroidOracle {
 public:
  ContractedMatroid(MatroidPtr inner, ElementSet contracted)
      : inner_(std::move(inner)), contracted_(std::move(contracted)) {
    for (std::size_t e = 0; e < inner_->ground_size(); ++e)
      if (!contracted_.contains(e)) map_.to_old.push_back(e);
    rank_a_ = rank_of(*inner_, contracted_);
  }

  std::size_t ground_size() const override { return map_.to_old.size(); }

  bool is_independent(const ElementSet& s) const override {
    ElementSet acc;
    std::size_t rank = 0;
    contracted_.for_each([&](std::size_t e) {
      acc.insert(e);
      if (inner_->is_independent(acc)) {
        ++rank;
      } else {
        acc.erase(e);
      }
    });
    s.for_each([&](std::size_t e) {
      const std::size_t old = map_.to_old.at(e);
      acc.insert(old);
      if (inner_->is_independent(acc)) {
        ++rank;
      } else {
        acc.erase(old);
      }
    });
    return rank - rank_a_ == s.size();
  }

  const IndexMap& index_map() const { return map_; }

 private:
  MatroidPtr inner_;
  ElementSet contracted_;
  IndexMap map_;
  std::size_t rank_a_ = 0;
};

/// Ground-set-preserving contraction used inside solvers: same ground set
/// as the inner matroid, contracted elements are loops, and X is
/// independent iff X ∪ A extends a basis of A.
class InPlaceContractedMatroid final : public MatroidOracle {
 public:
  InPlaceContractedMatroid(MatroidPtr inner, ElementSet contracted)
      : inner_(std::move(inner)), contracted_(std::move(contracted)) {}

  std::size_t ground_size() const override { return inner_->ground_size(); }

  bool is_independent(const ElementSet& s) const override {
    if (s.intersects(contracted_)) return false;
    ElementSet acc = greedy_basis_of(*inner_, contracted_);
    std::size_t extra = 0;
    s.for_each([&](std::size_t e) {
      acc.insert(e);
      if (inner_->is_independent(acc)) {
        ++extra;
      } else {
        acc.erase(e);
      }
    });
    return extra == s.size();
  }

 private:
  MatroidPtr inner_;
  ElementSet contracted_;
};

/// Direct sum over disjoint contiguous index ranges.
class DirectSumMatroid final : public MatroidOracle {
 public:
  explicit DirectSumMatroid(std::vector<MatroidPtr> parts) : parts_(std::move(parts)) {
    offsets_.push_back(0);
    for (const auto& p : parts_) offsets_.push_back(offsets_.back() + p->ground_size());
  }

  std::size_t ground_size() const override { return offsets_.back(); }

  bool is_independent(const ElementSet& s) const override {
    std::vector<ElementSet> slices(parts_.size());
    bool ok = true;
    s.for_each([&](std::size_t e) {
      const std::size_t i = slice_of(e);
      slices[i].insert(e - offsets_[i]);
    });
    for (std::size_t i = 0; i < parts_.size() && ok; ++i) {
      if (!slices[i].empty()) ok = parts_[i]->is_independent(slices[i]);
    }
    return ok;
  }

 private:
  std::size_t slice_of(std::size_t e) const {
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), e);
    return static_cast<std::size_t>(it - offsets_.begin()) - 1;
  }

  std::vector<MatroidPtr> parts_;
  std::vector<std::size_t> offsets_;
};

/// Memoizing wrapper, keyed by the element set. Enumeration-heavy callers
/// re-query identical sets; the cache is bounded and internally
/// synchronized so the wrapped oracle stays shareable across workers.
class CachedMatroid final : public MatroidOracle {
 public:
  explicit CachedMatroid(MatroidPtr inner, std::size_t max_entries = 1 << 20)
      : inner_(std::move(inner)), max_entries_(max_entries) {}

  std::size_t ground_size() const override { return inner_->ground_size(); }

  bool is_independent(const ElementSet& s) const override {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      const auto it = cache_.find(s);
      if (it != cache_.end()) return it->second;
    }
    const bool value = inner_->is_independent(s);
    std::lock_guard<std::mutex> lock(mutex_);
    if (cache_.size() >= max_entries_) cache_.clear();
    cache_.emplace(s, value);
    return value;
  }

 private:
  MatroidPtr inner_;
  std::size_t max_entries_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<ElementSet, bool, ElementSet::Hash> cache_;
};

// ---------------------------------------------------------------------------
// Construction helpers

inline MatroidPtr loopify(MatroidPtr m, ElementSet allowed) {
  if (!allowed.subset_of(ElementSet::full(m->ground_size())))
    throw InvalidArgumentError("loopify: allowed set exceeds the ground set");
  return std::make_shared<LoopifiedMatroid>(std::move(allowed), std::move(m));
}

inline MatroidPtr truncate(MatroidPtr m, std::size_t limit) {
  return std::make_shared<TruncatedMatroid>(limit, std::move(m));
}

struct ReindexedMatroid {
  MatroidPtr matroid;
  IndexMap map;
};

inline ReindexedMatroid delete_elements(MatroidPtr m, const ElementSet& removed) {
  auto d = std::make_shared<DeletedMatroid>(std::move(m), removed);
  IndexMap map = d->index_map();
  return {std::move(d), std::move(map)};
}

inline ReindexedMatroid contract(MatroidPtr m, const ElementSet& a) {
  auto c = std::make_shared<ContractedMatroid>(std::move(m), a);
  IndexMap map = c->index_map();
  return {std::move(c), std::move(map)};
}

inline MatroidPtr contract_in_place(MatroidPtr m, ElementSet a) {
  return std::make_shared<InPlaceContractedMatroid>(std::move(m), std::move(a));
}

inline MatroidPtr direct_sum(std::vector<MatroidPtr> parts) {
  if (parts.empty()) throw InvalidArgumentError("direct_sum: no parts");
  return std::make_shared<DirectSumMatroid>(std::move(parts));
}

inline MatroidPtr cached(MatroidPtr m, std::size_t max_entries = 1 << 20) {
  return std::make_shared<CachedMatroid>(std::move(m), max_entries);
}

}  // namespace matpart
