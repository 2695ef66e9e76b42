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
#include <cstdint>
#include <string>
#include <vector>

#include "matpart/element_set.hpp"
#include "matpart/errors.hpp"
#include "matpart/matroid.hpp"

namespace matpart {

struct AxiomViolation {
  std::string axiom;  // "I1", "I2", or "I3"
  ElementSet x;
  ElementSet y;  // unused for I1
  std::string message;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool passed() const { return violations.empty(); }
};

namespace detail {

inline ElementSet set_from_mask(std::uint32_t mask) {
  ElementSet s;
  for (std::size_t e = 0; mask; ++e, mask >>= 1)
    if (mask & 1) s.insert(e);
  return s;
}

}  // namespace detail

/// Exhaustive check of the independence axioms over all 2^n subsets:
/// (I1) the empty set is independent, (I2) independence is hereditary,
/// (I3) a smaller independent set extends into any larger one. Heredity is
/// checked one element at a time, which implies the full axiom, and the
/// exchange axiom is checked between consecutive cardinalities, which
/// implies it for all pairs. Reports stop at the first violation per axiom.
inline AxiomReport verify_axioms(const MatroidOracle& m) {
  const std::size_t n = m.ground_size();
  if (n > 16)
    throw UnsupportedError("axiom verification enumerates 2^n subsets; ground size " +
                           std::to_string(n) + " exceeds 16");
  const std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<bool> independent(limit);
  for (std::uint32_t mask = 0; mask < limit; ++mask)
    independent[mask] = m.is_independent(detail::set_from_mask(mask));

  AxiomReport report;
  if (!independent[0]) {
    report.violations.push_back({"I1", ElementSet{}, ElementSet{}, "the empty set is dependent"});
  }

  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (!independent[mask]) continue;
    std::uint32_t rest = mask;
    while (rest) {
      const std::uint32_t bit = rest & (~rest + 1);
      rest &= rest - 1;
      if (!independent[mask & ~bit]) {
        report.violations.push_back({"I2", detail::set_from_mask(mask & ~bit),
                                     detail::set_from_mask(mask),
                                     "a subset of an independent set is dependent"});
        rest = 0;
        mask = limit - 1;  // stop scanning I2
      }
    }
  }

  // Exchange between sizes s and s+1.
  std::vector<std::vector<std::uint32_t>> by_size(n + 1);
  for (std::uint32_t mask = 0; mask < limit; ++mask)
    if (independent[mask]) by_size[std::popcount(mask)].push_back(mask);
  for (std::size_t s = 0; s + 1 <= n && report.violations.empty(); ++s) {
    for (const std::uint32_t x : by_size[s]) {
      for (const std::uint32_t y : by_size[s + 1]) {
        std::uint32_t candidates = y & ~x;
        bool extended = false;
        while (candidates) {
          const std::uint32_t bit = candidates & (~candidates + 1);
          candidates &= candidates - 1;
          if (independent[x | bit]) {
            extended = true;
            break;
          }
        }
        if (!extended) {
          report.violations.push_back({"I3", detail::set_from_mask(x), detail::set_from_mask(y),
                                       "no element of Y \\ X extends X"});
          break;
        }
      }
      if (!report.violations.empty()) break;
    }
  }
  return report;
}

}  // namespace matpart
