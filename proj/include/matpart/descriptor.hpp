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

#include <nlohmann/json.hpp>

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "matpart/element_set.hpp"
#include "matpart/errors.hpp"
#include "matpart/matroid.hpp"

namespace matpart {

/// Declarative matroid description. The ground size of nested descriptors
/// is inferred from context: an instance supplies the top-level size,
/// direct-sum parts get their declared sizes, truncation/loopify keep the
/// outer size, and a contraction's inner matroid is larger by |contract|.
struct MatroidDescriptor {
  enum class Kind {
    Free,
    Uniform,
    Partition,
    Graphic,
    Truncation,
    Loopify,
    Contraction,
    DirectSum,
  };

  Kind kind = Kind::Free;

  std::size_t rank = 0;                                    // uniform
  std::vector<std::vector<std::size_t>> classes;           // partition
  std::vector<std::size_t> capacities;                     // partition
  std::size_t vertices = 0;                                // graphic
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // graphic
  std::size_t limit = 0;                                   // truncation
  std::vector<std::size_t> allowed;                        // loopify
  std::vector<std::size_t> contract;                       // contraction
  std::shared_ptr<const MatroidDescriptor> inner;          // wrappers
  std::vector<std::shared_ptr<const MatroidDescriptor>> parts;  // direct sum
  std::vector<std::size_t> sizes;                               // direct sum

  static MatroidDescriptor free() { return {}; }

  static MatroidDescriptor uniform(std::size_t rank) {
    MatroidDescriptor d;
    d.kind = Kind::Uniform;
    d.rank = rank;
    return d;
  }

  static MatroidDescriptor partition(std::vector<std::vector<std::size_t>> classes,
                                     std::vector<std::size_t> capacities) {
    MatroidDescriptor d;
    d.kind = Kind::Partition;
    d.classes = std::move(classes);
    d.capacities = std::move(capacities);
    return d;
  }

  static MatroidDescriptor graphic(std::size_t vertices,
                                   std::vector<std::pair<std::size_t, std::size_t>> edges) {
    MatroidDescriptor d;
    d.kind = Kind::Graphic;
    d.vertices = vertices;
    d.edges = std::move(edges);
    return d;
  }

  static MatroidDescriptor truncation(std::size_t limit, MatroidDescriptor inner) {
    MatroidDescriptor d;
    d.kind = Kind::Truncation;
    d.limit = limit;
    d.inner = std::make_shared<MatroidDescriptor>(std::move(inner));
    return d;
  }

  static MatroidDescriptor loopify(std::vector<std::size_t> allowed, MatroidDescriptor inner) {
    MatroidDescriptor d;
    d.kind = Kind::Loopify;
    d.allowed = std::move(allowed);
    d.inner = std::make_shared<MatroidDescriptor>(std::move(inner));
    return d;
  }

  static MatroidDescriptor contraction(std::vector<std::size_t> contract,
                                       MatroidDescriptor inner) {
    MatroidDescriptor d;
    d.kind = Kind::Contraction;
    d.contract = std::move(contract);
    d.inner = std::make_shared<MatroidDescriptor>(std::move(inner));
    return d;
  }

  static MatroidDescriptor direct_sum(std::vector<MatroidDescriptor> parts,
                                      std::vector<std::size_t> sizes) {
    MatroidDescriptor d;
    d.kind = Kind::DirectSum;
    for (auto& p : parts) d.parts.push_back(std::make_shared<MatroidDescriptor>(std::move(p)));
    d.sizes = std::move(sizes);
    return d;
  }

  friend bool operator==(const MatroidDescriptor& a, const MatroidDescriptor& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Free:
        return true;
      case Kind::Uniform:
        return a.rank == b.rank;
      case Kind::Partition:
        return a.classes == b.classes && a.capacities == b.capacities;
      case Kind::Graphic:
        return a.vertices == b.vertices && a.edges == b.edges;
      case Kind::Truncation:
        return a.limit == b.limit && *a.inner == *b.inner;
      case Kind::Loopify:
        return a.allowed == b.allowed && *a.inner == *b.inner;
      case Kind::Contraction:
        return a.contract == b.contract && *a.inner == *b.inner;
      case Kind::DirectSum: {
        if (a.sizes != b.sizes || a.parts.size() != b.parts.size()) return false;
        for (std::size_t i = 0; i < a.parts.size(); ++i)
          if (!(*a.parts[i] == *b.parts[i])) return false;
        return true;
      }
    }
    return false;
  }
};

/// Instantiates the descriptor as an oracle with the given ground size,
/// validating structural invariants along the way.
inline MatroidPtr build_oracle(const MatroidDescriptor& d, std::size_t ground_size) {
  switch (d.kind) {
    case MatroidDescriptor::Kind::Free:
      return std::make_shared<FreeMatroid>(ground_size);
    case MatroidDescriptor::Kind::Uniform:
      return std::make_shared<UniformMatroid>(ground_size, d.rank);
    case MatroidDescriptor::Kind::Partition: {
      std::size_t covered = 0;
      for (const auto& c : d.classes) covered += c.size();
      if (covered != ground_size)
        throw InvalidArgumentError("partition matroid classes must cover the ground set");
      return std::make_shared<PartitionMatroid>(d.classes, d.capacities);
    }
    case MatroidDescriptor::Kind::Graphic:
      if (d.edges.size() != ground_size)
        throw InvalidArgumentError("graphic matroid edge count must equal the ground size");
      return std::make_shared<GraphicMatroid>(d.vertices, d.edges);
    case MatroidDescriptor::Kind::Truncation:
      return truncate(build_oracle(*d.inner, ground_size), d.limit);
    case MatroidDescriptor::Kind::Loopify: {
      ElementSet allowed = ElementSet::from_indices(d.allowed);
      return loopify(build_oracle(*d.inner, ground_size), std::move(allowed));
    }
    case MatroidDescriptor::Kind::Contraction: {
      const std::size_t inner_n = ground_size + d.contract.size();
      ElementSet a = ElementSet::from_indices(d.contract);
      if (a.size() != d.contract.size())
        throw InvalidArgumentError("contraction: duplicate contracted indices");
      for (std::size_t e : d.contract)
        if (e >= inner_n) throw InvalidArgumentError("contraction: index out of range");
      return contract(build_oracle(*d.inner, inner_n), a).matroid;
    }
    case MatroidDescriptor::Kind::DirectSum: {
      if (d.parts.size() != d.sizes.size())
        throw InvalidArgumentError("direct_sum: parts/sizes size mismatch");
      std::size_t total = 0;
      for (std::size_t s : d.sizes) total += s;
      if (total != ground_size)
        throw InvalidArgumentError("direct_sum: sizes must tile the ground set");
      std::vector<MatroidPtr> built;
      for (std::size_t i = 0; i < d.parts.size(); ++i)
        built.push_back(build_oracle(*d.parts[i], d.sizes[i]));
      return direct_sum(std::move(built));
    }
  }
  throw InvalidArgumentError("unknown matroid descriptor kind");
}

// ---------------------------------------------------------------------------
// JSON form

inline nlohmann::json descriptor_to_json(const MatroidDescriptor& d) {
  nlohmann::json j;
  switch (d.kind) {
    case MatroidDescriptor::Kind::Free:
      j["type"] = "free";
      break;
    case MatroidDescriptor::Kind::Uniform:
      j["type"] = "uniform";
      j["rank"] = d.rank;
      break;
    case MatroidDescriptor::Kind::Partition:
      j["type"] = "partition";
      j["classes"] = d.classes;
      j["capacities"] = d.capacities;
      break;
    case MatroidDescriptor::Kind::Graphic: {
      j["type"] = "graphic";
      j["vertices"] = d.vertices;
      nlohmann::json edges = nlohmann::json::array();
      for (const auto& [u, v] : d.edges) edges.push_back({u, v});
      j["edges"] = edges;
      break;
    }
    case MatroidDescriptor::Kind::Truncation:
      j["type"] = "truncation";
      j["limit"] = d.limit;
      j["inner"] = descriptor_to_json(*d.inner);
      break;
    case MatroidDescriptor::Kind::Loopify:
      j["type"] = "loopify";
      j["allowed"] = d.allowed;
      j["inner"] = descriptor_to_json(*d.inner);
      break;
    case MatroidDescriptor::Kind::Contraction:
      j["type"] = "contraction";
      j["contract"] = d.contract;
      j["inner"] = descriptor_to_json(*d.inner);
      break;
    case MatroidDescriptor::Kind::DirectSum: {
      j["type"] = "direct_sum";
      nlohmann::json parts = nlohmann::json::array();
      for (const auto& p : d.parts) parts.push_back(descriptor_to_json(*p));
      j["parts"] = parts;
      j["sizes"] = d.sizes;
      break;
    }
  }
  return j;
}

namespace detail {

inline std::vector<std::size_t> index_list_from_json(const nlohmann::json& j,
                                                     const std::string& pointer) {
  if (!j.is_array()) throw ParseError("expected an array of indices", pointer);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& v = j[i];
    if (!v.is_number_unsigned())
      throw ParseError("expected a nonnegative index", pointer + "/" + std::to_string(i));
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

}  // namespace detail

inline MatroidDescriptor descriptor_from_json(const nlohmann::json& j,
                                              const std::string& pointer = "") {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw ParseError("matroid descriptor must be an object with a \"type\"", pointer);
  const std::string type = j["type"].get<std::string>();
  auto require = [&](const char* field) -> const nlohmann::json& {
    if (!j.contains(field))
      throw ParseError("missing field \"" + std::string(field) + "\"", pointer);
    return j[field];
  };
  if (type == "free") return MatroidDescriptor::free();
  if (type == "uniform") {
    const auto& r = require("rank");
    if (!r.is_number_unsigned()) throw ParseError("rank must be a nonnegative integer", pointer + "/rank");
    return MatroidDescriptor::uniform(r.get<std::size_t>());
  }
  if (type == "partition") {
    const auto& cls = require("classes");
    if (!cls.is_array()) throw ParseError("classes must be an array", pointer + "/classes");
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < cls.size(); ++i)
      classes.push_back(detail::index_list_from_json(cls[i], pointer + "/classes/" + std::to_string(i)));
    auto capacities = detail::index_list_from_json(require("capacities"), pointer + "/capacities");
    return MatroidDescriptor::partition(std::move(classes), std::move(capacities));
  }
  if (type == "graphic") {
    const auto& v = require("vertices");
    if (!v.is_number_unsigned())
      throw ParseError("vertices must be a nonnegative integer", pointer + "/vertices");
    const auto& es = require("edges");
    if (!es.is_array()) throw ParseError("edges must be an array", pointer + "/edges");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string ep = pointer + "/edges/" + std::to_string(i);
      auto pair = detail::index_list_from_json(es[i], ep);
      if (pair.size() != 2) throw ParseError("edge must be a pair", ep);
      edges.emplace_back(pair[0], pair[1]);
    }
    return MatroidDescriptor::graphic(v.get<std::size_t>(), std::move(edges));
  }
  if (type == "truncation") {
    const auto& l = require("limit");
    if (!l.is_number_unsigned()) throw ParseError("limit must be a nonnegative integer", pointer + "/limit");
    return MatroidDescriptor::truncation(l.get<std::size_t>(),
                                         descriptor_from_json(require("inner"), pointer + "/inner"));
  }
  if (type == "loopify") {
    auto allowed = detail::index_list_from_json(require("allowed"), pointer + "/allowed");
    return MatroidDescriptor::loopify(std::move(allowed),
                                      descriptor_from_json(require("inner"), pointer + "/inner"));
  }
  if (type == "contraction") {
    auto contract = detail::index_list_from_json(require("contract"), pointer + "/contract");
    return MatroidDescriptor::contraction(std::move(contract),
                                          descriptor_from_json(require("inner"), pointer + "/inner"));
  }
  if (type == "direct_sum") {
    const auto& ps = require("parts");
    if (!ps.is_array()) throw ParseError("parts must be an array", pointer + "/parts");
    std::vector<MatroidDescriptor> parts;
    for (std::size_t i = 0; i < ps.size(); ++i)
      parts.push_back(descriptor_from_json(ps[i], pointer + "/parts/" + std::to_string(i)));
    auto sizes = detail::index_list_from_json(require("sizes"), pointer + "/sizes");
    return MatroidDescriptor::direct_sum(std::move(parts), std::move(sizes));
  }
  throw ParseError("unknown matroid type \"" + type + "\"", pointer + "/type");
}

}  // namespace matpart
