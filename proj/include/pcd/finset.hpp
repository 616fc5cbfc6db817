// Copyright 2026 The pcd Authors
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

// Canonical finite sets {0, ..., n-1}, total functions and relations between
// them, with the strict symmetric monoidal structures used throughout:
// disjoint union (left block first) for functions, cartesian product
// (row-major pairing) for relations.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "pcd/error.hpp"

namespace pcd {

using Index = std::size_t;

struct FinSet {
  Index size = 0;

  constexpr FinSet() = default;
  constexpr explicit FinSet(Index n) : size(n) {}

  friend constexpr auto operator<=>(const FinSet&, const FinSet&) = default;
};

/// X + Y under disjoint union.
constexpr FinSet operator+(FinSet x, FinSet y) { return FinSet{x.size + y.size}; }
/// X x Y under cartesian product.
constexpr FinSet operator*(FinSet x, FinSet y) { return FinSet{x.size * y.size}; }

/// A total function dom -> cod, stored as its value sequence.
class FinFun {
 public:
  FinFun() = default;
  /// Throws RejectedInput if map.size() != dom.size or an entry is >= cod.size.
  FinFun(FinSet dom, FinSet cod, std::vector<Index> map);

  FinSet dom() const noexcept { return dom_; }
  FinSet cod() const noexcept { return cod_; }
  std::span<const Index> map() const noexcept { return map_; }
  Index operator()(Index x) const { return map_[x]; }

  friend bool operator==(const FinFun&, const FinFun&) = default;
  friend auto operator<=>(const FinFun& a, const FinFun& b) {
    if (auto c = a.dom_ <=> b.dom_; c != 0) return c;
    if (auto c = a.cod_ <=> b.cod_; c != 0) return c;
    return a.map_ <=> b.map_;
  }

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<Index> map_;
};

/// A relation dom -> cod as a dom.size x cod.size boolean matrix (row-major).
class Relation {
 public:
  Relation() = default;
  /// The empty relation dom -> cod.
  Relation(FinSet dom, FinSet cod);
  /// Throws RejectedInput if a pair is out of range.
  Relation(FinSet dom, FinSet cod, std::span<const std::pair<Index, Index>> pairs);

  FinSet dom() const noexcept { return dom_; }
  FinSet cod() const noexcept { return cod_; }

  bool related(Index x, Index y) const { return matrix_[x * cod_.size + y] != 0; }
  void set(Index x, Index y, bool value = true) { matrix_[x * cod_.size + y] = value ? 1 : 0; }

  /// Related pairs in lexicographic order.
  std::vector<std::pair<Index, Index>> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::uint8_t> matrix_;
};

// Functions ---------------------------------------------------------------

/// g . f. Throws RejectedInput unless f.cod() == g.dom().
FinFun compose(const FinFun& g, const FinFun& f);
FinFun identity(FinSet x);
/// f + g with g's block offset by the sizes of f's domain and codomain.
FinFun disjoint_union(const FinFun& f, const FinFun& g);
/// The symmetry X + Y -> Y + X.
FinFun braiding(FinSet x, FinSet y);

bool is_injection(const FinFun& f);
bool is_bijection(const FinFun& f);

/// Visitors return false to stop the enumeration early. Each enumerator
/// visits in lexicographic order of the value sequence and returns false iff
/// it was stopped.
using FunVisitor = std::function<bool(const FinFun&)>;
bool for_each_function(FinSet x, FinSet y, const FunVisitor& visit);
bool for_each_injection(FinSet x, FinSet y, const FunVisitor& visit);
bool for_each_bijection(FinSet x, FinSet y, const FunVisitor& visit);

std::vector<FinFun> enumerate_functions(FinSet x, FinSet y);
std::vector<FinFun> enumerate_injections(FinSet x, FinSet y);
std::vector<FinFun> enumerate_bijections(FinSet x, FinSet y);

/// Every function with dom and cod sizes <= size_limit, ordered by
/// (dom, cod, map).
std::vector<FinFun> all_functions_up_to(Index size_limit);

// Relations ---------------------------------------------------------------

/// s . r. Throws RejectedInput unless r.cod() == s.dom().
Relation rel_compose(const Relation& s, const Relation& r);
/// r x s with (x, a) |-> x * s.dom().size + a on both sides.
Relation rel_product(const Relation& r, const Relation& s);
Relation rel_of_fun(const FinFun& f);
Relation rel_identity(FinSet x);
/// True iff every row relates to exactly one element.
bool is_function_graph(const Relation& r);

using RelVisitor = std::function<bool(const Relation&)>;
/// All 2^(x*y) relations, in lexicographic order of the row-major matrix.
bool for_each_relation(FinSet x, FinSet y, const RelVisitor& visit);

}  // namespace pcd
