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

// Brute-force search for conversion witnesses in any partitioned process
// theory, and the theory instances it runs on.
//
// A theory supplies the ambient symmetric monoidal structure plus the wide
// subcategory of free morphisms. The search walks (Z, C, D) by increasing
// size and looks for free xi1: dom(g) (x) C -> dom(f) (x) Z and
// xi2: cod(f) (x) Z -> cod(g) (x) D whose composite with f (x) 1_Z splits as
// g (x) j; j is read off the composite, never enumerated.

#include <algorithm>
#include <concepts>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pcd/convertibility.hpp"
#include "pcd/finset.hpp"

namespace pcd {

struct SearchBounds {
  Index max_z = 0;
  Index max_c = 0;
  Index max_d = 0;
};

template <class T>
concept PartitionedTheory = requires(const T& t, const typename T::Morphism& m, FinSet x,
                                     const std::function<bool(const typename T::Morphism&)>& visit) {
  typename T::Morphism;
  { t.dom(m) } -> std::same_as<FinSet>;
  { t.cod(m) } -> std::same_as<FinSet>;
  { t.compose(m, m) } -> std::same_as<typename T::Morphism>;
  { t.tensor(m, m) } -> std::same_as<typename T::Morphism>;
  { t.tensor(x, x) } -> std::same_as<FinSet>;
  { t.identity(x) } -> std::same_as<typename T::Morphism>;
  { t.equal(m, m) } -> std::same_as<bool>;
  { t.is_free(m) } -> std::same_as<bool>;
  { t.for_each_free(x, x, visit) } -> std::same_as<bool>;
  { t.for_each_morphism(x, x, visit) } -> std::same_as<bool>;
  { t.split(m, m, x, x) } -> std::same_as<std::optional<typename T::Morphism>>;
};

/// Theories may provide a pruned search for (xi1, xi2) at fixed (Z, C, D).
/// It must find a pair whenever plain enumeration would.
template <class T>
concept HasPairSearch = PartitionedTheory<T> &&
    requires(const T& t, const typename T::Morphism& m, FinSet x) {
      {
        t.find_free_pair(m, m, x, x, x)
      } -> std::same_as<std::optional<std::pair<typename T::Morphism, typename T::Morphism>>>;
    };

/// (Set, Bij) or (Set, Inj): functions under disjoint union.
class SetTheory {
 public:
  using Morphism = FinFun;

  explicit SetTheory(Variant variant) : variant_(variant) {}
  Variant variant() const noexcept { return variant_; }

  FinSet dom(const FinFun& f) const { return f.dom(); }
  FinSet cod(const FinFun& f) const { return f.cod(); }
  FinFun compose(const FinFun& g, const FinFun& f) const { return pcd::compose(g, f); }
  FinFun tensor(const FinFun& f, const FinFun& g) const { return disjoint_union(f, g); }
  FinSet tensor(FinSet x, FinSet y) const { return x + y; }
  FinFun identity(FinSet x) const { return pcd::identity(x); }
  bool equal(const FinFun& f, const FinFun& g) const { return f == g; }
  bool is_free(const FinFun& f) const { return pcd::is_free(variant_, f); }

  bool for_each_free(FinSet x, FinSet y, const FunVisitor& visit) const;
  bool for_each_morphism(FinSet x, FinSet y, const FunVisitor& visit) const {
    return for_each_function(x, y, visit);
  }

  /// j with h == g + j, if h: A + C -> B + D has that shape.
  std::optional<FinFun> split(const FinFun& h, const FinFun& g, FinSet c, FinSet d) const;

  /// Backtracking over xi1 one element at a time, fixing xi2 on the fibres
  /// it touches; see set_theory.cpp.
  std::optional<std::pair<FinFun, FinFun>> find_free_pair(const FinFun& f, const FinFun& g,
                                                          FinSet z, FinSet c, FinSet d) const;

 private:
  Variant variant_;
};

/// (Rel_x, Set_x): relations under cartesian product, free morphisms are the
/// graphs of functions.
class RelTheory {
 public:
  using Morphism = Relation;

  FinSet dom(const Relation& r) const { return r.dom(); }
  FinSet cod(const Relation& r) const { return r.cod(); }
  Relation compose(const Relation& s, const Relation& r) const { return rel_compose(s, r); }
  Relation tensor(const Relation& r, const Relation& s) const { return rel_product(r, s); }
  FinSet tensor(FinSet x, FinSet y) const { return x * y; }
  Relation identity(FinSet x) const { return rel_identity(x); }
  bool equal(const Relation& r, const Relation& s) const { return r == s; }
  bool is_free(const Relation& r) const { return is_function_graph(r); }

  bool for_each_free(FinSet x, FinSet y, const RelVisitor& visit) const;
  bool for_each_morphism(FinSet x, FinSet y, const RelVisitor& visit) const {
    return for_each_relation(x, y, visit);
  }

  /// j with h == g x j, if h: A x C -> B x D has that shape.
  std::optional<Relation> split(const Relation& h, const Relation& g, FinSet c, FinSet d) const;
};

using RelWitness = BasicWitness<Relation>;

/// The trivialising conversion f -> g in (Rel_x, Set_x): Z empty, and
/// xi2 = const_{Y->B} x (empty -> 1). Throws RejectedInput when no function
/// cod(f) -> cod(g) exists.
RelWitness relx_convert(const Relation& f, const Relation& g);

/// Checks xi2 . (f (x) 1_Z) . xi1 == g (x) j with free xi1, xi2 and matching
/// types. Never throws.
template <PartitionedTheory T>
bool check_theory_witness(const T& theory, const typename T::Morphism& f,
                          const typename T::Morphism& g,
                          const BasicWitness<typename T::Morphism>& w) {
  if (theory.dom(w.xi1) != theory.tensor(theory.dom(g), theory.dom(w.j))) return false;
  if (theory.cod(w.xi1) != theory.tensor(theory.dom(f), w.z)) return false;
  if (theory.dom(w.xi2) != theory.tensor(theory.cod(f), w.z)) return false;
  if (theory.cod(w.xi2) != theory.tensor(theory.cod(g), theory.cod(w.j))) return false;
  if (!theory.is_free(w.xi1) || !theory.is_free(w.xi2)) return false;
  const auto lhs =
      theory.compose(w.xi2, theory.compose(theory.tensor(f, theory.identity(w.z)), w.xi1));
  return theory.equal(lhs, theory.tensor(g, w.j));
}

/// max_Z = max(3, #cod g); max_C = max_D = total of f's and g's set sizes.
template <PartitionedTheory T>
SearchBounds default_bounds(const T& theory, const typename T::Morphism& f,
                            const typename T::Morphism& g) {
  const Index total =
      theory.dom(f).size + theory.cod(f).size + theory.dom(g).size + theory.cod(g).size;
  return SearchBounds{std::max<Index>(3, theory.cod(g).size), total, total};
}

namespace detail {

template <PartitionedTheory T>
std::optional<BasicWitness<typename T::Morphism>> enumerate_at(
    const T& theory, const typename T::Morphism& f, const typename T::Morphism& g, FinSet z,
    FinSet c, FinSet d) {
  using M = typename T::Morphism;
  const M fz = theory.tensor(f, theory.identity(z));
  const FinSet xi1_dom = theory.tensor(theory.dom(g), c);
  const FinSet xi2_cod = theory.tensor(theory.cod(g), d);
  std::optional<BasicWitness<M>> found;
  theory.for_each_free(theory.cod(fz), xi2_cod, [&](const M& xi2) {
    const M k = theory.compose(xi2, fz);
    return theory.for_each_free(xi1_dom, theory.dom(fz), [&](const M& xi1) {
      if (auto j = theory.split(theory.compose(k, xi1), g, c, d)) {
        found = BasicWitness<M>{z, xi1, xi2, std::move(*j)};
        return false;
      }
      return true;
    });
  });
  return found;
}

template <PartitionedTheory T, class AtFn>
std::optional<BasicWitness<typename T::Morphism>> sweep(const SearchBounds& bounds, AtFn&& at) {
  for (Index z = 0; z <= bounds.max_z; ++z)
    for (Index c = 0; c <= bounds.max_c; ++c)
      for (Index d = 0; d <= bounds.max_d; ++d)
        if (auto w = at(FinSet{z}, FinSet{c}, FinSet{d})) return w;
  return std::nullopt;
}

}  // namespace detail

/// Plain enumeration of every free (xi2, xi1) pair; no pruning.
template <PartitionedTheory T>
std::optional<BasicWitness<typename T::Morphism>> oracle_convertible_exhaustive(
    const T& theory, const typename T::Morphism& f, const typename T::Morphism& g,
    const SearchBounds& bounds) {
  return detail::sweep<T>(bounds, [&](FinSet z, FinSet c, FinSet d) {
    return detail::enumerate_at(theory, f, g, z, c, d);
  });
}

/// First witness within bounds, using the theory's pruned pair search when
/// it has one.
template <PartitionedTheory T>
std::optional<BasicWitness<typename T::Morphism>> oracle_convertible(
    const T& theory, const typename T::Morphism& f, const typename T::Morphism& g,
    const SearchBounds& bounds) {
  using M = typename T::Morphism;
  if constexpr (HasPairSearch<T>) {
    return detail::sweep<T>(
        bounds, [&](FinSet z, FinSet c, FinSet d) -> std::optional<BasicWitness<M>> {
          auto pair = theory.find_free_pair(f, g, z, c, d);
          if (!pair) return std::nullopt;
          const M h = theory.compose(
              pair->second, theory.compose(theory.tensor(f, theory.identity(z)), pair->first));
          auto j = theory.split(h, g, c, d);
          if (!j) return std::nullopt;
          return BasicWitness<M>{z, std::move(pair->first), std::move(pair->second),
                                 std::move(*j)};
        });
  } else {
    return oracle_convertible_exhaustive(theory, f, g, bounds);
  }
}

template <PartitionedTheory T>
std::vector<typename T::Morphism> all_morphisms_up_to(const T& theory, Index size_limit) {
  std::vector<typename T::Morphism> out;
  for (Index x = 0; x <= size_limit; ++x)
    for (Index y = 0; y <= size_limit; ++y)
      theory.for_each_morphism(FinSet{x}, FinSet{y}, [&](const typename T::Morphism& m) {
        out.push_back(m);
        return true;
      });
  return out;
}

template <class M>
struct OrderedPair {
  M source;
  M target;
};

/// Every (f, g) among morphisms with set sizes <= size_limit for which the
/// oracle finds f -> g, in enumeration order of (f, g). With no explicit
/// bounds, each pair uses default_bounds.
template <PartitionedTheory T>
std::vector<OrderedPair<typename T::Morphism>> preorder_table(
    const T& theory, Index size_limit, std::optional<SearchBounds> bounds = std::nullopt) {
  const auto morphisms = all_morphisms_up_to(theory, size_limit);
  std::vector<OrderedPair<typename T::Morphism>> out;
  for (const auto& f : morphisms)
    for (const auto& g : morphisms) {
      const SearchBounds b = bounds ? *bounds : default_bounds(theory, f, g);
      if (oracle_convertible(theory, f, g, b)) out.push_back({f, g});
    }
  return out;
}

}  // namespace pcd
