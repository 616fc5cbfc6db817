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

#include "pcd/finset.hpp"

#include <algorithm>
#include <string>

namespace pcd {

FinFun::FinFun(FinSet dom, FinSet cod, std::vector<Index> map)
    : dom_(dom), cod_(cod), map_(std::move(map)) {
  if (map_.size() != dom_.size) {
    throw RejectedInput("function map has " + std::to_string(map_.size()) +
                        " entries but domain size is " + std::to_string(dom_.size));
  }
  for (Index x = 0; x < map_.size(); ++x) {
    if (map_[x] >= cod_.size) {
      throw RejectedInput("function value map[" + std::to_string(x) + "] = " +
                          std::to_string(map_[x]) + " is outside codomain of size " +
                          std::to_string(cod_.size));
    }
  }
}

Relation::Relation(FinSet dom, FinSet cod)
    : dom_(dom), cod_(cod), matrix_(dom.size * cod.size, 0) {}

Relation::Relation(FinSet dom, FinSet cod, std::span<const std::pair<Index, Index>> pairs)
    : Relation(dom, cod) {
  for (const auto& [x, y] : pairs) {
    if (x >= dom.size || y >= cod.size) {
      throw RejectedInput("relation pair (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") is outside " + std::to_string(dom.size) + " x " +
                          std::to_string(cod.size));
    }
    set(x, y);
  }
}

std::vector<std::pair<Index, Index>> Relation::pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index x = 0; x < dom_.size; ++x)
    for (Index y = 0; y < cod_.size; ++y)
      if (related(x, y)) out.emplace_back(x, y);
  return out;
}

FinFun compose(const FinFun& g, const FinFun& f) {
  if (f.cod() != g.dom()) {
    throw RejectedInput("compose: codomain of size " + std::to_string(f.cod().size) +
                        " does not match domain of size " + std::to_string(g.dom().size));
  }
  std::vector<Index> map(f.dom().size);
  for (Index x = 0; x < map.size(); ++x) map[x] = g(f(x));
  return FinFun(f.dom(), g.cod(), std::move(map));
}

FinFun identity(FinSet x) {
  std::vector<Index> map(x.size);
  for (Index i = 0; i < x.size; ++i) map[i] = i;
  return FinFun(x, x, std::move(map));
}

FinFun disjoint_union(const FinFun& f, const FinFun& g) {
  std::vector<Index> map;
  map.reserve(f.dom().size + g.dom().size);
  for (Index v : f.map()) map.push_back(v);
  for (Index v : g.map()) map.push_back(f.cod().size + v);
  return FinFun(f.dom() + g.dom(), f.cod() + g.cod(), std::move(map));
}

FinFun braiding(FinSet x, FinSet y) {
  std::vector<Index> map(x.size + y.size);
  for (Index i = 0; i < map.size(); ++i) map[i] = i < x.size ? i + y.size : i - x.size;
  return FinFun(x + y, y + x, std::move(map));
}

bool is_injection(const FinFun& f) {
  std::vector<bool> seen(f.cod().size, false);
  for (Index v : f.map()) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_bijection(const FinFun& f) { return f.dom() == f.cod() && is_injection(f); }

namespace {

// Odometer over value sequences; the last position moves fastest, which
// yields lexicographic order. `distinct` restricts to injective sequences.
bool odometer(FinSet x, FinSet y, bool distinct, const FunVisitor& visit) {
  const Index n = x.size;
  const Index m = y.size;
  if (distinct && n > m) return true;
  if (n == 0) return visit(FinFun(x, y, {}));
  if (m == 0) return true;

  std::vector<Index> map(n, 0);
  std::vector<bool> used(m, false);
  // Depth-first: position `pos` tries values in increasing order.
  std::vector<Index> next(n, 0);
  Index pos = 0;
  while (true) {
    if (next[pos] == m) {
      if (pos == 0) return true;
      next[pos] = 0;
      --pos;
      if (distinct) used[map[pos]] = false;
      continue;
    }
    const Index v = next[pos]++;
    if (distinct && used[v]) continue;
    map[pos] = v;
    if (pos + 1 == n) {
      if (!visit(FinFun(x, y, map))) return false;
      continue;
    }
    if (distinct) used[v] = true;
    ++pos;
  }
}

template <class Visit>
std::vector<FinFun> collect(Visit&& run) {
  std::vector<FinFun> out;
  run([&](const FinFun& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace

bool for_each_function(FinSet x, FinSet y, const FunVisitor& visit) {
  return odometer(x, y, false, visit);
}

bool for_each_injection(FinSet x, FinSet y, const FunVisitor& visit) {
  return odometer(x, y, true, visit);
}

bool for_each_bijection(FinSet x, FinSet y, const FunVisitor& visit) {
  if (x != y) return true;
  return odometer(x, y, true, visit);
}

std::vector<FinFun> enumerate_functions(FinSet x, FinSet y) {
  return collect([&](const FunVisitor& v) { return for_each_function(x, y, v); });
}

std::vector<FinFun> enumerate_injections(FinSet x, FinSet y) {
  return collect([&](const FunVisitor& v) { return for_each_injection(x, y, v); });
}

std::vector<FinFun> enumerate_bijections(FinSet x, FinSet y) {
  return collect([&](const FunVisitor& v) { return for_each_bijection(x, y, v); });
}

std::vector<FinFun> all_functions_up_to(Index size_limit) {
  std::vector<FinFun> out;
  for (Index d = 0; d <= size_limit; ++d)
    for (Index c = 0; c <= size_limit; ++c)
      for_each_function(FinSet{d}, FinSet{c}, [&](const FinFun& f) {
        out.push_back(f);
        return true;
      });
  return out;
}

Relation rel_compose(const Relation& s, const Relation& r) {
  if (r.cod() != s.dom()) {
    throw RejectedInput("rel_compose: codomain of size " + std::to_string(r.cod().size) +
                        " does not match domain of size " + std::to_string(s.dom().size));
  }
  Relation out(r.dom(), s.cod());
  for (Index x = 0; x < r.dom().size; ++x)
    for (Index y = 0; y < r.cod().size; ++y) {
      if (!r.related(x, y)) continue;
      for (Index z = 0; z < s.cod().size; ++z)
        if (s.related(y, z)) out.set(x, z);
    }
  return out;
}

Relation rel_product(const Relation& r, const Relation& s) {
  const Index rd = r.dom().size, rc = r.cod().size;
  const Index sd = s.dom().size, sc = s.cod().size;
  Relation out(r.dom() * s.dom(), r.cod() * s.cod());
  for (Index x = 0; x < rd; ++x)
    for (Index y = 0; y < rc; ++y) {
      if (!r.related(x, y)) continue;
      for (Index a = 0; a < sd; ++a)
        for (Index b = 0; b < sc; ++b)
          if (s.related(a, b)) out.set(x * sd + a, y * sc + b);
    }
  return out;
}

Relation rel_of_fun(const FinFun& f) {
  Relation out(f.dom(), f.cod());
  for (Index x = 0; x < f.dom().size; ++x) out.set(x, f(x));
  return out;
}

Relation rel_identity(FinSet x) { return rel_of_fun(identity(x)); }

bool is_function_graph(const Relation& r) {
  for (Index x = 0; x < r.dom().size; ++x) {
    Index hits = 0;
    for (Index y = 0; y < r.cod().size; ++y) hits += r.related(x, y) ? 1 : 0;
    if (hits != 1) return false;
  }
  return true;
}

bool for_each_relation(FinSet x, FinSet y, const RelVisitor& visit) {
  const Index cells = x.size * y.size;
  std::vector<bool> bits(cells, false);
  while (true) {
    Relation r(x, y);
    for (Index k = 0; k < cells; ++k)
      if (bits[k]) r.set(k / y.size, k % y.size);
    if (!visit(r)) return false;
    // Increment with the last cell as least significant.
    Index k = cells;
    while (k > 0 && bits[k - 1]) bits[--k] = false;
    if (k == 0) return true;
    bits[k - 1] = true;
  }
}

}  // namespace pcd
