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

#include "pcd/oracle.hpp"

namespace pcd {

bool RelTheory::for_each_free(FinSet x, FinSet y, const RelVisitor& visit) const {
  return for_each_function(x, y, [&](const FinFun& f) { return visit(rel_of_fun(f)); });
}

std::optional<Relation> RelTheory::split(const Relation& h, const Relation& g, FinSet c,
                                         FinSet d) const {
  if (h.dom() != g.dom() * c || h.cod() != g.cod() * d) return std::nullopt;
  // If g relates anything, j is determined by that row/column slice of h.
  // Otherwise g x j is empty for every j and the empty j is as good as any.
  Relation j(c, d);
  const auto gp = g.pairs();
  if (!gp.empty()) {
    const auto [a, b] = gp.front();
    for (Index x = 0; x < c.size; ++x)
      for (Index y = 0; y < d.size; ++y)
        if (h.related(a * c.size + x, b * d.size + y)) j.set(x, y);
  }
  if (rel_product(g, j) != h) return std::nullopt;
  return j;
}

RelWitness relx_convert(const Relation& f, const Relation& g) {
  const FinSet y = f.cod();
  const FinSet b = g.cod();
  if (b.size == 0 && y.size != 0)
    throw RejectedInput("relx_convert: no function from a nonempty codomain to an empty one");

  const FinSet empty{0};
  const FinSet one{1};
  const FinFun constant(y, b, std::vector<Index>(y.size, 0));
  const Relation discard(empty, one);  // the unique relation 0 -> 1
  // xi1: A x 0 -> X x 0 and xi2: Y x 0 -> B x 1, both on the empty set.
  Relation xi1 = rel_of_fun(FinFun(g.dom() * empty, f.dom() * empty, {}));
  Relation xi2 = rel_product(rel_of_fun(constant), rel_of_fun(FinFun(empty, one, {})));
  return RelWitness{empty, std::move(xi1), std::move(xi2), discard};
}

}  // namespace pcd
