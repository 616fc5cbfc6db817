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

#include <doctest.h>

#include "pcd/finset.hpp"

using namespace pcd;

namespace {

FinFun fn(Index dom, Index cod, std::vector<Index> map) {
  return FinFun(FinSet{dom}, FinSet{cod}, std::move(map));
}

Index factorial(Index n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Index power(Index base, Index exp) {
  Index r = 1;
  for (Index k = 0; k < exp; ++k) r *= base;
  return r;
}

}  // namespace

TEST_CASE("FinFun rejects out-of-range and mis-sized maps") {
  CHECK_THROWS_AS(fn(2, 2, {0}), RejectedInput);
  CHECK_THROWS_AS(fn(1, 2, {2}), RejectedInput);
  CHECK_THROWS_AS(fn(1, 0, {0}), RejectedInput);
  CHECK_NOTHROW(fn(0, 5, {}));
}

TEST_CASE("compose") {
  CHECK(compose(fn(2, 2, {1, 0}), fn(3, 2, {0, 0, 1})) == fn(3, 2, {1, 1, 0}));
  CHECK_THROWS_AS(compose(fn(2, 2, {1, 0}), fn(1, 3, {0})), RejectedInput);

  for (const FinFun& f : all_functions_up_to(3)) {
    CHECK(compose(identity(f.cod()), f) == f);
    CHECK(compose(f, identity(f.dom())) == f);
  }
}

TEST_CASE("identity") {
  CHECK(identity(FinSet{3}) == fn(3, 3, {0, 1, 2}));
  CHECK(identity(FinSet{0}).map().empty());
  for (Index n = 0; n <= 5; ++n) CHECK(is_bijection(identity(FinSet{n})));
}

TEST_CASE("disjoint_union offsets the right block") {
  const FinFun empty = fn(0, 0, {});
  CHECK(disjoint_union(fn(1, 1, {0}), fn(2, 1, {0, 0})) == fn(3, 2, {0, 1, 1}));
  for (const FinFun& f : all_functions_up_to(3)) {
    CHECK(disjoint_union(f, empty) == f);
    CHECK(disjoint_union(empty, f) == f);
  }
}

TEST_CASE("braiding") {
  CHECK(braiding(FinSet{1}, FinSet{2}) == fn(3, 3, {2, 0, 1}));
  for (Index x = 0; x <= 4; ++x) {
    CHECK(braiding(FinSet{x}, FinSet{0}) == identity(FinSet{x}));
    for (Index y = 0; y <= 4; ++y) {
      const FinSet X{x}, Y{y};
      CHECK(compose(braiding(Y, X), braiding(X, Y)) == identity(X + Y));
    }
  }
}

TEST_CASE("injection and bijection predicates") {
  CHECK_FALSE(is_injection(fn(2, 1, {0, 0})));
  CHECK_FALSE(is_bijection(fn(2, 1, {0, 0})));
  CHECK(is_injection(fn(2, 2, {1, 0})));
  CHECK(is_bijection(fn(2, 2, {1, 0})));
  CHECK(is_injection(fn(2, 3, {0, 2})));
  CHECK_FALSE(is_bijection(fn(2, 3, {0, 2})));
}

TEST_CASE("enumerators: counts, order, uniqueness") {
  CHECK(enumerate_functions(FinSet{2}, FinSet{2}).size() == 4);
  CHECK(enumerate_bijections(FinSet{3}, FinSet{3}).size() == 6);
  CHECK(enumerate_injections(FinSet{2}, FinSet{1}).empty());
  CHECK(enumerate_bijections(FinSet{2}, FinSet{3}).empty());

  for (Index x = 0; x <= 4; ++x)
    for (Index y = 0; y <= 4; ++y) {
      const FinSet X{x}, Y{y};
      const auto fs = enumerate_functions(X, Y);
      const auto inj = enumerate_injections(X, Y);
      const auto bij = enumerate_bijections(X, Y);
      CHECK(fs.size() == power(y, x));
      CHECK(inj.size() == (x <= y ? factorial(y) / factorial(y - x) : 0));
      CHECK(bij.size() == (x == y ? factorial(x) : 0));
      // Strictly increasing lexicographic order implies no duplicates.
      for (std::size_t k = 1; k < fs.size(); ++k) CHECK(fs[k - 1] < fs[k]);
      for (std::size_t k = 1; k < inj.size(); ++k) CHECK(inj[k - 1] < inj[k]);
      for (const auto& f : inj) CHECK(is_injection(f));
      for (const auto& f : bij) CHECK(is_bijection(f));
    }
}

TEST_CASE("enumerators stop when the visitor says so") {
  int seen = 0;
  const bool finished = for_each_function(FinSet{3}, FinSet{3}, [&](const FinFun&) {
    return ++seen < 5;
  });
  CHECK_FALSE(finished);
  CHECK(seen == 5);
}

TEST_CASE("composition is associative (sizes <= 3)") {
  for (Index a = 0; a <= 3; ++a)
    for (Index b = 0; b <= 3; ++b)
      for (Index c = 0; c <= 3; ++c)
        for (Index d = 0; d <= 3; ++d) {
          const auto fs = enumerate_functions(FinSet{a}, FinSet{b});
          const auto gs = enumerate_functions(FinSet{b}, FinSet{c});
          const auto hs = enumerate_functions(FinSet{c}, FinSet{d});
          for (const auto& f : fs)
            for (const auto& g : gs)
              for (const auto& h : hs)
                REQUIRE(compose(h, compose(g, f)) == compose(compose(h, g), f));
        }
}

TEST_CASE("disjoint union is functorial (sizes <= 2)") {
  for (Index x1 = 0; x1 <= 2; ++x1)
    for (Index y1 = 0; y1 <= 2; ++y1)
      for (Index z1 = 0; z1 <= 2; ++z1)
        for (Index x2 = 0; x2 <= 2; ++x2)
          for (Index y2 = 0; y2 <= 2; ++y2)
            for (Index z2 = 0; z2 <= 2; ++z2)
              for (const auto& f1 : enumerate_functions(FinSet{x1}, FinSet{y1}))
                for (const auto& g1 : enumerate_functions(FinSet{y1}, FinSet{z1}))
                  for (const auto& f2 : enumerate_functions(FinSet{x2}, FinSet{y2}))
                    for (const auto& g2 : enumerate_functions(FinSet{y2}, FinSet{z2}))
                      REQUIRE(disjoint_union(compose(g2, f2), compose(g1, f1)) ==
                              compose(disjoint_union(g2, g1), disjoint_union(f2, f1)));
}

TEST_CASE("braiding is natural (sizes <= 2)") {
  const auto fs = all_functions_up_to(2);
  for (const auto& f : fs)
    for (const auto& g : fs) {
      const auto lhs = compose(braiding(f.cod(), g.cod()), disjoint_union(f, g));
      const auto rhs = compose(disjoint_union(g, f), braiding(f.dom(), g.dom()));
      REQUIRE(lhs == rhs);
    }
}

TEST_CASE("relations") {
  const FinFun f = fn(2, 2, {0, 0});
  const FinFun g = fn(2, 2, {1, 0});
  CHECK(rel_compose(rel_of_fun(g), rel_of_fun(f)) == rel_of_fun(fn(2, 2, {1, 1})));
  CHECK_THROWS_AS(rel_compose(rel_of_fun(g), rel_of_fun(fn(1, 1, {0}))), RejectedInput);

  Relation full11(FinSet{1}, FinSet{1});
  full11.set(0, 0);
  for (Index x = 0; x <= 2; ++x)
    for (Index y = 0; y <= 2; ++y)
      for_each_relation(FinSet{x}, FinSet{y}, [&](const Relation& r) {
        CHECK(rel_product(r, full11) == r);
        CHECK(rel_product(full11, r) == r);
        const Relation empty_dom(FinSet{0}, r.dom());
        CHECK(rel_compose(r, empty_dom) == Relation(FinSet{0}, r.cod()));
        return true;
      });

  std::vector<std::pair<Index, Index>> pairs{{1, 0}, {0, 1}};
  const Relation r(FinSet{2}, FinSet{2}, pairs);
  CHECK(r.pairs() == std::vector<std::pair<Index, Index>>{{0, 1}, {1, 0}});
  CHECK(is_function_graph(r));
  CHECK_FALSE(is_function_graph(Relation(FinSet{1}, FinSet{1})));
}

TEST_CASE("relation enumeration count") {
  for (Index x = 0; x <= 2; ++x)
    for (Index y = 0; y <= 2; ++y) {
      std::vector<Relation> seen;
      for_each_relation(FinSet{x}, FinSet{y}, [&](const Relation& r) {
        seen.push_back(r);
        return true;
      });
      CHECK(seen.size() == power(2, x * y));
      for (std::size_t a = 0; a < seen.size(); ++a)
        for (std::size_t b = a + 1; b < seen.size(); ++b) CHECK_FALSE(seen[a] == seen[b]);
    }
}

TEST_CASE("rel_of_fun is a monoidal functor (sizes <= 2)") {
  const auto fs = all_functions_up_to(2);
  for (const auto& f : fs)
    for (const auto& g : fs) {
      if (f.cod() == g.dom())
        REQUIRE(rel_of_fun(compose(g, f)) == rel_compose(rel_of_fun(g), rel_of_fun(f)));
      // Cartesian product of graphs is the graph of the product function.
      std::vector<Index> map;
      for (Index x = 0; x < f.dom().size; ++x)
        for (Index a = 0; a < g.dom().size; ++a) map.push_back(f(x) * g.cod().size + g(a));
      const FinFun product(f.dom() * g.dom(), f.cod() * g.cod(), map);
      REQUIRE(rel_product(rel_of_fun(f), rel_of_fun(g)) == rel_of_fun(product));
    }
  for (Index n = 0; n <= 2; ++n) CHECK(rel_of_fun(identity(FinSet{n})) == rel_identity(FinSet{n}));
}
