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

#include "pcd/convertibility.hpp"

using namespace pcd;

namespace {

FinFun fn(Index dom, Index cod, std::vector<Index> map) {
  return FinFun(FinSet{dom}, FinSet{cod}, std::move(map));
}

const Variant kVariants[] = {Variant::SetBij, Variant::SetInj};

}  // namespace

TEST_CASE("decide examples") {
  const FinFun pair = fn(2, 1, {0, 0});
  const FinFun id1 = identity(FinSet{1});
  CHECK(decide(Variant::SetBij, pair, id1));
  CHECK_FALSE(decide(Variant::SetBij, id1, pair));
  CHECK(decide(Variant::SetInj, pair, id1));
  CHECK_FALSE(decide(Variant::SetInj, id1, pair));
  // Empty fibres are a resource for Bij but free for Inj.
  const FinFun empty_to_one = fn(0, 1, {});
  CHECK_FALSE(decide(Variant::SetBij, id1, empty_to_one));
  CHECK(decide(Variant::SetInj, id1, empty_to_one));
}

TEST_CASE("witness examples") {
  const FinFun pair = fn(2, 1, {0, 0});
  const FinFun id1 = identity(FinSet{1});

  SUBCASE("SetBij takes the phi_1 deficit as Z") {
    const Witness w = witness(Variant::SetBij, pair, id1);
    CHECK(w.z.size == 1);
    CHECK(w.j == fn(2, 1, {0, 0}));
    CHECK(check_witness(Variant::SetBij, pair, id1, w));
  }
  SUBCASE("SetInj on the same pair needs nothing extra") {
    const Witness w = witness(Variant::SetInj, pair, id1);
    CHECK(w.z.size == 0);
    CHECK(w.j == fn(0, 0, {}));
    CHECK(w.xi1 == fn(1, 2, {0}));
    CHECK(w.xi2 == fn(1, 1, {0}));
    CHECK(compose(w.xi2, compose(pair, w.xi1)) == id1);
    CHECK(check_witness(Variant::SetInj, pair, id1, w));
  }
  SUBCASE("reflexivity gives the identity witness") {
    for (Variant v : kVariants)
      for (const FinFun& f : all_functions_up_to(3)) {
        const Witness w = witness(v, f, f);
        CHECK(w.z.size == 0);
        CHECK(w.j == fn(0, 0, {}));
        CHECK(w.xi1 == identity(f.dom()));
        CHECK(w.xi2 == identity(f.cod()));
      }
  }
  SUBCASE("no witness when not convertible") {
    CHECK_THROWS_AS(witness(Variant::SetBij, id1, pair), RejectedInput);
    CHECK_THROWS_AS(witness(Variant::SetInj, id1, pair), RejectedInput);
  }
}

TEST_CASE("SetInj witness covers a nonempty-fibre deficit") {
  // gamma_i(f) >= gamma_i(g) for i >= 2 but f has fewer nonempty fibres
  // than g; Z must make up the difference.
  const FinFun f = fn(0, 1, {});
  const FinFun g = identity(FinSet{1});
  REQUIRE(decide(Variant::SetInj, f, g));
  const Witness w = witness(Variant::SetInj, f, g);
  CHECK(w.z.size == 1);
  CHECK(check_witness(Variant::SetInj, f, g, w));

  const FinFun f2 = fn(3, 2, {0, 0, 0});
  const FinFun g2 = fn(3, 3, {0, 0, 1});
  REQUIRE(decide(Variant::SetInj, f2, g2));
  CHECK(check_witness(Variant::SetInj, f2, g2, witness(Variant::SetInj, f2, g2)));
}

TEST_CASE("check_witness rejects malformed witnesses") {
  const FinFun pair = fn(2, 1, {0, 0});
  const FinFun id1 = identity(FinSet{1});
  const Witness good = witness(Variant::SetInj, pair, id1);

  // Picking the other point of the fibre is just as valid.
  Witness other = good;
  other.xi1 = fn(1, 2, {1});
  CHECK(check_witness(Variant::SetInj, pair, id1, other));

  // Non-injective xi1 under SetInj.
  const FinFun f = fn(2, 2, {0, 1});
  const FinFun g = fn(2, 1, {0, 0});
  const Witness non_injective{FinSet{0}, fn(2, 2, {0, 0}), fn(2, 1, {0, 0}), fn(0, 0, {})};
  CHECK_FALSE(is_injection(non_injective.xi1));
  CHECK_FALSE(check_witness(Variant::SetInj, f, g, non_injective));

  Witness wrong_z = good;
  wrong_z.z = FinSet{3};
  CHECK_FALSE(check_witness(Variant::SetInj, pair, id1, wrong_z));

  Witness wrong_j = good;
  wrong_j.j = fn(0, 1, {});
  CHECK_FALSE(check_witness(Variant::SetInj, pair, id1, wrong_j));

  // An injection that is not a bijection is not free for SetBij.
  const Witness inj_only{FinSet{0}, fn(1, 2, {0}), fn(1, 1, {0}), fn(0, 0, {})};
  CHECK(check_witness(Variant::SetInj, pair, id1, inj_only));
  CHECK_FALSE(check_witness(Variant::SetBij, pair, id1, inj_only));
}

TEST_CASE("normal forms") {
  CHECK(normal_form(Variant::SetBij, identity(FinSet{5})).empty());
  CHECK(normal_form(Variant::SetBij, fn(3, 2, {0, 0, 1})) == Profile{{2, 1}});
  CHECK(normal_form(Variant::SetInj, fn(3, 2, {0, 0, 1})) == Profile{{2, 1}});
}

TEST_CASE("equivalent") {
  const FinFun pair = fn(2, 1, {0, 0});
  for (Variant v : kVariants) {
    CHECK(equivalent(v, identity(FinSet{2}), identity(FinSet{7})));
    CHECK_FALSE(equivalent(v, pair, identity(FinSet{1})));
  }
  for (const FinFun& f : all_functions_up_to(3))
    for (const auto& a : enumerate_bijections(f.dom(), f.dom()))
      for (const auto& b : enumerate_bijections(f.cod(), f.cod()))
        REQUIRE(equivalent(Variant::SetBij, f, compose(b, compose(f, a))));
}

TEST_CASE("representative realises a normal form") {
  for (Variant v : kVariants)
    for (const FinFun& f : all_functions_up_to(3)) {
      const Profile nf = normal_form(v, f);
      REQUIRE(normal_form(v, representative(v, nf)) == nf);
    }
  CHECK_THROWS_AS(representative(Variant::SetBij, Profile{{1, 2}}), RejectedInput);
  CHECK_THROWS_AS(representative(Variant::SetInj, Profile{{0, 1}}), RejectedInput);
  CHECK_THROWS_AS(representative(Variant::SetInj, Profile{{2, 1}, {3, 2}}), RejectedInput);
  CHECK_THROWS_AS(representative(Variant::SetInj, Profile{{2, 1}, {4, 1}}), RejectedInput);
}

TEST_CASE("witness soundness (sizes <= 3)") {
  const auto fs = all_functions_up_to(3);
  for (Variant v : kVariants)
    for (const auto& f : fs)
      for (const auto& g : fs) {
        if (!decide(v, f, g)) continue;
        const Witness w = witness(v, f, g);
        REQUIRE(is_free(v, w.xi1));
        REQUIRE(is_free(v, w.xi2));
        REQUIRE(check_witness(v, f, g, w));
      }
}

TEST_CASE("normal form is a monoid homomorphism and order embedding (sizes <= 4)") {
  const auto fs = all_functions_up_to(4);
  for (Variant v : kVariants)
    for (const auto& f : fs)
      for (const auto& g : fs) {
        REQUIRE(normal_form(v, disjoint_union(f, g)) == normal_form(v, f) + normal_form(v, g));
        REQUIRE(decide(v, f, g) == profile_geq(normal_form(v, f), normal_form(v, g)));
      }
}

TEST_CASE("non-negativity: every f converts to every identity (sizes <= 4)") {
  for (Variant v : kVariants)
    for (const auto& f : all_functions_up_to(4))
      for (Index z = 0; z <= 4; ++z) REQUIRE(decide(v, f, identity(FinSet{z})));
}

TEST_CASE("SetBij convertibility implies SetInj convertibility (sizes <= 3)") {
  const auto fs = all_functions_up_to(3);
  for (const auto& f : fs)
    for (const auto& g : fs)
      if (decide(Variant::SetBij, f, g)) REQUIRE(decide(Variant::SetInj, f, g));
}

TEST_CASE("decide is a preorder (sizes <= 2)") {
  const auto fs = all_functions_up_to(2);
  for (Variant v : kVariants)
    for (const auto& f : fs) {
      REQUIRE(decide(v, f, f));
      for (const auto& g : fs)
        for (const auto& h : fs)
          if (decide(v, f, g) && decide(v, g, h)) REQUIRE(decide(v, f, h));
    }
}
