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

// Convertibility in PCD(Set, Bij) and PCD(Set, Inj).
//
// f converts to g when there are a set Z, free xi1, xi2 and some j with
//
//     xi2 . (f + 1_Z) . xi1 == g + j.
//
// Both orders are decided by comparing profiles: phi restricted to indices
// != 1 for Bij, gamma restricted to indices >= 2 for Inj. The witness
// builders construct (Z, xi1, xi2, j) explicitly.

#include <set>
#include <string_view>

#include "pcd/finset.hpp"
#include "pcd/profile.hpp"

namespace pcd {

enum class Variant { SetBij, SetInj };

std::string_view variant_name(Variant v);

/// The free predicate: is_bijection for SetBij, is_injection for SetInj.
bool is_free(Variant v, const FinFun& f);
/// Profile indices that do not carry a monotone: {1} for SetBij, {0, 1} for SetInj.
const std::set<Index>& excluded_indices(Variant v);

/// Witness data for a conversion. `Morphism` is FinFun for the Set theories
/// and Relation for the relational theory.
template <class Morphism>
struct BasicWitness {
  FinSet z;
  Morphism xi1;
  Morphism xi2;
  Morphism j;

  friend bool operator==(const BasicWitness&, const BasicWitness&) = default;
};

using Witness = BasicWitness<FinFun>;

bool decide(Variant v, const FinFun& f, const FinFun& g);

/// Throws RejectedInput when decide(v, f, g) is false.
Witness witness(Variant v, const FinFun& f, const FinFun& g);

/// Never throws; malformed witnesses are simply invalid.
bool check_witness(Variant v, const FinFun& f, const FinFun& g, const Witness& w);

Profile normal_form(Variant v, const FinFun& f);
bool equivalent(Variant v, const FinFun& f, const FinFun& g);

/// A function whose normal form is `nf`. Throws RejectedInput if `nf` is not
/// a normal form of the variant (uses an excluded index, or is not
/// non-increasing for SetInj).
FinFun representative(Variant v, const Profile& nf);

}  // namespace pcd
