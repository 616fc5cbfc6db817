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

// Fibre statistics of finite functions.
//
// A Profile is a finitely supported map N -> N. The two profiles of a
// function f: X -> Y are
//   phi_i(f)   = #{ y | #f^-1(y) == i }   (fibre-size histogram)
//   gamma_i(f) = #{ y | #f^-1(y) >= i }   (tail counts)
// so gamma_i = sum_{k >= i} phi_k.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <utility>

#include "pcd/finset.hpp"

namespace pcd {

class Profile {
 public:
  using Entries = std::map<Index, Index>;

  Profile() = default;
  /// Zero counts are dropped.
  Profile(std::initializer_list<std::pair<const Index, Index>> entries);
  explicit Profile(const Entries& entries);

  Index operator[](Index i) const;
  void set(Index i, Index count);

  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  /// One past the largest index in the support (0 for the zero profile).
  Index support_bound() const noexcept;

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;

 private:
  Entries entries_;
};

Profile phi_profile(const FinFun& f);
Profile gamma_profile(const FinFun& f);

Profile profile_add(const Profile& p, const Profile& q);
inline Profile operator+(const Profile& p, const Profile& q) { return profile_add(p, q); }
/// Pointwise p >= q.
bool profile_geq(const Profile& p, const Profile& q);
Profile profile_restrict(const Profile& p, const std::set<Index>& excluded);

/// A function j with phi_profile(j) == l. The codomain is laid out in blocks
/// of increasing fibre size; each block's fibres are filled consecutively.
FinFun realize_profile(const Profile& l);

}  // namespace pcd
