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

#include "pcd/profile.hpp"

#include <algorithm>
#include <vector>

namespace pcd {

Profile::Profile(std::initializer_list<std::pair<const Index, Index>> entries) {
  for (const auto& [i, c] : entries) set(i, c);
}

Profile::Profile(const Entries& entries) {
  for (const auto& [i, c] : entries) set(i, c);
}

Index Profile::operator[](Index i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? 0 : it->second;
}

void Profile::set(Index i, Index count) {
  if (count == 0)
    entries_.erase(i);
  else
    entries_[i] = count;
}

Index Profile::support_bound() const noexcept {
  return entries_.empty() ? 0 : entries_.rbegin()->first + 1;
}

namespace {

std::vector<Index> fibre_sizes(const FinFun& f) {
  std::vector<Index> sizes(f.cod().size, 0);
  for (Index v : f.map()) ++sizes[v];
  return sizes;
}

}  // namespace

Profile phi_profile(const FinFun& f) {
  Profile::Entries counts;
  for (Index s : fibre_sizes(f)) ++counts[s];
  return Profile(counts);
}

Profile gamma_profile(const FinFun& f) {
  const auto sizes = fibre_sizes(f);
  const Index top = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  Profile::Entries counts;
  for (Index i = 0; i <= top; ++i)
    counts[i] = static_cast<Index>(std::count_if(sizes.begin(), sizes.end(),
                                                 [i](Index s) { return s >= i; }));
  return Profile(counts);
}

Profile profile_add(const Profile& p, const Profile& q) {
  Profile::Entries sum = p.entries();
  for (const auto& [i, c] : q.entries()) sum[i] += c;
  return Profile(sum);
}

bool profile_geq(const Profile& p, const Profile& q) {
  // Indices absent from q are 0 there, so only q's support can fail.
  return std::all_of(q.entries().begin(), q.entries().end(),
                     [&](const auto& e) { return p[e.first] >= e.second; });
}

Profile profile_restrict(const Profile& p, const std::set<Index>& excluded) {
  Profile::Entries kept;
  for (const auto& [i, c] : p.entries())
    if (!excluded.contains(i)) kept[i] = c;
  return Profile(kept);
}

FinFun realize_profile(const Profile& l) {
  std::vector<Index> map;
  Index cod = 0;
  for (const auto& [fibre, count] : l.entries()) {
    for (Index k = 0; k < count; ++k, ++cod)
      for (Index e = 0; e < fibre; ++e) map.push_back(cod);
  }
  const FinSet dom{map.size()};
  return FinFun(dom, FinSet{cod}, std::move(map));
}

}  // namespace pcd
