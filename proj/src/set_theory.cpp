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

#include <limits>

#include "pcd/oracle.hpp"

namespace pcd {

bool SetTheory::for_each_free(FinSet x, FinSet y, const FunVisitor& visit) const {
  return variant_ == Variant::SetBij ? for_each_bijection(x, y, visit)
                                     : for_each_injection(x, y, visit);
}

std::optional<FinFun> SetTheory::split(const FinFun& h, const FinFun& g, FinSet c,
                                       FinSet d) const {
  const Index a = g.dom().size;
  const Index b = g.cod().size;
  if (h.dom().size != a + c.size || h.cod().size != b + d.size) return std::nullopt;
  for (Index x = 0; x < a; ++x)
    if (h(x) != g(x)) return std::nullopt;
  std::vector<Index> j(c.size);
  for (Index x = 0; x < c.size; ++x) {
    if (h(a + x) < b) return std::nullopt;
    j[x] = h(a + x) - b;
  }
  return FinFun(c, d, std::move(j));
}

namespace {

constexpr Index kUnset = std::numeric_limits<Index>::max();

// Joint search for xi1: A + C -> X + Z and xi2: Y + Z -> B + D.
//
// xi1 is assigned one domain element at a time. Each choice p = xi1(e)
// reaches y = (f + 1_Z)(p), which forces xi2(y): to g(e) on the A block, or
// into the D block on the C block. Unconstrained xi2 values are filled at
// the end. Elements of C are interchangeable (j is read off), so their
// images are taken in increasing order; elements of D are interchangeable,
// so a fresh one is always the lowest unused.
class PairSearch {
 public:
  PairSearch(bool bijective, const FinFun& f, const FinFun& g, FinSet z, FinSet c, FinSet d)
      : bijective_(bijective),
        source_(disjoint_union(f, identity(z))),
        g_(g),
        a_(g.dom().size),
        b_(g.cod().size),
        d_(d.size),
        xi1_(a_ + c.size, kUnset),
        used1_(source_.dom().size, false),
        xi2_(source_.cod().size, kUnset),
        used2_(b_ + d_, false) {}

  std::optional<std::pair<FinFun, FinFun>> run() {
    const Index n1 = xi1_.size(), m1 = used1_.size();
    const Index n2 = xi2_.size(), m2 = used2_.size();
    if (bijective_ ? (n1 != m1 || n2 != m2) : (n1 > m1 || n2 > m2)) return std::nullopt;
    if (!assign(0)) return std::nullopt;

    // Complete xi2 in increasing order onto the lowest unused targets.
    Index t = 0;
    for (Index y = 0; y < n2; ++y) {
      if (xi2_[y] != kUnset) continue;
      while (used2_[t]) ++t;
      xi2_[y] = t;
      used2_[t] = true;
    }
    return std::pair{FinFun(FinSet{n1}, FinSet{m1}, xi1_),
                     FinFun(FinSet{n2}, FinSet{m2}, xi2_)};
  }

 private:
  bool assign(Index e) {
    if (e == xi1_.size()) return true;
    const bool in_g_block = e < a_;
    const Index first = (!in_g_block && e > a_) ? xi1_[e - 1] + 1 : 0;
    for (Index p = first; p < used1_.size(); ++p) {
      if (used1_[p]) continue;
      const Index y = source_(p);
      const Index before = xi2_[y];
      if (before != kUnset) {
        if (in_g_block ? before != g_(e) : before < b_) continue;
      } else {
        const Index target = in_g_block ? g_(e) : b_ + fresh_d_;
        if (in_g_block ? used2_[target] : fresh_d_ == d_) continue;
        xi2_[y] = target;
        used2_[target] = true;
        if (!in_g_block) ++fresh_d_;
      }
      xi1_[e] = p;
      used1_[p] = true;
      if (assign(e + 1)) return true;
      used1_[p] = false;
      xi1_[e] = kUnset;
      if (before == kUnset) {
        used2_[xi2_[y]] = false;
        xi2_[y] = kUnset;
        if (!in_g_block) --fresh_d_;
      }
    }
    return false;
  }

  bool bijective_;
  FinFun source_;
  const FinFun& g_;
  Index a_;
  Index b_;
  Index d_;
  Index fresh_d_ = 0;
  std::vector<Index> xi1_;
  std::vector<bool> used1_;
  std::vector<Index> xi2_;
  std::vector<bool> used2_;
};

}  // namespace

std::optional<std::pair<FinFun, FinFun>> SetTheory::find_free_pair(const FinFun& f,
                                                                   const FinFun& g, FinSet z,
                                                                   FinSet c, FinSet d) const {
  return PairSearch(variant_ == Variant::SetBij, f, g, z, c, d).run();
}

}  // namespace pcd
