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

#include "pcd/convertibility.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pcd {

std::string_view variant_name(Variant v) {
  return v == Variant::SetBij ? "set-bij" : "set-inj";
}

bool is_free(Variant v, const FinFun& f) {
  return v == Variant::SetBij ? is_bijection(f) : is_injection(f);
}

const std::set<Index>& excluded_indices(Variant v) {
  static const std::set<Index> bij{1};
  static const std::set<Index> inj{0, 1};
  return v == Variant::SetBij ? bij : inj;
}

Profile normal_form(Variant v, const FinFun& f) {
  const Profile p = v == Variant::SetBij ? phi_profile(f) : gamma_profile(f);
  return profile_restrict(p, excluded_indices(v));
}

bool decide(Variant v, const FinFun& f, const FinFun& g) {
  return profile_geq(normal_form(v, f), normal_form(v, g));
}

bool equivalent(Variant v, const FinFun& f, const FinFun& g) {
  return normal_form(v, f) == normal_form(v, g);
}

FinFun representative(Variant v, const Profile& nf) {
  for (Index i : excluded_indices(v))
    if (nf[i] != 0) throw RejectedInput("normal form uses excluded index " + std::to_string(i));
  if (v == Variant::SetBij) return realize_profile(nf);

  // gamma_i for i >= 2 -> phi_i = gamma_i - gamma_{i+1}.
  Profile phi;
  for (const auto& [i, c] : nf.entries()) {
    const Index above = nf[i + 1];
    if (above > c) throw RejectedInput("tail profile increases at index " + std::to_string(i));
    phi.set(i, c - above);
  }
  // Gaps in the support mean gamma drops to 0 and later rises again.
  for (Index i = 2; i < nf.support_bound(); ++i)
    if (nf[i] == 0) throw RejectedInput("tail profile increases at index " + std::to_string(i));
  return realize_profile(phi);
}

namespace {

std::vector<std::vector<Index>> fibres(const FinFun& f) {
  std::vector<std::vector<Index>> out(f.cod().size);
  for (Index x = 0; x < f.dom().size; ++x) out[f(x)].push_back(x);
  return out;
}

// Codomain elements ordered by fibre size (ascending or descending), ties by
// lowest index.
std::vector<Index> by_fibre_size(const std::vector<std::vector<Index>>& fib, bool descending) {
  std::vector<Index> order(fib.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return descending ? fib[a].size() > fib[b].size() : fib[a].size() < fib[b].size();
  });
  return order;
}

// Given source F: S -> T and target G: S' -> T' with #T == #T', pairs the
// codomains in the given fibre order to get xi2: T -> T', then sends each
// s' to the least unused element of F^-1(xi2^-1(G(s'))).
std::pair<FinFun, FinFun> match_fibres(const FinFun& source, const FinFun& target,
                                       bool descending, FinSet xi1_cod) {
  const auto src_fib = fibres(source);
  const auto dst_fib = fibres(target);
  const auto src_order = by_fibre_size(src_fib, descending);
  const auto dst_order = by_fibre_size(dst_fib, descending);

  std::vector<Index> xi2(source.cod().size);
  std::vector<Index> xi2_inv(target.cod().size);
  for (Index k = 0; k < src_order.size(); ++k) {
    if (src_fib[src_order[k]].size() < dst_fib[dst_order[k]].size())
      throw std::logic_error("fibre matching: source fibre smaller than target fibre");
    xi2[src_order[k]] = dst_order[k];
    xi2_inv[dst_order[k]] = src_order[k];
  }

  std::vector<Index> cursor(source.cod().size, 0);
  std::vector<Index> xi1(target.dom().size);
  for (Index e = 0; e < xi1.size(); ++e) {
    const Index y = xi2_inv[target(e)];
    xi1[e] = src_fib[y][cursor[y]++];
  }
  return {FinFun(target.dom(), xi1_cod, std::move(xi1)),
          FinFun(source.cod(), target.cod(), std::move(xi2))};
}

Witness witness_bij(const FinFun& f, const FinFun& g) {
  const Profile pf = phi_profile(f);
  const Profile pg = phi_profile(g);
  const Index top = std::max(pf.support_bound(), pg.support_bound());

  Profile residual;
  Index z = 0;
  for (Index i = 0; i < top; ++i) {
    const auto d = static_cast<std::int64_t>(pf[i]) - static_cast<std::int64_t>(pg[i]);
    if (i == 1) {
      if (d >= 0)
        residual.set(1, static_cast<Index>(d));
      else
        z = static_cast<Index>(-d);
    } else {
      residual.set(i, static_cast<Index>(d));  // d >= 0 by decide()
    }
  }

  const FinSet zs{z};
  FinFun j = realize_profile(residual);
  const FinFun source = disjoint_union(f, identity(zs));
  const FinFun target = disjoint_union(g, j);
  auto [xi1, xi2] = match_fibres(source, target, false, source.dom());
  return Witness{zs, std::move(xi1), std::move(xi2), std::move(j)};
}

Witness witness_inj(const FinFun& f, const FinFun& g) {
  const Index y = f.cod().size;
  const Index b = g.cod().size;
  const Index nonempty_f = gamma_profile(f)[1];
  const Index nonempty_g = gamma_profile(g)[1];

  // #Z must cover the codomain deficit and the nonempty-fibre deficit so
  // that gamma_0 and gamma_1 of f + 1_Z also dominate those of g + j.
  Index z = b > y ? b - y : 0;
  if (nonempty_g > nonempty_f) z = std::max(z, nonempty_g - nonempty_f);
  const FinSet zs{z};
  const FinSet ds{y + z - b};

  FinFun j(FinSet{0}, ds, {});
  const FinFun source = disjoint_union(f, identity(zs));
  const FinFun target = disjoint_union(g, j);
  auto [xi1, xi2] = match_fibres(source, target, true, source.dom());
  return Witness{zs, std::move(xi1), std::move(xi2), std::move(j)};
}

}  // namespace

Witness witness(Variant v, const FinFun& f, const FinFun& g) {
  if (!decide(v, f, g))
    throw RejectedInput(std::string("no ") + std::string(variant_name(v)) +
                        " conversion exists: normal form of the source does not dominate");
  return v == Variant::SetBij ? witness_bij(f, g) : witness_inj(f, g);
}

bool check_witness(Variant v, const FinFun& f, const FinFun& g, const Witness& w) {
  if (w.xi1.dom().size != g.dom().size + w.j.dom().size) return false;
  if (w.xi1.cod() != f.dom() + w.z) return false;
  if (w.xi2.dom() != f.cod() + w.z) return false;
  if (w.xi2.cod().size != g.cod().size + w.j.cod().size) return false;
  if (!is_free(v, w.xi1) || !is_free(v, w.xi2)) return false;
  const FinFun lhs = compose(w.xi2, compose(disjoint_union(f, identity(w.z)), w.xi1));
  return lhs == disjoint_union(g, w.j);
}

}  // namespace pcd
