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

#include "pcd/monotone.hpp"

#include <cmath>
#include <map>

namespace pcd {

const std::vector<CandidateMeasure>& builtin_measures() {
  static const std::vector<CandidateMeasure> measures = [] {
    std::vector<CandidateMeasure> out;
    for (Index i = 0; i <= 8; ++i)
      out.push_back({"phi_" + std::to_string(i),
                     [i](const FinFun& f) { return static_cast<double>(phi_profile(f)[i]); }});
    for (Index i = 0; i <= 8; ++i)
      out.push_back({"gamma_" + std::to_string(i),
                     [i](const FinFun& f) { return static_cast<double>(gamma_profile(f)[i]); }});
    out.push_back({"dom_size", [](const FinFun& f) { return static_cast<double>(f.dom().size); }});
    out.push_back({"cod_size", [](const FinFun& f) { return static_cast<double>(f.cod().size); }});
    return out;
  }();
  return measures;
}

std::optional<CandidateMeasure> find_measure(const std::string& name) {
  for (const auto& m : builtin_measures())
    if (m.name == name) return m;
  return std::nullopt;
}

const std::vector<std::string>& negative_controls() {
  static const std::vector<std::string> names{"phi_1", "gamma_0", "gamma_1", "dom_size",
                                              "cod_size"};
  return names;
}

namespace {

std::string number(double x) {
  std::string s = std::to_string(x);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

bool close(double a, double b) { return std::abs(a - b) <= kMeasureTolerance; }

void fail(ConditionResult& r, std::string description,
          std::vector<std::pair<std::string, FinFun>> morphisms) {
  r.passed = false;
  r.counterexample = Counterexample{std::move(description), std::move(morphisms)};
}

}  // namespace

CheckReport check_measure(Variant v, const CandidateMeasure& mu, Index size_limit) {
  const auto fs = all_functions_up_to(size_limit);
  std::vector<double> value(fs.size());
  for (std::size_t k = 0; k < fs.size(); ++k) value[k] = mu.eval(fs[k]);

  CheckReport report;
  report.measure = mu.name;
  report.variant = v;
  report.size_limit = size_limit;
  report.morphisms = fs.size();
  report.additivity.name = "(i) additivity mu(f + g) = mu(f) + mu(g)";
  report.unit.name = "(ii) unit mu(1_Z) = 0";
  report.free_monotonicity.name = "(iii) free monotonicity mu(f) >= mu(xi.f), mu(f.xi)";

  auto& add = report.additivity;
  for (std::size_t p = 0; p < fs.size() && add.passed; ++p)
    for (std::size_t q = 0; q < fs.size(); ++q) {
      ++add.cases;
      const double lhs = mu.eval(disjoint_union(fs[p], fs[q]));
      if (!close(lhs, value[p] + value[q])) {
        fail(add,
             "mu(f + g) = " + number(lhs) + " but mu(f) + mu(g) = " + number(value[p]) +
                 " + " + number(value[q]),
             {{"f", fs[p]}, {"g", fs[q]}});
        break;
      }
    }

  auto& unit = report.unit;
  for (Index z = 0; z <= size_limit; ++z) {
    ++unit.cases;
    const FinFun id = identity(FinSet{z});
    const double val = mu.eval(id);
    if (!close(val, 0.0)) {
      fail(unit, "mu(1_Z) = " + number(val) + " for #Z = " + std::to_string(z), {{"1_Z", id}});
      break;
    }
  }

  auto& mono = report.free_monotonicity;
  for (std::size_t k = 0; k < fs.size() && mono.passed; ++k) {
    const FinFun& f = fs[k];
    for (Index w = 0; w <= size_limit && mono.passed; ++w) {
      // Post-composition xi: Y -> W.
      const FunVisitor post = [&](const FinFun& xi) {
        if (!is_free(v, xi)) return true;
        ++mono.cases;
        const FinFun composite = compose(xi, f);
        const double val = mu.eval(composite);
        if (value[k] < val - kMeasureTolerance) {
          fail(mono, "mu(xi.f) = " + number(val) + " exceeds mu(f) = " + number(value[k]),
               {{"f", f}, {"xi", xi}, {"xi.f", composite}});
          return false;
        }
        return true;
      };
      for_each_injection(f.cod(), FinSet{w}, post);
      if (!mono.passed) break;
      // Pre-composition xi: W -> X.
      const FunVisitor pre = [&](const FinFun& xi) {
        if (!is_free(v, xi)) return true;
        ++mono.cases;
        const FinFun composite = compose(f, xi);
        const double val = mu.eval(composite);
        if (value[k] < val - kMeasureTolerance) {
          fail(mono, "mu(f.xi) = " + number(val) + " exceeds mu(f) = " + number(value[k]),
               {{"f", f}, {"xi", xi}, {"f.xi", composite}});
          return false;
        }
        return true;
      };
      for_each_injection(FinSet{w}, f.dom(), pre);
    }
  }
  return report;
}

double InducedMonotone::operator()(const Profile& nf) const {
  return mu_.eval(representative(variant_, nf));
}

InducedMonotone induce_monotone(Variant v, const CandidateMeasure& mu, Index size_limit) {
  CheckReport report = check_measure(v, mu, size_limit);
  if (!report.passed())
    throw MeasureRejected("measure " + mu.name + " is not an additive monotone for " +
                              std::string(variant_name(v)),
                          std::move(report));

  std::map<Profile, std::pair<double, FinFun>> seen;
  for (const FinFun& f : all_functions_up_to(size_limit)) {
    const double val = mu.eval(f);
    auto [it, inserted] = seen.try_emplace(normal_form(v, f), val, f);
    if (!inserted && !close(it->second.first, val))
      throw RejectedInput("measure " + mu.name + " is not constant on an equivalence class");
  }
  return InducedMonotone(v, mu);
}

InducedAudit audit_induced(Variant v, const CandidateMeasure& mu, Index size_limit) {
  const auto fs = all_functions_up_to(size_limit);
  std::vector<double> value(fs.size());
  std::vector<Profile> nf(fs.size());
  for (std::size_t k = 0; k < fs.size(); ++k) {
    value[k] = mu.eval(fs[k]);
    nf[k] = normal_form(v, fs[k]);
  }

  InducedAudit audit;
  std::map<Profile, double> class_value;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    auto [it, inserted] = class_value.try_emplace(nf[k], value[k]);
    if (!inserted && !close(it->second, value[k])) audit.well_defined = false;
  }
  // The unit class is the class of the identities, normal form {}.
  if (auto it = class_value.find(Profile{}); it != class_value.end() && !close(it->second, 0.0))
    audit.unit_to_zero = false;
  for (std::size_t k = 0; k < fs.size(); ++k)
    if (nf[k].empty() && !close(value[k], 0.0)) audit.unit_to_zero = false;

  for (std::size_t p = 0; p < fs.size(); ++p)
    for (std::size_t q = 0; q < fs.size(); ++q) {
      if (audit.additive &&
          !close(mu.eval(disjoint_union(fs[p], fs[q])), value[p] + value[q]))
        audit.additive = false;
      if (audit.order_preserving && decide(v, fs[p], fs[q]) &&
          value[p] < value[q] - kMeasureTolerance)
        audit.order_preserving = false;
    }
  return audit;
}

FamilyReport check_complete_family(Variant v, const std::vector<CandidateMeasure>& family,
                                   Index size_limit) {
  FamilyReport report;
  report.variant = v;
  report.size_limit = size_limit;
  for (const auto& mu : family) {
    report.members.push_back(mu.name);
    CheckReport r = check_measure(v, mu, size_limit);
    if (!r.passed())
      throw MeasureRejected("family member " + mu.name + " is not an additive monotone for " +
                                std::string(variant_name(v)),
                            std::move(r));
  }

  const auto fs = all_functions_up_to(size_limit);
  std::vector<std::vector<double>> values(fs.size());
  for (std::size_t k = 0; k < fs.size(); ++k)
    for (const auto& mu : family) values[k].push_back(mu.eval(fs[k]));

  for (std::size_t p = 0; p < fs.size(); ++p)
    for (std::size_t q = 0; q < fs.size(); ++q) {
      ++report.pairs;
      bool dominates = true;
      for (std::size_t m = 0; m < family.size(); ++m)
        if (values[p][m] < values[q][m] - kMeasureTolerance) dominates = false;
      const bool convertible = decide(v, fs[p], fs[q]);
      if (convertible != dominates) {
        report.counterexample = FamilyCounterexample{fs[p], fs[q], convertible};
        return report;
      }
    }
  return report;
}

}  // namespace pcd
