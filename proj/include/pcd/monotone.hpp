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

// Checking candidate measures against the characterisation of additive
// monotones: a measure mu on functions induces a monotone on the PCD
// ordered monoid exactly when
//   (i)   mu(f + g) == mu(f) + mu(g),
//   (ii)  mu(1_Z)   == 0,
//   (iii) mu(f) >= mu(xi . f) and mu(f) >= mu(f . xi) for free xi.
// All checks are exhaustive over functions with set sizes <= size_limit and
// are only as strong as that budget.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcd/convertibility.hpp"
#include "pcd/error.hpp"
#include "pcd/finset.hpp"
#include "pcd/profile.hpp"

namespace pcd {

inline constexpr double kMeasureTolerance = 1e-9;

struct CandidateMeasure {
  std::string name;
  std::function<double(const FinFun&)> eval;
};

/// phi_i and gamma_i for i <= 8, dom_size and cod_size.
const std::vector<CandidateMeasure>& builtin_measures();
std::optional<CandidateMeasure> find_measure(const std::string& name);
/// Built-ins that fail the characterisation in both variants.
const std::vector<std::string>& negative_controls();

struct Counterexample {
  std::string description;
  std::vector<std::pair<std::string, FinFun>> morphisms;
};

struct ConditionResult {
  std::string name;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  std::size_t cases = 0;
};

struct CheckReport {
  std::string measure;
  Variant variant = Variant::SetBij;
  Index size_limit = 0;
  std::size_t morphisms = 0;  // functions enumerated at this budget
  ConditionResult additivity;
  ConditionResult unit;
  ConditionResult free_monotonicity;

  bool passed() const {
    return additivity.passed && unit.passed && free_monotonicity.passed;
  }
};

CheckReport check_measure(Variant v, const CandidateMeasure& mu, Index size_limit);

class MeasureRejected : public RejectedInput {
 public:
  MeasureRejected(const std::string& what, CheckReport report)
      : RejectedInput(what), report_(std::move(report)) {}
  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

/// The monotone M([f]) = mu(f) on normal forms.
class InducedMonotone {
 public:
  InducedMonotone(Variant v, CandidateMeasure mu) : variant_(v), mu_(std::move(mu)) {}

  /// Evaluates mu on a representative of the class with this normal form.
  double operator()(const Profile& normal_form) const;
  double of(const FinFun& f) const { return (*this)(normal_form(variant_, f)); }

  Variant variant() const noexcept { return variant_; }
  const CandidateMeasure& measure() const noexcept { return mu_; }

 private:
  Variant variant_;
  CandidateMeasure mu_;
};

/// Throws MeasureRejected if check_measure fails at size_limit, or
/// RejectedInput if mu differs on two enumerated functions of one class.
InducedMonotone induce_monotone(Variant v, const CandidateMeasure& mu, Index size_limit);

/// Direct audit of the would-be induced map on enumerated functions, using
/// normal forms for classes and decide() for the order.
struct InducedAudit {
  bool well_defined = true;
  bool unit_to_zero = true;
  bool additive = true;
  bool order_preserving = true;

  bool homomorphism() const { return well_defined && unit_to_zero && additive && order_preserving; }
};

InducedAudit audit_induced(Variant v, const CandidateMeasure& mu, Index size_limit);

struct FamilyCounterexample {
  FinFun source;
  FinFun target;
  /// decide(v, source, target); the family says the opposite.
  bool convertible = false;
};

struct FamilyReport {
  Variant variant = Variant::SetBij;
  Index size_limit = 0;
  std::vector<std::string> members;
  std::size_t pairs = 0;
  std::optional<FamilyCounterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

/// Throws MeasureRejected if a member fails check_measure at size_limit.
FamilyReport check_complete_family(Variant v, const std::vector<CandidateMeasure>& family,
                                   Index size_limit);

}  // namespace pcd
