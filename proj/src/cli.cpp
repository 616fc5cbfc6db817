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

#include "pcd/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pcd/convertibility.hpp"
#include "pcd/monotone.hpp"
#include "pcd/oracle.hpp"
#include "pcd/serialize.hpp"

namespace pcd::cli {

namespace {

enum class TheoryKind { SetBij, SetInj, RelTimes };

struct Options {
  std::string verb;
  TheoryKind theory = TheoryKind::SetBij;
  std::vector<std::string> inputs;
  std::vector<std::string> inline_inputs;
  std::optional<Index> max_z, max_c, max_d;
  Index size_limit = 2;
  std::string measure;
  std::vector<std::string> family;
};

Variant set_variant(TheoryKind k) {
  if (k == TheoryKind::RelTimes)
    throw RejectedInput("this command needs --variant set-bij or set-inj");
  return k == TheoryKind::SetBij ? Variant::SetBij : Variant::SetInj;
}

// Positional inputs are file paths, or inline JSON when they start with '{'.
std::vector<std::string> load_inputs(const Options& o) {
  std::vector<std::string> texts;
  for (const auto& in : o.inputs) {
    if (!in.empty() && in.front() == '{') {
      texts.push_back(in);
      continue;
    }
    std::ifstream file(in);
    if (!file) throw ParseError(in, "cannot read input file '" + in + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    texts.push_back(buf.str());
  }
  texts.insert(texts.end(), o.inline_inputs.begin(), o.inline_inputs.end());
  return texts;
}

void expect_count(const std::vector<std::string>& texts, std::size_t n, const Options& o) {
  if (texts.size() != n)
    throw ParseError("<inputs>", o.verb + " takes " + std::to_string(n) + " morphism inputs, got " +
                                     std::to_string(texts.size()));
}

template <PartitionedTheory T>
SearchBounds bounds_for(const Options& o, const T& theory, const typename T::Morphism& f,
                        const typename T::Morphism& g) {
  SearchBounds b = default_bounds(theory, f, g);
  if (o.max_z) b.max_z = *o.max_z;
  if (o.max_c) b.max_c = *o.max_c;
  if (o.max_d) b.max_d = *o.max_d;
  return b;
}

bool explicit_bounds(const Options& o) { return o.max_z || o.max_c || o.max_d; }

template <PartitionedTheory T, class Parse>
int run_generic(const Options& o, const T& theory, Parse&& parse, std::ostream& out,
                std::ostream& err) {
  if (o.verb == "preorder-table") {
    std::optional<SearchBounds> b;
    if (explicit_bounds(o)) b = SearchBounds{o.max_z.value_or(0), o.max_c.value_or(0),
                                             o.max_d.value_or(0)};
    for (const auto& [f, g] : preorder_table(theory, o.size_limit, b))
      out << to_text(f) << " >= " << to_text(g) << "\n";
    return kOk;
  }
  const auto texts = load_inputs(o);
  expect_count(texts, 2, o);
  const auto f = parse(texts[0]);
  const auto g = parse(texts[1]);
  const auto w = oracle_convertible(theory, f, g, bounds_for(o, theory, f, g));
  if (!w) {
    err << "no witness within bounds\n";
    return kNoWitness;
  }
  out << to_text(*w) << "\n";
  return kOk;
}

int run_rel(const Options& o, std::ostream& out, std::ostream& err) {
  const RelTheory theory;
  if (o.verb == "oracle" || o.verb == "preorder-table")
    return run_generic(o, theory, parse_relation, out, err);
  if (o.verb == "profile" || o.verb == "monotone-check" || o.verb == "family-check")
    throw RejectedInput(o.verb + " is not available for --variant rel-times");

  const auto texts = load_inputs(o);
  if (o.verb == "check-witness") {
    expect_count(texts, 3, o);
    const bool ok = check_theory_witness(theory, parse_relation(texts[0]),
                                         parse_relation(texts[1]), parse_rel_witness(texts[2]));
    out << (ok ? "valid" : "invalid") << "\n";
    return ok ? kOk : kNegative;
  }
  expect_count(texts, 2, o);
  const Relation f = parse_relation(texts[0]);
  const Relation g = parse_relation(texts[1]);
  if (o.verb == "witness") {
    out << to_text(relx_convert(f, g)) << "\n";
    return kOk;
  }
  if (o.verb == "decide") {
    const bool ok = oracle_convertible(theory, f, g, bounds_for(o, theory, f, g)).has_value();
    out << (ok ? "convertible" : "not convertible") << "\n";
    return ok ? kOk : kNegative;
  }
  if (o.verb == "equiv") {
    const bool ok = oracle_convertible(theory, f, g, bounds_for(o, theory, f, g)) &&
                    oracle_convertible(theory, g, f, bounds_for(o, theory, g, f));
    out << (ok ? "equivalent" : "inequivalent") << "\n";
    return ok ? kOk : kNegative;
  }
  throw ParseError("<verb>", "unknown command '" + o.verb + "'");
}

int run_set(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.verb == "monotone-check") {
    const Variant v = set_variant(o.theory);
    const auto mu = find_measure(o.measure);
    if (!mu) throw ParseError("--measure", "unknown measure '" + o.measure + "'");
    const CheckReport report = check_measure(v, *mu, o.size_limit);
    out << to_text(report);
    return report.passed() ? kOk : kNegative;
  }
  if (o.verb == "family-check") {
    const Variant v = set_variant(o.theory);
    std::vector<CandidateMeasure> family;
    for (const auto& name : o.family) {
      auto mu = find_measure(name);
      if (!mu) throw ParseError("--family", "unknown measure '" + name + "'");
      family.push_back(*mu);
    }
    if (family.empty()) throw ParseError("--family", "family-check needs at least one measure");
    const FamilyReport report = check_complete_family(v, family, o.size_limit);
    out << to_text(report);
    return report.passed() ? kOk : kNegative;
  }
  if (o.verb == "oracle" || o.verb == "preorder-table")
    return run_generic(o, SetTheory(set_variant(o.theory)), parse_finfun, out, err);

  const auto texts = load_inputs(o);
  if (o.verb == "profile") {
    expect_count(texts, 1, o);
    const FinFun f = parse_finfun(texts[0]);
    out << "phi: " << to_text(phi_profile(f)) << "\n";
    out << "gamma: " << to_text(gamma_profile(f)) << "\n";
    return kOk;
  }

  const Variant v = set_variant(o.theory);
  if (o.verb == "check-witness") {
    expect_count(texts, 3, o);
    const bool ok =
        check_witness(v, parse_finfun(texts[0]), parse_finfun(texts[1]), parse_witness(texts[2]));
    out << (ok ? "valid" : "invalid") << "\n";
    return ok ? kOk : kNegative;
  }

  expect_count(texts, 2, o);
  const FinFun f = parse_finfun(texts[0]);
  const FinFun g = parse_finfun(texts[1]);
  if (o.verb == "decide") {
    const bool ok = decide(v, f, g);
    out << (ok ? "convertible" : "not convertible") << "\n";
    return ok ? kOk : kNegative;
  }
  if (o.verb == "witness") {
    if (!decide(v, f, g)) {
      err << "not convertible: no witness exists\n";
      return kNoWitness;
    }
    out << to_text(witness(v, f, g)) << "\n";
    return kOk;
  }
  if (o.verb == "equiv") {
    if (!equivalent(v, f, g)) {
      out << "inequivalent\n";
      return kNegative;
    }
    out << to_text(normal_form(v, f)) << "\n";
    return kOk;
  }
  throw ParseError("<verb>", "unknown command '" + o.verb + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resource convertibility for functions between finite sets"};
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, TheoryKind> theories{{"set-bij", TheoryKind::SetBij},
                                                   {"set-inj", TheoryKind::SetInj},
                                                   {"rel-times", TheoryKind::RelTimes}};
  const std::vector<std::pair<std::string, std::string>> verbs{
      {"profile", "Print the phi and gamma profiles of a function"},
      {"decide", "Decide whether the first morphism converts to the second"},
      {"witness", "Construct a conversion witness"},
      {"check-witness", "Verify a witness: inputs f g w"},
      {"equiv", "Print the shared normal form, or 'inequivalent'"},
      {"oracle", "Brute-force witness search within bounds"},
      {"preorder-table", "All convertible pairs up to --size-limit"},
      {"monotone-check", "Check a measure against the monotone conditions"},
      {"family-check", "Check a family of measures for completeness"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--variant", o.theory, "set-bij, set-inj or rel-times")
        ->transform(CLI::CheckedTransformer(theories, CLI::ignore_case));
    sub->add_option("inputs", o.inputs, "Morphism files (or inline JSON)");
    sub->add_option("--inline", o.inline_inputs, "Inline morphism JSON (repeatable)");
    sub->add_option("--max-z", o.max_z, "Largest Z searched");
    sub->add_option("--max-c", o.max_c, "Largest domain of j searched");
    sub->add_option("--max-d", o.max_d, "Largest codomain of j searched");
    sub->add_option("--size-limit", o.size_limit, "Largest set size enumerated");
    sub->add_option("--measure", o.measure, "Built-in measure, e.g. phi_2");
    sub->add_option("--family", o.family, "Built-in measures")->delimiter(',');
    sub->callback([&o, name = name] { o.verb = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    return o.theory == TheoryKind::RelTimes ? run_rel(o, out, err) : run_set(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error in " << e.field() << ": " << e.what() << "\n";
    return kParseError;
  } catch (const RejectedInput& e) {
    err << "rejected: " << e.what() << "\n";
    return kPrecondition;
  }
}

}  // namespace pcd::cli
