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

#include "pcd/serialize.hpp"

#include <json.hpp>
#include <sstream>

namespace pcd {

using Json = nlohmann::ordered_json;

namespace {

Json finfun_json(const FinFun& f) {
  Json j;
  j["dom"] = f.dom().size;
  j["cod"] = f.cod().size;
  j["map"] = std::vector<Index>(f.map().begin(), f.map().end());
  return j;
}

Json relation_json(const Relation& r) {
  Json j;
  j["dom"] = r.dom().size;
  j["cod"] = r.cod().size;
  Json pairs = Json::array();
  for (const auto& [x, y] : r.pairs()) pairs.push_back({x, y});
  j["pairs"] = std::move(pairs);
  return j;
}

Json profile_json(const Profile& p) {
  Json entries = Json::object();
  for (const auto& [i, c] : p.entries()) entries[std::to_string(i)] = c;
  Json j;
  j["profile"] = std::move(entries);
  return j;
}

template <class M, class ToJson>
Json witness_json(const BasicWitness<M>& w, ToJson&& to_json) {
  Json j;
  j["Z"] = w.z.size;
  j["xi1"] = to_json(w.xi1);
  j["xi2"] = to_json(w.xi2);
  j["j"] = to_json(w.j);
  return j;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("<document>", std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const std::string& prefix, const char* name) {
  if (!obj.is_object())
    throw ParseError(prefix.empty() ? "<document>" : prefix, "expected a JSON object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(prefix + name, std::string("missing field '") + prefix + name + "'");
  return *it;
}

Index natural(const Json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(path, "field '" + path + "' must be a non-negative integer");
  return v.get<Index>();
}

FinFun finfun_from(const Json& j, const std::string& prefix) {
  const Index dom = natural(field(j, prefix, "dom"), prefix + "dom");
  const Index cod = natural(field(j, prefix, "cod"), prefix + "cod");
  const Json& map = field(j, prefix, "map");
  if (!map.is_array()) throw ParseError(prefix + "map", "field '" + prefix + "map' must be an array");
  if (map.size() != dom)
    throw ParseError(prefix + "map", "field '" + prefix + "map' has " +
                                         std::to_string(map.size()) + " entries but dom is " +
                                         std::to_string(dom));
  std::vector<Index> values;
  for (std::size_t k = 0; k < map.size(); ++k) {
    const std::string path = prefix + "map[" + std::to_string(k) + "]";
    const Index v = natural(map[k], path);
    if (v >= cod)
      throw ParseError(path, "field '" + path + "' = " + std::to_string(v) +
                                 " is outside cod " + std::to_string(cod));
    values.push_back(v);
  }
  return FinFun(FinSet{dom}, FinSet{cod}, std::move(values));
}

Relation relation_from(const Json& j, const std::string& prefix) {
  const Index dom = natural(field(j, prefix, "dom"), prefix + "dom");
  const Index cod = natural(field(j, prefix, "cod"), prefix + "cod");
  const Json& pairs = field(j, prefix, "pairs");
  if (!pairs.is_array())
    throw ParseError(prefix + "pairs", "field '" + prefix + "pairs' must be an array");
  std::vector<std::pair<Index, Index>> out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::string path = prefix + "pairs[" + std::to_string(k) + "]";
    if (!pairs[k].is_array() || pairs[k].size() != 2)
      throw ParseError(path, "field '" + path + "' must be a pair [x, y]");
    const Index x = natural(pairs[k][0], path + "[0]");
    const Index y = natural(pairs[k][1], path + "[1]");
    if (x >= dom || y >= cod)
      throw ParseError(path, "field '" + path + "' is outside " + std::to_string(dom) + " x " +
                                 std::to_string(cod));
    out.emplace_back(x, y);
  }
  return Relation(FinSet{dom}, FinSet{cod}, out);
}

template <class M, class FromJson>
BasicWitness<M> witness_from(const Json& j, FromJson&& from) {
  const FinSet z{natural(field(j, "", "Z"), "Z")};
  M xi1 = from(field(j, "", "xi1"), "xi1.");
  M xi2 = from(field(j, "", "xi2"), "xi2.");
  M jj = from(field(j, "", "j"), "j.");
  return BasicWitness<M>{z, std::move(xi1), std::move(xi2), std::move(jj)};
}

std::string indent_morphisms(const Counterexample& c) {
  std::string out;
  for (const auto& [label, f] : c.morphisms) out += "    " + label + " = " + to_text(f) + "\n";
  return out;
}

}  // namespace

std::string to_text(const FinFun& f) { return finfun_json(f).dump(); }
std::string to_text(const Relation& r) { return relation_json(r).dump(); }
std::string to_text(const Profile& p) { return profile_json(p).dump(); }
std::string to_text(const Witness& w) { return witness_json(w, finfun_json).dump(); }
std::string to_text(const RelWitness& w) { return witness_json(w, relation_json).dump(); }

std::string to_text(const CheckReport& report) {
  std::ostringstream out;
  out << "measure: " << report.measure << "\n";
  out << "variant: " << variant_name(report.variant) << "\n";
  out << "budget: size_limit=" << report.size_limit << " functions=" << report.morphisms << "\n";
  for (const ConditionResult* c : {&report.additivity, &report.unit, &report.free_monotonicity}) {
    out << c->name << ": " << (c->passed ? "pass" : "fail") << " (" << c->cases << " cases)\n";
    if (c->counterexample) {
      out << "  counterexample: " << c->counterexample->description << "\n";
      out << indent_morphisms(*c->counterexample);
    }
  }
  out << "result: " << (report.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string to_text(const FamilyReport& report) {
  std::ostringstream out;
  out << "family:";
  for (const auto& m : report.members) out << " " << m;
  out << "\nvariant: " << variant_name(report.variant) << "\n";
  out << "budget: size_limit=" << report.size_limit << " pairs=" << report.pairs << "\n";
  if (const auto& c = report.counterexample) {
    out << "completeness: fail\n";
    out << "  counterexample: "
        << (c->convertible ? "f converts to g but some member decreases"
                           : "every member is >= on f but f does not convert to g")
        << "\n";
    out << "    f = " << to_text(c->source) << "\n";
    out << "    g = " << to_text(c->target) << "\n";
  } else {
    out << "completeness: pass\n";
  }
  out << "result: " << (report.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

FinFun parse_finfun(std::string_view text) { return finfun_from(parse_json(text), ""); }
Relation parse_relation(std::string_view text) { return relation_from(parse_json(text), ""); }

std::variant<FinFun, Relation> parse_morphism(std::string_view text) {
  const Json j = parse_json(text);
  if (j.is_object() && j.contains("pairs") && !j.contains("map")) return relation_from(j, "");
  return finfun_from(j, "");
}

Profile parse_profile(std::string_view text) {
  const Json j = parse_json(text);
  const Json& entries = field(j, "", "profile");
  if (!entries.is_object()) throw ParseError("profile", "field 'profile' must be an object");
  Profile p;
  for (const auto& [key, count] : entries.items()) {
    const std::string path = "profile." + key;
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(path, "profile key '" + key + "' is not a decimal index");
    p.set(std::stoul(key), natural(count, path));
  }
  return p;
}

Witness parse_witness(std::string_view text) {
  return witness_from<FinFun>(parse_json(text), finfun_from);
}

RelWitness parse_rel_witness(std::string_view text) {
  return witness_from<Relation>(parse_json(text), relation_from);
}

}  // namespace pcd
