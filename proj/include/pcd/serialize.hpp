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

// Text formats.
//
//   FinFun    {"dom":n,"cod":m,"map":[...]}
//   Relation  {"dom":n,"cod":m,"pairs":[[x,y],...]}   pairs sorted
//   Profile   {"profile":{"i":count,...}}              keys ascending
//   Witness   {"Z":n,"xi1":...,"xi2":...,"j":...}
//
// Readers throw ParseError naming the offending field.

#include <string>
#include <string_view>
#include <variant>

#include "pcd/convertibility.hpp"
#include "pcd/monotone.hpp"
#include "pcd/oracle.hpp"

namespace pcd {

std::string to_text(const FinFun& f);
std::string to_text(const Relation& r);
std::string to_text(const Profile& p);
std::string to_text(const Witness& w);
std::string to_text(const RelWitness& w);
/// Multi-line report: one line per condition, counterexamples indented.
std::string to_text(const CheckReport& report);
std::string to_text(const FamilyReport& report);

FinFun parse_finfun(std::string_view text);
Relation parse_relation(std::string_view text);
/// Accepts either morphism format, told apart by "map" vs "pairs".
std::variant<FinFun, Relation> parse_morphism(std::string_view text);
Profile parse_profile(std::string_view text);
Witness parse_witness(std::string_view text);
RelWitness parse_rel_witness(std::string_view text);

}  // namespace pcd
