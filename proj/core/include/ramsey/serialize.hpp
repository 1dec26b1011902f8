// Copyright 2026 The ramsey-approx Authors
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

#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/canonical.hpp"
#include "ramsey/order.hpp"
#include "ramsey/space.hpp"
#include "ramsey/structures.hpp"

namespace ramsey {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "ramsey-approx/1";

Json to_json(const Ordinal& a);
Ordinal ordinal_from_json(const Json& j);

Json to_json(const SNode& s);
SNode snode_from_json(const Json& j);

Json to_json(const TreeBlock& b);
TreeBlock tree_block_from_json(const Json& j);

Json to_json(const SBlock& b);
SBlock sblock_from_json(const Json& j);

Json to_json(const RMember& u);
RMember rmember_from_json(const Json& j);
Json to_json(const FiniteApprox& a);

Json to_json(const DCSet& s);
DCSet dcset_from_json(const Json& j);

Json to_json(const TukeyClass& c);
Json to_json(const HasseDiagram& h);

/// "[0,1,1]" style label used in DOT output.
std::string node_label(const TreeNode& t);
std::string node_label(const SNode& s);

std::string to_dot(const TreeBlock& b);
std::string to_dot(const SBlock& b);
std::string to_dot(const HasseDiagram& h);

}  // namespace ramsey
