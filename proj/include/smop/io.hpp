//  Copyright 2026 The smop Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "smop/duality.hpp"
#include "smop/frame_pairs.hpp"
#include "smop/lattice.hpp"
#include "smop/realline.hpp"
#include "smop/spaces.hpp"
#include "smop/symbolic_real.hpp"

namespace smop {

using json = nlohmann::json;

enum class InstanceKind { Lattice, FramePair, Space, SpaceMap, FrameHom, RealSet, CatalogMap };

std::string_view to_string(InstanceKind kind);

using InstancePayload =
    std::variant<FiniteLattice, FramePair, LocallySmallSpace, SpaceMap, FrameHom, SymbolicRealSet, CatalogMap>;

/// A parsed and validated instance with where it came from ("file:<path>",
/// "seed:<s>#<i>" or "enum:<n>#<i>").
struct InstanceBundle {
    InstanceKind kind;
    InstancePayload payload;
    std::string provenance;
};

// Writers. Element and point order is canonical so output diffs stay stable.
json to_json(const FiniteLattice& lattice);
json to_json(const FramePair& pair);
json to_json(const LocallySmallSpace& space);
json to_json(const SpaceMap& map);
json to_json(const FrameHom& hom);
json to_json(const SymbolicRealSet& set);
json to_json(const CatalogMap& map);
json to_json(const AdjunctionReport& report);
json to_json(const InstanceBundle& bundle);

// Readers. Shape problems raise ParseError; the module validators raise
// their own codes.
FiniteLattice lattice_from_json(const json& j);
FramePair pair_from_json(const json& j);
LocallySmallSpace space_from_json(const json& j);
SpaceMap space_map_from_json(const json& j);
FrameHom hom_from_json(const json& j);
SymbolicRealSet real_set_from_json(const json& j);
CatalogMap catalog_map_from_json(const json& j);

/// From an explicit "kind" field, else from the keys present.
InstanceKind detect_kind(const json& j);
InstanceBundle bundle_from_json(const json& j, std::string provenance);

/// Syntax errors name the line and column.
InstanceBundle parse_instance(std::string_view text, std::string provenance = "text");
InstanceBundle load_instance(const std::filesystem::path& path);
std::string serialize(const InstanceBundle& bundle);

}  // namespace smop
