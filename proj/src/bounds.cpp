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

#include "smop/bounds.hpp"

#include <cstdlib>
#include <string>

#include "smop/bits.hpp"
#include "smop/error.hpp"

namespace smop {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::MissingMeet: return "MissingMeet";
    case ErrorCode::MissingJoin: return "MissingJoin";
    case ErrorCode::NoBottom: return "NoBottom";
    case ErrorCode::NoTop: return "NoTop";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::MissingEmpty: return "MissingEmpty";
    case ErrorCode::NotIntersectionClosed: return "NotIntersectionClosed";
    case ErrorCode::NotUnionClosed: return "NotUnionClosed";
    case ErrorCode::DoesNotCover: return "DoesNotCover";
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::NotSublattice: return "NotSublattice";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::MissingZero: return "MissingZero";
    case ErrorCode::NotSupGenerating: return "NotSupGenerating";
    case ErrorCode::NotFrameHom: return "NotFrameHom";
    case ErrorCode::NotDominating: return "NotDominating";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::GaloisViolation: return "GaloisViolation";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::NotContinuous: return "NotContinuous";
    case ErrorCode::PrimeNotPreserved: return "PrimeNotPreserved";
    case ErrorCode::NotSober: return "NotSober";
    case ErrorCode::NotSpatial: return "NotSpatial";
    case ErrorCode::NotT0: return "NotT0";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::UndecidableOrder: return "UndecidableOrder";
    case ErrorCode::NotWeaklyContinuous: return "NotWeaklyContinuous";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    }
    return "Unknown";
}

std::string format_set(PointSet s, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for_each_member(s, [&](std::size_t i) {
        if (!first) out += ",";
        first = false;
        out += i < names.size() ? names[i] : std::to_string(i);
    });
    return out + "}";
}

namespace {

void read_env(const char* name, std::size_t& slot) {
    if (const char* raw = std::getenv(name)) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(raw, &end, 10);
        if (end != raw && *end == '\0') slot = static_cast<std::size_t>(value);
    }
}

}  // namespace

Bounds Bounds::from_env() {
    Bounds b;
    read_env("SMOP_WAY_BELOW_BOUND", b.way_below_size);
    read_env("SMOP_SUBSET_BOUND", b.subset_size);
    read_env("SMOP_COVER_BOUND", b.cover_opens);
    read_env("SMOP_CLOSED_BOUND", b.closed_sets);
    return b;
}

const Bounds& default_bounds() {
    static const Bounds bounds = Bounds::from_env();
    return bounds;
}

}  // namespace smop
