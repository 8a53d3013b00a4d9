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

#include <stdexcept>
#include <string>
#include <string_view>

namespace smop {

enum class ErrorCode {
    // lattice_core
    NotAPartialOrder,
    MissingMeet,
    MissingJoin,
    NoBottom,
    NoTop,
    SizeLimitExceeded,
    NotAFrame,
    // spaces / spectrum
    MissingEmpty,
    NotIntersectionClosed,
    NotUnionClosed,
    DoesNotCover,
    NotATopology,
    NotABasis,
    NotSublattice,
    NotPrime,
    // frame_pairs
    MissingZero,
    NotSupGenerating,
    NotFrameHom,
    NotDominating,
    NotCompatible,
    GaloisViolation,
    // duality_engine
    NotBounded,
    NotContinuous,
    PrimeNotPreserved,
    NotSober,
    NotSpatial,
    NotT0,
    InvariantViolation,
    // realline_exemplars
    UnsupportedShape,
    UndecidableOrder,
    NotWeaklyContinuous,
    // cli_io
    ParseError,
    InvalidInstance,
};

std::string_view to_string(ErrorCode code);

/// The single exception type of the library. `what()` carries the code name
/// followed by a human-readable detail (offending pair, point, element...).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
          code_(code), detail_(detail) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace smop
