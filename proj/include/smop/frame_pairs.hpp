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

#include <string>
#include <vector>

#include "smop/bounds.hpp"
#include "smop/lattice.hpp"

namespace smop {

/// A frame L with a designated sublattice-with-zero L_s that sup-generates L.
///
/// For finite frames L_s is forced to be all of L: every join-irreducible must
/// itself be designated to be a join of designated elements, and binary joins
/// of join-irreducibles reach everything. The dominating and compatible
/// conditions below are nonetheless checked as stated, since they are the
/// morphism conditions that distinguish the symbolic real-line examples.
class FramePair {
public:
    /// Throws NotAFrame, MissingZero, NotSublattice or NotSupGenerating.
    static FramePair validate(FiniteLattice frame, ElementSet designated);
    /// (L, L)
    static FramePair whole(FiniteLattice frame);

    const FiniteLattice& frame() const { return frame_; }
    ElementSet designated() const { return designated_; }
    bool is_designated(Element e) const { return contains(designated_, e); }

    bool operator==(const FramePair& other) const {
        return frame_ == other.frame_ && designated_ == other.designated_;
    }

private:
    FramePair(FiniteLattice frame, ElementSet designated)
        : frame_(std::move(frame)), designated_(designated) {}

    FiniteLattice frame_;
    ElementSet designated_;
};

inline FramePair validate_pair(FiniteLattice frame, ElementSet designated) {
    return FramePair::validate(std::move(frame), designated);
}

/// A total function between the frames of two pairs. Construction only checks
/// totality; the homomorphism laws are checked by is_frame_hom.
class FrameHom {
public:
    FrameHom(FramePair source, FramePair target, std::vector<Element> map);

    static FrameHom identity(const FramePair& pair);

    const FramePair& source() const { return source_; }
    const FramePair& target() const { return target_; }
    const std::vector<Element>& map() const { return map_; }
    Element operator()(Element l) const { return map_[l]; }

    bool operator==(const FrameHom& other) const {
        return source_ == other.source_ && target_ == other.target_ && map_ == other.map_;
    }

private:
    FramePair source_;
    FramePair target_;
    std::vector<Element> map_;
};

/// second o first (frame direction); throws InvalidInstance when not composable.
FrameHom compose(const FrameHom& second, const FrameHom& first);

/// Preserves 0, 1, binary meets and joins, and the joins of all subsets (a
/// seeded sample of subsets past Bounds::subset_size). Reason is empty on success.
std::string frame_hom_failure(const std::vector<Element>& map, const FiniteLattice& source,
                              const FiniteLattice& target, const Bounds& bounds = default_bounds());

inline bool is_frame_hom(const std::vector<Element>& map, const FiniteLattice& source, const FiniteLattice& target,
                         const Bounds& bounds = default_bounds()) {
    return frame_hom_failure(map, source, target, bounds).empty();
}

inline bool is_frame_hom(const FrameHom& h, const Bounds& bounds = default_bounds()) {
    return is_frame_hom(h.map(), h.source().frame(), h.target().frame(), bounds);
}

/// For every designated m of the target some designated l of the source has
/// h(l) /\ m = m.
bool is_dominating(const FrameHom& h);
/// h(l) /\ m is designated in the target for all designated l and m.
bool is_compatible(const FrameHom& h);

/// The right Galois adjoint h_* of a dominating compatible frame
/// homomorphism h : (L, L_s) -> (M, M_s). As a morphism of locales it runs
/// from (M, M_s) to (L, L_s).
class SpecialLocalicMap {
public:
    const FrameHom& underlying() const { return hom_; }
    /// h_*, indexed by elements of the hom's target.
    const std::vector<Element>& adjoint_map() const { return adjoint_; }
    Element operator()(Element m) const { return adjoint_[m]; }

    /// Locale direction: domain is the hom's target, codomain its source.
    const FramePair& domain() const { return hom_.target(); }
    const FramePair& codomain() const { return hom_.source(); }

    bool operator==(const SpecialLocalicMap& other) const {
        return hom_ == other.hom_ && adjoint_ == other.adjoint_;
    }

private:
    friend SpecialLocalicMap right_adjoint(const FrameHom& h);
    SpecialLocalicMap(FrameHom hom, std::vector<Element> adjoint)
        : hom_(std::move(hom)), adjoint_(std::move(adjoint)) {}

    FrameHom hom_;
    std::vector<Element> adjoint_;
};

/// m -> join{l : h(l) <= m}, with the Galois law h(l) <= m <=> l <= h_*(m)
/// verified on all pairs. Throws NotFrameHom, NotDominating, NotCompatible,
/// or GaloisViolation.
SpecialLocalicMap right_adjoint(const FrameHom& h);

/// outer o inner in the locale direction: for inner = k_* and outer = h_*,
/// the result is (k o h)_*.
SpecialLocalicMap compose(const SpecialLocalicMap& outer, const SpecialLocalicMap& inner);

/// If h maps L_s onto M_s, then h is dominating and compatible. Returns the
/// truth of that implication on h.
bool check_remark_onto(const FrameHom& h);

}  // namespace smop
