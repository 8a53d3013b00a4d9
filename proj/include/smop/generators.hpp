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

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "smop/frame_pairs.hpp"
#include "smop/lattice.hpp"
#include "smop/spaces.hpp"

namespace smop {

/// Downset frames of every labeled poset on exactly n points (n <= 4), with
/// designated = whole frame. 1, 3, 19, 219 frames for n = 1..4.
std::vector<FramePair> generate_frames_exhaustive(std::size_t n);
/// Downset frames of seeded random posets on poset_size points (<= 6).
std::vector<FramePair> generate_frames_random(std::uint64_t seed, std::size_t count, std::size_t poset_size);

/// Every labeled topology on exactly n points (n <= 3), carrier "1".."n".
std::vector<LocallySmallSpace> generate_spaces_exhaustive(std::size_t n);
/// Random subsets closed under union and intersection together with the
/// empty set and the carrier; n <= 6.
std::vector<LocallySmallSpace> generate_spaces_random(std::uint64_t seed, std::size_t count, std::size_t n);

/// A seeded stream of morphisms and composable chains for the law suites.
class MorphismSource {
public:
    explicit MorphismSource(std::uint64_t seed) : rng_(seed) {}

    Poset poset(std::size_t n);
    LocallySmallSpace space(std::size_t n);

    /// A continuous map between random spaces on 1..max_points points.
    SpaceMap space_map(std::size_t max_points = 3);
    /// f : X -> Y and g : Y -> Z.
    std::pair<SpaceMap, SpaceMap> space_chain(std::size_t max_points = 3);

    /// h_* for h = g^-1 : O(P) -> O(Q), g : Q -> P monotone, posets on
    /// 1..max_points points.
    SpecialLocalicMap localic_map(std::size_t max_points = 3);
    /// (inner, outer) with inner : N -> M and outer : M -> L.
    std::pair<SpecialLocalicMap, SpecialLocalicMap> localic_chain(std::size_t max_points = 3);

private:
    std::size_t below(std::size_t n);
    std::size_t points(std::size_t max_points) { return 1 + below(max_points); }
    SpaceMap continuous_map(const LocallySmallSpace& source, const LocallySmallSpace& target);
    std::vector<std::size_t> monotone_map(const Poset& from, const Poset& to);

    std::mt19937_64 rng_;
};

/// The whole-frame pair of the downset lattice of a poset.
FramePair downset_pair(const Poset& poset);
/// g^-1 : O(P) -> O(Q) for monotone g : Q -> P. Throws InvalidInstance if g
/// is not monotone.
FrameHom preimage_hom(const Poset& p, const Poset& q, const std::vector<std::size_t>& g);

}  // namespace smop
