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

#include "smop/bits.hpp"
#include "smop/bounds.hpp"
#include "smop/spectrum.hpp"

namespace smop {

/// {u n v : u in U, v in V}
Family family_intersection(const Family& u, const Family& v);

/// A finite set with a smopology: a family of "small open" subsets that
/// contains the empty set, is closed under binary intersection and union,
/// and covers the carrier.
class LocallySmallSpace {
public:
    /// Checks the three axioms in order and throws MissingEmpty,
    /// NotIntersectionClosed, NotUnionClosed or DoesNotCover.
    static LocallySmallSpace validate(std::vector<std::string> carrier, Family smops);

    std::size_t size() const { return carrier_.size(); }
    const std::vector<std::string>& carrier() const { return carrier_; }
    const std::string& point_name(std::size_t x) const { return carrier_[x]; }
    const Family& smops() const { return smops_; }
    PointSet all() const { return full_set(size()); }
    bool is_smop(PointSet s) const { return family_contains(smops_, s); }
    std::string format(PointSet s) const { return format_set(s, carrier_); }

    bool operator==(const LocallySmallSpace& other) const {
        return carrier_ == other.carrier_ && smops_ == other.smops_;
    }

private:
    std::vector<std::string> carrier_;
    Family smops_;
};

inline LocallySmallSpace validate_smopology(std::vector<std::string> carrier, Family family) {
    return LocallySmallSpace::validate(std::move(carrier), std::move(family));
}

/// A total function between the carriers of two locally small spaces.
class SpaceMap {
public:
    /// Throws InvalidInstance if the map is not total into the target.
    SpaceMap(LocallySmallSpace source, LocallySmallSpace target, std::vector<std::size_t> map);

    static SpaceMap identity(const LocallySmallSpace& space);

    const LocallySmallSpace& source() const { return source_; }
    const LocallySmallSpace& target() const { return target_; }
    const std::vector<std::size_t>& map() const { return map_; }
    std::size_t operator()(std::size_t x) const { return map_[x]; }

    PointSet preimage(PointSet v) const;
    PointSet image(PointSet w) const;

    bool operator==(const SpaceMap& other) const {
        return source_ == other.source_ && target_ == other.target_ && map_ == other.map_;
    }

private:
    LocallySmallSpace source_;
    LocallySmallSpace target_;
    std::vector<std::size_t> map_;
};

/// g o f; throws InvalidInstance unless f's target is g's source.
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

/// Unions of subfamilies of the smops, sorted.
Family weakly_open_family(const LocallySmallSpace& space);
TopSpace weakly_open(const LocallySmallSpace& space);

/// The smops separate points.
bool is_T0_space(const LocallySmallSpace& space);

/// Every source smop lies inside the preimage of some target smop.
bool is_bounded_map(const SpaceMap& f);
/// f^-1(V) n W is a source smop for all smops V (target) and W (source).
bool is_continuous_map(const SpaceMap& f);
/// Preimages of weakly open sets are weakly open.
bool is_weakly_continuous_map(const SpaceMap& f);

/// ext{x}: the union of the weakly open sets missing x. Throws NotPrime if
/// the result is not prime in the weakly open frame.
PointSet ext_point(const LocallySmallSpace& space, std::size_t x);

/// Expands a topology by a basis that is a sublattice containing the empty
/// set. Throws NotABasis, NotSublattice or DoesNotCover.
LocallySmallSpace from_topology_basis(const TopSpace& topology, Family basis);

bool is_topologically_sober(const LocallySmallSpace& space, const Bounds& bounds = default_bounds());
bool is_topologically_locally_compact(const LocallySmallSpace& space, const Bounds& bounds = default_bounds());

}  // namespace smop
