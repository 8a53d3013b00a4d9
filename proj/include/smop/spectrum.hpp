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

#include <optional>
#include <string>
#include <vector>

#include "smop/bits.hpp"
#include "smop/bounds.hpp"
#include "smop/lattice.hpp"

namespace smop {

/// A family of subsets of a common carrier, kept sorted and deduplicated.
using Family = std::vector<PointSet>;

Family normalize_family(Family family);
bool family_contains(const Family& family, PointSet s);

/// A finite topological space: carrier names plus the family of opens.
class TopSpace {
public:
    /// Throws NotATopology unless opens contains the empty set and the carrier
    /// and is closed under binary intersection and union.
    static TopSpace validate(std::vector<std::string> carrier, Family opens);

    std::size_t size() const { return carrier_.size(); }
    const std::vector<std::string>& carrier() const { return carrier_; }
    const Family& opens() const { return opens_; }
    PointSet all() const { return full_set(size()); }
    bool is_open(PointSet s) const { return family_contains(opens_, s); }
    /// Smallest closed set containing the point.
    PointSet closure_of_point(std::size_t x) const;

    bool operator==(const TopSpace& other) const {
        return carrier_ == other.carrier_ && opens_ == other.opens_;
    }

private:
    std::vector<std::string> carrier_;
    Family opens_;
};

/// Spec(L) with the hull-kernel map. Points are the primes of L in increasing
/// element order; delta[a] is Delta_L(a) over point indices.
struct Spectrum {
    std::vector<Element> points;
    std::vector<PointSet> delta;

    std::optional<std::size_t> point_of(Element p) const;
    std::vector<std::string> names(const FiniteLattice& lattice) const;
};

Spectrum spectrum(const FiniteLattice& lattice);

/// Delta_L(a) = {p in Spec(L) : a !<= p}, as a set of lattice elements.
ElementSet delta(const FiniteLattice& lattice, Element a);

struct SpectrumSpace {
    Spectrum spec;
    TopSpace topology;          ///< Delta_L(L), the hull-kernel topology
    Family designated;          ///< Delta_L(S)
};

SpectrumSpace spectrum_space(const FiniteLattice& lattice, ElementSet subset);

struct DeltaHomReport {
    std::vector<std::string> violations;
    bool exhaustive = true;     ///< all subset joins enumerated
    bool ok() const { return violations.empty(); }
};

/// Delta(0) = {}, Delta(1) = Spec, Delta(join S) = union Delta(S),
/// Delta(a /\ b) = Delta(a) n Delta(b), and Delta(L) a topology.
DeltaHomReport check_delta_frame_hom(const FiniteLattice& lattice, const Bounds& bounds = default_bounds());

bool is_T0(const TopSpace& space);

/// Every irreducible closed set is the closure of exactly one point.
bool is_sober(const TopSpace& space, const Bounds& bounds = default_bounds());

/// Every directed open cover of K has a member containing K.
bool is_compact(const TopSpace& space, PointSet k, const Bounds& bounds = default_bounds());

/// For x in open U there are an open V and a compact K with x in V <= K <= U.
bool is_locally_compact(const TopSpace& space, const Bounds& bounds = default_bounds());

/// a -> Delta_L(a) is injective.
bool delta_iso_check(const FiniteLattice& lattice);

}  // namespace smop
