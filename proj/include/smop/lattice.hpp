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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smop/bits.hpp"
#include "smop/bounds.hpp"

namespace smop {

/// Lattice elements are indices 0..size-1.
using Element = std::size_t;

using BoolMatrix = std::vector<std::vector<bool>>;

/// A finite partial order given by its order matrix.
class Poset {
public:
    /// Throws NotAPartialOrder naming the first offending pair.
    explicit Poset(BoolMatrix leq);

    static Poset antichain(std::size_t n);
    static Poset chain(std::size_t n);

    std::size_t size() const { return leq_.size(); }
    bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
    const BoolMatrix& matrix() const { return leq_; }
    /// Points below i (including i).
    PointSet down(std::size_t i) const { return down_[i]; }

    bool operator==(const Poset& other) const { return leq_ == other.leq_; }

private:
    BoolMatrix leq_;
    std::vector<PointSet> down_;
};

/// A validated finite bounded lattice with precomputed meet/join tables.
/// Immutable after construction.
class FiniteLattice {
public:
    /// Validates the order matrix: partial order first, then meets, joins,
    /// bottom and top. Throws Error naming the first violated axiom.
    static FiniteLattice validate(const BoolMatrix& leq, std::vector<std::string> labels = {});

    std::size_t size() const { return size_; }
    bool leq(Element a, Element b) const { return contains(up_[a], b); }
    Element meet(Element a, Element b) const { return meet_[a * size_ + b]; }
    Element join(Element a, Element b) const { return join_[a * size_ + b]; }
    Element bottom() const { return bottom_; }
    Element top() const { return top_; }
    /// {b : a <= b}
    ElementSet up(Element a) const { return up_[a]; }
    /// {b : b <= a}
    ElementSet down(Element a) const { return down_[a]; }
    ElementSet all() const { return full_set(size_); }

    /// Join of a subset; the join of the empty set is bottom.
    Element join_of(ElementSet s) const;
    /// Meet of a subset; the meet of the empty set is top.
    Element meet_of(ElementSet s) const;

    const std::string& label(Element a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    BoolMatrix order_matrix() const;

    bool operator==(const FiniteLattice& other) const {
        return size_ == other.size_ && up_ == other.up_;
    }

private:
    FiniteLattice() = default;

    std::size_t size_ = 0;
    std::vector<ElementSet> up_;
    std::vector<ElementSet> down_;
    std::vector<std::uint8_t> meet_;
    std::vector<std::uint8_t> join_;
    Element bottom_ = 0;
    Element top_ = 0;
    std::vector<std::string> labels_;
};

inline FiniteLattice validate_lattice(const BoolMatrix& leq, std::vector<std::string> labels = {}) {
    return FiniteLattice::validate(leq, std::move(labels));
}

/// 0 < 1 < ... < n-1
FiniteLattice chain_lattice(std::size_t n);
/// Powerset of `atoms` points under inclusion (B2 for atoms = 2).
FiniteLattice boolean_lattice(std::size_t atoms);

bool is_distributive(const FiniteLattice& lattice);

struct FrameLawReport {
    bool holds = true;
    /// true when every (a, S) pair was enumerated; false when the law was
    /// discharged by binary distributivity plus a seeded subset sample.
    bool exhaustive = true;
    std::size_t subsets_checked = 0;
    std::string justification;
    std::optional<std::string> counterexample;
};

/// a /\ join(S) == join{a /\ s : s in S} for all a and S.
FrameLawReport frame_law_report(const FiniteLattice& lattice, const Bounds& bounds = default_bounds());
inline bool check_frame_law(const FiniteLattice& lattice, const Bounds& bounds = default_bounds()) {
    return frame_law_report(lattice, bounds).holds;
}

/// Non-unit primes: p != 1 with p = a /\ b implying p = a or p = b.
std::vector<Element> primes(const FiniteLattice& lattice);

/// How way-below queries behave past Bounds::way_below_size.
enum class Oracle {
    Enumerate,            ///< always enumerate; SizeLimitExceeded past the bound
    ShortcutBeyondBound,  ///< past the bound use b <= a and flag the result
};

struct WayBelowRelation {
    /// below[a] = {b : b << a}
    std::vector<ElementSet> below;
    bool shortcut = false;

    bool holds(Element b, Element a) const { return contains(below[a], b); }
};

/// The whole way-below relation from one pass over the directed subsets.
WayBelowRelation way_below_relation(const FiniteLattice& lattice, Oracle oracle = Oracle::Enumerate,
                                    const Bounds& bounds = default_bounds());

/// b << a: every directed D with a <= join(D) contains some d >= b.
bool way_below(const FiniteLattice& lattice, Element b, Element a, Oracle oracle = Oracle::Enumerate,
               const Bounds& bounds = default_bounds());

/// Every a equals the join of the elements way below it.
bool is_continuous_frame(const FiniteLattice& lattice, Oracle oracle = Oracle::Enumerate,
                         const Bounds& bounds = default_bounds());

/// Every element is the meet of the primes above it (top is the empty meet).
bool is_spatial(const FiniteLattice& lattice);

/// Down-closed subsets of the poset ordered by inclusion. Element order is by
/// increasing bitmask, so 0 is the empty downset and size-1 the whole poset.
FiniteLattice downset_lattice(const Poset& poset);
/// The downsets themselves, in the element order of downset_lattice.
std::vector<PointSet> downsets(const Poset& poset);

/// All labeled partial orders on n points (n <= 5), deterministic order.
void for_each_poset(std::size_t n, const std::function<void(const Poset&)>& fn);
std::vector<Poset> enumerate_posets(std::size_t n);

}  // namespace smop
