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
#include <string_view>
#include <variant>
#include <vector>

#include "smop/symbolic_real.hpp"

namespace smop {

/// x -> p*x + q, p != 0
struct Affine {
    Rational p;
    Rational q;
};

/// Increasing onto the open range (lo, hi) with inverse tan; models arctan.
struct MonotoneBounded {
    SymbolicReal lo;
    SymbolicReal hi;
};

/// Decreasing onto (0, +inf) with inverse -ln; models e^-x.
struct MonotoneUnboundedDecreasing {};

/// Onto [-1, 1] with the given period; models sin.
struct PeriodicOscillator {
    SymbolicReal period;
};

using CatalogKind = std::variant<Affine, MonotoneBounded, MonotoneUnboundedDecreasing, PeriodicOscillator>;

struct CatalogMap {
    std::string name;
    CatalogKind kind;
};

/// Throws InvalidInstance when p == 0.
CatalogMap affine_map(Rational p, Rational q, std::string name = "affine");
CatalogMap neg_id();
CatalogMap sine();
CatalogMap arctangent();
CatalogMap exp_neg();
/// -id, sin, arctan, exp_neg in that order.
std::vector<CatalogMap> catalog();
/// By name: neg_id, sin, arctan, exp_neg. Throws InvalidInstance.
CatalogMap catalog_map(std::string_view name);

/// Finite union of open intervals bounded from above.
bool lplusom_membership(const SymbolicRealSet& s);

/// Exact preimage. Periodic inputs raise UnsupportedShape.
SymbolicRealSet preimage(const CatalogMap& m, const SymbolicRealSet& s);
SymbolicRealSet image(const Affine& f, const SymbolicRealSet& s);

/// A value at or above every f(x) with x < d, or nullopt when f is unbounded
/// above on (-inf, d).
std::optional<SymbolicReal> upper_bound_below(const CatalogMap& m, const SymbolicReal& d);

/// Where the qualitative shape of preimages changes.
std::vector<SymbolicReal> critical_values(const CatalogMap& m);
/// The critical values plus points inside every cell they cut out, smallest
/// magnitude first.
std::vector<SymbolicReal> sample_points(const CatalogMap& m);

struct Verdict {
    bool holds = false;
    std::string witness;
};

/// The map as a self-map of the reals with the smopology of finite unions of
/// bounded-above open intervals.
struct MapClassification {
    Verdict bounded;
    Verdict continuous;
    Verdict weakly_continuous;
};

struct HomVerdict {
    Verdict dominating;
    Verdict compatible;
};

/// Decided through preimages of representative smops.
MapClassification classify_map(const CatalogMap& m);
/// Decided independently: dominating from image bounds, compatible by counting
/// preimage components. Throws NotWeaklyContinuous.
HomVerdict frame_hom_verdict(const CatalogMap& m);

struct TableRow {
    std::string map;
    MapClassification classification;
    HomVerdict hom;
    /// bounded == dominating and continuous == compatible
    bool agrees = false;
};

std::vector<TableRow> realline_table();

}  // namespace smop
