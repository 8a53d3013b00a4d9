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

#include <utility>
#include <vector>

#include "oracles.hpp"
#include "smop/lattice.hpp"
#include "smop/spaces.hpp"

namespace fixture {

/// Reflexive-transitive closure of the given strict relations i < j.
inline smop::BoolMatrix order(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& less) {
    smop::BoolMatrix m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
    for (auto [i, j] : less) m[i][j] = true;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (m[i][k] && m[k][j]) m[i][j] = true;
            }
        }
    }
    return m;
}

/// 0 < a < 1
inline smop::FiniteLattice chain3() { return smop::validate_lattice(order(3, {{0, 1}, {1, 2}}), {"0", "a", "1"}); }

/// 0 < x, y < 1
inline smop::FiniteLattice b2() {
    return smop::validate_lattice(order(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), {"0", "x", "y", "1"});
}

/// 0 < a, b, c < 1
inline smop::FiniteLattice m3() {
    return smop::validate_lattice(order(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}), {"0", "a", "b", "c", "1"});
}

/// 0 < a < b < 1, 0 < c < 1
inline smop::FiniteLattice n5() {
    return smop::validate_lattice(order(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}), {"0", "a", "b", "c", "1"});
}

inline oracle::Matrix matrix(const smop::FiniteLattice& l) { return l.order_matrix(); }

inline oracle::Sets sets(const smop::Family& f) { return {f.begin(), f.end()}; }

inline std::vector<std::string> names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

/// Carrier "1".."n"; sets given as masks.
inline smop::LocallySmallSpace space(std::size_t n, smop::Family smops) {
    return smop::LocallySmallSpace::validate(names(n), std::move(smops));
}

}  // namespace fixture
