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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace smop {

/// A subset of a carrier of at most 64 points (or of a lattice of at most 64
/// elements), bit i standing for point i.
using PointSet = std::uint64_t;
using ElementSet = std::uint64_t;

inline constexpr std::size_t kMaxCarrier = 64;

constexpr PointSet bit(std::size_t i) { return PointSet{1} << i; }

constexpr PointSet full_set(std::size_t n) { return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1; }

constexpr bool contains(PointSet s, std::size_t i) { return (s >> i) & 1U; }

constexpr bool is_subset(PointSet a, PointSet b) { return (a & ~b) == 0; }

inline int popcount(PointSet s) { return std::popcount(s); }

/// Indices of the set bits, ascending.
inline std::vector<std::size_t> members(PointSet s) {
    std::vector<std::size_t> out;
    while (s != 0) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

/// Calls fn(i) for every set bit i, ascending.
template <typename Fn>
void for_each_member(PointSet s, Fn&& fn) {
    while (s != 0) {
        fn(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
}

/// "{a,b}" rendering with the given point names.
std::string format_set(PointSet s, const std::vector<std::string>& names);

}  // namespace smop
