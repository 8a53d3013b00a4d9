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
#include <string>
#include <vector>

#include "smop/bounds.hpp"
#include "smop/duality.hpp"
#include "smop/frame_pairs.hpp"
#include "smop/spaces.hpp"

namespace smop {

/// Runs job(i) for every i < count on up to `jobs` threads (0 = hardware
/// concurrency). Reports come back in index order whatever the schedule. A
/// job that throws yields a report with a single failed "exception" law.
std::vector<AdjunctionReport> run_reports(std::size_t count, const std::function<AdjunctionReport(std::size_t)>& job,
                                          unsigned jobs = 0);

struct SuiteSummary {
    std::string name;
    std::vector<AdjunctionReport> reports;

    std::size_t failures() const;
    std::size_t laws() const;
    bool ok() const { return failures() == 0; }
    void append(const SuiteSummary& other);
};

/// Spaces on 0..max_points points and downset frames of posets on
/// 0..max_poset points.
std::vector<LocallySmallSpace> space_suite(std::size_t max_points = 3);
std::vector<FramePair> frame_suite(std::size_t max_poset = 4);

/// Triangle identities on every space and frame pair.
SuiteSummary triangle_suite(const std::vector<LocallySmallSpace>& spaces, const std::vector<FramePair>& frames,
                            unsigned jobs = 0);
/// count seeded random morphisms, alternating space maps and localic maps:
/// the naturality square plus the triangle identities at both ends.
SuiteSummary morphism_suite(std::uint64_t seed, std::size_t count, unsigned jobs = 0);
/// count seeded composable chains, alternating Omega and Sigma functor laws.
SuiteSummary functor_suite(std::uint64_t seed, std::size_t count, unsigned jobs = 0);
/// Stone round-trips on every T0 space and every frame pair.
SuiteSummary roundtrip_suite(const std::vector<LocallySmallSpace>& spaces, const std::vector<FramePair>& frames,
                             unsigned jobs = 0);
/// Locally compact / continuous certificates plus round-trips, T0 spaces only.
SuiteSummary hl_suite(const std::vector<LocallySmallSpace>& spaces, const std::vector<FramePair>& frames,
                      const Bounds& bounds = default_bounds(), unsigned jobs = 0);

}  // namespace smop
