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

#include "smop/suites.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "smop/error.hpp"
#include "smop/generators.hpp"

namespace smop {

std::vector<AdjunctionReport> run_reports(std::size_t count, const std::function<AdjunctionReport(std::size_t)>& job,
                                          unsigned jobs) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<AdjunctionReport> out(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = job(i);
            } catch (const std::exception& e) {
                out[i].laws = {{"exception", false, e.what()}};
            }
        }
    };
    const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    if (threads <= 1) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

std::size_t SuiteSummary::failures() const {
    std::size_t n = 0;
    for (const auto& r : reports) n += r.failures();
    return n;
}

std::size_t SuiteSummary::laws() const {
    std::size_t n = 0;
    for (const auto& r : reports) n += r.laws.size();
    return n;
}

void SuiteSummary::append(const SuiteSummary& other) {
    reports.insert(reports.end(), other.reports.begin(), other.reports.end());
}

std::vector<LocallySmallSpace> space_suite(std::size_t max_points) {
    std::vector<LocallySmallSpace> out;
    for (std::size_t n = 0; n <= max_points; ++n) {
        auto spaces = generate_spaces_exhaustive(n);
        out.insert(out.end(), spaces.begin(), spaces.end());
    }
    return out;
}

std::vector<FramePair> frame_suite(std::size_t max_poset) {
    std::vector<FramePair> out;
    for (std::size_t n = 0; n <= max_poset; ++n) {
        auto frames = generate_frames_exhaustive(n);
        out.insert(out.end(), frames.begin(), frames.end());
    }
    return out;
}

namespace {

template <class T, class F>
SuiteSummary over_objects(std::string name, const std::vector<T>& objects, const char* prefix, F check, unsigned jobs) {
    SuiteSummary s{std::move(name), run_reports(
                                        objects.size(),
                                        [&](std::size_t i) {
                                            AdjunctionReport r = check(objects[i]);
                                            r.instance = std::string(prefix) + "#" + std::to_string(i);
                                            return r;
                                        },
                                        jobs)};
    return s;
}

std::vector<LocallySmallSpace> t0_only(const std::vector<LocallySmallSpace>& spaces) {
    std::vector<LocallySmallSpace> out;
    std::copy_if(spaces.begin(), spaces.end(), std::back_inserter(out), [](const auto& x) { return is_T0_space(x); });
    return out;
}

std::string seeded(const char* what, std::uint64_t seed, std::size_t i) {
    return std::string(what) + " seed=" + std::to_string(seed) + "#" + std::to_string(i);
}

}  // namespace

SuiteSummary triangle_suite(const std::vector<LocallySmallSpace>& spaces, const std::vector<FramePair>& frames,
                            unsigned jobs) {
    SuiteSummary s = over_objects(
        "triangles", spaces, "space", [](const LocallySmallSpace& x) { return check_both_triangles(x); }, jobs);
    s.append(over_objects(
        "triangles", frames, "frame", [](const FramePair& p) { return check_both_triangles(p); }, jobs));
    return s;
}

SuiteSummary morphism_suite(std::uint64_t seed, std::size_t count, unsigned jobs) {
    auto job = [seed](std::size_t i) {
        MorphismSource source(seed + i);
        AdjunctionReport r;
        if (i % 2 == 0) {
            const SpaceMap f = source.space_map();
            r = check_naturality(f);
            r.append(check_both_triangles(f.source()));
            r.append(check_both_triangles(f.target()));
            r.instance = seeded("space-map", seed, i);
        } else {
            const SpecialLocalicMap m = source.localic_map();
            r = check_naturality(m);
            r.append(check_both_triangles(m.domain()));
            r.append(check_both_triangles(m.codomain()));
            r.instance = seeded("localic-map", seed, i);
        }
        return r;
    };
    return {"naturality", run_reports(count, job, jobs)};
}

SuiteSummary functor_suite(std::uint64_t seed, std::size_t count, unsigned jobs) {
    auto job = [seed](std::size_t i) {
        MorphismSource source(seed + i);
        AdjunctionReport r;
        if (i % 2 == 0) {
            const auto [f, g] = source.space_chain();
            r = check_functor_laws(f, g);
            r.instance = seeded("space-chain", seed, i);
        } else {
            const auto [inner, outer] = source.localic_chain();
            r = check_functor_laws(inner, outer);
            r.instance = seeded("localic-chain", seed, i);
        }
        return r;
    };
    return {"functor laws", run_reports(count, job, jobs)};
}

SuiteSummary roundtrip_suite(const std::vector<LocallySmallSpace>& spaces, const std::vector<FramePair>& frames,
                             unsigned jobs) {
    SuiteSummary s = over_objects(
        "roundtrip", t0_only(spaces), "t0-space", [](const LocallySmallSpace& x) { return stone_roundtrip(x); },
        jobs);
    s.append(over_objects(
        "roundtrip", frames, "frame", [](const FramePair& p) { return stone_roundtrip(p); }, jobs));
    return s;
}

SuiteSummary hl_suite(const std::vector<LocallySmallSpace>& spaces, const std::vector<FramePair>& frames,
                      const Bounds& bounds, unsigned jobs) {
    SuiteSummary s = over_objects(
        "hofmann-lawson", t0_only(spaces), "t0-space",
        [&](const LocallySmallSpace& x) { return hofmann_lawson_report(x, bounds); }, jobs);
    s.append(over_objects(
        "hofmann-lawson", frames, "frame", [&](const FramePair& p) { return hofmann_lawson_report(p, bounds); },
        jobs));
    return s;
}

}  // namespace smop
