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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "oracles.hpp"
#include "smop/duality.hpp"
#include "smop/error.hpp"
#include "smop/generators.hpp"
#include "smop/realline.hpp"
#include "smop/spaces.hpp"
#include "smop/spectrum.hpp"
#include "smop/suites.hpp"

using namespace smop;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

bool run(int number, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_s) {
        out.pass = false;
        out.detail += fmt::format("; over the {:.0f}s budget", budget_s);
    }
    fmt::print("{} {}: {} ({}) [{:.2f}s]\n", out.pass ? "PASS" : "FAIL", number, title, out.detail, secs);
    std::fflush(stdout);
    return out.pass;
}

std::string first_failure(const SuiteSummary& s) {
    for (const auto& r : s.reports) {
        for (const auto& law : r.laws) {
            if (!law.pass) return r.instance + " / " + law.name + ": " + law.witness;
        }
    }
    return {};
}

Outcome from_suite(const SuiteSummary& s) {
    Outcome o{s.ok(), fmt::format("{}: {} instances, {} laws, {} failures", s.name, s.reports.size(), s.laws(),
                                  s.failures())};
    if (!s.ok()) o.detail += "; first: " + first_failure(s);
    return o;
}

std::vector<LocallySmallSpace> t0_only(const std::vector<LocallySmallSpace>& spaces) {
    std::vector<LocallySmallSpace> out;
    for (const auto& x : spaces) {
        if (is_T0_space(x)) out.push_back(x);
    }
    return out;
}

}  // namespace

int main() {
    const std::vector<FramePair> four = generate_frames_exhaustive(4);
    const std::vector<FramePair> frames = frame_suite(4);
    const std::vector<LocallySmallSpace> spaces = space_suite(3);
    bool all = true;

    all &= run(1, "Delta is a frame homomorphism on every downset lattice of a 4-point poset", 10, [&] {
        Outcome o;
        const std::size_t expected = oracle::count_posets(4);
        std::size_t bad = 0;
        for (const auto& p : four) {
            if (!check_delta_frame_hom(p.frame()).ok()) ++bad;
        }
        o.pass = four.size() == expected && expected == 219 && bad == 0;
        o.detail = fmt::format("{} lattices, brute-force poset count {}, {} with violations", four.size(), expected, bad);
        return o;
    });

    all &= run(2, "spectra are sober; sober iff T0 on the 3-point topologies", 5, [&] {
        std::size_t not_sober = 0;
        for (const auto& p : four) {
            if (!is_sober(spectrum_space(p.frame(), p.frame().all()).topology)) ++not_sober;
        }
        std::size_t total = 0, sober = 0, t0 = 0, mismatched = 0;
        for (const auto& opens : oracle::all_topologies(3)) {
            const TopSpace t = TopSpace::validate({"1", "2", "3"}, Family(opens.begin(), opens.end()));
            const bool s = is_sober(t);
            ++total;
            sober += s;
            t0 += is_T0(t);
            if (s != is_T0(t) || s != oracle::is_sober(3, opens)) ++mismatched;
        }
        Outcome o;
        o.pass = not_sober == 0 && total == 29 && sober == 19 && t0 == 19 && mismatched == 0;
        o.detail = fmt::format("{} non-sober spectra; {} topologies, {} sober, {} T0, {} mismatches", not_sober, total,
                               sober, t0, mismatched);
        return o;
    });

    all &= run(3, "way-below is the order on small suite lattices; continuous and spatial suite-wide", 60, [&] {
        Bounds wide = default_bounds();
        wide.way_below_size = 16;
        std::size_t enumerated = 0, bad = 0, not_continuous = 0, not_spatial = 0;
        for (const auto& p : frames) {
            const FiniteLattice& l = p.frame();
            if (l.size() <= 12) {
                ++enumerated;
                const WayBelowRelation rel = way_below_relation(l, Oracle::Enumerate);
                for (Element a = 0; a < l.size(); ++a) {
                    if (rel.below[a] != l.down(a)) ++bad;
                }
            }
            if (!is_continuous_frame(l, Oracle::Enumerate, wide)) ++not_continuous;
            if (!is_spatial(l)) ++not_spatial;
        }
        Outcome o;
        o.pass = bad == 0 && not_continuous == 0 && not_spatial == 0;
        o.detail = fmt::format("{} lattices enumerated at <= 12 elements, {} mismatching rows; of {} frames {} not "
                               "continuous, {} not spatial",
                               enumerated, bad, frames.size(), not_continuous, not_spatial);
        return o;
    });

    all &= run(4, "triangle identities, naturality squares and functor laws", 60, [&] {
        SuiteSummary s = triangle_suite(spaces, frames);
        s.append(morphism_suite(20260101, 500));
        s.append(functor_suite(20260102, 200));
        Outcome o = from_suite(s);
        return o;
    });

    all &= run(5, "unit and counit are isomorphisms on T0 spaces and frame pairs", 30,
               [&] { return from_suite(roundtrip_suite(t0_only(spaces), frames)); });

    all &= run(6, "continuous frames and locally compact sober spaces certified", 30, [&] {
        Bounds wide = default_bounds();
        wide.way_below_size = 16;
        const SuiteSummary s = hl_suite(t0_only(spaces), frames, wide);
        Outcome o = from_suite(s);
        for (const auto& r : s.reports) {
            for (const auto& law : r.laws) {
                if (law.witness.find("shortcut") != std::string::npos) {
                    o.pass = false;
                    o.detail += "; shortcut used on " + r.instance;
                    return o;
                }
            }
        }
        return o;
    });

    all &= run(7, "real-line classification table", 1, [&] {
        struct Row {
            const char* name;
            bool bounded, continuous, weakly;
        };
        const Row expected[] = {{"neg_id", false, true, true},
                                {"sin", true, false, true},
                                {"arctan", true, true, true},
                                {"exp_neg", false, true, true}};
        Outcome o;
        const auto rows = realline_table();
        o.pass = rows.size() == 4;
        for (std::size_t i = 0; i < rows.size() && i < 4; ++i) {
            const auto& r = rows[i];
            const auto& c = r.classification;
            const bool match = r.map == expected[i].name && c.bounded.holds == expected[i].bounded &&
                               c.continuous.holds == expected[i].continuous &&
                               c.weakly_continuous.holds == expected[i].weakly &&
                               r.hom.dominating.holds == expected[i].bounded &&
                               r.hom.compatible.holds == expected[i].continuous && r.agrees;
            const bool witnessed = !c.bounded.witness.empty() && !c.continuous.witness.empty() &&
                                   !c.weakly_continuous.witness.empty() && !r.hom.dominating.witness.empty() &&
                                   !r.hom.compatible.witness.empty();
            o.pass = o.pass && match && witnessed;
            o.detail += fmt::format("{}{}: b={} c={} wc={} dom={} comp={}", i ? "; " : "", r.map, c.bounded.holds,
                                    c.continuous.holds, c.weakly_continuous.holds, r.hom.dominating.holds,
                                    r.hom.compatible.holds);
            if (!c.continuous.holds) o.detail += " [" + c.continuous.witness + "]";
        }
        return o;
    });

    all &= run(8, "finite degeneracies: weakly open = smops, maps bounded, pairs designate everything", 10, [&] {
        std::size_t wo_bad = 0, unbounded = 0, maps = 0, pair_bad = 0, subsets = 0;
        for (std::size_t n = 0; n <= 3; ++n) {
            for (const auto& x : generate_spaces_exhaustive(n)) {
                if (weakly_open_family(x) != x.smops()) ++wo_bad;
            }
        }
        for (const auto& x : spaces) {
            for (const auto& y : spaces) {
                if (x.size() > 2 || y.size() > 2 || y.size() == 0) continue;
                const std::size_t count = x.size() == 0 ? 1 : (x.size() == 1 ? y.size() : y.size() * y.size());
                for (std::size_t code = 0; code < count; ++code) {
                    std::vector<std::size_t> m;
                    std::size_t c = code;
                    for (std::size_t i = 0; i < x.size(); ++i) {
                        m.push_back(c % y.size());
                        c /= y.size();
                    }
                    ++maps;
                    if (!is_bounded_map(SpaceMap(x, y, m))) ++unbounded;
                }
            }
        }
        MorphismSource src(8);
        for (int i = 0; i < 200; ++i) {
            ++maps;
            if (!is_bounded_map(src.space_map(3))) ++unbounded;
        }
        for (const auto& p : frames) {
            const FiniteLattice& l = p.frame();
            if (l.size() > 10) continue;
            for (ElementSet s = 0; s <= l.all(); ++s) {
                ++subsets;
                bool valid = true;
                try {
                    FramePair::validate(l, s);
                } catch (const Error&) {
                    valid = false;
                }
                if (valid != (s == l.all())) ++pair_bad;
            }
        }
        for (const auto& p : frames) {
            if (p.designated() != p.frame().all()) ++pair_bad;
        }
        Outcome o;
        o.pass = wo_bad == 0 && unbounded == 0 && pair_bad == 0;
        o.detail = fmt::format("{} spaces with wo != smops; {} of {} maps unbounded; {} designated subsets tried, {} "
                               "valid proper pairs",
                               wo_bad, unbounded, maps, subsets, pair_bad);
        return o;
    });

    fmt::print("{}\n", all ? "ALL PASS" : "SOME FAILED");
    return all ? 0 : 1;
}
