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

#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "smop/error.hpp"
#include "smop/spectrum.hpp"

using namespace smop;

namespace {

std::vector<FiniteLattice> suite_lattices(std::size_t max_points) {
    std::vector<FiniteLattice> out;
    for (std::size_t n = 0; n <= max_points; ++n) {
        for_each_poset(n, [&](const Poset& p) { out.push_back(downset_lattice(p)); });
    }
    return out;
}

oracle::Sets to_sets(const Family& f) { return {f.begin(), f.end()}; }

}  // namespace

TEST_CASE("spectrum of the four-element boolean lattice") {
    const FiniteLattice b = fixture::b2();
    const Spectrum s = spectrum(b);
    CHECK(s.points == std::vector<Element>{1, 2});
    CHECK(s.names(b) == std::vector<std::string>{"x", "y"});
    // Delta(x) = {y}, Delta(0) empty, Delta(1) everything
    CHECK(s.delta[1] == bit(1));
    CHECK(s.delta[2] == bit(0));
    CHECK(s.delta[0] == 0);
    CHECK(s.delta[3] == 3);
    CHECK(delta(b, 1) == bit(2));
    CHECK(s.point_of(2) == std::optional<std::size_t>{1});
    CHECK_FALSE(s.point_of(3).has_value());

    const SpectrumSpace sp = spectrum_space(b, b.all());
    CHECK(sp.topology.opens() == Family{0, 1, 2, 3});
    CHECK(is_T0(sp.topology));
}

TEST_CASE("spectrum of the three-chain") {
    const FiniteLattice c = fixture::chain3();
    const SpectrumSpace sp = spectrum_space(c, c.all());
    CHECK(sp.spec.names(c) == std::vector<std::string>{"0", "a"});
    // opens {}, {0}, {0,a}
    CHECK(sp.topology.opens() == Family{0, 1, 3});
    CHECK(sp.designated == Family{0, 1, 3});
    const SpectrumSpace part = spectrum_space(c, bit(0) | bit(2));
    CHECK(part.designated == Family{0, 3});
}

TEST_CASE("Delta is a frame homomorphism onto the hull-kernel topology") {
    for (const auto& l : suite_lattices(4)) {
        const DeltaHomReport r = check_delta_frame_hom(l);
        CHECK(r.ok());
        CHECK(r.exhaustive);
        CHECK(delta_iso_check(l));
        const auto m = fixture::matrix(l);
        for (Element a = 0; a < l.size(); ++a) CHECK(delta(l, a) == oracle::delta(m, a));
    }
}

TEST_CASE("Delta on a non-distributive lattice breaks") {
    CHECK_FALSE(check_delta_frame_hom(fixture::m3()).ok());
    // still injective there: a, b, c are all meet-irreducible
    CHECK(delta_iso_check(fixture::m3()));
}

TEST_CASE("topology validation") {
    CHECK_NOTHROW(TopSpace::validate(fixture::names(2), {0, 1, 3}));
    CHECK_THROWS_AS(TopSpace::validate(fixture::names(2), {0, 1, 2}), Error);
    CHECK_THROWS_AS(TopSpace::validate(fixture::names(2), {1, 3}), Error);
    try {
        TopSpace::validate(fixture::names(2), {0, 1});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotATopology);
    }
    const TopSpace t = TopSpace::validate(fixture::names(2), {3, 0, 1, 1});
    CHECK(t.opens() == Family{0, 1, 3});
    CHECK(t.closure_of_point(0) == 3);
    CHECK(t.closure_of_point(1) == 2);
}

TEST_CASE("sobriety matches closure-based brute force on all small topologies") {
    std::size_t total3 = 0;
    std::size_t t0_3 = 0;
    for (std::size_t n = 0; n <= 3; ++n) {
        for (const auto& opens : oracle::all_topologies(n)) {
            const TopSpace t = TopSpace::validate(fixture::names(n), Family(opens.begin(), opens.end()));
            const bool sober = is_sober(t);
            CHECK(sober == oracle::is_sober(n, opens));
            CHECK(is_T0(t) == oracle::is_t0(n, opens));
            // finite spaces: sober exactly when T0
            CHECK(sober == is_T0(t));
            if (n == 3) {
                ++total3;
                if (is_T0(t)) ++t0_3;
            }
        }
    }
    CHECK(oracle::all_topologies(1).size() == 1);
    CHECK(oracle::all_topologies(2).size() == 4);
    CHECK(total3 == 29);
    CHECK(t0_3 == 19);
}

TEST_CASE("spectra are sober and locally compact") {
    for (const auto& l : suite_lattices(4)) {
        const SpectrumSpace sp = spectrum_space(l, l.all());
        CHECK(is_sober(sp.topology));
        CHECK(is_T0(sp.topology));
        CHECK(is_locally_compact(sp.topology));
        CHECK(oracle::is_sober(sp.topology.size(), to_sets(sp.topology.opens())));
    }
}

TEST_CASE("compactness of finite sets") {
    const TopSpace t = TopSpace::validate(fixture::names(2), {0, 1, 3});
    CHECK(is_compact(t, 3));
    CHECK(is_compact(t, 0));
    CHECK(is_locally_compact(t));
}

TEST_CASE("small named spaces") {
    const TopSpace sierpinski = TopSpace::validate({"x", "y"}, {0, 1, 3});
    const TopSpace indiscrete = TopSpace::validate({"x", "y"}, {0, 3});
    const TopSpace discrete = TopSpace::validate(fixture::names(3), {0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(is_T0(sierpinski));
    CHECK(is_sober(sierpinski));
    CHECK_FALSE(is_T0(indiscrete));
    CHECK_FALSE(is_sober(indiscrete));
    CHECK(is_T0(discrete));
    CHECK(is_locally_compact(discrete));
    CHECK(is_locally_compact(indiscrete));
}

TEST_CASE("Delta values") {
    for (const auto& l : suite_lattices(3)) CHECK(delta(l, l.bottom()) == 0);
    CHECK(delta(fixture::chain3(), 1) == bit(0));
    const FiniteLattice one = chain_lattice(1);
    CHECK(spectrum(one).points.empty());
    CHECK(check_delta_frame_hom(one).ok());
    // designating only 0 and 1 gives just the trivial opens
    for (const auto& l : suite_lattices(3)) {
        const SpectrumSpace sp = spectrum_space(l, bit(l.bottom()) | bit(l.top()));
        CHECK(sp.designated == normalize_family({0, full_set(sp.spec.points.size())}));
    }
}

TEST_CASE("hull-kernel opens form a topology") {
    for (const auto& l : suite_lattices(4)) {
        const SpectrumSpace sp = spectrum_space(l, l.all());
        CHECK(oracle::is_topology(sp.topology.size(), to_sets(sp.topology.opens())));
    }
}

TEST_CASE("sober iff T0 on random 4-point topologies") {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    std::size_t checked = 0;
    for (int round = 0; round < 400; ++round) {
        // close a few random subsets of 4 points under unions and intersections
        Family f{0, 15};
        for (int k = 0; k < 3; ++k) {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            f.push_back(state % 16);
        }
        for (bool grew = true; grew;) {
            grew = false;
            const Family now = normalize_family(f);
            for (PointSet a : now) {
                for (PointSet b : now) {
                    for (PointSet c : {a | b, a & b}) {
                        if (!family_contains(now, c)) {
                            f.push_back(c);
                            grew = true;
                        }
                    }
                }
            }
            f = normalize_family(f);
        }
        const TopSpace t = TopSpace::validate(fixture::names(4), f);
        CHECK(is_sober(t) == is_T0(t));
        CHECK(is_sober(t) == oracle::is_sober(4, to_sets(t.opens())));
        CHECK(is_locally_compact(t));
        ++checked;
    }
    CHECK(checked == 400);
}
