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

#include <algorithm>
#include <functional>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "smop/duality.hpp"
#include "smop/error.hpp"
#include "smop/generators.hpp"
#include "smop/suites.hpp"

using namespace smop;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidInstance;
}

std::size_t index_in(const Family& f, PointSet s) {
    return static_cast<std::size_t>(std::find(f.begin(), f.end(), s) - f.begin());
}

void require_ok(const AdjunctionReport& r) {
    for (const auto& law : r.laws) {
        INFO(r.instance << " / " << law.name << ": " << law.witness);
        CHECK(law.pass);
    }
}

}  // namespace

TEST_CASE("Omega of a chain space") {
    const LocallySmallSpace x = fixture::space(2, {0, 1, 3});
    const FramePair p = omega_object(x);
    CHECK(p.frame().size() == 3);
    CHECK(p.designated() == p.frame().all());
    CHECK(p.frame().labels() == std::vector<std::string>{"{}", "{1}", "{1,2}"});
    CHECK(omega_sets(x) == Family{0, 1, 3});
}

TEST_CASE("Sigma of the three-chain") {
    const LocallySmallSpace s = sigma_object(FramePair::whole(fixture::chain3()));
    CHECK(s.carrier() == std::vector<std::string>{"0", "a"});
    CHECK(s.smops() == Family{0, 1, 3});
}

TEST_CASE("unit on the chain space") {
    const LocallySmallSpace x = fixture::space(2, {0, 1, 3});
    const SpaceMap lambda = unit_lambda(x);
    // ext{1} is empty, ext{2} = {1}
    CHECK(lambda.target().point_name(lambda(0)) == "{}");
    CHECK(lambda.target().point_name(lambda(1)) == "{1}");
    CHECK(is_continuous_map(lambda));
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& opens : oracle::all_topologies(n)) {
            const LocallySmallSpace y = fixture::space(n, Family(opens.begin(), opens.end()));
            const SpaceMap l = unit_lambda(y);
            for (std::size_t p = 0; p < n; ++p) {
                CHECK(l.target().point_name(l(p)) == format_set(oracle::ext(opens, p), y.carrier()));
            }
        }
    }
}

TEST_CASE("counit on the three-chain") {
    const FramePair c = FramePair::whole(fixture::chain3());
    const SpecialLocalicMap sigma = counit_sigma(c);
    const Family sets = omega_sets(sigma_object(c));
    // the open {0} of the spectrum goes back to a
    CHECK(sigma(index_in(sets, bit(0))) == 1);
    CHECK(sigma(index_in(sets, 0)) == 0);
    CHECK(sigma(index_in(sets, 3)) == 2);
    CHECK(sigma.codomain() == c);
}

TEST_CASE("identity between opposite chains is not continuous") {
    const LocallySmallSpace x = fixture::space(2, {0, 1, 3});
    const LocallySmallSpace y = fixture::space(2, {0, 2, 3});
    CHECK(code_of([&] { omega_morphism(SpaceMap(x, y, {0, 1})); }) == ErrorCode::NotContinuous);
    CHECK_NOTHROW(omega_morphism(SpaceMap(x, y, {1, 0})));
}

TEST_CASE("Omega of a map is the preimage homomorphism") {
    MorphismSource src(3);
    for (int i = 0; i < 40; ++i) {
        const SpaceMap f = src.space_map(3);
        const SpecialLocalicMap m = omega_morphism(f);
        const Family wx = omega_sets(f.source());
        const Family wy = omega_sets(f.target());
        CHECK(m.domain() == omega_object(f.source()));
        CHECK(m.codomain() == omega_object(f.target()));
        for (std::size_t i2 = 0; i2 < wy.size(); ++i2) CHECK(wx[m.underlying()(i2)] == f.preimage(wy[i2]));
        const SpaceMap back = sigma_morphism(m);
        CHECK(back.source() == sigma_object(m.domain()));
    }
}

TEST_CASE("triangle identities on small instances") {
    require_ok(check_both_triangles(fixture::space(2, {0, 1, 3})));
    require_ok(check_both_triangles(fixture::space(3, {0, 1, 2, 3, 7})));
    require_ok(check_both_triangles(fixture::space(0, {0})));
    require_ok(check_both_triangles(FramePair::whole(fixture::b2())));
    require_ok(check_both_triangles(FramePair::whole(fixture::chain3())));
    require_ok(check_both_triangles(FramePair::whole(chain_lattice(1))));
    const AdjunctionReport r = check_triangle_identities(FramePair::whole(fixture::b2()));
    CHECK(r.ok());
    CHECK(r.failures() == 0);
    CHECK_FALSE(r.laws.empty());
}

TEST_CASE("triangle identities hold on non-T0 spaces too") {
    // two points nobody can tell apart
    require_ok(check_both_triangles(fixture::space(2, {0, 3})));
    require_ok(check_both_triangles(fixture::space(3, {0, 1, 7})));
}

TEST_CASE("naturality and functor laws on random morphisms") {
    MorphismSource src(21);
    for (int i = 0; i < 25; ++i) {
        require_ok(check_naturality(src.space_map(3)));
        require_ok(check_naturality(src.localic_map(3)));
        const auto [f, g] = src.space_chain(3);
        require_ok(check_functor_laws(f, g));
        const auto [inner, outer] = src.localic_chain(3);
        require_ok(check_functor_laws(inner, outer));
    }
}

TEST_CASE("round trips") {
    require_ok(stone_roundtrip(fixture::space(2, {0, 1, 3})));
    require_ok(stone_roundtrip(FramePair::whole(fixture::b2())));
    CHECK(code_of([] { stone_roundtrip(fixture::space(2, {0, 3})); }) == ErrorCode::NotT0);
}

TEST_CASE("continuous frames and locally compact sober spaces") {
    require_ok(hofmann_lawson_report(FramePair::whole(fixture::b2())));
    require_ok(hofmann_lawson_report(fixture::space(3, {0, 1, 3, 7})));
    Bounds small;
    small.way_below_size = 2;
    const AdjunctionReport r = hofmann_lawson_report(FramePair::whole(fixture::b2()), small);
    CHECK(r.ok());
    CHECK(r.laws.front().witness.find("shortcut") != std::string::npos);
}

TEST_CASE("report bookkeeping") {
    AdjunctionReport a{"a", {}};
    a.add("one", true, "fine");
    AdjunctionReport b{"b", {}};
    b.add("two", false, "broken");
    a.append(b);
    CHECK(a.laws.size() == 2);
    CHECK(a.failures() == 1);
    CHECK_FALSE(a.ok());
}

TEST_CASE("exhaustive suites stay clean") {
    const auto spaces = space_suite(3);
    const auto frames = frame_suite(3);
    CHECK(spaces.size() == 35);
    CHECK(frames.size() == 24);
    const SuiteSummary t = triangle_suite(spaces, frames, 1);
    CHECK(t.ok());
    CHECK(t.reports.size() == spaces.size() + frames.size());
    CHECK(roundtrip_suite(spaces, frames, 1).ok());
    CHECK(hl_suite(spaces, frames, default_bounds(), 1).ok());
}

TEST_CASE("parallel runs keep instance order") {
    const auto a = morphism_suite(5, 16, 1);
    const auto b = morphism_suite(5, 16, 4);
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
        CHECK(a.reports[i].instance == b.reports[i].instance);
        CHECK(a.reports[i].laws.size() == b.reports[i].laws.size());
    }
    CHECK(a.ok());
}

TEST_CASE("named Omega and Sigma objects") {
    const FramePair discrete = omega_object(fixture::space(2, {0, 1, 2, 3}));
    CHECK(discrete.frame() == fixture::b2());
    CHECK(omega_object(fixture::space(1, {0, 1})).frame() == chain_lattice(2));
    CHECK(omega_object(fixture::space(2, {0, 1, 3})).frame() == fixture::chain3());

    const LocallySmallSpace b = sigma_object(FramePair::whole(fixture::b2()));
    CHECK(b.carrier() == std::vector<std::string>{"x", "y"});
    CHECK(b.smops() == Family{0, 1, 2, 3});
    const LocallySmallSpace one = sigma_object(FramePair::whole(chain_lattice(2)));
    CHECK(one.size() == 1);
    CHECK(one.smops() == Family{0, 1});
}

TEST_CASE("named Omega and Sigma morphisms") {
    const LocallySmallSpace chain = fixture::space(2, {0, 1, 3});
    const SpecialLocalicMap id = omega_morphism(SpaceMap::identity(chain));
    CHECK(id == right_adjoint(FrameHom::identity(omega_object(chain))));
    CHECK(sigma_morphism(id) == SpaceMap::identity(sigma_object(omega_object(chain))));

    // {1} included in the chain space: a weakly open U of {1} goes to the
    // largest weakly open W with W n {1} inside U
    const LocallySmallSpace point = fixture::space(1, {0, 1});
    const SpecialLocalicMap inc = omega_morphism(SpaceMap(point, chain, {0}));
    CHECK(inc.adjoint_map() == std::vector<Element>{0, 2});

    const FramePair b2 = FramePair::whole(fixture::b2());
    const FramePair two = FramePair::whole(validate_lattice(fixture::order(2, {{0, 1}}), {"0", "1"}));
    const SpaceMap s = sigma_morphism(right_adjoint(FrameHom(b2, two, {0, 1, 0, 1})));
    REQUIRE(s.source().size() == 1);
    CHECK(s.target().point_name(s(0)) == "y");
}

TEST_CASE("Omega exists exactly for bounded continuous maps") {
    for (const auto& a : oracle::all_topologies(2)) {
        for (const auto& b : oracle::all_topologies(2)) {
            const LocallySmallSpace x = fixture::space(2, Family(a.begin(), a.end()));
            const LocallySmallSpace y = fixture::space(2, Family(b.begin(), b.end()));
            for (std::size_t m = 0; m < 4; ++m) {
                const SpaceMap f(x, y, {m & 1, m >> 1});
                bool built = true;
                try {
                    omega_morphism(f);
                } catch (const Error&) {
                    built = false;
                }
                CHECK(built == (is_bounded_map(f) && is_continuous_map(f)));
            }
        }
    }
}

TEST_CASE("Sigma Omega f agrees with f through the unit") {
    MorphismSource src(17);
    for (int i = 0; i < 40; ++i) {
        const SpaceMap f = src.space_map(3);
        const SpaceMap lifted = sigma_morphism(omega_morphism(f));
        const SpaceMap lx = unit_lambda(f.source());
        const SpaceMap ly = unit_lambda(f.target());
        for (std::size_t x = 0; x < f.source().size(); ++x) CHECK(lifted(lx(x)) == ly(f(x)));
    }
}

TEST_CASE("unit and counit on named instances") {
    const SpaceMap d = unit_lambda(fixture::space(2, {0, 1, 2, 3}));
    CHECK(d.target().point_name(d(0)) == "{2}");
    CHECK(d.target().point_name(d(1)) == "{1}");
    const SpaceMap p = unit_lambda(fixture::space(1, {0, 1}));
    CHECK(p.target().point_name(p(0)) == "{}");

    const FramePair b = FramePair::whole(fixture::b2());
    const SpecialLocalicMap sb = counit_sigma(b);
    const Family bs = omega_sets(sigma_object(b));
    const Spectrum spec = spectrum(b.frame());
    for (Element a = 0; a < 4; ++a) CHECK(sb(index_in(bs, spec.delta[a])) == a);

    const FramePair two = FramePair::whole(chain_lattice(2));
    const SpecialLocalicMap st = counit_sigma(two);
    const Family ts = omega_sets(sigma_object(two));
    CHECK(st(index_in(ts, 0)) == 0);
    CHECK(st(index_in(ts, 1)) == 1);
}

TEST_CASE("laws on identities and inclusions") {
    const LocallySmallSpace chain = fixture::space(2, {0, 1, 3});
    const LocallySmallSpace point = fixture::space(1, {0, 1});
    const SpaceMap id = SpaceMap::identity(chain);
    require_ok(check_naturality(id));
    const SpaceMap inc(point, chain, {0});
    require_ok(check_naturality(inc));
    require_ok(check_functor_laws(id, id));
    require_ok(check_functor_laws(inc, id));
    const LocallySmallSpace chain3 = fixture::space(3, {0, 1, 3, 7});
    const SpaceMap inc2(chain, chain3, {0, 1});
    require_ok(check_functor_laws(inc, inc2));
    const SpecialLocalicMap lid = right_adjoint(FrameHom::identity(FramePair::whole(fixture::b2())));
    require_ok(check_naturality(lid));
    require_ok(check_functor_laws(lid, lid));
    require_ok(check_both_triangles(point));
    require_ok(check_both_triangles(FramePair::whole(chain_lattice(2))));
}
