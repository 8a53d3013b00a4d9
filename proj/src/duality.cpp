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

#include "smop/duality.hpp"

#include <algorithm>
#include <sstream>

#include "smop/error.hpp"
#include "smop/spectrum.hpp"

namespace smop {

namespace {

std::size_t family_index(const Family& family, PointSet s) {
    auto it = std::lower_bound(family.begin(), family.end(), s);
    if (it == family.end() || *it != s) throw Error(ErrorCode::InvariantViolation, "set not in family");
    return static_cast<std::size_t>(it - family.begin());
}

std::string sides(const std::string& at, const std::string& lhs, const std::string& rhs) {
    return "at " + at + ": lhs=" + lhs + " rhs=" + rhs;
}

bool is_identity(const std::vector<std::size_t>& map) {
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] != i) return false;
    }
    return true;
}

std::string checked(std::size_t n, const char* what) {
    return "checked " + std::to_string(n) + " " + what;
}

}  // namespace

bool AdjunctionReport::ok() const { return failures() == 0; }

std::size_t AdjunctionReport::failures() const {
    return static_cast<std::size_t>(std::count_if(laws.begin(), laws.end(), [](const LawResult& l) { return !l.pass; }));
}

void AdjunctionReport::add(std::string name, bool pass, std::string witness) {
    laws.push_back({std::move(name), pass, std::move(witness)});
}

void AdjunctionReport::append(const AdjunctionReport& other) {
    laws.insert(laws.end(), other.laws.begin(), other.laws.end());
}

Family omega_sets(const LocallySmallSpace& space) { return weakly_open_family(space); }

FramePair omega_object(const LocallySmallSpace& space) {
    const Family sets = omega_sets(space);
    if (sets.size() > kMaxCarrier) throw Error(ErrorCode::SizeLimitExceeded, "too many weakly open sets");
    BoolMatrix leq(sets.size(), std::vector<bool>(sets.size()));
    std::vector<std::string> labels;
    ElementSet designated = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = 0; j < sets.size(); ++j) leq[i][j] = is_subset(sets[i], sets[j]);
        labels.push_back(space.format(sets[i]));
        if (space.is_smop(sets[i])) designated |= bit(i);
    }
    return FramePair::validate(validate_lattice(leq, std::move(labels)), designated);
}

SpecialLocalicMap omega_morphism(const SpaceMap& f) {
    if (!is_bounded_map(f)) throw Error(ErrorCode::NotBounded, "");
    if (!is_continuous_map(f)) throw Error(ErrorCode::NotContinuous, "");
    const Family wo_x = omega_sets(f.source());
    const Family wo_y = omega_sets(f.target());
    std::vector<Element> map(wo_y.size());
    for (std::size_t i = 0; i < wo_y.size(); ++i) map[i] = family_index(wo_x, f.preimage(wo_y[i]));
    return right_adjoint(FrameHom(omega_object(f.target()), omega_object(f.source()), std::move(map)));
}

LocallySmallSpace sigma_object(const FramePair& pair) {
    const FiniteLattice& l = pair.frame();
    const Spectrum spec = spectrum(l);
    Family smops;
    for (Element a : members(pair.designated())) smops.push_back(spec.delta[a]);
    auto space = LocallySmallSpace::validate(spec.names(l), normalize_family(std::move(smops)));
    if (!is_topologically_sober(space)) throw Error(ErrorCode::InvariantViolation, "spectrum space is not sober");
    return space;
}

SpaceMap sigma_morphism(const SpecialLocalicMap& m) {
    const FiniteLattice& m_frame = m.domain().frame();
    const FiniteLattice& l_frame = m.codomain().frame();
    const Spectrum spec_m = spectrum(m_frame);
    const Spectrum spec_l = spectrum(l_frame);
    std::vector<std::size_t> map;
    for (Element p : spec_m.points) {
        const Element q = m(p);
        auto idx = spec_l.point_of(q);
        if (!idx) {
            throw Error(ErrorCode::PrimeNotPreserved, m_frame.label(p) + " -> " + l_frame.label(q));
        }
        map.push_back(*idx);
    }
    SpaceMap result(sigma_object(m.domain()), sigma_object(m.codomain()), std::move(map));
    if (!is_bounded_map(result)) throw Error(ErrorCode::InvariantViolation, "restricted adjoint is not bounded");
    if (!is_continuous_map(result)) throw Error(ErrorCode::InvariantViolation, "restricted adjoint is not continuous");
    return result;
}

SpaceMap unit_lambda(const LocallySmallSpace& space) {
    const FramePair omega = omega_object(space);
    const Family wo = omega_sets(space);
    const Spectrum spec = spectrum(omega.frame());
    std::vector<std::size_t> map(space.size());
    for (std::size_t x = 0; x < space.size(); ++x) {
        auto idx = spec.point_of(family_index(wo, ext_point(space, x)));
        if (!idx) throw Error(ErrorCode::InvariantViolation, "ext{" + space.point_name(x) + "} is not a point");
        map[x] = *idx;
    }
    SpaceMap result(space, sigma_object(omega), std::move(map));
    if (!is_bounded_map(result)) throw Error(ErrorCode::InvariantViolation, "unit is not bounded");
    if (!is_continuous_map(result)) throw Error(ErrorCode::InvariantViolation, "unit is not continuous");
    return result;
}

SpecialLocalicMap counit_sigma(const FramePair& pair) {
    const LocallySmallSpace space = sigma_object(pair);
    const Family wo = omega_sets(space);
    const Spectrum spec = spectrum(pair.frame());
    std::vector<Element> map(pair.frame().size());
    for (Element a = 0; a < map.size(); ++a) map[a] = family_index(wo, spec.delta[a]);
    return right_adjoint(FrameHom(pair, omega_object(space), std::move(map)));
}

AdjunctionReport check_triangle_identities(const FramePair& pair) {
    AdjunctionReport report;
    const SpaceMap lambda = unit_lambda(sigma_object(pair));
    const SpaceMap sigma = sigma_morphism(counit_sigma(pair));
    const bool composable = lambda.target() == sigma.source();
    report.add("triangle/spectrum composable", composable, "lambda target equals Sigma(sigma) source");
    if (!composable) return report;
    const auto& names = lambda.source().carrier();
    for (std::size_t x = 0; x < lambda.source().size(); ++x) {
        const std::size_t y = sigma(lambda(x));
        if (y != x) {
            report.add("triangle/spectrum", false, sides(names[x], names[y], names[x]));
            return report;
        }
    }
    report.add("triangle/spectrum", true, checked(lambda.source().size(), "points"));
    return report;
}

AdjunctionReport check_triangle_identities(const LocallySmallSpace& space) {
    AdjunctionReport report;
    const SpecialLocalicMap omega_lambda = omega_morphism(unit_lambda(space));
    const SpecialLocalicMap sigma = counit_sigma(omega_object(space));
    const bool composable = omega_lambda.codomain() == sigma.domain();
    report.add("triangle/frame composable", composable, "Omega(lambda) codomain equals sigma domain");
    if (!composable) return report;
    const FiniteLattice& l = omega_lambda.domain().frame();
    for (Element a = 0; a < l.size(); ++a) {
        const Element b = sigma(omega_lambda(a));
        if (b != a) {
            report.add("triangle/frame", false, sides(l.label(a), l.label(b), l.label(a)));
            return report;
        }
    }
    report.add("triangle/frame", true, checked(l.size(), "elements"));
    return report;
}

AdjunctionReport check_both_triangles(const FramePair& pair) {
    AdjunctionReport report = check_triangle_identities(pair);
    report.append(check_triangle_identities(sigma_object(pair)));
    return report;
}

AdjunctionReport check_both_triangles(const LocallySmallSpace& space) {
    AdjunctionReport report = check_triangle_identities(space);
    report.append(check_triangle_identities(omega_object(space)));
    return report;
}

AdjunctionReport check_naturality(const SpaceMap& f) {
    AdjunctionReport report;
    const SpaceMap top = sigma_morphism(omega_morphism(f));
    const SpaceMap lambda_x = unit_lambda(f.source());
    const SpaceMap lambda_y = unit_lambda(f.target());
    const auto& names = top.target().carrier();
    for (std::size_t x = 0; x < f.source().size(); ++x) {
        const std::size_t lhs = top(lambda_x(x));
        const std::size_t rhs = lambda_y(f(x));
        if (lhs != rhs) {
            report.add("naturality/unit", false, sides(f.source().point_name(x), names[lhs], names[rhs]));
            return report;
        }
    }
    report.add("naturality/unit", true, checked(f.source().size(), "points"));
    return report;
}

AdjunctionReport check_naturality(const SpecialLocalicMap& m) {
    AdjunctionReport report;
    const SpecialLocalicMap omega_sigma = omega_morphism(sigma_morphism(m));
    const SpecialLocalicMap sigma_l = counit_sigma(m.codomain());
    const SpecialLocalicMap sigma_m = counit_sigma(m.domain());
    const FiniteLattice& src = omega_sigma.domain().frame();
    const FiniteLattice& l = m.codomain().frame();
    for (Element a = 0; a < src.size(); ++a) {
        const Element lhs = sigma_l(omega_sigma(a));
        const Element rhs = m(sigma_m(a));
        if (lhs != rhs) {
            report.add("naturality/counit", false, sides(src.label(a), l.label(lhs), l.label(rhs)));
            return report;
        }
    }
    report.add("naturality/counit", true, checked(src.size(), "elements"));
    return report;
}

AdjunctionReport check_functor_laws(const SpaceMap& f, const SpaceMap& g) {
    AdjunctionReport report;
    const SpecialLocalicMap id = omega_morphism(SpaceMap::identity(f.source()));
    report.add("Omega/identity", is_identity(id.underlying().map()) && is_identity(id.adjoint_map()),
               "hom and adjoint of Omega(id) are identities");

    const SpecialLocalicMap omega_f = omega_morphism(f);
    const SpecialLocalicMap omega_g = omega_morphism(g);
    const SpecialLocalicMap whole = omega_morphism(compose(g, f));
    const SpecialLocalicMap chained = compose(omega_g, omega_f);
    report.add("Omega/composition hom", whole.underlying() == chained.underlying(),
               "preimage under g o f versus f^-1 o g^-1");
    const FiniteLattice& l = whole.domain().frame();
    const FiniteLattice& z = whole.codomain().frame();
    for (Element a = 0; a < l.size(); ++a) {
        const Element lhs = whole(a);
        const Element rhs = omega_g(omega_f(a));
        if (lhs != rhs) {
            report.add("Omega/composition adjoint", false, sides(l.label(a), z.label(lhs), z.label(rhs)));
            return report;
        }
    }
    report.add("Omega/composition adjoint", true, checked(l.size(), "elements"));
    return report;
}

AdjunctionReport check_functor_laws(const SpecialLocalicMap& inner, const SpecialLocalicMap& outer) {
    AdjunctionReport report;
    const SpaceMap id = sigma_morphism(right_adjoint(FrameHom::identity(inner.codomain())));
    report.add("Sigma/identity", is_identity(id.map()), "Sigma(id) is the identity");

    const SpecialLocalicMap composite = compose(outer, inner);
    bool adjoints_compose = true;
    std::string witness = checked(composite.domain().frame().size(), "elements");
    for (Element a = 0; a < composite.domain().frame().size(); ++a) {
        if (composite(a) != outer(inner(a))) {
            adjoints_compose = false;
            witness = sides(composite.domain().frame().label(a), composite.codomain().frame().label(composite(a)),
                            composite.codomain().frame().label(outer(inner(a))));
            break;
        }
    }
    report.add("locale composition", adjoints_compose, witness);

    const SpaceMap whole = sigma_morphism(composite);
    const SpaceMap chained = compose(sigma_morphism(outer), sigma_morphism(inner));
    const auto& names = whole.target().carrier();
    for (std::size_t p = 0; p < whole.source().size(); ++p) {
        if (whole(p) != chained(p)) {
            report.add("Sigma/composition", false,
                       sides(whole.source().point_name(p), names[whole(p)], names[chained(p)]));
            return report;
        }
    }
    report.add("Sigma/composition", whole == chained, checked(whole.source().size(), "points"));
    return report;
}

AdjunctionReport stone_roundtrip(const LocallySmallSpace& space, const Bounds& bounds) {
    if (!is_T0_space(space)) throw Error(ErrorCode::NotT0, "");
    if (!is_sober(weakly_open(space), bounds)) throw Error(ErrorCode::NotSober, "");
    AdjunctionReport report;
    const SpaceMap lambda = unit_lambda(space);
    PointSet hit = 0;
    for (std::size_t x = 0; x < space.size(); ++x) hit |= bit(lambda(x));
    const bool bijective =
        static_cast<std::size_t>(popcount(hit)) == space.size() && lambda.target().size() == space.size();
    report.add("unit bijective", bijective,
               std::to_string(space.size()) + " points onto " + std::to_string(lambda.target().size()));

    const Family wo = omega_sets(space);
    const Spectrum spec = spectrum(omega_object(space).frame());
    bool images_ok = true;
    std::string witness = checked(space.smops().size(), "smops");
    for (PointSet w : space.smops()) {
        const PointSet lhs = lambda.image(w);
        const PointSet rhs = spec.delta[family_index(wo, w)];
        if (lhs != rhs) {
            images_ok = false;
            witness = sides(space.format(w), lambda.target().format(lhs), lambda.target().format(rhs));
            break;
        }
    }
    report.add("unit image of smops is Delta of smops", images_ok, witness);

    bool back_ok = true;
    witness = checked(lambda.target().smops().size(), "target smops");
    for (PointSet v : lambda.target().smops()) {
        if (!space.is_smop(lambda.preimage(v))) {
            back_ok = false;
            witness = "preimage of " + lambda.target().format(v) + " is " + space.format(lambda.preimage(v));
            break;
        }
    }
    report.add("unit preimage of smops are smops", back_ok, witness);
    return report;
}

AdjunctionReport stone_roundtrip(const FramePair& pair) {
    const FiniteLattice& l = pair.frame();
    if (!is_spatial(l)) throw Error(ErrorCode::NotSpatial, "");
    AdjunctionReport report;
    report.add("Delta injective", delta_iso_check(l), checked(l.size(), "elements"));
    const DeltaHomReport hom = check_delta_frame_hom(l);
    report.add("Delta frame hom", hom.ok(), hom.ok() ? "no violations" : hom.violations.front());

    const Spectrum spec = spectrum(l);
    Family images;
    for (Element a : members(pair.designated())) images.push_back(spec.delta[a]);
    images = normalize_family(std::move(images));
    ElementSet back = 0;
    for (Element a = 0; a < l.size(); ++a) {
        if (family_contains(images, spec.delta[a])) back |= bit(a);
    }
    report.add("Delta preimage of designated image", back == pair.designated(),
               "lhs=" + format_set(back, l.labels()) + " rhs=" + format_set(pair.designated(), l.labels()));

    const SpecialLocalicMap counit = counit_sigma(pair);
    const FiniteLattice& top = counit.domain().frame();
    bool inverse = top.size() == l.size();
    std::string witness = std::to_string(top.size()) + " weakly open sets for " + std::to_string(l.size()) + " elements";
    for (Element a = 0; inverse && a < l.size(); ++a) {
        if (counit(counit.underlying()(a)) != a) {
            inverse = false;
            witness = sides(l.label(a), l.label(counit(counit.underlying()(a))), l.label(a));
        }
    }
    for (Element s = 0; inverse && s < top.size(); ++s) {
        if (counit.underlying()(counit(s)) != s) {
            inverse = false;
            witness = sides(top.label(s), top.label(counit.underlying()(counit(s))), top.label(s));
        }
    }
    report.add("counit inverse to Delta", inverse, witness);
    return report;
}

namespace {

Oracle oracle_for(std::size_t size, const Bounds& bounds) {
    return size <= bounds.way_below_size ? Oracle::Enumerate : Oracle::ShortcutBeyondBound;
}

std::string verdicts(bool continuous, bool shortcut, bool locally_compact, bool sober) {
    std::ostringstream out;
    out << "continuous=" << continuous << (shortcut ? " (shortcut past bound)" : "")
        << " locally_compact=" << locally_compact << " sober=" << sober;
    return out.str();
}

}  // namespace

AdjunctionReport hofmann_lawson_report(const FramePair& pair, const Bounds& bounds) {
    AdjunctionReport report;
    const FiniteLattice& l = pair.frame();
    const Oracle oracle = oracle_for(l.size(), bounds);
    const bool continuous = is_continuous_frame(l, oracle, bounds);
    const TopSpace topology = weakly_open(sigma_object(pair));
    const bool lc = is_locally_compact(topology, bounds);
    const bool sober = is_sober(topology, bounds);
    report.add("continuous frame has locally compact sober spectrum", !continuous || (lc && sober),
               verdicts(continuous, oracle == Oracle::ShortcutBeyondBound, lc, sober));
    report.append(stone_roundtrip(pair));
    return report;
}

AdjunctionReport hofmann_lawson_report(const LocallySmallSpace& space, const Bounds& bounds) {
    AdjunctionReport report;
    const TopSpace topology = weakly_open(space);
    const bool lc = is_locally_compact(topology, bounds);
    const bool sober = is_sober(topology, bounds);
    const FiniteLattice frame = omega_object(space).frame();
    const Oracle oracle = oracle_for(frame.size(), bounds);
    const bool continuous = is_continuous_frame(frame, oracle, bounds);
    report.add("locally compact sober space has continuous frame", !(lc && sober) || continuous,
               verdicts(continuous, oracle == Oracle::ShortcutBeyondBound, lc, sober));
    report.append(stone_roundtrip(space, bounds));
    return report;
}

}  // namespace smop
