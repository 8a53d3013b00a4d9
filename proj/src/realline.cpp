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

#include "smop/realline.hpp"

#include <algorithm>

#include "smop/error.hpp"

namespace smop {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

const Rational& rational_value(const Endpoint& e, const char* what) {
    if (!e.value().is_rational()) throw Error(ErrorCode::UnsupportedShape, std::string(what) + "(" + e.value().str() + ")");
    return e.value().constant();
}

SymbolicReal neg_ln(const Endpoint& e) { return -SymbolicReal::ln_of(rational_value(e, "ln")); }

SymbolicReal asin_at(const Endpoint& e) { return SymbolicReal::asin_of(rational_value(e, "asin")); }

SymbolicRealSet preimage_interval(const CatalogMap& m, const OpenInterval& v) {
    return std::visit(
        overloaded{
            [&](const Affine& f) {
                auto back = [&](const Endpoint& e) -> Endpoint {
                    if (e.is_finite()) return (e.value() - f.q) / f.p;
                    const bool up = (e.kind() == Endpoint::Kind::PosInf) == (f.p > 0);
                    return up ? Endpoint::pos_inf() : Endpoint::neg_inf();
                };
                return f.p > 0 ? SymbolicRealSet::interval(back(v.lo), back(v.hi))
                               : SymbolicRealSet::interval(back(v.hi), back(v.lo));
            },
            [&](const MonotoneBounded& f) {
                const Endpoint lo = max_endpoint(v.lo, f.lo);
                const Endpoint hi = min_endpoint(v.hi, f.hi);
                if (compare(lo, hi) >= 0) return SymbolicRealSet{};
                const Endpoint x_lo = lo == Endpoint(f.lo) ? Endpoint::neg_inf() : Endpoint(SymbolicReal::tan_of(lo.value()));
                const Endpoint x_hi = hi == Endpoint(f.hi) ? Endpoint::pos_inf() : Endpoint(SymbolicReal::tan_of(hi.value()));
                return SymbolicRealSet::interval(x_lo, x_hi);
            },
            [&](const MonotoneUnboundedDecreasing&) {
                const Endpoint lo = max_endpoint(v.lo, Endpoint(0));
                if (compare(lo, v.hi) >= 0) return SymbolicRealSet{};
                const Endpoint x_lo = v.hi.is_finite() ? Endpoint(neg_ln(v.hi)) : Endpoint::neg_inf();
                const Endpoint x_hi = lo == Endpoint(0) ? Endpoint::pos_inf() : Endpoint(neg_ln(lo));
                return SymbolicRealSet::interval(x_lo, x_hi);
            },
            [&](const PeriodicOscillator& f) {
                const bool below = compare(v.lo, Endpoint(-1)) < 0;
                const bool above = compare(v.hi, Endpoint(1)) > 0;
                if (below && above) return SymbolicRealSet::whole_line();
                const Endpoint a = below ? Endpoint(-1) : v.lo;
                const Endpoint b = above ? Endpoint(1) : v.hi;
                if (compare(a, b) >= 0) return SymbolicRealSet{};
                const SymbolicReal pi = SymbolicReal::pi();
                std::vector<OpenInterval> pattern;
                auto add = [&](SymbolicReal lo, SymbolicReal hi) {
                    if (auto iv = OpenInterval::make(std::move(lo), std::move(hi))) pattern.push_back(*iv);
                };
                if (above) {
                    add(asin_at(a), pi - asin_at(a));
                } else if (below) {
                    add(pi - asin_at(b), pi * 2 + asin_at(b));
                } else {
                    add(asin_at(a), asin_at(b));
                    add(pi - asin_at(b), pi - asin_at(a));
                }
                return SymbolicRealSet::periodic(std::move(pattern), f.period,
                                                 OpenInterval{Endpoint::neg_inf(), Endpoint::pos_inf()});
            },
        },
        m.kind);
}

std::string interval_text(const Endpoint& lo, const Endpoint& hi) { return OpenInterval{lo, hi}.str(); }

/// V = (a, b) with b finite, a = -inf or a sample point.
std::vector<OpenInterval> smop_representatives(const CatalogMap& m) {
    const auto samples = sample_points(m);
    std::vector<Endpoint> lows{Endpoint::neg_inf()};
    lows.insert(lows.end(), samples.begin(), samples.end());
    std::vector<OpenInterval> out;
    for (const auto& a : lows) {
        for (const auto& b : samples) {
            if (auto iv = OpenInterval::make(a, b)) out.push_back(*iv);
        }
    }
    return out;
}

const std::vector<Rational>& cut_points() {
    static const std::vector<Rational> points{0, -1, 1, -3, 3};
    return points;
}

/// W = (-inf, d) first, then (c, d).
std::vector<OpenInterval> cut_representatives() {
    std::vector<OpenInterval> out;
    for (const auto& d : cut_points()) out.push_back({Endpoint::neg_inf(), Endpoint(SymbolicReal(d))});
    for (const auto& c : cut_points()) {
        for (const auto& d : cut_points()) {
            if (c < d) out.push_back({Endpoint(SymbolicReal(c)), Endpoint(SymbolicReal(d))});
        }
    }
    return out;
}

bool contains_ray_to(const SymbolicRealSet& s, const SymbolicReal& d) {
    if (s.periodic()) return false;
    const OpenInterval ray{Endpoint::neg_inf(), Endpoint(d)};
    return std::any_of(s.pieces().begin(), s.pieces().end(), [&](const OpenInterval& p) { return p.contains(ray); });
}

}  // namespace

CatalogMap affine_map(Rational p, Rational q, std::string name) {
    if (p == 0) throw Error(ErrorCode::InvalidInstance, "affine map needs p != 0");
    return {std::move(name), Affine{std::move(p), std::move(q)}};
}

CatalogMap neg_id() { return affine_map(-1, 0, "neg_id"); }

CatalogMap sine() { return {"sin", PeriodicOscillator{SymbolicReal::pi() * 2}}; }

CatalogMap arctangent() {
    const SymbolicReal half_pi = SymbolicReal::pi() / 2;
    return {"arctan", MonotoneBounded{-half_pi, half_pi}};
}

CatalogMap exp_neg() { return {"exp_neg", MonotoneUnboundedDecreasing{}}; }

std::vector<CatalogMap> catalog() { return {neg_id(), sine(), arctangent(), exp_neg()}; }

CatalogMap catalog_map(std::string_view name) {
    for (auto& m : catalog()) {
        if (m.name == name) return m;
    }
    throw Error(ErrorCode::InvalidInstance, "unknown catalog map '" + std::string(name) + "'");
}

bool lplusom_membership(const SymbolicRealSet& s) {
    if (s.periodic()) return false;
    return std::all_of(s.pieces().begin(), s.pieces().end(), [](const OpenInterval& p) { return p.bounded_above(); });
}

SymbolicRealSet preimage(const CatalogMap& m, const SymbolicRealSet& s) {
    if (s.periodic()) throw Error(ErrorCode::UnsupportedShape, "preimage of a periodic set");
    SymbolicRealSet out;
    for (const auto& piece : s.pieces()) out = out.unite(preimage_interval(m, piece));
    return out;
}

SymbolicRealSet image(const Affine& f, const SymbolicRealSet& s) {
    if (s.periodic()) throw Error(ErrorCode::UnsupportedShape, "image of a periodic set");
    auto forward = [&](const Endpoint& e) -> Endpoint {
        if (e.is_finite()) return e.value() * f.p + f.q;
        const bool up = (e.kind() == Endpoint::Kind::PosInf) == (f.p > 0);
        return up ? Endpoint::pos_inf() : Endpoint::neg_inf();
    };
    std::vector<OpenInterval> pieces;
    for (const auto& p : s.pieces()) {
        pieces.push_back(f.p > 0 ? OpenInterval{forward(p.lo), forward(p.hi)} : OpenInterval{forward(p.hi), forward(p.lo)});
    }
    return SymbolicRealSet::of(std::move(pieces));
}

std::optional<SymbolicReal> upper_bound_below(const CatalogMap& m, const SymbolicReal& d) {
    return std::visit(overloaded{
                          [&](const Affine& f) -> std::optional<SymbolicReal> {
                              if (f.p < 0) return std::nullopt;
                              return d * f.p + f.q;
                          },
                          [&](const MonotoneBounded& f) -> std::optional<SymbolicReal> { return f.hi; },
                          [&](const MonotoneUnboundedDecreasing&) -> std::optional<SymbolicReal> { return std::nullopt; },
                          [&](const PeriodicOscillator&) -> std::optional<SymbolicReal> { return SymbolicReal(1); },
                      },
                      m.kind);
}

std::vector<SymbolicReal> critical_values(const CatalogMap& m) {
    return std::visit(overloaded{
                          [](const Affine&) { return std::vector<SymbolicReal>{}; },
                          [](const MonotoneBounded& f) { return std::vector<SymbolicReal>{f.lo, f.hi}; },
                          [](const MonotoneUnboundedDecreasing&) { return std::vector<SymbolicReal>{0}; },
                          [](const PeriodicOscillator&) { return std::vector<SymbolicReal>{-1, 1}; },
                      },
                      m.kind);
}

std::vector<SymbolicReal> sample_points(const CatalogMap& m) {
    const auto crit = critical_values(m);
    std::vector<SymbolicReal> out;
    if (crit.empty()) {
        out = {-1, 0, 1};
    } else {
        out = crit;
        out.push_back(crit.front() - 1);
        out.push_back(crit.front() - 2);
        out.push_back(crit.back() + 1);
        out.push_back(crit.back() + 2);
        for (std::size_t i = 0; i + 1 < crit.size(); ++i) {
            const SymbolicReal width = crit[i + 1] - crit[i];
            out.push_back(crit[i] + width / 4);
            out.push_back(crit[i] + width / 2);
            out.push_back(crit[i] + width * Rational(3, 4));
        }
    }
    auto magnitude = [](const SymbolicReal& x) { return compare(x, SymbolicReal()) < 0 ? -x : x; };
    std::sort(out.begin(), out.end(), [&](const SymbolicReal& a, const SymbolicReal& b) {
        const int c = compare(magnitude(a), magnitude(b));
        return c != 0 ? c < 0 : compare(a, b) < 0;
    });
    return out;
}

MapClassification classify_map(const CatalogMap& m) {
    MapClassification out;

    // Every smop sits inside some (-inf, e). Past the critical values the
    // preimage of (-inf, e) keeps its shape as e grows, so f is bounded
    // exactly when that preimage has a component unbounded below.
    const auto crit = critical_values(m);
    const SymbolicReal e = (crit.empty() ? SymbolicReal() : crit.back()) + 2;
    const SymbolicRealSet ray = preimage(m, SymbolicRealSet::interval(Endpoint::neg_inf(), e));
    const bool unbounded_below =
        !ray.periodic() && !ray.pieces().empty() && !ray.pieces().front().lo.is_finite();
    out.bounded.holds = unbounded_below;
    out.bounded.witness = unbounded_below
                              ? "W=(-inf,d) lies in f^-1((-inf,e)) = " + ray.str() + " for e past every critical value"
                              : "W=(-inf,0) lies in no f^-1(V): f^-1((-inf," + e.str() + ")) = " + ray.str() +
                                    " is bounded below for every e past the critical values";

    out.continuous.holds = true;
    std::size_t pairs = 0;
    const auto smops = smop_representatives(m);
    const auto cuts = cut_representatives();
    for (const auto& v : smops) {
        const SymbolicRealSet pre = preimage(m, SymbolicRealSet::of({v}));
        for (const auto& w : cuts) {
            ++pairs;
            const SymbolicRealSet meet = pre.intersect(SymbolicRealSet::of({w}));
            if (!lplusom_membership(meet)) {
                out.continuous = {false, "V=" + v.str() + " W=" + w.str() + ": f^-1(V) n W = " + meet.str() +
                                             " is not a finite union of bounded-above intervals"};
                break;
            }
        }
        if (!out.continuous.holds) break;
    }
    if (out.continuous.holds) out.continuous.witness = "f^-1(V) n W is a smop for all " + std::to_string(pairs) + " representative pairs";

    // Every open set is a union of bounded-above open intervals, so weakly
    // open means open; check that preimages of open intervals, bounded or
    // not, come out as unions of open intervals.
    std::size_t opens = 0;
    for (const auto& v : smops) {
        preimage(m, SymbolicRealSet::of({v}));
        preimage(m, SymbolicRealSet::interval(v.lo, Endpoint::pos_inf()));
        opens += 2;
    }
    preimage(m, SymbolicRealSet::whole_line());
    out.weakly_continuous = {true, "preimages of " + std::to_string(opens + 1) + " open intervals are open"};
    return out;
}

HomVerdict frame_hom_verdict(const CatalogMap& m) {
    if (!classify_map(m).weakly_continuous.holds) throw Error(ErrorCode::NotWeaklyContinuous, m.name);
    HomVerdict out;

    out.dominating.holds = true;
    for (const auto& d : cut_points()) {
        const std::string w = interval_text(Endpoint::neg_inf(), SymbolicReal(d));
        const auto bound = upper_bound_below(m, d);
        if (!bound) {
            out.dominating = {false, "f(" + w + ") is unbounded above, so no smop V has " + w + " inside f^-1(V)"};
            break;
        }
        const SymbolicReal top = *bound + 1;
        const SymbolicRealSet pre = preimage(m, SymbolicRealSet::interval(Endpoint::neg_inf(), top));
        if (!contains_ray_to(pre, d)) {
            out.dominating = {false, w + " is not inside f^-1((-inf," + top.str() + ")) = " + pre.str()};
            break;
        }
        out.dominating.witness = "W=" + w + " inside f^-1((-inf," + top.str() + ")), and likewise for each cut";
    }

    out.compatible.holds = true;
    for (const auto& v : smop_representatives(m)) {
        const SymbolicRealSet pre = preimage(m, SymbolicRealSet::of({v}));
        if (pre.periodic() && !pre.periodic()->window.bounded_below()) {
            out.compatible = {false, "f^-1(" + v.str() + ") = " + pre.str() +
                                         " has infinitely many components below every d, so f^-1(V) n (-inf,d) "
                                         "is no finite union"};
            break;
        }
    }
    if (out.compatible.holds) {
        out.compatible.witness = "every f^-1(V) has finitely many components below each d";
    }
    return out;
}

std::vector<TableRow> realline_table() {
    std::vector<TableRow> rows;
    for (const auto& m : catalog()) {
        TableRow row{m.name, classify_map(m), frame_hom_verdict(m), false};
        row.agrees = row.classification.bounded.holds == row.hom.dominating.holds &&
                     row.classification.continuous.holds == row.hom.compatible.holds;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace smop
