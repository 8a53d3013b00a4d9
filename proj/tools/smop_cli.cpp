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

// smop: command line front end for the frame / space duality toolkit.
//
// Exit codes: 0 every law holds, 1 some law fails, 2 bad input.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "smop/duality.hpp"
#include "smop/error.hpp"
#include "smop/generators.hpp"
#include "smop/io.hpp"
#include "smop/realline.hpp"
#include "smop/spectrum.hpp"
#include "smop/suites.hpp"

namespace {

using namespace smop;

struct Options {
    std::string format = "text";
    unsigned jobs = 0;
    std::string file;
    std::string catalog;
    std::optional<std::size_t> exhaustive;
    std::optional<std::uint64_t> seed;
    std::size_t count = 20;
};

bool as_json(const Options& o) { return o.format == "json"; }

FramePair as_pair(const InstanceBundle& b) {
    if (const auto* p = std::get_if<FramePair>(&b.payload)) return *p;
    if (const auto* l = std::get_if<FiniteLattice>(&b.payload)) return FramePair::whole(*l);
    throw Error(ErrorCode::InvalidInstance, "expected a lattice or frame pair, got " + std::string(to_string(b.kind)));
}

template <class T>
const T& expect(const InstanceBundle& b, const char* what) {
    if (const auto* x = std::get_if<T>(&b.payload)) return *x;
    throw Error(ErrorCode::InvalidInstance, std::string("expected ") + what + ", got " + std::string(to_string(b.kind)));
}

void print_report(const AdjunctionReport& r, std::ostream& out) {
    out << r.instance << ": " << (r.ok() ? "PASS" : "FAIL") << "\n";
    for (const auto& l : r.laws) out << "  [" << (l.pass ? "ok" : "FAIL") << "] " << l.name << ": " << l.witness << "\n";
}

int emit(const AdjunctionReport& r, const Options& o) {
    if (as_json(o)) {
        std::cout << to_json(r).dump(2) << "\n";
    } else {
        print_report(r, std::cout);
    }
    return r.ok() ? 0 : 1;
}

int emit(const SuiteSummary& s, const Options& o) {
    if (as_json(o)) {
        json reports = json::array();
        for (const auto& r : s.reports) reports.push_back(to_json(r));
        std::cout << json{{"suite", s.name}, {"instances", s.reports.size()}, {"laws", s.laws()},
                          {"failures", s.failures()}, {"reports", std::move(reports)}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& r : s.reports) {
            if (!r.ok()) print_report(r, std::cout);
        }
        std::cout << s.name << ": " << s.reports.size() << " instances, " << s.laws() << " laws, " << s.failures()
                  << " failures\n";
    }
    return s.ok() ? 0 : 1;
}

int cmd_validate(const Options& o) {
    const InstanceBundle b = load_instance(o.file);
    if (as_json(o)) {
        std::cout << json{{"kind", to_string(b.kind)}, {"valid", true}, {"instance", to_json(b)}}.dump(2) << "\n";
    } else {
        std::cout << to_string(b.kind) << ": valid\n";
    }
    return 0;
}

int cmd_spectrum(const Options& o) {
    const FramePair pair = as_pair(load_instance(o.file));
    const FiniteLattice& l = pair.frame();
    const SpectrumSpace s = spectrum_space(l, pair.designated());
    const auto names = s.spec.names(l);
    if (as_json(o)) {
        json delta = json::object();
        for (Element a = 0; a < l.size(); ++a) {
            json pts = json::array();
            for_each_member(s.spec.delta[a], [&](std::size_t p) { pts.push_back(names[p]); });
            delta[l.label(a)] = std::move(pts);
        }
        json opens = json::array();
        for (PointSet u : s.topology.opens()) opens.push_back(format_set(u, names));
        std::cout << json{{"points", names}, {"delta", delta}, {"topology", opens}}.dump(2) << "\n";
    } else {
        std::cout << "points:";
        for (const auto& n : names) std::cout << " " << n;
        std::cout << "\ndelta:\n";
        for (Element a = 0; a < l.size(); ++a) std::cout << "  " << l.label(a) << " -> " << format_set(s.spec.delta[a], names) << "\n";
        std::cout << "topology:";
        for (PointSet u : s.topology.opens()) std::cout << " " << format_set(u, names);
        std::cout << "\n";
    }
    return 0;
}

json verdict_json(const Verdict& v) { return {{"holds", v.holds}, {"witness", v.witness}}; }

json row_json(const std::string& name, const MapClassification& c, const HomVerdict& h) {
    return {{"map", name},
            {"bounded", verdict_json(c.bounded)},
            {"continuous", verdict_json(c.continuous)},
            {"weakly_continuous", verdict_json(c.weakly_continuous)},
            {"dominating", verdict_json(h.dominating)},
            {"compatible", verdict_json(h.compatible)}};
}

void print_row(const std::string& name, const MapClassification& c, const HomVerdict& h) {
    auto yn = [](const Verdict& v) { return v.holds ? "yes" : "no"; };
    std::cout << name << ": bounded=" << yn(c.bounded) << " continuous=" << yn(c.continuous)
              << " weakly_continuous=" << yn(c.weakly_continuous) << " dominating=" << yn(h.dominating)
              << " compatible=" << yn(h.compatible) << "\n"
              << "  bounded: " << c.bounded.witness << "\n"
              << "  continuous: " << c.continuous.witness << "\n"
              << "  dominating: " << h.dominating.witness << "\n"
              << "  compatible: " << h.compatible.witness << "\n";
}

int cmd_classify(const Options& o) {
    CatalogMap m = !o.catalog.empty() ? catalog_map(o.catalog)
                                      : expect<CatalogMap>(load_instance(o.file), "a catalog map");
    const MapClassification c = classify_map(m);
    const HomVerdict h = frame_hom_verdict(m);
    if (as_json(o)) {
        std::cout << row_json(m.name, c, h).dump(2) << "\n";
    } else {
        print_row(m.name, c, h);
    }
    return 0;
}

int cmd_omega(const Options& o) {
    const FramePair p = omega_object(expect<LocallySmallSpace>(load_instance(o.file), "a space"));
    std::cout << (as_json(o) ? to_json(p).dump(2) : to_json(p).dump()) << "\n";
    return 0;
}

int cmd_sigma(const Options& o) {
    const LocallySmallSpace x = sigma_object(as_pair(load_instance(o.file)));
    std::cout << (as_json(o) ? to_json(x).dump(2) : to_json(x).dump()) << "\n";
    return 0;
}

int cmd_roundtrip(const Options& o) {
    const InstanceBundle b = load_instance(o.file);
    AdjunctionReport r = b.kind == InstanceKind::Space ? stone_roundtrip(std::get<LocallySmallSpace>(b.payload))
                                                       : stone_roundtrip(as_pair(b));
    r.instance = b.provenance;
    return emit(r, o);
}

int cmd_adjunction(const Options& o) {
    const InstanceBundle b = load_instance(o.file);
    AdjunctionReport r;
    switch (b.kind) {
        case InstanceKind::Space: {
            const auto& x = std::get<LocallySmallSpace>(b.payload);
            r = check_both_triangles(x);
            r.append(check_naturality(SpaceMap::identity(x)));
            break;
        }
        case InstanceKind::SpaceMap: {
            const auto& f = std::get<SpaceMap>(b.payload);
            r = check_naturality(f);
            r.append(check_both_triangles(f.source()));
            r.append(check_both_triangles(f.target()));
            break;
        }
        case InstanceKind::FrameHom: {
            const SpecialLocalicMap m = right_adjoint(std::get<FrameHom>(b.payload));
            r = check_naturality(m);
            r.append(check_both_triangles(m.domain()));
            r.append(check_both_triangles(m.codomain()));
            break;
        }
        default: {
            const FramePair p = as_pair(b);
            r = check_both_triangles(p);
            r.append(check_naturality(right_adjoint(FrameHom::identity(p))));
            break;
        }
    }
    r.instance = b.provenance;
    return emit(r, o);
}

int cmd_hl_suite(const Options& o) {
    const Bounds bounds = Bounds::from_env();
    std::vector<FramePair> frames;
    std::vector<LocallySmallSpace> spaces;
    if (o.seed) {
        frames = generate_frames_random(*o.seed, o.count, 4);
        spaces = generate_spaces_random(*o.seed, o.count, 3);
    } else {
        const std::size_t n = o.exhaustive.value_or(3);
        frames = generate_frames_exhaustive(n);
        spaces = generate_spaces_exhaustive(std::min<std::size_t>(n, 3));
    }
    return emit(hl_suite(spaces, frames, bounds, o.jobs), o);
}

int cmd_table(const Options& o) {
    const auto rows = realline_table();
    bool agree = true;
    json out = json::array();
    for (const auto& r : rows) {
        agree = agree && r.agrees;
        if (as_json(o)) {
            json row = row_json(r.map, r.classification, r.hom);
            row["agrees"] = r.agrees;
            out.push_back(std::move(row));
        } else {
            print_row(r.map, r.classification, r.hom);
        }
    }
    if (as_json(o)) std::cout << out.dump(2) << "\n";
    return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frames with designated sublattices, locally small spaces, and the duality between them"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", o.jobs, "Worker threads for suites (0 = all cores)");

    auto with_file = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", o.file, "Instance file (JSON)")->required();
        return sub;
    };
    auto* validate = with_file("validate", "Parse and validate an instance of any kind");
    auto* spectrum = with_file("spectrum", "Primes, Delta table and hull-kernel topology of a lattice");
    auto* classify = app.add_subcommand("classify-map", "Classify a real-line catalog map");
    classify->add_option("file", o.file, "Catalog map file");
    classify->add_option("--catalog", o.catalog, "Catalog name: neg_id, sin, arctan, exp_neg");
    auto* omega = with_file("omega", "Weakly open frame of a locally small space");
    auto* sigma = with_file("sigma", "Spectrum space of a frame pair");
    auto* roundtrip = with_file("roundtrip", "Stone-type round trip on a space or frame pair");
    auto* adjunction = with_file("adjunction", "Triangle identities and naturality at an instance");
    auto* hl = app.add_subcommand("hl-suite", "Locally compact / continuous duality certificates over a suite");
    auto* exhaustive = hl->add_option("--exhaustive", o.exhaustive, "All posets/topologies on n points");
    auto* seed = hl->add_option("--seed", o.seed, "Seed for random instances");
    hl->add_option("--count", o.count, "Random instances of each kind");
    exhaustive->excludes(seed);
    auto* table = app.add_subcommand("realline-table", "Classification table of the real-line catalog maps");
    for (auto* sub : {validate, spectrum, classify, omega, sigma, roundtrip, adjunction, hl, table}) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--jobs", o.jobs, "Worker threads for suites (0 = all cores)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(o);
        if (*spectrum) return cmd_spectrum(o);
        if (*classify) {
            if (o.file.empty() && o.catalog.empty()) throw Error(ErrorCode::InvalidInstance, "give a file or --catalog");
            return cmd_classify(o);
        }
        if (*omega) return cmd_omega(o);
        if (*sigma) return cmd_sigma(o);
        if (*roundtrip) return cmd_roundtrip(o);
        if (*adjunction) return cmd_adjunction(o);
        if (*hl) return cmd_hl_suite(o);
        if (*table) return cmd_table(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
