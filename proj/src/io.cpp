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

#include "smop/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "smop/error.hpp"

namespace smop {

namespace {

const std::map<InstanceKind, std::string_view>& kind_names() {
    static const std::map<InstanceKind, std::string_view> names{
        {InstanceKind::Lattice, "lattice"},     {InstanceKind::FramePair, "frame-pair"},
        {InstanceKind::Space, "space"},         {InstanceKind::SpaceMap, "space-map"},
        {InstanceKind::FrameHom, "frame-hom"},  {InstanceKind::RealSet, "real-set"},
        {InstanceKind::CatalogMap, "catalog-map"},
    };
    return names;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
    return *it;
}

bool truth(const json& v) {
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1)) return v.get<int>() == 1;
    throw Error(ErrorCode::ParseError, "order matrix entries must be 0, 1, true or false");
}

PointSet point_set(const json& names, const std::map<std::string, std::size_t>& index) {
    PointSet s = 0;
    for (const auto& n : names) {
        auto it = index.find(n.get<std::string>());
        if (it == index.end()) throw Error(ErrorCode::InvalidInstance, "unknown point \"" + n.get<std::string>() + "\"");
        s |= bit(it->second);
    }
    return s;
}

json point_names(PointSet s, const std::vector<std::string>& carrier) {
    json out = json::array();
    for_each_member(s, [&](std::size_t x) { out.push_back(carrier[x]); });
    return out;
}

json interval_json(const OpenInterval& iv) { return json::array({iv.lo.str(), iv.hi.str()}); }

OpenInterval interval_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "an interval is a pair [lo, hi]");
    auto iv = OpenInterval::make(Endpoint::parse(j[0].get<std::string>()), Endpoint::parse(j[1].get<std::string>()));
    if (!iv) throw Error(ErrorCode::InvalidInstance, "empty interval [" + j[0].get<std::string>() + ", " + j[1].get<std::string>() + "]");
    return *iv;
}

/// Runs a reader and turns nlohmann's type errors into ParseError.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace

std::string_view to_string(InstanceKind kind) { return kind_names().at(kind); }

json to_json(const FiniteLattice& lattice) {
    json leq = json::array();
    for (const auto& row : lattice.order_matrix()) {
        json r = json::array();
        for (bool b : row) r.push_back(b ? 1 : 0);
        leq.push_back(std::move(r));
    }
    return {{"kind", "lattice"}, {"size", lattice.size()}, {"leq", std::move(leq)}, {"labels", lattice.labels()}};
}

json to_json(const FramePair& pair) {
    json j = to_json(pair.frame());
    j["kind"] = "frame-pair";
    j["designated"] = members(pair.designated());
    return j;
}

json to_json(const LocallySmallSpace& space) {
    json smops = json::array();
    for (PointSet s : space.smops()) smops.push_back(point_names(s, space.carrier()));
    return {{"kind", "space"}, {"carrier", space.carrier()}, {"smops", std::move(smops)}};
}

json to_json(const SpaceMap& map) {
    json m = json::object();
    for (std::size_t x = 0; x < map.source().size(); ++x) m[map.source().point_name(x)] = map.target().point_name(map(x));
    return {{"kind", "space-map"}, {"source", to_json(map.source())}, {"target", to_json(map.target())}, {"map", std::move(m)}};
}

json to_json(const FrameHom& hom) {
    return {{"kind", "frame-hom"}, {"source", to_json(hom.source())}, {"target", to_json(hom.target())}, {"map", hom.map()}};
}

json to_json(const SymbolicRealSet& set) {
    json pieces = json::array();
    for (const auto& p : set.pieces()) pieces.push_back(interval_json(p));
    json j{{"kind", "real-set"}, {"pieces", std::move(pieces)}};
    if (const auto& p = set.periodic()) {
        json pattern = json::array();
        for (const auto& iv : p->pattern) pattern.push_back(interval_json(iv));
        j["periodic"] = {{"pattern", std::move(pattern)}, {"period", Endpoint(p->period).str()}, {"window", interval_json(p->window)}};
    }
    return j;
}

json to_json(const CatalogMap& map) {
    if (const auto* f = std::get_if<Affine>(&map.kind); f && map.name != "neg_id") {
        return {{"kind", "catalog-map"}, {"name", map.name}, {"affine", {rational_string(f->p), rational_string(f->q)}}};
    }
    return {{"kind", "catalog-map"}, {"name", map.name}};
}

json to_json(const AdjunctionReport& report) {
    json laws = json::array();
    for (const auto& l : report.laws) laws.push_back({{"name", l.name}, {"pass", l.pass}, {"witness", l.witness}});
    return {{"instance", report.instance}, {"laws", std::move(laws)}};
}

json to_json(const InstanceBundle& bundle) {
    return std::visit([](const auto& payload) { return to_json(payload); }, bundle.payload);
}

FiniteLattice lattice_from_json(const json& j) {
    return guarded([&] {
        const json& leq = field(j, "leq");
        if (!leq.is_array()) throw Error(ErrorCode::ParseError, "\"leq\" must be a matrix");
        const std::size_t n = leq.size();
        if (j.contains("size") && j["size"].get<std::size_t>() != n) {
            throw Error(ErrorCode::ParseError, "\"size\" disagrees with the order matrix");
        }
        BoolMatrix m(n, std::vector<bool>(n));
        for (std::size_t i = 0; i < n; ++i) {
            if (!leq[i].is_array() || leq[i].size() != n) throw Error(ErrorCode::ParseError, "order matrix is not square");
            for (std::size_t k = 0; k < n; ++k) m[i][k] = truth(leq[i][k]);
        }
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
        if (!labels.empty() && labels.size() != n) throw Error(ErrorCode::ParseError, "one label per element expected");
        return validate_lattice(m, std::move(labels));
    });
}

FramePair pair_from_json(const json& j) {
    return guarded([&] {
        FiniteLattice l = lattice_from_json(j);
        if (!j.contains("designated")) return FramePair::whole(std::move(l));
        ElementSet designated = 0;
        for (const auto& e : j["designated"]) {
            if (e.is_string()) {
                const auto& labels = l.labels();
                auto it = std::find(labels.begin(), labels.end(), e.get<std::string>());
                if (it == labels.end()) throw Error(ErrorCode::InvalidInstance, "unknown element \"" + e.get<std::string>() + "\"");
                designated |= bit(static_cast<std::size_t>(it - labels.begin()));
            } else {
                const auto idx = e.get<std::size_t>();
                if (idx >= l.size()) throw Error(ErrorCode::InvalidInstance, "designated element out of range");
                designated |= bit(idx);
            }
        }
        return FramePair::validate(std::move(l), designated);
    });
}

LocallySmallSpace space_from_json(const json& j) {
    return guarded([&] {
        auto carrier = field(j, "carrier").get<std::vector<std::string>>();
        if (carrier.size() > kMaxCarrier) throw Error(ErrorCode::SizeLimitExceeded, "carrier larger than 64");
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < carrier.size(); ++i) {
            if (!index.emplace(carrier[i], i).second) throw Error(ErrorCode::InvalidInstance, "duplicate point \"" + carrier[i] + "\"");
        }
        Family smops;
        for (const auto& s : field(j, "smops")) smops.push_back(point_set(s, index));
        return LocallySmallSpace::validate(std::move(carrier), std::move(smops));
    });
}

SpaceMap space_map_from_json(const json& j) {
    return guarded([&] {
        LocallySmallSpace source = space_from_json(field(j, "source"));
        LocallySmallSpace target = space_from_json(field(j, "target"));
        const json& m = field(j, "map");
        std::vector<std::size_t> map(source.size());
        const auto& tc = target.carrier();
        for (std::size_t x = 0; x < source.size(); ++x) {
            if (!m.contains(source.point_name(x))) {
                throw Error(ErrorCode::InvalidInstance, "map is undefined at \"" + source.point_name(x) + "\"");
            }
            const auto y = m[source.point_name(x)].get<std::string>();
            auto it = std::find(tc.begin(), tc.end(), y);
            if (it == tc.end()) throw Error(ErrorCode::InvalidInstance, "unknown target point \"" + y + "\"");
            map[x] = static_cast<std::size_t>(it - tc.begin());
        }
        return SpaceMap(std::move(source), std::move(target), std::move(map));
    });
}

FrameHom hom_from_json(const json& j) {
    return guarded([&] {
        return FrameHom(pair_from_json(field(j, "source")), pair_from_json(field(j, "target")),
                        field(j, "map").get<std::vector<Element>>());
    });
}

SymbolicRealSet real_set_from_json(const json& j) {
    return guarded([&] {
        std::vector<OpenInterval> pieces;
        for (const auto& p : field(j, "pieces")) pieces.push_back(interval_from_json(p));
        SymbolicRealSet set = SymbolicRealSet::of(std::move(pieces));
        if (j.contains("periodic")) {
            const json& p = j["periodic"];
            std::vector<OpenInterval> pattern;
            for (const auto& iv : field(p, "pattern")) pattern.push_back(interval_from_json(iv));
            const Endpoint period = Endpoint::parse(field(p, "period").get<std::string>());
            if (!period.is_finite()) throw Error(ErrorCode::InvalidInstance, "period must be finite");
            OpenInterval window{Endpoint::neg_inf(), Endpoint::pos_inf()};
            if (p.contains("window")) window = interval_from_json(p["window"]);
            set = set.unite(SymbolicRealSet::periodic(std::move(pattern), period.value(), std::move(window)));
        }
        return set;
    });
}

CatalogMap catalog_map_from_json(const json& j) {
    return guarded([&] {
        if (j.contains("affine")) {
            const json& a = j["affine"];
            if (!a.is_array() || a.size() != 2) throw Error(ErrorCode::ParseError, "\"affine\" is [p, q]");
            return affine_map(parse_rational(a[0].get<std::string>()), parse_rational(a[1].get<std::string>()),
                              j.value("name", std::string("affine")));
        }
        return catalog_map(field(j, "name").get<std::string>());
    });
}

InstanceKind detect_kind(const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "an instance is a JSON object");
    if (j.contains("kind")) {
        const auto name = guarded([&] { return j["kind"].get<std::string>(); });
        for (const auto& [kind, n] : kind_names()) {
            if (n == name) return kind;
        }
        throw Error(ErrorCode::ParseError, "unknown kind \"" + name + "\"");
    }
    if (j.contains("designated")) return InstanceKind::FramePair;
    if (j.contains("leq")) return InstanceKind::Lattice;
    if (j.contains("smops")) return InstanceKind::Space;
    if (j.contains("map") && j.contains("source")) {
        return j["source"].is_object() && j["source"].contains("smops") ? InstanceKind::SpaceMap : InstanceKind::FrameHom;
    }
    if (j.contains("pieces")) return InstanceKind::RealSet;
    if (j.contains("affine") || j.contains("name")) return InstanceKind::CatalogMap;
    throw Error(ErrorCode::ParseError, "cannot tell the instance kind; add a \"kind\" field");
}

InstanceBundle bundle_from_json(const json& j, std::string provenance) {
    const InstanceKind kind = detect_kind(j);
    auto payload = [&]() -> InstancePayload {
        switch (kind) {
            case InstanceKind::Lattice: return lattice_from_json(j);
            case InstanceKind::FramePair: return pair_from_json(j);
            case InstanceKind::Space: return space_from_json(j);
            case InstanceKind::SpaceMap: return space_map_from_json(j);
            case InstanceKind::FrameHom: return hom_from_json(j);
            case InstanceKind::RealSet: return real_set_from_json(j);
            case InstanceKind::CatalogMap: return catalog_map_from_json(j);
        }
        throw Error(ErrorCode::ParseError, "unhandled kind");
    }();
    return {kind, std::move(payload), std::move(provenance)};
}

InstanceBundle parse_instance(std::string_view text, std::string provenance) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        const std::string_view before = text.substr(0, offset);
        const std::size_t line = 1 + static_cast<std::size_t>(std::count(before.begin(), before.end(), '\n'));
        const auto nl = before.rfind('\n');
        const std::size_t column = offset - (nl == std::string_view::npos ? 0 : nl + 1) + 1;
        std::string message = e.what();
        if (auto pos = message.rfind(": "); pos != std::string::npos) message = message.substr(pos + 2);
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
    }
    return bundle_from_json(j, std::move(provenance));
}

InstanceBundle load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_instance(text.str(), "file:" + path.string());
}

std::string serialize(const InstanceBundle& bundle) { return to_json(bundle).dump(2); }

}  // namespace smop
