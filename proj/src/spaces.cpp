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

#include "smop/spaces.hpp"

#include "smop/error.hpp"

namespace smop {

Family family_intersection(const Family& u, const Family& v) {
    Family out;
    out.reserve(u.size() * v.size());
    for (PointSet a : u) {
        for (PointSet b : v) out.push_back(a & b);
    }
    return normalize_family(std::move(out));
}

LocallySmallSpace LocallySmallSpace::validate(std::vector<std::string> carrier, Family smops) {
    if (carrier.size() > kMaxCarrier) {
        throw Error(ErrorCode::SizeLimitExceeded, "carrier larger than " + std::to_string(kMaxCarrier));
    }
    const PointSet all = full_set(carrier.size());
    smops = normalize_family(std::move(smops));
    for (PointSet s : smops) {
        if (!is_subset(s, all)) throw Error(ErrorCode::InvalidInstance, "smop has points outside the carrier");
    }
    if (!family_contains(smops, 0)) throw Error(ErrorCode::MissingEmpty, "");
    for (std::size_t i = 0; i < smops.size(); ++i) {
        for (std::size_t j = i + 1; j < smops.size(); ++j) {
            const std::string pair = format_set(smops[i], carrier) + "," + format_set(smops[j], carrier);
            if (!family_contains(smops, smops[i] & smops[j])) {
                throw Error(ErrorCode::NotIntersectionClosed, pair);
            }
            if (!family_contains(smops, smops[i] | smops[j])) throw Error(ErrorCode::NotUnionClosed, pair);
        }
    }
    PointSet covered = 0;
    for (PointSet s : smops) covered |= s;
    if (covered != all) {
        const std::size_t missing = members(all & ~covered).front();
        throw Error(ErrorCode::DoesNotCover, carrier[missing]);
    }
    LocallySmallSpace space;
    space.carrier_ = std::move(carrier);
    space.smops_ = std::move(smops);
    return space;
}

SpaceMap::SpaceMap(LocallySmallSpace source, LocallySmallSpace target, std::vector<std::size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (map_.size() != source_.size()) {
        throw Error(ErrorCode::InvalidInstance, "map is not total on the source carrier");
    }
    for (std::size_t y : map_) {
        if (y >= target_.size()) throw Error(ErrorCode::InvalidInstance, "map leaves the target carrier");
    }
}

SpaceMap SpaceMap::identity(const LocallySmallSpace& space) {
    std::vector<std::size_t> map(space.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
    return SpaceMap(space, space, std::move(map));
}

PointSet SpaceMap::preimage(PointSet v) const {
    PointSet out = 0;
    for (std::size_t x = 0; x < map_.size(); ++x) {
        if (contains(v, map_[x])) out |= bit(x);
    }
    return out;
}

PointSet SpaceMap::image(PointSet w) const {
    PointSet out = 0;
    for_each_member(w, [&](std::size_t x) { out |= bit(map_[x]); });
    return out;
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
    if (!(f.target() == g.source())) throw Error(ErrorCode::InvalidInstance, "maps are not composable");
    std::vector<std::size_t> map(f.source().size());
    for (std::size_t x = 0; x < map.size(); ++x) map[x] = g(f(x));
    return SpaceMap(f.source(), g.target(), std::move(map));
}

Family weakly_open_family(const LocallySmallSpace& space) {
    // Pairwise unions to a fixpoint give every finite union; the family is
    // finite, so that is every union.
    Family wo = space.smops();
    wo.push_back(0);
    wo = normalize_family(std::move(wo));
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t n = wo.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!family_contains(wo, wo[i] | wo[j])) {
                    wo.push_back(wo[i] | wo[j]);
                    grew = true;
                }
            }
        }
        wo = normalize_family(std::move(wo));
    }
    return wo;
}

TopSpace weakly_open(const LocallySmallSpace& space) {
    return TopSpace::validate(space.carrier(), weakly_open_family(space));
}

bool is_T0_space(const LocallySmallSpace& space) {
    for (std::size_t x = 0; x < space.size(); ++x) {
        for (std::size_t y = x + 1; y < space.size(); ++y) {
            bool separated = false;
            for (PointSet v : space.smops()) {
                if (popcount(v & (bit(x) | bit(y))) == 1) {
                    separated = true;
                    break;
                }
            }
            if (!separated) return false;
        }
    }
    return true;
}

bool is_bounded_map(const SpaceMap& f) {
    for (PointSet w : f.source().smops()) {
        bool covered = false;
        for (PointSet v : f.target().smops()) {
            if (is_subset(w, f.preimage(v))) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool is_continuous_map(const SpaceMap& f) {
    for (PointSet v : f.target().smops()) {
        const PointSet pre = f.preimage(v);
        for (PointSet w : f.source().smops()) {
            if (!f.source().is_smop(pre & w)) return false;
        }
    }
    return true;
}

bool is_weakly_continuous_map(const SpaceMap& f) {
    const Family source_wo = weakly_open_family(f.source());
    for (PointSet v : weakly_open_family(f.target())) {
        if (!family_contains(source_wo, f.preimage(v))) return false;
    }
    return true;
}

PointSet ext_point(const LocallySmallSpace& space, std::size_t x) {
    const Family wo = weakly_open_family(space);
    PointSet ext = 0;
    for (PointSet w : wo) {
        if (!contains(w, x)) ext |= w;
    }
    bool prime = ext != space.all();
    for (std::size_t i = 0; i < wo.size() && prime; ++i) {
        for (std::size_t j = i; j < wo.size(); ++j) {
            if ((wo[i] & wo[j]) == ext && wo[i] != ext && wo[j] != ext) {
                prime = false;
                break;
            }
        }
    }
    if (!prime) throw Error(ErrorCode::NotPrime, "ext{" + space.point_name(x) + "} = " + space.format(ext));
    return ext;
}

LocallySmallSpace from_topology_basis(const TopSpace& topology, Family basis) {
    basis = normalize_family(std::move(basis));
    for (PointSet b : basis) {
        if (!topology.is_open(b)) {
            throw Error(ErrorCode::NotABasis, format_set(b, topology.carrier()) + " is not open");
        }
    }
    if (!family_contains(basis, 0)) throw Error(ErrorCode::NotSublattice, "empty set missing");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (!family_contains(basis, basis[i] & basis[j]) || !family_contains(basis, basis[i] | basis[j])) {
                throw Error(ErrorCode::NotSublattice, format_set(basis[i], topology.carrier()) + "," +
                                                          format_set(basis[j], topology.carrier()));
            }
        }
    }
    PointSet covered = 0;
    for (PointSet b : basis) covered |= b;
    if (covered != topology.all()) {
        throw Error(ErrorCode::DoesNotCover, topology.carrier()[members(topology.all() & ~covered).front()]);
    }
    LocallySmallSpace space = LocallySmallSpace::validate(topology.carrier(), basis);
    if (weakly_open_family(space) != topology.opens()) {
        throw Error(ErrorCode::NotABasis, "unions of the basis do not give the topology");
    }
    return space;
}

bool is_topologically_sober(const LocallySmallSpace& space, const Bounds& bounds) {
    return is_sober(weakly_open(space), bounds);
}

bool is_topologically_locally_compact(const LocallySmallSpace& space, const Bounds& bounds) {
    return is_locally_compact(weakly_open(space), bounds);
}

}  // namespace smop
