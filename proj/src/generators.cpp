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

#include "smop/generators.hpp"

#include <algorithm>

#include "smop/error.hpp"

namespace smop {

namespace {

std::vector<std::string> numbered(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    return names;
}

Family close_family(Family family, PointSet all) {
    family.push_back(0);
    family.push_back(all);
    family = normalize_family(std::move(family));
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t k = family.size();
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                for (PointSet s : {family[i] | family[j], family[i] & family[j]}) {
                    if (!family_contains(family, s)) {
                        family.push_back(s);
                        grew = true;
                    }
                }
            }
        }
        family = normalize_family(std::move(family));
    }
    return family;
}

}  // namespace

FramePair downset_pair(const Poset& poset) { return FramePair::whole(downset_lattice(poset)); }

FrameHom preimage_hom(const Poset& p, const Poset& q, const std::vector<std::size_t>& g) {
    if (g.size() != q.size()) throw Error(ErrorCode::InvalidInstance, "poset map is not total");
    for (std::size_t a = 0; a < q.size(); ++a) {
        for (std::size_t b = 0; b < q.size(); ++b) {
            if (q.leq(a, b) && !p.leq(g[a], g[b])) throw Error(ErrorCode::InvalidInstance, "poset map is not monotone");
        }
    }
    const auto down_p = downsets(p);
    const auto down_q = downsets(q);
    std::vector<Element> map;
    for (PointSet d : down_p) {
        PointSet pre = 0;
        for (std::size_t x = 0; x < q.size(); ++x) {
            if (contains(d, g[x])) pre |= bit(x);
        }
        map.push_back(static_cast<Element>(std::lower_bound(down_q.begin(), down_q.end(), pre) - down_q.begin()));
    }
    return FrameHom(downset_pair(p), downset_pair(q), std::move(map));
}

std::vector<FramePair> generate_frames_exhaustive(std::size_t n) {
    if (n > 4) throw Error(ErrorCode::SizeLimitExceeded, "exhaustive frames go up to 4-point posets");
    std::vector<FramePair> out;
    for_each_poset(n, [&](const Poset& p) { out.push_back(downset_pair(p)); });
    return out;
}

std::vector<FramePair> generate_frames_random(std::uint64_t seed, std::size_t count, std::size_t poset_size) {
    if (poset_size > 6) throw Error(ErrorCode::SizeLimitExceeded, "random frames go up to 6-point posets");
    MorphismSource source(seed);
    std::vector<FramePair> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(downset_pair(source.poset(poset_size)));
    return out;
}

std::vector<LocallySmallSpace> generate_spaces_exhaustive(std::size_t n) {
    if (n > 3) throw Error(ErrorCode::SizeLimitExceeded, "exhaustive spaces go up to 3 points");
    const PointSet all = full_set(n);
    // proper nonempty subsets are 1 .. all-1
    const std::size_t middle = n == 0 ? 0 : (std::size_t{1} << n) - 2;
    std::vector<LocallySmallSpace> out;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << middle); ++choice) {
        Family family{0, all};
        for (std::size_t i = 0; i < middle; ++i) {
            if (choice >> i & 1) family.push_back(i + 1);
        }
        family = normalize_family(std::move(family));
        bool closed = true;
        for (std::size_t i = 0; closed && i < family.size(); ++i) {
            for (std::size_t j = i + 1; closed && j < family.size(); ++j) {
                closed = family_contains(family, family[i] | family[j]) && family_contains(family, family[i] & family[j]);
            }
        }
        if (closed) out.push_back(LocallySmallSpace::validate(numbered(n), std::move(family)));
    }
    return out;
}

std::vector<LocallySmallSpace> generate_spaces_random(std::uint64_t seed, std::size_t count, std::size_t n) {
    if (n > 6) throw Error(ErrorCode::SizeLimitExceeded, "random spaces go up to 6 points");
    MorphismSource source(seed);
    std::vector<LocallySmallSpace> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(source.space(n));
    return out;
}

std::size_t MorphismSource::below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

Poset MorphismSource::poset(std::size_t n) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng_);
    BoolMatrix leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        leq[order[i]][order[i]] = true;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (below(2) == 1) leq[order[i]][order[j]] = true;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (leq[i][k] && leq[k][j]) leq[i][j] = true;
            }
        }
    }
    return Poset(std::move(leq));
}

LocallySmallSpace MorphismSource::space(std::size_t n) {
    const PointSet all = full_set(n);
    Family seeds;
    const std::size_t k = 1 + below(4);
    for (std::size_t i = 0; i < k && n > 0; ++i) seeds.push_back(std::uniform_int_distribution<PointSet>(0, all)(rng_));
    return LocallySmallSpace::validate(numbered(n), close_family(std::move(seeds), all));
}

SpaceMap MorphismSource::continuous_map(const LocallySmallSpace& source, const LocallySmallSpace& target) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::size_t> map(source.size());
        for (auto& y : map) y = below(target.size());
        SpaceMap f(source, target, std::move(map));
        if (is_bounded_map(f) && is_continuous_map(f)) return f;
    }
    // constant maps pull every smop back to the empty set or the carrier
    return SpaceMap(source, target, std::vector<std::size_t>(source.size(), below(target.size())));
}

std::vector<std::size_t> MorphismSource::monotone_map(const Poset& from, const Poset& to) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::size_t> g(from.size());
        for (auto& y : g) y = below(to.size());
        bool monotone = true;
        for (std::size_t a = 0; monotone && a < from.size(); ++a) {
            for (std::size_t b = 0; monotone && b < from.size(); ++b) {
                monotone = !from.leq(a, b) || to.leq(g[a], g[b]);
            }
        }
        if (monotone) return g;
    }
    return std::vector<std::size_t>(from.size(), below(to.size()));
}

SpaceMap MorphismSource::space_map(std::size_t max_points) {
    const LocallySmallSpace x = space(points(max_points));
    const LocallySmallSpace y = space(points(max_points));
    return continuous_map(x, y);
}

std::pair<SpaceMap, SpaceMap> MorphismSource::space_chain(std::size_t max_points) {
    const LocallySmallSpace x = space(points(max_points));
    const LocallySmallSpace y = space(points(max_points));
    const LocallySmallSpace z = space(points(max_points));
    SpaceMap f = continuous_map(x, y);
    SpaceMap g = continuous_map(y, z);
    return {std::move(f), std::move(g)};
}

SpecialLocalicMap MorphismSource::localic_map(std::size_t max_points) {
    const Poset p = poset(points(max_points));
    const Poset q = poset(points(max_points));
    return right_adjoint(preimage_hom(p, q, monotone_map(q, p)));
}

std::pair<SpecialLocalicMap, SpecialLocalicMap> MorphismSource::localic_chain(std::size_t max_points) {
    const Poset p = poset(points(max_points));
    const Poset q = poset(points(max_points));
    const Poset r = poset(points(max_points));
    // outer = (g1^-1)_* : O(Q) -> O(P), inner = (g2^-1)_* : O(R) -> O(Q)
    SpecialLocalicMap outer = right_adjoint(preimage_hom(p, q, monotone_map(q, p)));
    SpecialLocalicMap inner = right_adjoint(preimage_hom(q, r, monotone_map(r, q)));
    return {std::move(inner), std::move(outer)};
}

}  // namespace smop
