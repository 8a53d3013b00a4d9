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

#include "smop/spectrum.hpp"

#include <algorithm>
#include <unordered_map>

#include "smop/error.hpp"

namespace smop {

Family normalize_family(Family family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

bool family_contains(const Family& family, PointSet s) {
    return std::binary_search(family.begin(), family.end(), s);
}

TopSpace TopSpace::validate(std::vector<std::string> carrier, Family opens) {
    if (carrier.size() > kMaxCarrier) {
        throw Error(ErrorCode::SizeLimitExceeded, "carrier larger than " + std::to_string(kMaxCarrier));
    }
    const PointSet all = full_set(carrier.size());
    opens = normalize_family(std::move(opens));
    for (PointSet u : opens) {
        if (!is_subset(u, all)) throw Error(ErrorCode::NotATopology, "open set outside the carrier");
    }
    if (!family_contains(opens, 0)) throw Error(ErrorCode::NotATopology, "empty set is not open");
    if (!family_contains(opens, all)) throw Error(ErrorCode::NotATopology, "carrier is not open");
    for (std::size_t i = 0; i < opens.size(); ++i) {
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            if (!family_contains(opens, opens[i] & opens[j])) {
                throw Error(ErrorCode::NotATopology, "not closed under intersection: " +
                                                         format_set(opens[i], carrier) + " " +
                                                         format_set(opens[j], carrier));
            }
            if (!family_contains(opens, opens[i] | opens[j])) {
                throw Error(ErrorCode::NotATopology, "not closed under union: " + format_set(opens[i], carrier) +
                                                         " " + format_set(opens[j], carrier));
            }
        }
    }
    TopSpace t;
    t.carrier_ = std::move(carrier);
    t.opens_ = std::move(opens);
    return t;
}

PointSet TopSpace::closure_of_point(std::size_t x) const {
    PointSet outside = 0;
    for (PointSet u : opens_) {
        if (!contains(u, x)) outside |= u;
    }
    return all() & ~outside;
}

std::optional<std::size_t> Spectrum::point_of(Element p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p);
    if (it == points.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - points.begin());
}

std::vector<std::string> Spectrum::names(const FiniteLattice& lattice) const {
    std::vector<std::string> out;
    out.reserve(points.size());
    for (Element p : points) out.push_back(lattice.label(p));
    return out;
}

Spectrum spectrum(const FiniteLattice& lattice) {
    Spectrum s;
    s.points = primes(lattice);
    s.delta.assign(lattice.size(), 0);
    for (Element a = 0; a < lattice.size(); ++a) {
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            if (!lattice.leq(a, s.points[i])) s.delta[a] |= bit(i);
        }
    }
    return s;
}

ElementSet delta(const FiniteLattice& lattice, Element a) {
    ElementSet out = 0;
    for (Element p : primes(lattice)) {
        if (!lattice.leq(a, p)) out |= bit(p);
    }
    return out;
}

SpectrumSpace spectrum_space(const FiniteLattice& lattice, ElementSet subset) {
    Spectrum spec = spectrum(lattice);
    Family all_opens(spec.delta.begin(), spec.delta.end());
    Family designated;
    for_each_member(subset, [&](std::size_t a) { designated.push_back(spec.delta[a]); });
    auto names = spec.names(lattice);
    TopSpace topology = TopSpace::validate(std::move(names), std::move(all_opens));
    return SpectrumSpace{std::move(spec), std::move(topology), normalize_family(std::move(designated))};
}

DeltaHomReport check_delta_frame_hom(const FiniteLattice& l, const Bounds& bounds) {
    DeltaHomReport report;
    const Spectrum spec = spectrum(l);
    const PointSet everything = full_set(spec.points.size());
    const auto& d = spec.delta;
    if (d[l.bottom()] != 0) report.violations.push_back("Delta(0) is not empty");
    if (d[l.top()] != everything) report.violations.push_back("Delta(1) is not Spec(L)");
    for (Element a = 0; a < l.size(); ++a) {
        for (Element b = 0; b < l.size(); ++b) {
            if (d[l.meet(a, b)] != (d[a] & d[b])) {
                report.violations.push_back("Delta(a/\\b) != Delta(a) n Delta(b) at a=" + l.label(a) +
                                            " b=" + l.label(b));
            }
            if (d[l.join(a, b)] != (d[a] | d[b])) {
                report.violations.push_back("Delta(a\\/b) != Delta(a) u Delta(b) at a=" + l.label(a) +
                                            " b=" + l.label(b));
            }
        }
    }
    auto check_subset = [&](ElementSet s) {
        PointSet uni = 0;
        for_each_member(s, [&](std::size_t a) { uni |= d[a]; });
        if (d[l.join_of(s)] != uni) {
            report.violations.push_back("Delta(join S) != union Delta(S) at S=" + format_set(s, l.labels()));
        }
    };
    if (l.size() <= bounds.subset_size) {
        for (ElementSet s = 0;; ++s) {
            check_subset(s);
            if (s == l.all()) break;
        }
    } else {
        report.exhaustive = false;
        std::uint64_t state = 0x9e3779b97f4a7c15ULL;
        for (std::size_t i = 0; i < bounds.subset_samples; ++i) {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            check_subset(state & l.all());
        }
    }
    // Surjectivity onto Delta_L(L) is by definition; what needs checking is
    // that the image is a topology on Spec(L).
    try {
        TopSpace::validate(spec.names(l), Family(d.begin(), d.end()));
    } catch (const Error& e) {
        report.violations.push_back(std::string("Delta_L(L) is not a topology: ") + e.what());
    }
    return report;
}

bool is_T0(const TopSpace& t) {
    for (std::size_t x = 0; x < t.size(); ++x) {
        for (std::size_t y = x + 1; y < t.size(); ++y) {
            bool separated = false;
            for (PointSet u : t.opens()) {
                if (contains(u, x) != contains(u, y)) {
                    separated = true;
                    break;
                }
            }
            if (!separated) return false;
        }
    }
    return true;
}

bool is_sober(const TopSpace& t, const Bounds& bounds) {
    if (t.opens().size() > bounds.closed_sets) {
        throw Error(ErrorCode::SizeLimitExceeded, "sobriety check limited to " +
                                                      std::to_string(bounds.closed_sets) + " closed sets");
    }
    Family closed;
    closed.reserve(t.opens().size());
    for (PointSet u : t.opens()) closed.push_back(t.all() & ~u);
    closed = normalize_family(std::move(closed));

    std::vector<PointSet> point_closure(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) point_closure[x] = t.closure_of_point(x);

    for (PointSet c : closed) {
        if (c == 0) continue;
        std::vector<PointSet> proper;
        for (PointSet s : closed) {
            if (s != c && is_subset(s, c)) proper.push_back(s);
        }
        bool reducible = false;
        for (std::size_t i = 0; i < proper.size() && !reducible; ++i) {
            for (std::size_t j = i; j < proper.size(); ++j) {
                if ((proper[i] | proper[j]) == c) {
                    reducible = true;
                    break;
                }
            }
        }
        if (reducible) continue;
        int generic_points = 0;
        for (std::size_t x = 0; x < t.size(); ++x) {
            if (point_closure[x] == c) ++generic_points;
        }
        if (generic_points != 1) return false;
    }
    return true;
}

namespace {

// The directed subfamilies of the opens, each reduced to its union and its
// member mask (bit i = opens()[i]).
class DirectedCovers {
public:
    DirectedCovers(const TopSpace& t, const Bounds& bounds) : opens_(t.opens()) {
        const std::size_t k = opens_.size();
        if (k > bounds.cover_opens || k >= 64) {
            throw Error(ErrorCode::SizeLimitExceeded, "compactness enumeration limited to " +
                                                          std::to_string(bounds.cover_opens) + " opens, got " +
                                                          std::to_string(k));
        }
        std::vector<std::uint64_t> upper(k * k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                for (std::size_t m = 0; m < k; ++m) {
                    if (is_subset(opens_[i] | opens_[j], opens_[m])) upper[i * k + j] |= bit(m);
                }
            }
        }
        const std::uint64_t last = full_set(k);
        for (std::uint64_t f = 1; f <= last && k > 0; ++f) {
            bool directed = true;
            PointSet uni = 0;
            for (std::size_t i = 0; i < k && directed; ++i) {
                if (!contains(f, i)) continue;
                uni |= opens_[i];
                for (std::size_t j = i + 1; j < k; ++j) {
                    if (contains(f, j) && (upper[i * k + j] & f) == 0) {
                        directed = false;
                        break;
                    }
                }
            }
            if (directed) families_.push_back({uni, f});
        }
    }

    bool compact(PointSet k) {
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;
        std::uint64_t holders = 0;
        for (std::size_t i = 0; i < opens_.size(); ++i) {
            if (is_subset(k, opens_[i])) holders |= bit(i);
        }
        bool ok = true;
        for (const auto& fam : families_) {
            if (is_subset(k, fam.uni) && (fam.members & holders) == 0) {
                ok = false;
                break;
            }
        }
        memo_.emplace(k, ok);
        return ok;
    }

private:
    struct Directed {
        PointSet uni;
        std::uint64_t members;
    };
    const Family& opens_;
    std::vector<Directed> families_;
    std::unordered_map<PointSet, bool> memo_;
};

}  // namespace

bool is_compact(const TopSpace& t, PointSet k, const Bounds& bounds) {
    DirectedCovers covers(t, bounds);
    return covers.compact(k);
}

bool is_locally_compact(const TopSpace& t, const Bounds& bounds) {
    DirectedCovers covers(t, bounds);
    for (std::size_t x = 0; x < t.size(); ++x) {
        for (PointSet u : t.opens()) {
            if (!contains(u, x)) continue;
            bool found = false;
            for (PointSet v : t.opens()) {
                if (!contains(v, x) || !is_subset(v, u)) continue;
                // K ranges over the sets between V and U, U itself first.
                const PointSet slack = u & ~v;
                for (PointSet extra = slack;; extra = (extra - 1) & slack) {
                    if (covers.compact(v | extra)) {
                        found = true;
                        break;
                    }
                    if (extra == 0) break;
                }
                if (found) break;
            }
            if (!found) return false;
        }
    }
    return true;
}

bool delta_iso_check(const FiniteLattice& lattice) {
    const Spectrum spec = spectrum(lattice);
    Family values(spec.delta.begin(), spec.delta.end());
    return normalize_family(values).size() == lattice.size();
}

}  // namespace smop
