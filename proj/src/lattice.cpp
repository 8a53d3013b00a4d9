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

#include "smop/lattice.hpp"

#include <random>
#include <sstream>

#include "smop/error.hpp"

namespace smop {

namespace {

std::string pair_text(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_partial_order(const BoolMatrix& leq) {
    const std::size_t n = leq.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (leq[i].size() != n) {
            throw Error(ErrorCode::NotAPartialOrder, "row " + std::to_string(i) + " has wrong length");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq[i][i]) throw Error(ErrorCode::NotAPartialOrder, "not reflexive at " + pair_text(i, i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (leq[i][j] && leq[j][i]) {
                throw Error(ErrorCode::NotAPartialOrder, "not antisymmetric at " + pair_text(i, j));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!leq[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (leq[j][k] && !leq[i][k]) {
                    throw Error(ErrorCode::NotAPartialOrder,
                                "not transitive at " + pair_text(i, j) + "," + pair_text(j, k));
                }
            }
        }
    }
}

}  // namespace

Poset::Poset(BoolMatrix leq) : leq_(std::move(leq)) {
    if (leq_.size() > kMaxCarrier) {
        throw Error(ErrorCode::SizeLimitExceeded, "poset larger than " + std::to_string(kMaxCarrier));
    }
    check_partial_order(leq_);
    down_.assign(leq_.size(), 0);
    for (std::size_t i = 0; i < leq_.size(); ++i) {
        for (std::size_t j = 0; j < leq_.size(); ++j) {
            if (leq_[j][i]) down_[i] |= bit(j);
        }
    }
}

Poset Poset::antichain(std::size_t n) {
    BoolMatrix m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
    return Poset(std::move(m));
}

Poset Poset::chain(std::size_t n) {
    BoolMatrix m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) m[i][j] = true;
    }
    return Poset(std::move(m));
}

FiniteLattice FiniteLattice::validate(const BoolMatrix& leq, std::vector<std::string> labels) {
    const std::size_t n = leq.size();
    if (n == 0) throw Error(ErrorCode::NoBottom, "empty relation");
    if (n > kMaxCarrier) {
        throw Error(ErrorCode::SizeLimitExceeded, "lattice larger than " + std::to_string(kMaxCarrier));
    }
    check_partial_order(leq);

    FiniteLattice l;
    l.size_ = n;
    l.up_.assign(n, 0);
    l.down_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (leq[i][j]) {
                l.up_[i] |= bit(j);
                l.down_[j] |= bit(i);
            }
        }
    }

    l.meet_.assign(n * n, 0);
    l.join_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const ElementSet lower = l.down_[i] & l.down_[j];
            std::optional<std::size_t> glb;
            for_each_member(lower, [&](std::size_t g) {
                if (is_subset(lower, l.down_[g])) glb = g;
            });
            if (!glb) throw Error(ErrorCode::MissingMeet, pair_text(i, j));
            l.meet_[i * n + j] = l.meet_[j * n + i] = static_cast<std::uint8_t>(*glb);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const ElementSet upper = l.up_[i] & l.up_[j];
            std::optional<std::size_t> lub;
            for_each_member(upper, [&](std::size_t u) {
                if (is_subset(upper, l.up_[u])) lub = u;
            });
            if (!lub) throw Error(ErrorCode::MissingJoin, pair_text(i, j));
            l.join_[i * n + j] = l.join_[j * n + i] = static_cast<std::uint8_t>(*lub);
        }
    }

    const ElementSet everything = full_set(n);
    std::optional<std::size_t> bottom;
    std::optional<std::size_t> top;
    for (std::size_t i = 0; i < n; ++i) {
        if (l.up_[i] == everything) bottom = i;
        if (l.down_[i] == everything) top = i;
    }
    if (!bottom) throw Error(ErrorCode::NoBottom, "");
    if (!top) throw Error(ErrorCode::NoTop, "");
    l.bottom_ = *bottom;
    l.top_ = *top;

    if (labels.size() != n) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (labels[i].empty()) labels[i] = std::to_string(i);
        }
    }
    l.labels_ = std::move(labels);
    return l;
}

Element FiniteLattice::join_of(ElementSet s) const {
    Element acc = bottom_;
    for_each_member(s, [&](std::size_t e) { acc = join(acc, e); });
    return acc;
}

Element FiniteLattice::meet_of(ElementSet s) const {
    Element acc = top_;
    for_each_member(s, [&](std::size_t e) { acc = meet(acc, e); });
    return acc;
}

BoolMatrix FiniteLattice::order_matrix() const {
    BoolMatrix m(size_, std::vector<bool>(size_, false));
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < size_; ++j) m[i][j] = leq(i, j);
    }
    return m;
}

FiniteLattice chain_lattice(std::size_t n) {
    BoolMatrix m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) m[i][j] = true;
    }
    return FiniteLattice::validate(m);
}

FiniteLattice boolean_lattice(std::size_t atoms) {
    return downset_lattice(Poset::antichain(atoms));
}

bool is_distributive(const FiniteLattice& l) {
    const std::size_t n = l.size();
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            for (Element c = b + 1; c < n; ++c) {
                if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return false;
            }
        }
    }
    return true;
}

namespace {

// Returns the first a for which a /\ join(S) != join{a /\ s}, if any.
std::optional<Element> frame_law_violation(const FiniteLattice& l, ElementSet s) {
    const Element sup = l.join_of(s);
    for (Element a = 0; a < l.size(); ++a) {
        Element rhs = l.bottom();
        for_each_member(s, [&](std::size_t x) { rhs = l.join(rhs, l.meet(a, x)); });
        if (l.meet(a, sup) != rhs) return a;
    }
    return std::nullopt;
}

std::string violation_text(const FiniteLattice& l, Element a, ElementSet s) {
    std::ostringstream os;
    os << "a=" << l.label(a) << " S=" << format_set(s, l.labels());
    return os.str();
}

}  // namespace

FrameLawReport frame_law_report(const FiniteLattice& l, const Bounds& bounds) {
    FrameLawReport report;
    const std::size_t n = l.size();
    if (n <= bounds.subset_size) {
        report.exhaustive = true;
        report.justification = "all subsets enumerated";
        for (ElementSet s = 0; s <= full_set(n); ++s) {
            ++report.subsets_checked;
            if (auto a = frame_law_violation(l, s)) {
                report.holds = false;
                report.counterexample = violation_text(l, *a, s);
                return report;
            }
            if (s == full_set(n)) break;
        }
        return report;
    }

    // Every join in a finite lattice is a finite join, so the infinite law is
    // binary distributivity applied inductively. The sample only guards the
    // implementation.
    report.exhaustive = false;
    report.justification = "finite lattice: law reduces to binary distributivity; seeded subset sample as tripwire";
    if (!is_distributive(l)) {
        report.holds = false;
        report.counterexample = "binary distributivity fails";
        return report;
    }
    std::mt19937_64 rng(0x5eed);
    for (std::size_t i = 0; i < bounds.subset_samples; ++i) {
        const ElementSet s = rng() & full_set(n);
        ++report.subsets_checked;
        if (auto a = frame_law_violation(l, s)) {
            report.holds = false;
            report.counterexample = violation_text(l, *a, s);
            return report;
        }
    }
    return report;
}

std::vector<Element> primes(const FiniteLattice& l) {
    const std::size_t n = l.size();
    std::vector<Element> out;
    for (Element p = 0; p < n; ++p) {
        if (p == l.top()) continue;
        bool prime = true;
        for (Element a = 0; a < n && prime; ++a) {
            for (Element b = a; b < n; ++b) {
                if (l.meet(a, b) == p && a != p && b != p) {
                    prime = false;
                    break;
                }
            }
        }
        if (prime) out.push_back(p);
    }
    return out;
}

WayBelowRelation way_below_relation(const FiniteLattice& l, Oracle oracle, const Bounds& bounds) {
    const std::size_t n = l.size();
    WayBelowRelation rel;
    if (n > bounds.way_below_size) {
        if (oracle == Oracle::Enumerate) {
            throw Error(ErrorCode::SizeLimitExceeded, "directed-subset oracle bound is " +
                                                          std::to_string(bounds.way_below_size) +
                                                          " elements, lattice has " + std::to_string(n));
        }
        rel.shortcut = true;
        rel.below.resize(n);
        for (Element a = 0; a < n; ++a) rel.below[a] = l.down(a);
        return rel;
    }

    // Start from "everything is way below everything" and let each directed
    // subset D strike out the pairs it refutes: for a <= join(D), only the b
    // lying under some member of D survive.
    rel.below.assign(n, full_set(n));
    const ElementSet last = full_set(n);
    for (ElementSet d = 1;; ++d) {
        bool directed = true;
        ElementSet below_members = 0;
        for_each_member(d, [&](std::size_t x) { below_members |= l.down(x); });
        for (std::size_t x = 0; x < n && directed; ++x) {
            if (!contains(d, x)) continue;
            for (std::size_t y = x + 1; y < n; ++y) {
                if (contains(d, y) && (l.up(l.join(x, y)) & d) == 0) {
                    directed = false;
                    break;
                }
            }
        }
        if (directed) {
            const Element sup = l.join_of(d);
            for_each_member(l.down(sup), [&](std::size_t a) { rel.below[a] &= below_members; });
        }
        if (d == last) break;
    }
    return rel;
}

bool way_below(const FiniteLattice& l, Element b, Element a, Oracle oracle, const Bounds& bounds) {
    return way_below_relation(l, oracle, bounds).holds(b, a);
}

bool is_continuous_frame(const FiniteLattice& l, Oracle oracle, const Bounds& bounds) {
    const WayBelowRelation rel = way_below_relation(l, oracle, bounds);
    for (Element a = 0; a < l.size(); ++a) {
        if (l.join_of(rel.below[a]) != a) return false;
    }
    return true;
}

bool is_spatial(const FiniteLattice& l) {
    ElementSet prime_set = 0;
    for (Element p : primes(l)) prime_set |= bit(p);
    for (Element a = 0; a < l.size(); ++a) {
        if (l.meet_of(prime_set & l.up(a)) != a) return false;
    }
    return true;
}

std::vector<PointSet> downsets(const Poset& poset) {
    const std::size_t n = poset.size();
    if (n > 20) throw Error(ErrorCode::SizeLimitExceeded, "downset enumeration limited to 20 points");
    std::vector<PointSet> out;
    for (PointSet s = 0; s <= full_set(n); ++s) {
        bool closed = true;
        for_each_member(s, [&](std::size_t i) {
            if (!is_subset(poset.down(i), s)) closed = false;
        });
        if (closed) {
            out.push_back(s);
            if (out.size() > kMaxCarrier) {
                throw Error(ErrorCode::SizeLimitExceeded,
                            "poset has more than " + std::to_string(kMaxCarrier) + " downsets");
            }
        }
        if (s == full_set(n)) break;
    }
    return out;
}

FiniteLattice downset_lattice(const Poset& poset) {
    const std::vector<PointSet> sets = downsets(poset);
    const std::size_t m = sets.size();
    BoolMatrix leq(m, std::vector<bool>(m, false));
    std::vector<std::string> labels(m);
    std::vector<std::string> names(poset.size());
    for (std::size_t i = 0; i < poset.size(); ++i) names[i] = "p" + std::to_string(i);
    for (std::size_t i = 0; i < m; ++i) {
        labels[i] = format_set(sets[i], names);
        for (std::size_t j = 0; j < m; ++j) leq[i][j] = is_subset(sets[i], sets[j]);
    }
    return FiniteLattice::validate(leq, std::move(labels));
}

void for_each_poset(std::size_t n, const std::function<void(const Poset&)>& fn) {
    if (n > 5) throw Error(ErrorCode::SizeLimitExceeded, "poset enumeration limited to 5 points");
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) slots.emplace_back(i, j);
        }
    }
    const std::uint64_t count = std::uint64_t{1} << slots.size();
    std::vector<PointSet> up(n);
    for (std::uint64_t code = 0; code < count; ++code) {
        for (std::size_t i = 0; i < n; ++i) up[i] = bit(i);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if ((code >> s) & 1U) up[slots[s].first] |= bit(slots[s].second);
        }
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            for_each_member(up[i] & ~bit(i), [&](std::size_t j) {
                if (contains(up[j], i)) ok = false;          // antisymmetry
                if (!is_subset(up[j], up[i])) ok = false;    // transitivity
            });
        }
        if (!ok) continue;
        BoolMatrix m(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m[i][j] = contains(up[i], j);
        }
        fn(Poset(std::move(m)));
    }
}

std::vector<Poset> enumerate_posets(std::size_t n) {
    std::vector<Poset> out;
    for_each_poset(n, [&](const Poset& p) { out.push_back(p); });
    return out;
}

}  // namespace smop
