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

#include "smop/frame_pairs.hpp"

#include "smop/error.hpp"

namespace smop {

FramePair FramePair::validate(FiniteLattice frame, ElementSet designated) {
    if (!is_distributive(frame)) throw Error(ErrorCode::NotAFrame, "lattice is not distributive");
    const FiniteLattice& l = frame;
    if (!is_subset(designated, l.all())) throw Error(ErrorCode::InvalidInstance, "designated element out of range");
    if (!contains(designated, l.bottom())) throw Error(ErrorCode::MissingZero, "");
    for (Element a : members(designated)) {
        for (Element b : members(designated)) {
            if (b < a) continue;
            if (!contains(designated, l.meet(a, b)) || !contains(designated, l.join(a, b))) {
                throw Error(ErrorCode::NotSublattice, "(" + l.label(a) + "," + l.label(b) + ")");
            }
        }
    }
    for (Element e = 0; e < l.size(); ++e) {
        if (l.join_of(designated & l.down(e)) != e) throw Error(ErrorCode::NotSupGenerating, l.label(e));
    }
    return FramePair(std::move(frame), designated);
}

FramePair FramePair::whole(FiniteLattice frame) {
    const ElementSet all = frame.all();
    return validate(std::move(frame), all);
}

FrameHom::FrameHom(FramePair source, FramePair target, std::vector<Element> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (map_.size() != source_.frame().size()) {
        throw Error(ErrorCode::InvalidInstance, "hom is not total on the source frame");
    }
    for (Element m : map_) {
        if (m >= target_.frame().size()) throw Error(ErrorCode::InvalidInstance, "hom leaves the target frame");
    }
}

FrameHom FrameHom::identity(const FramePair& pair) {
    std::vector<Element> map(pair.frame().size());
    for (Element i = 0; i < map.size(); ++i) map[i] = i;
    return FrameHom(pair, pair, std::move(map));
}

FrameHom compose(const FrameHom& second, const FrameHom& first) {
    if (!(first.target() == second.source())) throw Error(ErrorCode::InvalidInstance, "homs are not composable");
    std::vector<Element> map(first.source().frame().size());
    for (Element l = 0; l < map.size(); ++l) map[l] = second(first(l));
    return FrameHom(first.source(), second.target(), std::move(map));
}

std::string frame_hom_failure(const std::vector<Element>& h, const FiniteLattice& src, const FiniteLattice& tgt,
                              const Bounds& bounds) {
    if (h.size() != src.size()) return "not total";
    if (h[src.bottom()] != tgt.bottom()) return "0 not preserved";
    if (h[src.top()] != tgt.top()) return "1 not preserved";
    for (Element a = 0; a < src.size(); ++a) {
        for (Element b = a + 1; b < src.size(); ++b) {
            if (h[src.meet(a, b)] != tgt.meet(h[a], h[b])) {
                return "meet of (" + src.label(a) + "," + src.label(b) + ") not preserved";
            }
            if (h[src.join(a, b)] != tgt.join(h[a], h[b])) {
                return "join of (" + src.label(a) + "," + src.label(b) + ") not preserved";
            }
        }
    }
    auto subset_ok = [&](ElementSet s) {
        ElementSet image = 0;
        for_each_member(s, [&](std::size_t x) { image |= bit(h[x]); });
        return h[src.join_of(s)] == tgt.join_of(image);
    };
    if (src.size() <= bounds.subset_size) {
        for (ElementSet s = 0;; ++s) {
            if (!subset_ok(s)) return "join of " + format_set(s, src.labels()) + " not preserved";
            if (s == src.all()) break;
        }
    } else {
        std::uint64_t state = 0x2545f4914f6cdd1dULL;
        for (std::size_t i = 0; i < bounds.subset_samples; ++i) {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            const ElementSet s = state & src.all();
            if (!subset_ok(s)) return "join of " + format_set(s, src.labels()) + " not preserved";
        }
    }
    return {};
}

bool is_dominating(const FrameHom& h) {
    const FiniteLattice& m_frame = h.target().frame();
    for (Element m : members(h.target().designated())) {
        bool dominated = false;
        for (Element l : members(h.source().designated())) {
            if (m_frame.meet(h(l), m) == m) {
                dominated = true;
                break;
            }
        }
        if (!dominated) return false;
    }
    return true;
}

bool is_compatible(const FrameHom& h) {
    const FiniteLattice& m_frame = h.target().frame();
    for (Element m : members(h.target().designated())) {
        for (Element l : members(h.source().designated())) {
            if (!h.target().is_designated(m_frame.meet(h(l), m))) return false;
        }
    }
    return true;
}

SpecialLocalicMap right_adjoint(const FrameHom& h) {
    if (auto why = frame_hom_failure(h.map(), h.source().frame(), h.target().frame()); !why.empty()) {
        throw Error(ErrorCode::NotFrameHom, why);
    }
    if (!is_dominating(h)) throw Error(ErrorCode::NotDominating, "");
    if (!is_compatible(h)) throw Error(ErrorCode::NotCompatible, "");

    const FiniteLattice& src = h.source().frame();
    const FiniteLattice& tgt = h.target().frame();
    std::vector<Element> adjoint(tgt.size());
    for (Element m = 0; m < tgt.size(); ++m) {
        ElementSet below = 0;
        for (Element l = 0; l < src.size(); ++l) {
            if (tgt.leq(h(l), m)) below |= bit(l);
        }
        adjoint[m] = src.join_of(below);
    }
    for (Element l = 0; l < src.size(); ++l) {
        for (Element m = 0; m < tgt.size(); ++m) {
            if (tgt.leq(h(l), m) != src.leq(l, adjoint[m])) {
                throw Error(ErrorCode::GaloisViolation, "at l=" + src.label(l) + " m=" + tgt.label(m));
            }
        }
    }
    return SpecialLocalicMap(h, std::move(adjoint));
}

SpecialLocalicMap compose(const SpecialLocalicMap& outer, const SpecialLocalicMap& inner) {
    return right_adjoint(compose(inner.underlying(), outer.underlying()));
}

bool check_remark_onto(const FrameHom& h) {
    ElementSet image = 0;
    for_each_member(h.source().designated(), [&](std::size_t l) { image |= bit(h(l)); });
    if (image != h.target().designated()) return true;
    return is_dominating(h) && is_compatible(h);
}

}  // namespace smop
