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

#pragma once

// Brute-force reference implementations for the tests. They work on plain
// matrices and subset families and share no code with the library.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Sets = std::vector<std::uint32_t>;

inline bool is_partial_order(const Matrix& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!m[i][i]) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && m[i][j] && m[j][i]) return false;
            for (std::size_t k = 0; k < n; ++k) {
                if (m[i][j] && m[j][k] && !m[i][k]) return false;
            }
        }
    }
    return true;
}

/// Labeled partial orders on n points, from all n*n relations.
inline std::size_t count_posets(std::size_t n) {
    std::size_t count = 0;
    const std::size_t cells = n * n;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
        Matrix m(n, std::vector<bool>(n));
        for (std::size_t c = 0; c < cells; ++c) m[c / n][c % n] = bits >> c & 1;
        if (is_partial_order(m)) ++count;
    }
    return count;
}

inline bool has(const Sets& f, std::uint32_t s) {
    for (auto x : f) {
        if (x == s) return true;
    }
    return false;
}

inline bool is_topology(std::size_t n, const Sets& f) {
    const std::uint32_t all = (1u << n) - 1;
    if (!has(f, 0) || !has(f, all)) return false;
    for (auto a : f) {
        for (auto b : f) {
            if (!has(f, a | b) || !has(f, a & b)) return false;
        }
    }
    return true;
}

inline bool is_t0(std::size_t n, const Sets& opens) {
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            bool separated = false;
            for (auto u : opens) separated = separated || (((u >> x) & 1) != ((u >> y) & 1));
            if (!separated) return false;
        }
    }
    return true;
}

/// Every topology on n points, from all families of subsets.
inline std::vector<Sets> all_topologies(std::size_t n) {
    std::vector<Sets> out;
    const std::size_t subsets = std::size_t{1} << n;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << subsets); ++choice) {
        Sets f;
        for (std::size_t s = 0; s < subsets; ++s) {
            if (choice >> s & 1) f.push_back(static_cast<std::uint32_t>(s));
        }
        if (is_topology(n, f)) out.push_back(f);
    }
    return out;
}

/// Closure-based sobriety straight from the definitions.
inline bool is_sober(std::size_t n, const Sets& opens) {
    const std::uint32_t all = (1u << n) - 1;
    Sets closed;
    for (auto u : opens) closed.push_back(all & ~u);
    auto closure = [&](std::size_t x) {
        std::uint32_t c = all;
        for (auto f : closed) {
            if (f >> x & 1) c &= f;
        }
        return c;
    };
    for (auto f : closed) {
        if (f == 0) continue;
        bool irreducible = true;
        for (auto a : closed) {
            for (auto b : closed) {
                if ((f & ~(a | b)) == 0 && (f & ~a) != 0 && (f & ~b) != 0) irreducible = false;
            }
        }
        if (!irreducible) continue;
        int generic = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if ((f >> x & 1) && closure(x) == f) ++generic;
        }
        if (generic != 1) return false;
    }
    return true;
}

/// All unions of subfamilies.
inline Sets unions(const Sets& f) {
    std::set<std::uint32_t> out;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << f.size()); ++choice) {
        std::uint32_t u = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (choice >> i & 1) u |= f[i];
        }
        out.insert(u);
    }
    return {out.begin(), out.end()};
}

inline std::uint32_t ext(const Sets& smops, std::size_t x) {
    std::uint32_t e = 0;
    for (auto w : unions(smops)) {
        if (!(w >> x & 1)) e |= w;
    }
    return e;
}

// Lattices given only by their order matrix.

inline std::optional<std::size_t> glb(const Matrix& m, std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < m.size(); ++c) {
        if (!m[c][a] || !m[c][b]) continue;
        bool greatest = true;
        for (std::size_t d = 0; d < m.size(); ++d) {
            if (m[d][a] && m[d][b] && !m[d][c]) greatest = false;
        }
        if (greatest) return c;
    }
    return std::nullopt;
}

inline std::optional<std::size_t> lub_of(const Matrix& m, std::uint64_t s) {
    for (std::size_t c = 0; c < m.size(); ++c) {
        bool upper = true;
        for (std::size_t x = 0; x < m.size(); ++x) {
            if ((s >> x & 1) && !m[x][c]) upper = false;
        }
        if (!upper) continue;
        bool least = true;
        for (std::size_t d = 0; d < m.size(); ++d) {
            bool d_upper = true;
            for (std::size_t x = 0; x < m.size(); ++x) {
                if ((s >> x & 1) && !m[x][d]) d_upper = false;
            }
            if (d_upper && !m[c][d]) least = false;
        }
        if (least) return c;
    }
    return std::nullopt;
}

inline std::size_t top(const Matrix& m) { return *lub_of(m, (std::uint64_t{1} << m.size()) - 1); }

inline bool is_distributive(const Matrix& m) {
    const std::size_t n = m.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                const auto bc = *lub_of(m, (std::uint64_t{1} << b) | (std::uint64_t{1} << c));
                const auto lhs = *glb(m, a, bc);
                const auto ab = *glb(m, a, b);
                const auto ac = *glb(m, a, c);
                if (lhs != *lub_of(m, (std::uint64_t{1} << ab) | (std::uint64_t{1} << ac))) return false;
            }
        }
    }
    return true;
}

inline std::vector<std::size_t> primes(const Matrix& m) {
    std::vector<std::size_t> out;
    const std::size_t t = top(m);
    for (std::size_t p = 0; p < m.size(); ++p) {
        if (p == t) continue;
        bool prime = true;
        for (std::size_t a = 0; a < m.size(); ++a) {
            for (std::size_t b = 0; b < m.size(); ++b) {
                if (*glb(m, a, b) == p && a != p && b != p) prime = false;
            }
        }
        if (prime) out.push_back(p);
    }
    return out;
}

/// Non-top elements with exactly one upper cover.
inline std::vector<std::size_t> meet_irreducibles(const Matrix& m) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < m.size(); ++p) {
        std::size_t covers = 0;
        for (std::size_t q = 0; q < m.size(); ++q) {
            if (q == p || !m[p][q]) continue;
            bool cover = true;
            for (std::size_t r = 0; r < m.size(); ++r) {
                if (r != p && r != q && m[p][r] && m[r][q]) cover = false;
            }
            if (cover) ++covers;
        }
        if (covers == 1) out.push_back(p);
    }
    return out;
}

/// {p prime : a !<= p} as a set of elements
inline std::uint64_t delta(const Matrix& m, std::size_t a) {
    std::uint64_t out = 0;
    for (auto p : primes(m)) {
        if (!m[a][p]) out |= std::uint64_t{1} << p;
    }
    return out;
}

/// b << a by enumerating every directed subset.
inline bool way_below(const Matrix& m, std::size_t b, std::size_t a) {
    const std::size_t n = m.size();
    for (std::uint64_t d = 1; d < (std::uint64_t{1} << n); ++d) {
        bool directed = true;
        for (std::size_t x = 0; x < n && directed; ++x) {
            for (std::size_t y = 0; y < n && directed; ++y) {
                if (!(d >> x & 1) || !(d >> y & 1)) continue;
                bool bound = false;
                for (std::size_t z = 0; z < n; ++z) bound = bound || ((d >> z & 1) && m[x][z] && m[y][z]);
                directed = bound;
            }
        }
        if (!directed || !m[a][*lub_of(m, d)]) continue;
        bool hit = false;
        for (std::size_t x = 0; x < n; ++x) hit = hit || ((d >> x & 1) && m[b][x]);
        if (!hit) return false;
    }
    return true;
}

/// m -> join{l : h(l) <= m}
inline std::vector<std::size_t> right_adjoint(const Matrix& src, const Matrix& tgt, const std::vector<std::size_t>& h) {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < tgt.size(); ++y) {
        std::uint64_t s = 0;
        for (std::size_t l = 0; l < src.size(); ++l) {
            if (tgt[h[l]][y]) s |= std::uint64_t{1} << l;
        }
        out.push_back(*lub_of(src, s));
    }
    return out;
}

}  // namespace oracle
