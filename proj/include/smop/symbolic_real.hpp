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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace smop {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q", "p" or "-p/q". Throws ParseError.
Rational parse_rational(std::string_view text);
std::string rational_string(const Rational& r);

/// Open rational bounds lo < x < hi, or lo == hi == x when exact.
struct Enclosure {
    Rational lo;
    Rational hi;
    bool exact = true;
};

/// An exact real of the form c + sum k_i * a_i with rational c and k_i and
/// opaque irrational atoms a_i (pi, asin(r), ln(r), tan(r)). Atoms only
/// expose rational enclosures, so order is decided from those and never from
/// floating point. Equality is structural; atoms are canonicalized so known
/// closed forms (asin(1/2) = pi/6, tan(0) = 0, ...) never hide behind a name.
class SymbolicReal {
public:
    SymbolicReal() = default;
    SymbolicReal(Rational value) : constant_(std::move(value)) {}  // NOLINT(implicit)
    SymbolicReal(long value) : constant_(value) {}                 // NOLINT(implicit)

    static SymbolicReal pi();
    /// asin on [-1, 1]; UnsupportedShape outside.
    static SymbolicReal asin_of(const Rational& r);
    /// ln on (0, inf); UnsupportedShape otherwise.
    static SymbolicReal ln_of(const Rational& r);
    /// tan of a rational in (-pi/2, pi/2) or of 0, +-pi/4; UnsupportedShape otherwise.
    static SymbolicReal tan_of(const SymbolicReal& v);

    bool is_rational() const { return terms_.empty(); }
    const Rational& constant() const { return constant_; }
    /// k when the value is exactly k*pi.
    std::optional<Rational> pi_multiple() const;

    Enclosure enclosure() const;

    SymbolicReal operator-() const;
    SymbolicReal operator+(const SymbolicReal& other) const;
    SymbolicReal operator-(const SymbolicReal& other) const;
    SymbolicReal operator*(const Rational& k) const;
    SymbolicReal operator/(const Rational& k) const;

    bool operator==(const SymbolicReal& other) const;

    /// Canonical text such as "1/2*pi", "-1+asin(1/3)" or "0".
    std::string str() const;
    /// Inverse of str(); also accepts the aliases half_pi, two_pi, -half_pi, ...
    static SymbolicReal parse(std::string_view text);

private:
    struct Term {
        Rational coefficient;
        Rational lo;
        Rational hi;
    };
    static SymbolicReal atom(const std::string& name, Rational lo, Rational hi);

    Rational constant_;
    std::map<std::string, Term> terms_;
};

/// -1, 0 or 1. Throws UndecidableOrder if the enclosures cannot separate them.
int compare(const SymbolicReal& a, const SymbolicReal& b);

/// -inf, a finite symbolic real, or +inf.
class Endpoint {
public:
    enum class Kind { NegInf, Finite, PosInf };

    static Endpoint neg_inf() { return Endpoint(Kind::NegInf, {}); }
    static Endpoint pos_inf() { return Endpoint(Kind::PosInf, {}); }
    static Endpoint finite(SymbolicReal v) { return Endpoint(Kind::Finite, std::move(v)); }
    Endpoint(SymbolicReal v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT(implicit)
    Endpoint(long v) : kind_(Kind::Finite), value_(v) {}                    // NOLINT(implicit)

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    const SymbolicReal& value() const { return value_; }

    bool operator==(const Endpoint& other) const {
        return kind_ == other.kind_ && (kind_ != Kind::Finite || value_ == other.value_);
    }

    /// "-inf", "+inf", "rat:p/q" or "tag:<form>"
    std::string str() const;
    static Endpoint parse(std::string_view text);

private:
    Endpoint(Kind kind, SymbolicReal value) : kind_(kind), value_(std::move(value)) {}
    Kind kind_;
    SymbolicReal value_;
};

int compare(const Endpoint& a, const Endpoint& b);
const Endpoint& min_endpoint(const Endpoint& a, const Endpoint& b);
const Endpoint& max_endpoint(const Endpoint& a, const Endpoint& b);

/// A nonempty open interval (lo, hi).
struct OpenInterval {
    Endpoint lo;
    Endpoint hi;

    /// Empty when lo >= hi.
    static std::optional<OpenInterval> make(Endpoint lo, Endpoint hi);
    bool bounded_above() const { return hi.is_finite(); }
    bool bounded_below() const { return lo.is_finite(); }
    bool contains(const OpenInterval& other) const;
    bool operator==(const OpenInterval& other) const { return lo == other.lo && hi == other.hi; }
    std::string str() const;
};

std::optional<OpenInterval> intersect(const OpenInterval& a, const OpenInterval& b);

/// Sorted, overlapping pieces merged. Touching pieces (a,b),(b,c) stay apart
/// since b is missing from both.
std::vector<OpenInterval> normalize_pieces(std::vector<OpenInterval> pieces);

/// The union over all integers k of (pattern + k*period), cut down to the
/// open window. The window is unbounded on at least one side; bounded windows
/// are materialized into plain pieces.
struct PeriodicComponent {
    std::vector<OpenInterval> pattern;
    SymbolicReal period;
    OpenInterval window;

    bool operator==(const PeriodicComponent& other) const {
        return pattern == other.pattern && period == other.period && window == other.window;
    }
};

/// A finite union of open intervals, or a single periodic family. Mixing the
/// two is outside what the catalog ever produces and raises UnsupportedShape.
class SymbolicRealSet {
public:
    SymbolicRealSet() = default;

    static SymbolicRealSet of(std::vector<OpenInterval> pieces);
    /// Empty when lo >= hi.
    static SymbolicRealSet interval(Endpoint lo, Endpoint hi);
    static SymbolicRealSet whole_line();
    /// Positive period required. Materialized when the window is bounded.
    static SymbolicRealSet periodic(std::vector<OpenInterval> pattern, SymbolicReal period, OpenInterval window);

    const std::vector<OpenInterval>& pieces() const { return pieces_; }
    const std::optional<PeriodicComponent>& periodic() const { return periodic_; }
    bool empty() const { return pieces_.empty() && !periodic_; }

    SymbolicRealSet intersect(const SymbolicRealSet& other) const;
    SymbolicRealSet unite(const SymbolicRealSet& other) const;

    bool operator==(const SymbolicRealSet& other) const {
        return pieces_ == other.pieces_ && periodic_ == other.periodic_;
    }

    std::string str() const;

private:
    std::vector<OpenInterval> pieces_;
    std::optional<PeriodicComponent> periodic_;
};

}  // namespace smop
