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

#include "smop/symbolic_real.hpp"

#include <algorithm>
#include <cctype>

#include "smop/error.hpp"

namespace smop {

namespace {

using boost::multiprecision::cpp_int;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result = 1;
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

cpp_int floor_of(const Rational& r) {
    cpp_int n = numerator(r);
    cpp_int d = denominator(r);
    cpp_int q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

const Rational kPiLo = Rational(cpp_int("314159265358979"), cpp_int("100000000000000"));
const Rational kPiHi = Rational(cpp_int("314159265358980"), cpp_int("100000000000000"));

constexpr unsigned kSeriesTerms = 30;

/// sum of the first n terms of an alternating series whose terms shrink,
/// with the first omitted term as a bound on the error
Enclosure alternating(const Rational& x, unsigned first_power) {
    Rational sum = 0;
    Rational term = pow(x, first_power);
    cpp_int fact = 1;
    for (unsigned k = 2; k <= first_power; ++k) fact *= k;
    term /= Rational(fact);
    unsigned power = first_power;
    for (unsigned k = 0; k < kSeriesTerms; ++k) {
        sum += (k % 2 == 0) ? term : Rational(-term);
        term = term * x * x / Rational((power + 1) * (power + 2));
        power += 2;
    }
    return {sum - term, sum + term, false};
}

/// Round outward onto the 2^-120 grid so long series keep small denominators.
constexpr unsigned kGridBits = 120;

Rational grid_down(const Rational& r) {
    const cpp_int scale = cpp_int(1) << kGridBits;
    return Rational(floor_of(r * scale), scale);
}

Rational grid_up(const Rational& r) { return -grid_down(-r); }

/// Sum of t_0 + t_1 + ... with t_0 = x and t_{n+1} = t_n * ratio(n) * x^2,
/// for 0 < x < 1 and 0 < ratio(n) <= 1. Stops once the geometric tail bound
/// t_N / (1 - x^2) is below 2^-64 or after kMaxTerms terms.
template <typename Ratio>
Enclosure odd_series(const Rational& x, Ratio ratio) {
    constexpr unsigned kMaxTerms = 200000;
    const Rational x2 = x * x;
    const Rational tolerance(cpp_int(1), cpp_int(1) << 64);
    Rational lo = 0, hi = 0;
    Rational t_lo = grid_down(x), t_hi = grid_up(x);
    for (unsigned n = 0; n < kMaxTerms; ++n) {
        lo += t_lo;
        hi += t_hi;
        const Rational step = ratio(n) * x2;
        t_lo = grid_down(t_lo * step);
        t_hi = grid_up(t_hi * step);
        if (t_hi / (1 - x2) < tolerance) break;
    }
    return {lo, hi + t_hi / (1 - x2), false};
}

/// ln r for r >= 1 as 2 atanh((r-1)/(r+1))
Enclosure ln_series(const Rational& r) {
    const Rational y = (r - 1) / (r + 1);
    if (y == 0) return {0, 0, true};
    const Enclosure e = odd_series(y, [](unsigned n) { return Rational(2 * n + 1, 2 * n + 3); });
    return {2 * e.lo, 2 * e.hi, false};
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    const cpp_int d(std::string{den});
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational r(cpp_int(std::string{num}), d);
    return negative ? Rational(-r) : r;
}

std::string rational_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

SymbolicReal SymbolicReal::atom(const std::string& name, Rational lo, Rational hi) {
    SymbolicReal s;
    s.terms_[name] = Term{1, std::move(lo), std::move(hi)};
    return s;
}

SymbolicReal SymbolicReal::pi() { return atom("pi", kPiLo, kPiHi); }

SymbolicReal SymbolicReal::asin_of(const Rational& r) {
    if (r > 1 || r < -1) throw Error(ErrorCode::UnsupportedShape, "asin(" + rational_string(r) + ")");
    if (r < 0) return -asin_of(-r);
    if (r == 0) return {};
    if (r == 1) return pi() / 2;
    if (r == Rational(1, 2)) return pi() / 6;
    // sum of binom(2n,n) r^(2n+1) / (4^n (2n+1)); coefficients shrink
    const Enclosure e = odd_series(r, [](unsigned n) {
        return Rational((2 * n + 1) * (2 * n + 1), (2 * n + 2) * (2 * n + 3));
    });
    const Rational sum = e.lo;
    const Rational hi = std::min(e.hi, Rational(r * kPiHi / 2));
    return atom("asin(" + rational_string(r) + ")", sum, hi);
}

SymbolicReal SymbolicReal::ln_of(const Rational& r) {
    if (r <= 0) throw Error(ErrorCode::UnsupportedShape, "ln(" + rational_string(r) + ")");
    if (r == 1) return {};
    if (r < 1) return -ln_of(1 / r);
    // ln r = k ln 2 + ln(r / 2^k) with r / 2^k in [1, 2)
    unsigned k = 0;
    Rational reduced = r;
    while (reduced >= 2) {
        reduced /= 2;
        ++k;
    }
    const Enclosure ln2 = ln_series(2);
    const Enclosure rest = ln_series(reduced);
    const Rational lo = k * ln2.lo + rest.lo;
    const Rational hi = k * ln2.hi + rest.hi;
    return atom("ln(" + rational_string(r) + ")", lo, std::min(hi, Rational(r - 1)));
}

SymbolicReal SymbolicReal::tan_of(const SymbolicReal& v) {
    if (!v.is_rational()) {
        auto k = v.pi_multiple();
        if (k && *k == Rational(1, 4)) return 1;
        if (k && *k == Rational(-1, 4)) return -1;
        throw Error(ErrorCode::UnsupportedShape, "tan(" + v.str() + ")");
    }
    const Rational& r = v.constant();
    if (r == 0) return {};
    if (r < 0) return -tan_of(Rational(-r));
    if (compare(v, pi() / 2) >= 0) throw Error(ErrorCode::UnsupportedShape, "tan(" + v.str() + ")");
    const Enclosure s = alternating(r, 1);
    const Enclosure c = alternating(r, 0);
    if (c.lo <= 0) throw Error(ErrorCode::UnsupportedShape, "tan(" + v.str() + ") too close to a pole");
    // tan x > x on (0, pi/2)
    const Rational lo = s.lo > 0 ? std::max(r, Rational(s.lo / c.hi)) : r;
    return atom("tan(" + rational_string(r) + ")", lo, s.hi / c.lo);
}

std::optional<Rational> SymbolicReal::pi_multiple() const {
    if (constant_ != 0) return std::nullopt;
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == "pi") return terms_.begin()->second.coefficient;
    return std::nullopt;
}

Enclosure SymbolicReal::enclosure() const {
    Enclosure e{constant_, constant_, terms_.empty()};
    for (const auto& [name, t] : terms_) {
        if (t.coefficient > 0) {
            e.lo += t.coefficient * t.lo;
            e.hi += t.coefficient * t.hi;
        } else {
            e.lo += t.coefficient * t.hi;
            e.hi += t.coefficient * t.lo;
        }
    }
    return e;
}

SymbolicReal SymbolicReal::operator-() const { return *this * Rational(-1); }

SymbolicReal SymbolicReal::operator+(const SymbolicReal& other) const {
    SymbolicReal s = *this;
    s.constant_ += other.constant_;
    for (const auto& [name, t] : other.terms_) {
        auto it = s.terms_.find(name);
        if (it == s.terms_.end()) {
            s.terms_.emplace(name, t);
        } else {
            it->second.coefficient += t.coefficient;
            if (it->second.coefficient == 0) s.terms_.erase(it);
        }
    }
    return s;
}

SymbolicReal SymbolicReal::operator-(const SymbolicReal& other) const { return *this + (-other); }

SymbolicReal SymbolicReal::operator*(const Rational& k) const {
    if (k == 0) return {};
    SymbolicReal s = *this;
    s.constant_ *= k;
    for (auto& [name, t] : s.terms_) t.coefficient *= k;
    return s;
}

SymbolicReal SymbolicReal::operator/(const Rational& k) const { return *this * (1 / k); }

bool SymbolicReal::operator==(const SymbolicReal& other) const {
    if (constant_ != other.constant_ || terms_.size() != other.terms_.size()) return false;
    for (auto a = terms_.begin(), b = other.terms_.begin(); a != terms_.end(); ++a, ++b) {
        if (a->first != b->first || a->second.coefficient != b->second.coefficient) return false;
    }
    return true;
}

std::string SymbolicReal::str() const {
    std::string out;
    if (constant_ != 0 || terms_.empty()) out = rational_string(constant_);
    for (const auto& [name, t] : terms_) {
        std::string part;
        if (t.coefficient == 1) {
            part = name;
        } else if (t.coefficient == -1) {
            part = "-" + name;
        } else {
            part = rational_string(t.coefficient) + "*" + name;
        }
        if (!out.empty() && part.front() != '-') out += "+";
        out += part;
    }
    return out;
}

namespace {

SymbolicReal parse_atom(std::string_view s) {
    if (s == "pi") return SymbolicReal::pi();
    auto inner = [&](std::string_view fn) -> std::optional<std::string_view> {
        if (s.size() > fn.size() + 2 && s.substr(0, fn.size()) == fn && s[fn.size()] == '(' && s.back() == ')') {
            return s.substr(fn.size() + 1, s.size() - fn.size() - 2);
        }
        return std::nullopt;
    };
    if (auto arg = inner("asin")) return SymbolicReal::asin_of(parse_rational(*arg));
    if (auto arg = inner("ln")) return SymbolicReal::ln_of(parse_rational(*arg));
    if (auto arg = inner("tan")) return SymbolicReal::tan_of(SymbolicReal::parse(*arg));
    throw Error(ErrorCode::ParseError, "unknown symbol '" + std::string(s) + "'");
}

SymbolicReal parse_term(std::string_view term) {
    term = trim(term);
    bool negative = false;
    if (!term.empty() && (term.front() == '-' || term.front() == '+')) {
        negative = term.front() == '-';
        term = trim(term.substr(1));
    }
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term");
    SymbolicReal value;
    const auto star = term.find('*');
    if (star != std::string_view::npos && term.find('(') > star) {
        value = parse_atom(trim(term.substr(star + 1))) * parse_rational(term.substr(0, star));
    } else if (std::isalpha(static_cast<unsigned char>(term.front()))) {
        value = parse_atom(term);
    } else {
        value = parse_rational(term);
    }
    return negative ? -value : value;
}

}  // namespace

SymbolicReal SymbolicReal::parse(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    std::string_view body = s;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    if (body == "half_pi") return negative ? -(pi() / 2) : pi() / 2;
    if (body == "two_pi") return negative ? -(pi() * 2) : pi() * 2;

    SymbolicReal sum;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && i > start && (c == '+' || c == '-') && s[i - 1] != '*') {
            sum = sum + parse_term(s.substr(start, i - start));
            start = i;
        }
    }
    if (depth != 0) throw Error(ErrorCode::ParseError, "unbalanced parentheses in '" + std::string(text) + "'");
    return sum + parse_term(s.substr(start));
}

int compare(const SymbolicReal& a, const SymbolicReal& b) {
    const SymbolicReal d = a - b;
    const Enclosure e = d.enclosure();
    if (e.exact) return e.lo < 0 ? -1 : (e.lo > 0 ? 1 : 0);
    if (e.hi <= 0) return -1;
    if (e.lo >= 0) return 1;
    throw Error(ErrorCode::UndecidableOrder, a.str() + " vs " + b.str());
}

std::string Endpoint::str() const {
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "+inf";
        case Kind::Finite: break;
    }
    if (value_.is_rational()) {
        return "rat:" + numerator(value_.constant()).str() + "/" + denominator(value_.constant()).str();
    }
    if (auto k = value_.pi_multiple()) {
        if (*k == Rational(1, 2)) return "tag:half_pi";
        if (*k == Rational(-1, 2)) return "tag:-half_pi";
        if (*k == 2) return "tag:two_pi";
        if (*k == -2) return "tag:-two_pi";
    }
    return "tag:" + value_.str();
}

Endpoint Endpoint::parse(std::string_view text) {
    const std::string_view s = trim(text);
    if (s == "-inf") return neg_inf();
    if (s == "+inf" || s == "inf") return pos_inf();
    if (s.substr(0, 4) == "rat:") return finite(parse_rational(s.substr(4)));
    if (s.substr(0, 4) == "tag:") return finite(SymbolicReal::parse(s.substr(4)));
    return finite(SymbolicReal::parse(s));
}

int compare(const Endpoint& a, const Endpoint& b) {
    auto rank = [](Endpoint::Kind k) { return k == Endpoint::Kind::NegInf ? 0 : (k == Endpoint::Kind::Finite ? 1 : 2); };
    if (rank(a.kind()) != rank(b.kind())) return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
    if (!a.is_finite()) return 0;
    return compare(a.value(), b.value());
}

const Endpoint& min_endpoint(const Endpoint& a, const Endpoint& b) { return compare(b, a) < 0 ? b : a; }
const Endpoint& max_endpoint(const Endpoint& a, const Endpoint& b) { return compare(b, a) > 0 ? b : a; }

std::optional<OpenInterval> OpenInterval::make(Endpoint lo, Endpoint hi) {
    if (compare(lo, hi) >= 0) return std::nullopt;
    return OpenInterval{std::move(lo), std::move(hi)};
}

bool OpenInterval::contains(const OpenInterval& other) const {
    return compare(lo, other.lo) <= 0 && compare(other.hi, hi) <= 0;
}

std::string OpenInterval::str() const {
    auto side = [](const Endpoint& e) { return e.is_finite() ? e.value().str() : e.str(); };
    return "(" + side(lo) + ", " + side(hi) + ")";
}

std::optional<OpenInterval> intersect(const OpenInterval& a, const OpenInterval& b) {
    return OpenInterval::make(max_endpoint(a.lo, b.lo), min_endpoint(a.hi, b.hi));
}

std::vector<OpenInterval> normalize_pieces(std::vector<OpenInterval> pieces) {
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const OpenInterval& a, const OpenInterval& b) { return compare(a.lo, b.lo) < 0; });
    std::vector<OpenInterval> out;
    for (auto& p : pieces) {
        if (!out.empty() && compare(p.lo, out.back().hi) < 0) {
            out.back().hi = max_endpoint(out.back().hi, p.hi);
        } else {
            out.push_back(std::move(p));
        }
    }
    return out;
}

SymbolicRealSet SymbolicRealSet::of(std::vector<OpenInterval> pieces) {
    SymbolicRealSet s;
    s.pieces_ = normalize_pieces(std::move(pieces));
    return s;
}

SymbolicRealSet SymbolicRealSet::interval(Endpoint lo, Endpoint hi) {
    auto iv = OpenInterval::make(std::move(lo), std::move(hi));
    if (!iv) return {};
    return of({*iv});
}

SymbolicRealSet SymbolicRealSet::whole_line() { return interval(Endpoint::neg_inf(), Endpoint::pos_inf()); }

namespace {

/// Rational bounds on a / b for b > 0.
std::pair<Rational, Rational> quotient_bounds(const SymbolicReal& a, const SymbolicReal& b) {
    const Enclosure n = a.enclosure();
    const Enclosure d = b.enclosure();
    return {std::min(Rational(n.lo / d.lo), Rational(n.lo / d.hi)), std::max(Rational(n.hi / d.lo), Rational(n.hi / d.hi))};
}

}  // namespace

SymbolicRealSet SymbolicRealSet::periodic(std::vector<OpenInterval> pattern, SymbolicReal period, OpenInterval window) {
    if (compare(period, SymbolicReal()) <= 0) throw Error(ErrorCode::InvalidInstance, "period must be positive");
    pattern = normalize_pieces(std::move(pattern));
    for (const auto& p : pattern) {
        if (!p.bounded_above() || !p.bounded_below()) {
            throw Error(ErrorCode::InvalidInstance, "periodic pattern pieces must be bounded");
        }
    }
    if (pattern.empty()) return {};
    if (window.bounded_below() && window.bounded_above()) {
        std::vector<OpenInterval> pieces;
        for (const auto& p : pattern) {
            const cpp_int k_lo = floor_of(quotient_bounds(window.lo.value() - p.hi.value(), period).first) - 1;
            const cpp_int k_hi = floor_of(quotient_bounds(window.hi.value() - p.lo.value(), period).second) + 2;
            for (cpp_int k = k_lo; k <= k_hi; ++k) {
                const SymbolicReal shift = period * Rational(k);
                auto moved = OpenInterval::make(p.lo.value() + shift, p.hi.value() + shift);
                if (!moved) continue;
                if (auto cut = smop::intersect(*moved, window)) pieces.push_back(*cut);
            }
        }
        return of(std::move(pieces));
    }
    SymbolicRealSet s;
    s.periodic_ = PeriodicComponent{std::move(pattern), std::move(period), std::move(window)};
    return s;
}

SymbolicRealSet SymbolicRealSet::intersect(const SymbolicRealSet& other) const {
    if (periodic_ && other.periodic_) throw Error(ErrorCode::UnsupportedShape, "intersection of two periodic sets");
    if (!periodic_ && !other.periodic_) {
        std::vector<OpenInterval> pieces;
        for (const auto& a : pieces_) {
            for (const auto& b : other.pieces_) {
                if (auto cut = smop::intersect(a, b)) pieces.push_back(*cut);
            }
        }
        return of(std::move(pieces));
    }
    const PeriodicComponent& p = periodic_ ? *periodic_ : *other.periodic_;
    const std::vector<OpenInterval>& cuts = periodic_ ? other.pieces_ : pieces_;
    SymbolicRealSet result;
    for (const auto& c : cuts) {
        if (auto window = smop::intersect(p.window, c)) result = result.unite(periodic(p.pattern, p.period, *window));
    }
    return result;
}

SymbolicRealSet SymbolicRealSet::unite(const SymbolicRealSet& other) const {
    if (empty()) return other;
    if (other.empty()) return *this;
    if (!periodic_ && !other.periodic_) {
        std::vector<OpenInterval> pieces = pieces_;
        pieces.insert(pieces.end(), other.pieces_.begin(), other.pieces_.end());
        return of(std::move(pieces));
    }
    if (periodic_ && other.periodic_ && periodic_->period == other.periodic_->period &&
        periodic_->window == other.periodic_->window) {
        std::vector<OpenInterval> pattern = periodic_->pattern;
        pattern.insert(pattern.end(), other.periodic_->pattern.begin(), other.periodic_->pattern.end());
        return periodic(std::move(pattern), periodic_->period, periodic_->window);
    }
    throw Error(ErrorCode::UnsupportedShape, "union mixes periodic and aperiodic parts");
}

std::string SymbolicRealSet::str() const {
    if (empty()) return "empty";
    std::string out;
    for (const auto& p : pieces_) {
        if (!out.empty()) out += " U ";
        out += p.str();
    }
    if (periodic_) {
        std::string pattern;
        for (const auto& p : periodic_->pattern) {
            if (!pattern.empty()) pattern += " U ";
            pattern += p.str();
        }
        out = "(" + pattern + ") + k*" + periodic_->period.str() + " within " + periodic_->window.str();
    }
    return out;
}

}  // namespace smop
