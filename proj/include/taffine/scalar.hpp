#pragma once
/**
 * @file scalar.hpp
 * @brief Exact scalars: rationals and univariate polynomials over the
 *        rationals in one formal transcendental x.
 *
 * The transcendental stands in for an irrational number that only ever
 * appears through expressions like x - q (q rational). Treating it as a
 * polynomial indeterminate makes "x - q != 0" a structural fact instead of a
 * floating-point comparison.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "taffine/errors.hpp"

namespace taffine {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses `p`, `-p` or `p/q`. Whole input must be consumed.
inline Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InvalidInput("empty rational literal");
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
    auto digits = [&](std::size_t& p) {
        std::size_t start = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == start) throw InvalidInput("malformed rational literal '" + std::string(text) + "'");
        return BigInt(s.substr(start, p - start));
    };
    BigInt num = digits(pos);
    BigInt den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = digits(pos);
        if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    }
    if (pos != s.size()) throw InvalidInput("trailing characters in rational literal '" + std::string(text) + "'");
    Rational q(num, den);
    return neg ? Rational(-q) : q;
}

/// Element of Q[x]. Canonical: no zero coefficient is ever stored.
class Scalar {
public:
    using Terms = std::map<unsigned, Rational>;

    Scalar() = default;
    Scalar(const Rational& q) { set(0, q); }                // NOLINT(google-explicit-constructor)
    Scalar(long long n) : Scalar(Rational(n)) {}            // NOLINT
    Scalar(int n) : Scalar(Rational(n)) {}                  // NOLINT

    /// The indeterminate x (the formal transcendental).
    static Scalar xi() {
        Scalar s;
        s.set(1, Rational(1));
        return s;
    }

    static Scalar monomial(unsigned power, const Rational& coeff) {
        Scalar s;
        s.set(power, coeff);
        return s;
    }

    const Terms& terms() const { return terms_; }

    Rational coefficient(unsigned power) const {
        auto it = terms_.find(power);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    /// The rational value of a constant scalar.
    Rational constant() const {
        if (!is_constant()) throw InvalidInput("scalar " + str() + " is not a rational constant");
        return coefficient(0);
    }

    bool is_integer() const { return is_constant() && taffine::is_integer(coefficient(0)); }

    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }

    /// Substitutes a rational value for x.
    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            unsigned p = it->first;
            auto next = std::next(it);
            unsigned lower = next == terms_.rend() ? 0 : next->first;
            acc += it->second;
            for (unsigned i = lower; i < p; ++i) acc *= x;
        }
        return acc;
    }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [p, c] : o.terms_) set(p, coefficient(p) + c);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (const auto& [p, c] : o.terms_) set(p, coefficient(p) - c);
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        *this = *this * o;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator-(const Scalar& a) {
        Scalar r;
        for (const auto& [p, c] : a.terms_) r.terms_.emplace(p, -c);
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [p, c] : a.terms_)
            for (const auto& [q, d] : b.terms_) r.set(p + q, r.coefficient(p + q) + c * d);
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

    /// Total order used only for canonical sorting (degree-major, then
    /// coefficients from the top down).
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        auto ia = a.terms_.rbegin();
        auto ib = b.terms_.rbegin();
        for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first <=> ib->first;
            if (ia->second != ib->second)
                return ia->second < ib->second ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        if (ia != a.terms_.rend()) return std::strong_ordering::greater;
        if (ib != b.terms_.rend()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

    /// Ascending-degree rendering, e.g. `1/2 - 3x + x^2`.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            if (p == 0) {
                out += to_string(mag);
                continue;
            }
            if (mag != 1) out += to_string(mag);
            out += "x";
            if (p > 1) out += "^" + std::to_string(p);
        }
        return out;
    }

    /// Parses the `str()` grammar: signed terms `q`, `qx`, `qx^n`, `x^n`.
    static Scalar parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        if (s.empty()) throw InvalidInput("empty scalar literal");
        Scalar out;
        std::size_t pos = 0;
        while (pos < s.size()) {
            bool neg = false;
            if (s[pos] == '+' || s[pos] == '-') {
                neg = s[pos] == '-';
                ++pos;
            } else if (pos != 0) {
                throw InvalidInput("expected '+' or '-' in scalar literal '" + s + "'");
            }
            std::size_t start = pos;
            while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
            Rational coeff = 1;
            bool have_number = pos > start;
            if (have_number) coeff = parse_rational(std::string_view(s).substr(start, pos - start));
            unsigned power = 0;
            if (pos < s.size() && s[pos] == 'x') {
                ++pos;
                power = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    std::size_t ds = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    if (pos == ds) throw InvalidInput("missing exponent in scalar literal '" + s + "'");
                    power = static_cast<unsigned>(std::stoul(s.substr(ds, pos - ds)));
                }
            } else if (!have_number) {
                throw InvalidInput("malformed scalar literal '" + s + "'");
            }
            out += monomial(power, neg ? Rational(-coeff) : coeff);
        }
        return out;
    }

private:
    void set(unsigned power, const Rational& c) {
        if (c == 0)
            terms_.erase(power);
        else
            terms_[power] = c;
    }

    Terms terms_;
};

}  // namespace taffine
