#pragma once
/**
 * @file weight.hpp
 * @brief Weights over the basis {e_1..e_k, f_1..f_l, d, L0} and the invariant form.
 *
 * Symbols: `e<i>` is epsilon_i, `f<p>` is delta_p, `d` is the null root delta
 * and `L0` is Lambda_0, the dual of the canonical central element. The form is
 *
 *   (e_i, e_j) = [i == j],  (f_p, f_q) = -[p == q],  (e_i, f_p) = 0,
 *   (d, d) = 0,  (d, e_i) = (d, f_p) = 0,  (L0, d) = 1,  (L0, L0) = 0.
 *
 * Cartan elements are identified with weights through the form, so the value
 * lambda(t_alpha) is `form_eval(lambda, alpha)`.
 */

#include <cctype>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "taffine/errors.hpp"
#include "taffine/scalar.hpp"

namespace taffine {

class Weight {
public:
    Weight() = default;
    Weight(int k, int l) : k_(k), l_(l), eps_(static_cast<std::size_t>(k)), del_(static_cast<std::size_t>(l)) {
        if (k < 0 || l < 0) throw InvalidInput("negative weight dimensions");
    }

    static Weight epsilon(int k, int l, int i, const Scalar& c = Scalar(1)) {
        Weight w(k, l);
        w.eps(i) = c;
        return w;
    }
    static Weight delta_p(int k, int l, int p, const Scalar& c = Scalar(1)) {
        Weight w(k, l);
        w.del(p) = c;
        return w;
    }
    /// The null root delta.
    static Weight null_root(int k, int l, const Scalar& c = Scalar(1)) {
        Weight w(k, l);
        w.dlt_ = c;
        return w;
    }
    static Weight lambda0(int k, int l, const Scalar& c = Scalar(1)) {
        Weight w(k, l);
        w.lam0_ = c;
        return w;
    }

    int k() const { return k_; }
    int l() const { return l_; }

    // 1-based, matching the e_i / f_p literal indices.
    Scalar& eps(int i) { return eps_.at(index(i, k_, "e")); }
    const Scalar& eps(int i) const { return eps_.at(index(i, k_, "e")); }
    Scalar& del(int p) { return del_.at(index(p, l_, "f")); }
    const Scalar& del(int p) const { return del_.at(index(p, l_, "f")); }
    Scalar& dlt() { return dlt_; }
    const Scalar& dlt() const { return dlt_; }
    Scalar& lam0() { return lam0_; }
    const Scalar& lam0() const { return lam0_; }

    bool is_zero() const {
        for (const auto& s : eps_)
            if (!s.is_zero()) return false;
        for (const auto& s : del_)
            if (!s.is_zero()) return false;
        return dlt_.is_zero() && lam0_.is_zero();
    }

    bool same_shape(const Weight& o) const { return k_ == o.k_ && l_ == o.l_; }

    /// Integer coefficients and no L0 part.
    bool is_lattice_root_candidate() const {
        for (const auto& s : eps_)
            if (!s.is_integer()) return false;
        for (const auto& s : del_)
            if (!s.is_integer()) return false;
        return dlt_.is_integer() && lam0_.is_zero();
    }

    /// All coefficients are rational (no x terms).
    bool is_rational() const {
        for (const auto& s : eps_)
            if (!s.is_constant()) return false;
        for (const auto& s : del_)
            if (!s.is_constant()) return false;
        return dlt_.is_constant() && lam0_.is_constant();
    }

    /// Coefficients in basis order e_1..e_k, f_1..f_l, d, L0.
    std::vector<Scalar> coefficients() const {
        std::vector<Scalar> out(eps_);
        out.insert(out.end(), del_.begin(), del_.end());
        out.push_back(dlt_);
        out.push_back(lam0_);
        return out;
    }

    static Weight from_coefficients(int k, int l, const std::vector<Scalar>& c) {
        if (c.size() != static_cast<std::size_t>(k + l + 2)) throw InvalidInput("coefficient vector has wrong length");
        Weight w(k, l);
        for (int i = 0; i < k; ++i) w.eps_[i] = c[i];
        for (int p = 0; p < l; ++p) w.del_[p] = c[k + p];
        w.dlt_ = c[k + l];
        w.lam0_ = c[k + l + 1];
        return w;
    }

    Weight& operator+=(const Weight& o) {
        require_same(o);
        for (int i = 0; i < k_; ++i) eps_[i] += o.eps_[i];
        for (int p = 0; p < l_; ++p) del_[p] += o.del_[p];
        dlt_ += o.dlt_;
        lam0_ += o.lam0_;
        return *this;
    }
    Weight& operator-=(const Weight& o) { return *this += -o; }

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(const Weight& a) { return Scalar(-1) * a; }
    friend Weight operator*(const Scalar& s, Weight w) {
        for (auto& c : w.eps_) c = s * c;
        for (auto& c : w.del_) c = s * c;
        w.dlt_ = s * w.dlt_;
        w.lam0_ = s * w.lam0_;
        return w;
    }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        if (auto c = a.l_ <=> b.l_; c != 0) return c;
        if (auto c = a.dlt_ <=> b.dlt_; c != 0) return c;
        if (auto c = a.lam0_ <=> b.lam0_; c != 0) return c;
        for (int i = 0; i < a.k_; ++i)
            if (auto c = a.eps_[i] <=> b.eps_[i]; c != 0) return c;
        for (int p = 0; p < a.l_; ++p)
            if (auto c = a.del_[p] <=> b.del_[p]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    /// Canonical literal, e.g. `2e1 - 1/2f2 + 3d + 2L0` or `(1/2 - 3x)e1`.
    std::string str() const {
        std::string out;
        auto emit = [&](const Scalar& c, const std::string& sym) {
            if (c.is_zero()) return;
            if (c.is_constant()) {
                Rational q = c.constant();
                bool neg = q < 0;
                Rational mag = neg ? Rational(-q) : q;
                if (out.empty())
                    out += neg ? "-" : "";
                else
                    out += neg ? " - " : " + ";
                if (mag != 1) out += to_string(mag);
            } else {
                out += out.empty() ? "(" : " + (";
                out += c.str() + ")";
            }
            out += sym;
        };
        for (int i = 0; i < k_; ++i) emit(eps_[i], "e" + std::to_string(i + 1));
        for (int p = 0; p < l_; ++p) emit(del_[p], "f" + std::to_string(p + 1));
        emit(dlt_, "d");
        emit(lam0_, "L0");
        return out.empty() ? "0" : out;
    }

    /// Parses a weight literal over the ambient (k, l). Whitespace is ignored;
    /// an optional `*` may separate a coefficient from its symbol.
    static Weight parse(std::string_view text, int k, int l);

private:
    static std::size_t index(int i, int n, const char* sym) {
        if (i < 1 || i > n)
            throw InvalidInput(std::string("index ") + std::to_string(i) + " out of range for '" + sym + "' (1.." +
                               std::to_string(n) + ")");
        return static_cast<std::size_t>(i - 1);
    }
    void require_same(const Weight& o) const {
        if (!same_shape(o))
            throw InvalidInput("weight dimension mismatch: (" + std::to_string(k_) + "," + std::to_string(l_) + ") vs (" +
                               std::to_string(o.k_) + "," + std::to_string(o.l_) + ")");
    }

    int k_ = 0;
    int l_ = 0;
    std::vector<Scalar> eps_;
    std::vector<Scalar> del_;
    Scalar dlt_;
    Scalar lam0_;
};

inline Weight Weight::parse(std::string_view text, int k, int l) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto fail = [&](const std::string& why) -> InvalidInput {
        return InvalidInput("malformed weight literal '" + std::string(text) + "': " + why);
    };
    if (s.empty()) throw fail("empty");
    Weight w(k, l);
    if (s == "0") return w;

    std::size_t pos = 0;
    auto is_digit = [&](std::size_t p) { return p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])); };
    while (pos < s.size()) {
        bool neg = false;
        if (s[pos] == '+' || s[pos] == '-') {
            neg = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw fail("expected '+' or '-' at position " + std::to_string(pos));
        }
        Scalar coeff(1);
        if (pos < s.size() && s[pos] == '(') {
            std::size_t close = s.find(')', pos);
            if (close == std::string::npos) throw fail("unbalanced '('");
            coeff = Scalar::parse(std::string_view(s).substr(pos + 1, close - pos - 1));
            pos = close + 1;
        } else if (is_digit(pos)) {
            std::size_t start = pos;
            while (is_digit(pos)) ++pos;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                if (!is_digit(pos)) throw fail("missing denominator");
                while (is_digit(pos)) ++pos;
            }
            coeff = Scalar(parse_rational(std::string_view(s).substr(start, pos - start)));
        }
        if (pos < s.size() && s[pos] == '*') ++pos;
        if (pos >= s.size()) throw fail("coefficient without basis symbol");
        Scalar term = neg ? -coeff : coeff;
        char sym = s[pos];
        if (sym == 'e' || sym == 'f') {
            ++pos;
            std::size_t start = pos;
            while (is_digit(pos)) ++pos;
            if (pos == start) throw fail(std::string("missing index after '") + sym + "'");
            int idx = std::stoi(s.substr(start, pos - start));
            if (sym == 'e')
                w.eps(idx) += term;
            else
                w.del(idx) += term;
        } else if (sym == 'd') {
            ++pos;
            w.dlt() += term;
        } else if (s.compare(pos, 2, "L0") == 0) {
            pos += 2;
            w.lam0() += term;
        } else {
            throw fail(std::string("unknown basis symbol '") + sym + "'");
        }
    }
    return w;
}

/// The invariant bilinear form, extended by the L0 pairing.
inline Scalar form_eval(const Weight& a, const Weight& b) {
    if (!a.same_shape(b)) throw InvalidInput("form_eval: weight dimension mismatch");
    Scalar acc;
    for (int i = 1; i <= a.k(); ++i) acc += a.eps(i) * b.eps(i);
    for (int p = 1; p <= a.l(); ++p) acc -= a.del(p) * b.del(p);
    acc += a.lam0() * b.dlt();
    acc += a.dlt() * b.lam0();
    return acc;
}

/// (w, delta): the eigenvalue of the canonical central element.
inline Scalar level(const Weight& w) { return form_eval(w, Weight::null_root(w.k(), w.l())); }

/// Cartan-side representative of a weight. The form identifies the Cartan
/// subalgebra with its dual, so t_alpha shares alpha's coordinates and
/// lambda(t_alpha) = form_eval(lambda, t_rep(alpha)).
inline Weight t_rep(const Weight& w) { return w; }

/// Projection onto span{e_i, f_p}: drops the d and L0 components.
inline Weight dot_of(const Weight& w) {
    Weight out = w;
    out.dlt() = Scalar();
    out.lam0() = Scalar();
    return out;
}

}  // namespace taffine
