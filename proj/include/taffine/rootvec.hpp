#pragma once
/**
 * @file rootvec.hpp
 * @brief Integer lattice vectors in span_Z{e_i, f_p, d}: the fast
 *        representation used by every root-system computation.
 */

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "taffine/errors.hpp"
#include "taffine/linalg.hpp"
#include "taffine/weight.hpp"

namespace taffine {

/// Coordinates: e_1..e_k, f_1..f_l, then the d (null root) coefficient.
class RootVec {
public:
    using Storage = boost::container::small_vector<int, 12>;

    RootVec() = default;
    RootVec(int k, int l) : k_(k), l_(l), c_(static_cast<std::size_t>(k + l + 1), 0) {}

    static RootVec e(int k, int l, int i, int c = 1) {
        RootVec r(k, l);
        r.c_.at(static_cast<std::size_t>(i - 1)) = c;
        return r;
    }
    static RootVec f(int k, int l, int p, int c = 1) {
        RootVec r(k, l);
        r.c_.at(static_cast<std::size_t>(k + p - 1)) = c;
        return r;
    }
    static RootVec d(int k, int l, int c = 1) {
        RootVec r(k, l);
        r.c_.back() = c;
        return r;
    }

    /// Rejects weights with non-integer coefficients or a nonzero L0 part.
    static RootVec from_weight(const Weight& w) {
        if (!w.is_lattice_root_candidate())
            throw InvalidInput("'" + w.str() + "' is not an integral lattice vector with zero L0 part");
        RootVec r(w.k(), w.l());
        auto to_int = [](const Scalar& s) { return static_cast<int>(numerator(s.constant())); };
        for (int i = 1; i <= w.k(); ++i) r.c_[i - 1] = to_int(w.eps(i));
        for (int p = 1; p <= w.l(); ++p) r.c_[w.k() + p - 1] = to_int(w.del(p));
        r.c_.back() = to_int(w.dlt());
        return r;
    }

    Weight to_weight() const {
        Weight w(k_, l_);
        for (int i = 1; i <= k_; ++i) w.eps(i) = Scalar(eps(i));
        for (int p = 1; p <= l_; ++p) w.del(p) = Scalar(del(p));
        w.dlt() = Scalar(dlt());
        return w;
    }

    linalg::RatVec to_rational() const {
        linalg::RatVec v;
        v.reserve(c_.size());
        for (int x : c_) v.emplace_back(x);
        return v;
    }

    int k() const { return k_; }
    int l() const { return l_; }
    int eps(int i) const { return c_[static_cast<std::size_t>(i - 1)]; }
    int del(int p) const { return c_[static_cast<std::size_t>(k_ + p - 1)]; }
    int dlt() const { return c_.back(); }
    int& eps(int i) { return c_[static_cast<std::size_t>(i - 1)]; }
    int& del(int p) { return c_[static_cast<std::size_t>(k_ + p - 1)]; }
    int& dlt() { return c_.back(); }
    const Storage& coords() const { return c_; }

    bool is_zero() const {
        for (int x : c_)
            if (x != 0) return false;
        return true;
    }

    /// Dot part: same vector with the d coefficient cleared.
    RootVec dot() const {
        RootVec r = *this;
        r.c_.back() = 0;
        return r;
    }
    bool dot_is_zero() const {
        for (std::size_t i = 0; i + 1 < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    /// (a, a); d is isotropic and orthogonal to every lattice vector.
    int norm2() const { return pair(*this, *this); }

    friend int pair(const RootVec& a, const RootVec& b) {
        int acc = 0;
        for (int i = 0; i < a.k_; ++i) acc += a.c_[i] * b.c_[i];
        for (int p = 0; p < a.l_; ++p) acc -= a.c_[a.k_ + p] * b.c_[a.k_ + p];
        return acc;
    }

    RootVec& operator+=(const RootVec& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    RootVec& operator-=(const RootVec& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend RootVec operator+(RootVec a, const RootVec& b) { return a += b; }
    friend RootVec operator-(RootVec a, const RootVec& b) { return a -= b; }
    friend RootVec operator-(RootVec a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend RootVec operator*(int s, RootVec a) {
        for (auto& x : a.c_) x *= s;
        return a;
    }

    friend bool operator==(const RootVec& a, const RootVec& b) { return a.k_ == b.k_ && a.l_ == b.l_ && a.c_ == b.c_; }

    /// Canonical order: d coefficient first, then coordinates lexicographically.
    friend std::strong_ordering operator<=>(const RootVec& a, const RootVec& b) {
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        if (auto c = a.l_ <=> b.l_; c != 0) return c;
        if (auto c = a.dlt() <=> b.dlt(); c != 0) return c;
        for (std::size_t i = 0; i + 1 < a.c_.size(); ++i)
            if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    std::string str() const { return to_weight().str(); }

private:
    int k_ = 0;
    int l_ = 0;
    Storage c_;
};

struct RootVecHash {
    std::size_t operator()(const RootVec& r) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : r.coords()) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ull;
        return h;
    }
};

}  // namespace taffine
