#pragma once
/**
 * @file decomp.hpp
 * @brief Triangular decompositions, parabolic subsets built from nested
 *        functionals, Levi cores P n -P, and finite root-system recognition.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "taffine/linalg.hpp"
#include "taffine/rootsys.hpp"

namespace taffine {

/// Rational linear functional on span{e_i, f_p, d}.
class Functional {
public:
    Functional() = default;
    Functional(int k, int l) : k_(k), l_(l), values_(static_cast<std::size_t>(k + l + 1)) { rescale(); }

    static Functional zero(int k, int l) { return Functional(k, l); }

    int k() const { return k_; }
    int l() const { return l_; }

    Functional& set_e(int i, const Rational& v) { return set(static_cast<std::size_t>(i - 1), v, i, k_); }
    Functional& set_f(int p, const Rational& v) { return set(static_cast<std::size_t>(k_ + p - 1), v, p, l_); }
    Functional& set_d(const Rational& v) {
        values_.back() = v;
        rescale();
        return *this;
    }

    const Rational& e(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
    const Rational& f(int p) const { return values_.at(static_cast<std::size_t>(k_ + p - 1)); }
    const Rational& d() const { return values_.back(); }
    const std::vector<Rational>& values() const { return values_; }

    bool is_zero() const {
        for (const auto& v : values_)
            if (v != 0) return false;
        return true;
    }

    Rational operator()(const RootVec& v) const {
        Rational acc = 0;
        for (std::size_t j = 0; j < values_.size(); ++j) acc += values_[j] * v.coords()[j];
        return acc;
    }

    /// Sign of f(v), computed on a positive integer multiple of f.
    int sign(const RootVec& v) const {
        long long acc = 0;
        for (std::size_t j = 0; j < scaled_.size(); ++j) acc += scaled_[j] * v.coords()[j];
        return (acc > 0) - (acc < 0);
    }

    friend bool operator==(const Functional& a, const Functional& b) {
        return a.k_ == b.k_ && a.l_ == b.l_ && a.values_ == b.values_;
    }

private:
    Functional& set(std::size_t idx, const Rational& v, int i, int n) {
        if (i < 1 || i > n) throw InvalidInput("functional index out of range");
        values_[idx] = v;
        rescale();
        return *this;
    }

    void rescale() {
        BigInt lcm = 1;
        for (const auto& v : values_) lcm = boost::multiprecision::lcm(lcm, denominator(v));
        scaled_.assign(values_.size(), 0);
        for (std::size_t j = 0; j < values_.size(); ++j) {
            BigInt s = numerator(values_[j]) * (lcm / denominator(values_[j]));
            if (boost::multiprecision::abs(s) > BigInt(1) << 40)
                throw InvalidInput("functional values too large for exact sign evaluation");
            scaled_[j] = static_cast<long long>(s);
        }
    }

    int k_ = 0;
    int l_ = 0;
    std::vector<Rational> values_;
    std::vector<long long> scaled_;
};

/// Random functional with values p/q, |p| <= max_num, 1 <= q <= max_den.
template <class Rng>
Functional random_functional(int k, int l, Rng& rng, int max_num = 5, int max_den = 4) {
    std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
    Functional f(k, l);
    for (int i = 1; i <= k; ++i) f.set_e(i, Rational(num(rng), den(rng)));
    for (int p = 1; p <= l; ++p) f.set_f(p, Rational(num(rng), den(rng)));
    f.set_d(Rational(num(rng), den(rng)));
    return f;
}

struct TriangularSplit {
    std::vector<RootVec> plus, circ, minus;
    bool trivial() const { return plus.empty() && minus.empty(); }
};

/// S = S+ u S0 u S- by the sign of f.
inline TriangularSplit triangular(const std::vector<RootVec>& roots, const Functional& f) {
    TriangularSplit out;
    for (const auto& a : roots) {
        int s = f.sign(a);
        (s > 0 ? out.plus : s < 0 ? out.minus : out.circ).push_back(a);
    }
    return out;
}

/// P = D+ u D0+ u D00 where D+ comes from `outer` and D0 is split by `inner`.
struct ParabolicSpec {
    Functional outer;
    Functional inner;

    bool contains(const RootVec& a) const {
        int so = outer.sign(a);
        return so > 0 || (so == 0 && inner.sign(a) >= 0);
    }
};

inline std::vector<RootVec> parabolic_set(const RootSystemSpec& spec, const ParabolicSpec& p, int N) {
    std::vector<RootVec> out;
    for (const auto& a : enumerate_window(spec, N))
        if (p.contains(a)) out.push_back(a);
    return out;
}

/// Parabolic subset of an explicit finite ambient root set.
inline std::vector<RootVec> parabolic_subset(const std::vector<RootVec>& ambient, const ParabolicSpec& p) {
    std::vector<RootVec> out;
    for (const auto& a : ambient)
        if (p.contains(a)) out.push_back(a);
    return out;
}

struct ParabolicViolation {
    enum class Kind { covering, closure } kind;
    RootVec a;
    std::optional<RootVec> b;  // closure only
    std::optional<RootVec> sum;
};

/// Window check of  D = P u -P  and  D n (P + P) c P.
template <class Member>
std::vector<ParabolicViolation> is_parabolic(const RootSystemSpec& spec, Member&& member, int N) {
    std::vector<ParabolicViolation> out;
    std::vector<RootVec> members;
    for (const auto& a : enumerate_window(spec, N)) {
        bool in = member(a);
        if (!in && !member(-a)) out.push_back({ParabolicViolation::Kind::covering, a, std::nullopt, std::nullopt});
        if (in) members.push_back(a);
    }
    for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x; y < members.size(); ++y) {
            RootVec s = members[x] + members[y];
            if (is_root(spec, s) && !member(s))
                out.push_back({ParabolicViolation::Kind::closure, members[x], members[y], s});
        }
    return out;
}

/// Same axioms relative to a finite ambient root set.
inline std::vector<ParabolicViolation> is_parabolic_in(const std::vector<RootVec>& ambient, const std::vector<RootVec>& P) {
    std::set<RootVec> amb(ambient.begin(), ambient.end()), pset(P.begin(), P.end());
    std::vector<ParabolicViolation> out;
    for (const auto& a : P)
        if (!amb.count(a)) out.push_back({ParabolicViolation::Kind::covering, a, std::nullopt, std::nullopt});
    for (const auto& a : amb)
        if (!pset.count(a) && !pset.count(-a))
            out.push_back({ParabolicViolation::Kind::covering, a, std::nullopt, std::nullopt});
    std::vector<RootVec> members(pset.begin(), pset.end());
    for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x; y < members.size(); ++y) {
            RootVec s = members[x] + members[y];
            if (amb.count(s) && !pset.count(s))
                out.push_back({ParabolicViolation::Kind::closure, members[x], members[y], s});
        }
    return out;
}

/// P n -P.
inline std::vector<RootVec> levi_core(const std::vector<RootVec>& P) {
    std::set<RootVec> pset(P.begin(), P.end());
    std::vector<RootVec> out;
    for (const auto& a : pset)
        if (pset.count(-a)) out.push_back(a);
    return out;
}

// ---------------------------------------------------------------------------
// Recognition
// ---------------------------------------------------------------------------

enum class LeviType { A, B, C, D, BC, B0p, Cn_super, Dk1_super, UNKNOWN };

inline std::string_view to_string(LeviType t) {
    switch (t) {
        case LeviType::A: return "A";
        case LeviType::B: return "B";
        case LeviType::C: return "C";
        case LeviType::D: return "D";
        case LeviType::BC: return "BC";
        case LeviType::B0p: return "B0p";
        case LeviType::Cn_super: return "Cn_super";
        case LeviType::Dk1_super: return "Dk1_super";
        case LeviType::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

struct LeviComponent {
    int rank = 0;  // the type's index: n for A_n, C(n); p for B(0,p); m for D(m,1)
    LeviType type = LeviType::UNKNOWN;
    int root_count = 0;  // nonzero roots
    bool has_nonsingular = false;
    std::vector<RootVec> roots;

    std::string name() const {
        auto n = std::to_string(rank);
        switch (type) {
            case LeviType::A: case LeviType::B: case LeviType::C: case LeviType::D: case LeviType::BC:
                return std::string(to_string(type)) + n;
            case LeviType::B0p: return "B(0," + n + ")";
            case LeviType::Cn_super: return "C(" + n + ")";
            case LeviType::Dk1_super: return "D(" + n + ",1)";
            case LeviType::UNKNOWN: return "UNKNOWN";
        }
        return "?";
    }
};

struct LeviDescriptor {
    std::vector<LeviComponent> components;

    /// Component names sorted, e.g. {"A1", "B(0,2)"}.
    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& c : components) out.push_back(c.name());
        std::sort(out.begin(), out.end());
        return out;
    }
};

/// Parity assumption for nonreduced components (a and 2a both present). In a
/// Lie superalgebra such an a is odd, which makes the component B(0,p);
/// `even` reports the purely even reading BC_n instead.
enum class RootParity { super, even };

namespace detail {

inline int lattice_rank(const std::vector<RootVec>& roots) {
    std::vector<linalg::RatVec> vs;
    for (const auto& r : roots) vs.push_back(r.to_rational());
    return static_cast<int>(linalg::rank(vs));
}

inline LeviComponent fingerprint(std::vector<RootVec> roots, RootParity parity) {
    LeviComponent c;
    std::sort(roots.begin(), roots.end());
    c.roots = roots;
    c.root_count = static_cast<int>(roots.size());
    const int n = c.root_count;
    const int r = lattice_rank(roots);
    std::set<RootVec> rs(roots.begin(), roots.end());

    int ns = 0;
    bool imaginary = false, nonreduced = false;
    std::map<int, int> by_norm;  // |(a,a)| -> count, real roots only
    for (const auto& a : roots) {
        if (a.dot_is_zero()) imaginary = true;
        if (a.norm2() == 0) {
            ++ns;
            continue;
        }
        ++by_norm[std::abs(a.norm2())];
        if (rs.count(2 * a)) nonreduced = true;
    }
    c.has_nonsingular = ns > 0 && !imaginary;
    if (imaginary) return c;
    const int real = n - ns;

    if (ns == 0) {
        if (nonreduced) {
            // short a (2p), middle 2a (2p(p-1)), long 4a (2p)
            if (n != 2 * r * r + 2 * r) return c;
            int a = by_norm.begin()->first;
            if (by_norm[a] != 2 * r || by_norm[4 * a] != 2 * r) return c;
            if (r > 1 && by_norm[2 * a] != 2 * r * (r - 1)) return c;
            if (static_cast<int>(by_norm.size()) != (r > 1 ? 3 : 2)) return c;
            c.type = parity == RootParity::super ? LeviType::B0p : LeviType::BC;
            c.rank = r;
            return c;
        }
        if (by_norm.size() == 1) {
            if (n == r * (r + 1)) {
                c.type = LeviType::A;
                c.rank = r;
            } else if (r >= 4 && n == 2 * r * (r - 1)) {
                c.type = LeviType::D;
                c.rank = r;
            }
            return c;
        }
        if (by_norm.size() == 2 && n == 2 * r * r) {
            auto [short_norm, short_count] = *by_norm.begin();
            auto [long_norm, long_count] = *by_norm.rbegin();
            if (long_norm != 2 * short_norm) return c;
            if (short_count == 2 * r && long_count == 2 * r * (r - 1)) {
                c.type = LeviType::B;
                c.rank = r;
            } else if (r >= 3 && long_count == 2 * r && short_count == 2 * r * (r - 1)) {
                c.type = LeviType::C;
                c.rank = r;
            }
        }
        return c;
    }
    if (nonreduced) return c;
    // C(n) = osp(2|2n-2): rank n, 4(n-1) nonsingular, C_{n-1} even part.
    if (r >= 2 && ns == 4 * (r - 1) && real == 2 * (r - 1) * (r - 1)) {
        c.type = LeviType::Cn_super;
        c.rank = r;
        return c;
    }
    // D(m,1) = osp(2m|2), m >= 2: rank m+1, 4m nonsingular, D_m + A_1 even part.
    const int m = r - 1;
    if (m >= 2 && ns == 4 * m && real == 2 * m * (m - 1) + 2) {
        c.type = LeviType::Dk1_super;
        c.rank = m;
    }
    return c;
}

}  // namespace detail

/// Splits a finite negation-closed root set into non-orthogonality components
/// and matches each against a fixed catalog of invariant fingerprints.
inline LeviDescriptor recognize(const std::vector<RootVec>& roots, RootParity parity = RootParity::super) {
    std::set<RootVec> rs(roots.begin(), roots.end());
    for (const auto& a : rs)
        if (!rs.count(-a)) throw InvalidInput("recognize: set is not closed under negation (missing -(" + a.str() + "))");
    std::vector<RootVec> nz;
    for (const auto& a : rs)
        if (!a.is_zero()) nz.push_back(a);

    std::vector<std::size_t> parent(nz.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t x = 0; x < nz.size(); ++x)
        for (std::size_t y = x + 1; y < nz.size(); ++y)
            if (pair(nz[x], nz[y]) != 0 || nz[x] == -nz[y]) parent[find(x)] = find(y);

    std::map<std::size_t, std::vector<RootVec>> groups;
    for (std::size_t x = 0; x < nz.size(); ++x) groups[find(x)].push_back(nz[x]);
    LeviDescriptor out;
    for (auto& [root, members] : groups) out.components.push_back(detail::fingerprint(std::move(members), parity));
    std::sort(out.components.begin(), out.components.end(),
              [](const LeviComponent& a, const LeviComponent& b) { return a.roots < b.roots; });
    return out;
}

}  // namespace taffine
