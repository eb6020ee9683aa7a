#pragma once
/**
 * @file rootsys.hpp
 * @brief Root systems of the twisted affine Lie superalgebras
 *        A(2k-1,2l-1)^(2), A(2k,2l-1)^(2), A(2k,2l)^(4) and D(k+1,l)^(2).
 *
 * Every root is a dot root plus a multiple of the null root d. Dot roots fall
 * into a handful of shapes (orbits under signed permutations of the e_i and of
 * the f_p); each family assigns one residue class n = k_off (mod r) of allowed
 * d-coefficients to each shape. Membership, enumeration and classification
 * are all read off that table.
 */

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taffine/errors.hpp"
#include "taffine/rootvec.hpp"
#include "taffine/weight.hpp"

namespace taffine {

enum class Family { A2ODD, A2MIX, A4, D2 };

inline constexpr std::array<Family, 4> kAllFamilies{Family::A2ODD, Family::A2MIX, Family::A4, Family::D2};

inline std::string_view family_code(Family f) {
    switch (f) {
        case Family::A2ODD: return "A2ODD";
        case Family::A2MIX: return "A2MIX";
        case Family::A4: return "A4";
        case Family::D2: return "D2";
    }
    return "?";
}

/// Human-readable type, e.g. `A(3,1)^(2)` for A2ODD with k=2, l=1.
inline std::string family_type_name(Family f, int k, int l) {
    auto s = [](int n) { return std::to_string(n); };
    switch (f) {
        case Family::A2ODD: return "A(" + s(2 * k - 1) + "," + s(2 * l - 1) + ")^(2)";
        case Family::A2MIX: return "A(" + s(2 * k) + "," + s(2 * l - 1) + ")^(2)";
        case Family::A4: return "A(" + s(2 * k) + "," + s(2 * l) + ")^(4)";
        case Family::D2: return "D(" + s(k + 1) + "," + s(l) + ")^(2)";
    }
    return "?";
}

inline Family parse_family(std::string_view code) {
    for (Family f : kAllFamilies)
        if (family_code(f) == code) return f;
    throw InvalidInput("unknown family code '" + std::string(code) + "' (expected A2ODD, A2MIX, A4 or D2)");
}

class RootSystemSpec {
public:
    RootSystemSpec(Family family, int k, int l) : family_(family), k_(k), l_(l) {
        if (k < 1 || l < 1) throw InvalidInput("k and l must be positive integers");
        if (family == Family::A2ODD && k == 1 && l == 1) throw InvalidInput("A2ODD excludes (k, l) = (1, 1)");
    }

    Family family() const { return family_; }
    int k() const { return k_; }
    int l() const { return l_; }

    friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;

private:
    Family family_;
    int k_;
    int l_;
};

/// Arithmetic progression r*Z + k_off of d-coefficients.
struct Progression {
    int r = 1;
    int k_off = 0;

    bool contains(int n) const {
        int m = (n - k_off) % r;
        return m == 0;
    }
    friend bool operator==(const Progression&, const Progression&) = default;
};

/// Orbit of a dot root under signed permutations of e_i and of f_p.
enum class DotShape {
    zero,   // 0
    e,      // +-e_i
    f,      // +-f_p
    two_e,  // +-2e_i
    two_f,  // +-2f_p
    ee,     // +-e_i +- e_r, i != r
    ff,     // +-f_p +- f_q, p != q
    ef,     // +-e_i +- f_p
};

inline constexpr std::array<DotShape, 8> kAllShapes{DotShape::zero, DotShape::e,  DotShape::f,  DotShape::two_e,
                                                    DotShape::two_f, DotShape::ee, DotShape::ff, DotShape::ef};

/// Shape of the dot part of v, or nullopt if the dot part has no shape.
inline std::optional<DotShape> dot_shape(const RootVec& v) {
    int ne = 0, nf = 0, first_e = 0, first_f = 0;
    for (int i = 1; i <= v.k(); ++i) {
        int c = v.eps(i);
        if (c == 0) continue;
        if (++ne == 1) first_e = c;
        if (std::abs(c) != 1 && std::abs(c) != 2) return std::nullopt;
        if (std::abs(c) == 2 && ne > 1) return std::nullopt;
    }
    for (int p = 1; p <= v.l(); ++p) {
        int c = v.del(p);
        if (c == 0) continue;
        if (++nf == 1) first_f = c;
        if (std::abs(c) != 1 && std::abs(c) != 2) return std::nullopt;
        if (std::abs(c) == 2 && nf > 1) return std::nullopt;
    }
    const bool e2 = std::abs(first_e) == 2;
    const bool f2 = std::abs(first_f) == 2;
    if (ne + nf == 0) return DotShape::zero;
    if (ne + nf > 2) return std::nullopt;
    if (ne == 1 && nf == 0) return e2 ? DotShape::two_e : DotShape::e;
    if (ne == 0 && nf == 1) return f2 ? DotShape::two_f : DotShape::f;
    if (e2 || f2) return std::nullopt;
    if (ne == 2) return DotShape::ee;
    if (nf == 2) return DotShape::ff;
    return DotShape::ef;
}

/// Allowed d-coefficients for each dot shape, per family.
inline std::optional<Progression> root_progression(Family family, DotShape shape) {
    using S = DotShape;
    if (shape == S::zero) return Progression{1, 0};
    switch (family) {
        case Family::A2MIX:
            switch (shape) {
                case S::e: case S::f: case S::ee: case S::ff: case S::ef: return Progression{1, 0};
                case S::two_e: return Progression{2, 1};
                case S::two_f: return Progression{2, 0};
                default: return std::nullopt;
            }
        case Family::A2ODD:
            switch (shape) {
                case S::ee: case S::ff: case S::ef: return Progression{1, 0};
                case S::two_e: return Progression{2, 1};
                case S::two_f: return Progression{2, 0};
                default: return std::nullopt;
            }
        case Family::A4:
            switch (shape) {
                case S::e: case S::f: return Progression{1, 0};
                case S::ee: case S::ff: case S::ef: return Progression{2, 0};
                case S::two_e: return Progression{4, 2};
                case S::two_f: return Progression{4, 0};
                default: return std::nullopt;
            }
        case Family::D2:
            switch (shape) {
                case S::e: case S::f: return Progression{1, 0};
                case S::two_f: case S::ee: case S::ff: case S::ef: return Progression{2, 0};
                default: return std::nullopt;
            }
    }
    return std::nullopt;
}

namespace detail {

inline void require_shape(const RootSystemSpec& spec, const RootVec& v) {
    if (v.k() != spec.k() || v.l() != spec.l())
        throw InvalidInput("lattice vector dimensions (" + std::to_string(v.k()) + "," + std::to_string(v.l()) +
                           ") do not match the root system (" + std::to_string(spec.k()) + "," +
                           std::to_string(spec.l()) + ")");
}

inline RootVec require_lattice(const RootSystemSpec& spec, const Weight& w) {
    if (w.k() != spec.k() || w.l() != spec.l())
        throw InvalidInput("weight dimensions do not match the root system");
    return RootVec::from_weight(w);
}

/// All dot vectors of one shape for the ambient (k, l).
inline std::vector<RootVec> shape_members(int k, int l, DotShape shape) {
    std::vector<RootVec> out;
    auto both_signs = [&](const RootVec& v) {
        out.push_back(v);
        out.push_back(-v);
    };
    switch (shape) {
        case DotShape::zero: out.emplace_back(k, l); break;
        case DotShape::e:
            for (int i = 1; i <= k; ++i) both_signs(RootVec::e(k, l, i));
            break;
        case DotShape::f:
            for (int p = 1; p <= l; ++p) both_signs(RootVec::f(k, l, p));
            break;
        case DotShape::two_e:
            for (int i = 1; i <= k; ++i) both_signs(RootVec::e(k, l, i, 2));
            break;
        case DotShape::two_f:
            for (int p = 1; p <= l; ++p) both_signs(RootVec::f(k, l, p, 2));
            break;
        case DotShape::ee:
            for (int i = 1; i <= k; ++i)
                for (int r = i + 1; r <= k; ++r)
                    for (int s : {1, -1}) both_signs(RootVec::e(k, l, i) + RootVec::e(k, l, r, s));
            break;
        case DotShape::ff:
            for (int p = 1; p <= l; ++p)
                for (int q = p + 1; q <= l; ++q)
                    for (int s : {1, -1}) both_signs(RootVec::f(k, l, p) + RootVec::f(k, l, q, s));
            break;
        case DotShape::ef:
            for (int i = 1; i <= k; ++i)
                for (int p = 1; p <= l; ++p)
                    for (int s : {1, -1}) both_signs(RootVec::e(k, l, i) + RootVec::f(k, l, p, s));
            break;
    }
    return out;
}

}  // namespace detail

inline bool is_root(const RootSystemSpec& spec, const RootVec& v) {
    detail::require_shape(spec, v);
    auto shape = dot_shape(v);
    if (!shape) return false;
    auto prog = root_progression(spec.family(), *shape);
    return prog && prog->contains(v.dlt());
}

inline bool is_root(const RootSystemSpec& spec, const Weight& w) { return is_root(spec, detail::require_lattice(spec, w)); }

/// The finite set of dot roots, 0 included, in canonical order.
inline std::vector<RootVec> dot_roots(const RootSystemSpec& spec) {
    std::vector<RootVec> out;
    for (DotShape s : kAllShapes) {
        if (!root_progression(spec.family(), s)) continue;
        auto members = detail::shape_members(spec.k(), spec.l(), s);
        out.insert(out.end(), members.begin(), members.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// { alpha in R : |d-coefficient of alpha| <= N }, canonically sorted.
inline std::vector<RootVec> enumerate_window(const RootSystemSpec& spec, int N) {
    if (N < 0) throw InvalidInput("window radius must be non-negative");
    std::vector<RootVec> out;
    for (const RootVec& dot : dot_roots(spec)) {
        Progression prog = *root_progression(spec.family(), *dot_shape(dot));
        for (int n = -N; n <= N; ++n) {
            if (!prog.contains(n)) continue;
            RootVec r = dot;
            r.dlt() = n;
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// S_alpha-dot = (r Z + k_off) d for a nonzero dot root.
inline Progression s_alpha(const RootSystemSpec& spec, const RootVec& wdot) {
    detail::require_shape(spec, wdot);
    if (wdot.dlt() != 0) throw InvalidInput("s_alpha expects a dot vector (zero d-coefficient)");
    auto shape = dot_shape(wdot);
    if (!shape || *shape == DotShape::zero) throw InvalidInput("'" + wdot.str() + "' is not a nonzero dot root");
    auto prog = root_progression(spec.family(), *shape);
    if (!prog) throw InvalidInput("'" + wdot.str() + "' is not a dot root of " + std::string(family_code(spec.family())));
    return *prog;
}

inline Progression s_alpha(const RootSystemSpec& spec, const Weight& wdot) {
    if (!wdot.lam0().is_zero() || !wdot.dlt().is_zero())
        throw InvalidInput("s_alpha expects a dot vector (zero d and L0 coefficients)");
    return s_alpha(spec, detail::require_lattice(spec, wdot));
}

enum class RootKind { zero, imaginary, realx, nonsingularx };
enum class LengthLabel { sh, ex, lg };

inline std::string_view to_string(RootKind k) {
    switch (k) {
        case RootKind::zero: return "zero";
        case RootKind::imaginary: return "imaginary";
        case RootKind::realx: return "realx";
        case RootKind::nonsingularx: return "nonsingularx";
    }
    return "?";
}

inline std::string_view to_string(LengthLabel l) {
    switch (l) {
        case LengthLabel::sh: return "sh";
        case LengthLabel::ex: return "ex";
        case LengthLabel::lg: return "lg";
    }
    return "?";
}

struct RootClass {
    RootKind kind = RootKind::zero;
    std::optional<LengthLabel> length_label;  // present iff kind == realx
    std::optional<Progression> progression;   // present iff the dot part is nonzero
};

/// Partition of the nonzero dot roots by length.
struct DotRootViews {
    std::vector<RootVec> sh, ex, lg, ns;
    int min_real_norm = 0;  // min |(a, a)| over real dot roots
};

inline DotRootViews dot_root_views(const RootSystemSpec& spec) {
    DotRootViews v;
    auto dots = dot_roots(spec);
    for (const auto& d : dots)
        if (!d.is_zero() && d.norm2() != 0) {
            int n = std::abs(d.norm2());
            if (v.min_real_norm == 0 || n < v.min_real_norm) v.min_real_norm = n;
        }
    for (const auto& d : dots) {
        if (d.is_zero()) continue;
        if (d.norm2() == 0) {
            v.ns.push_back(d);
        } else if (std::abs(d.norm2()) == v.min_real_norm) {
            v.sh.push_back(d);
        }
    }
    // ex = 2 sh intersected with the dot roots.
    for (const auto& s : v.sh) {
        RootVec twice = 2 * s;
        if (std::binary_search(dots.begin(), dots.end(), twice)) v.ex.push_back(twice);
    }
    std::sort(v.ex.begin(), v.ex.end());
    for (const auto& d : dots) {
        if (d.is_zero() || d.norm2() == 0) continue;
        if (std::binary_search(v.ex.begin(), v.ex.end(), d)) continue;
        if (std::abs(d.norm2()) == v.min_real_norm) continue;
        v.lg.push_back(d);
    }
    return v;
}

inline RootClass classify(const RootSystemSpec& spec, const RootVec& w) {
    if (!is_root(spec, w)) throw InvalidInput("'" + w.str() + "' is not a root of " + family_type_name(spec.family(), spec.k(), spec.l()));
    RootClass c;
    if (w.is_zero()) return c;
    if (w.dot_is_zero()) {
        c.kind = RootKind::imaginary;
        return c;
    }
    RootVec dot = w.dot();
    c.progression = s_alpha(spec, dot);
    if (w.norm2() == 0) {
        c.kind = RootKind::nonsingularx;
        return c;
    }
    c.kind = RootKind::realx;
    auto views = dot_root_views(spec);
    if (std::find(views.sh.begin(), views.sh.end(), dot) != views.sh.end())
        c.length_label = LengthLabel::sh;
    else if (std::find(views.ex.begin(), views.ex.end(), dot) != views.ex.end())
        c.length_label = LengthLabel::ex;
    else
        c.length_label = LengthLabel::lg;
    return c;
}

inline RootClass classify(const RootSystemSpec& spec, const Weight& w) {
    return classify(spec, detail::require_lattice(spec, w));
}

inline RootVec dot_of(const RootVec& w) { return w.dot(); }

}  // namespace taffine
