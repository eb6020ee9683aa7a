#pragma once
/**
 * @file supportcalc.hpp
 * @brief Symbolic weight supports and the predicates built on them.
 *
 * A support is a finite union of pieces
 *
 *     base + offsets + span_Z(zgens) + span_N(ngens),
 *
 * with rational generators and offsets and an arbitrary (possibly
 * x-dependent) base. On such a set the B-set (rays that eventually leave the
 * support) reduces to escaping every piece's rational recession cone, and the
 * C-set (translations preserving the support) to piecewise containment.
 * Membership questions that bounded search cannot settle raise Indeterminate.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "taffine/linalg.hpp"
#include "taffine/subsystems.hpp"
#include "taffine/weight.hpp"

namespace taffine {

struct SupportPiece {
    Weight base;
    std::vector<Weight> zgens;
    std::vector<Weight> ngens;
    std::vector<Weight> offsets;  // never empty; {0} for a plain coset cone

    friend bool operator==(const SupportPiece&, const SupportPiece&) = default;
};

class CosetSupport {
public:
    CosetSupport() = default;

    /// Empty support over the ambient (k, l).
    CosetSupport(int k, int l) : k_(k), l_(l) {}

    static CosetSupport piece(const Weight& base, std::vector<Weight> zgens, std::vector<Weight> ngens = {},
                              std::vector<Weight> offsets = {}) {
        CosetSupport s(base.k(), base.l());
        s.add_piece({base, std::move(zgens), std::move(ngens), std::move(offsets)});
        return s;
    }

    void add_piece(SupportPiece p) {
        if (p.offsets.empty()) p.offsets.push_back(Weight(k_, l_));
        for (const auto* group : {&p.zgens, &p.ngens, &p.offsets})
            for (const auto& g : *group) {
                if (g.k() != k_ || g.l() != l_) throw InvalidInput("support piece dimension mismatch");
                if (!g.is_rational()) throw InvalidInput("support generators and offsets must be rational: " + g.str());
            }
        if (p.base.k() != k_ || p.base.l() != l_) throw InvalidInput("support base dimension mismatch");
        std::sort(p.offsets.begin(), p.offsets.end());
        p.offsets.erase(std::unique(p.offsets.begin(), p.offsets.end()), p.offsets.end());
        pieces_.push_back(std::move(p));
    }

    int k() const { return k_; }
    int l() const { return l_; }
    bool empty() const { return pieces_.empty(); }
    const std::vector<SupportPiece>& pieces() const { return pieces_; }

    /// The support shifted by a weight.
    CosetSupport translated(const Weight& shift) const {
        CosetSupport out(k_, l_);
        for (auto p : pieces_) {
            p.base += shift;
            out.pieces_.push_back(std::move(p));
        }
        return out;
    }

    friend bool operator==(const CosetSupport&, const CosetSupport&) = default;

private:
    int k_ = 0;
    int l_ = 0;
    std::vector<SupportPiece> pieces_;
};

namespace detail {

/// Constant parts of a weight's coefficients (e, f, d, L0); nullopt if any
/// coefficient carries an x term.
inline std::optional<linalg::RatVec> rational_coords(const Weight& w) {
    linalg::RatVec v;
    for (const auto& c : w.coefficients()) {
        if (!c.is_constant()) return std::nullopt;
        v.push_back(c.coefficient(0));
    }
    return v;
}

inline linalg::RatVec coords(const Weight& w) { return *rational_coords(w); }

inline std::vector<linalg::RatVec> coords(const std::vector<Weight>& ws) {
    std::vector<linalg::RatVec> out;
    for (const auto& w : ws) out.push_back(coords(w));
    return out;
}

inline Decision combine_any(Decision acc, Decision d) {
    if (acc == Decision::yes || d == Decision::yes) return Decision::yes;
    if (acc == Decision::unknown || d == Decision::unknown) return Decision::unknown;
    return Decision::no;
}

inline Decision combine_all(Decision acc, Decision d) {
    if (acc == Decision::no || d == Decision::no) return Decision::no;
    if (acc == Decision::unknown || d == Decision::unknown) return Decision::unknown;
    return Decision::yes;
}

/// Is v in span_Z(zgens) + span_N(ngens) of a piece?
inline Decision in_piece_monoid(const SupportPiece& p, const Weight& v, int bound) {
    auto rv = rational_coords(v);
    if (!rv) return Decision::no;
    return linalg::in_monoid(coords(p.zgens), coords(p.ngens), *rv, bound);
}

inline Decision piece_member(const SupportPiece& p, const Weight& lambda, int bound) {
    Decision acc = Decision::no;
    for (const auto& o : p.offsets) {
        acc = combine_any(acc, in_piece_monoid(p, lambda - p.base - o, bound));
        if (acc == Decision::yes) break;
    }
    return acc;
}

inline void require_ambient(const CosetSupport& s, const Weight& w) {
    if (w.k() != s.k() || w.l() != s.l()) throw InvalidInput("weight dimensions do not match the support");
}

inline bool throw_if_unknown(Decision d, const std::string& what) {
    if (d == Decision::unknown) throw Indeterminate(what);
    return d == Decision::yes;
}

}  // namespace detail

inline Decision member_decision(const CosetSupport& s, const Weight& lambda, int bound) {
    detail::require_ambient(s, lambda);
    Decision acc = Decision::no;
    for (const auto& p : s.pieces()) {
        acc = detail::combine_any(acc, detail::piece_member(p, lambda, bound));
        if (acc == Decision::yes) break;
    }
    return acc;
}

/// Exact membership; raises Indeterminate when the bounded search cannot decide.
inline bool member(const CosetSupport& s, const Weight& lambda, int bound) {
    return detail::throw_if_unknown(member_decision(s, lambda, bound),
                                    "membership of " + lambda.str() + " undecided within bound " + std::to_string(bound));
}

/// True iff every forward alpha-ray from the support eventually leaves it,
/// i.e. alpha avoids every piece's rational recession cone.
inline bool b_set_member(const Weight& alpha, const CosetSupport& s, int /*bound*/) {
    detail::require_ambient(s, alpha);
    if (s.empty()) return true;
    auto a = detail::rational_coords(alpha);
    if (!a) throw InvalidInput("b_set_member: alpha must be rational");
    if (alpha.is_zero()) return false;
    for (const auto& p : s.pieces()) {
        std::vector<linalg::RatVec> cone = detail::coords(p.ngens);
        for (const auto& z : detail::coords(p.zgens)) {
            cone.push_back(z);
            linalg::RatVec neg(z);
            for (auto& x : neg) x = -x;
            cone.push_back(neg);
        }
        if (linalg::in_rational_cone(cone, *a)) return false;
    }
    return true;
}

namespace detail {

/// Does  point + span_Z(q.zgens) + span_N(q.ngens)  lie inside piece `target`?
inline Decision translate_inside(const SupportPiece& q, const Weight& point, const SupportPiece& target, int bound) {
    Decision d = piece_member(target, point, bound);
    if (d != Decision::yes) return d == Decision::no ? Decision::no : Decision::unknown;
    for (const auto& z : q.zgens) {
        d = combine_all(d, in_piece_monoid(target, z, bound));
        d = combine_all(d, in_piece_monoid(target, -z, bound));
    }
    for (const auto& n : q.ngens) d = combine_all(d, in_piece_monoid(target, n, bound));
    // A "no" on the generators only means this target does not cover q.
    return d == Decision::yes ? Decision::yes : Decision::unknown;
}

/// Points  point + small combination of q's generators  used as witnesses.
inline std::vector<Weight> sample_points(const SupportPiece& q, const Weight& point, int radius) {
    std::vector<Weight> pts{point};
    for (const auto& z : q.zgens) {
        std::vector<Weight> next;
        for (const auto& p : pts)
            for (int c = -radius; c <= radius; ++c) next.push_back(p + Scalar(c) * z);
        pts = std::move(next);
        if (pts.size() > 4096) break;
    }
    for (const auto& n : q.ngens) {
        std::vector<Weight> next;
        for (const auto& p : pts)
            for (int c = 0; c <= radius; ++c) next.push_back(p + Scalar(c) * n);
        pts = std::move(next);
        if (pts.size() > 4096) break;
    }
    return pts;
}

}  // namespace detail

/// inner c outer? `no` comes with a concrete witness point of inner outside outer.
inline Decision contains(const CosetSupport& outer, const CosetSupport& inner, int bound) {
    if (outer.k() != inner.k() || outer.l() != inner.l()) throw InvalidInput("support dimension mismatch");
    Decision overall = Decision::yes;
    for (const auto& q : inner.pieces())
        for (const auto& o : q.offsets) {
            Weight point = q.base + o;
            Decision covered = Decision::no;
            for (const auto& target : outer.pieces()) {
                covered = detail::combine_any(covered, detail::translate_inside(q, point, target, bound));
                if (covered == Decision::yes) break;
            }
            if (covered == Decision::yes) continue;
            bool witness = false;
            for (const auto& pt : detail::sample_points(q, point, 2))
                if (member_decision(outer, pt, bound) == Decision::no) {
                    witness = true;
                    break;
                }
            if (witness) return Decision::no;
            overall = Decision::unknown;
        }
    return overall;
}

inline Decision same_set(const CosetSupport& a, const CosetSupport& b, int bound) {
    return detail::combine_all(contains(a, b, bound), contains(b, a, bound));
}

/// True iff alpha + supp is contained in supp.
inline bool c_set_member(const Weight& alpha, const CosetSupport& s, int bound) {
    detail::require_ambient(s, alpha);
    if (!alpha.is_rational()) throw InvalidInput("c_set_member: alpha must be rational");
    if (s.empty() || alpha.is_zero()) return true;
    return detail::throw_if_unknown(contains(s, s.translated(alpha), bound),
                                    "translation invariance under " + alpha.str() + " undecided");
}

// ---------------------------------------------------------------------------
// Labelings and the tight / hybrid / quasi-integrable classification
// ---------------------------------------------------------------------------

enum class ActionLabel { ln, in };

inline std::string_view to_string(ActionLabel a) { return a == ActionLabel::ln ? "ln" : "in"; }

/// ln / in labels on real roots of a window.
class ActionLabeling {
public:
    void set(const RootVec& a, ActionLabel label) { labels_[a] = label; }

    std::optional<ActionLabel> find(const RootVec& a) const {
        auto it = labels_.find(a);
        if (it == labels_.end()) return std::nullopt;
        return it->second;
    }

    ActionLabel at(const RootVec& a) const {
        auto it = labels_.find(a);
        if (it == labels_.end()) throw InvalidInput("labeling has no entry for " + a.str());
        return it->second;
    }

    const std::map<RootVec, ActionLabel>& entries() const { return labels_; }

    /// Pairs a, 2a (both labeled) that disagree.
    std::vector<std::pair<RootVec, RootVec>> doubling_conflicts() const {
        std::vector<std::pair<RootVec, RootVec>> out;
        for (const auto& [a, lab] : labels_) {
            auto twice = find(2 * a);
            if (twice && *twice != lab) out.emplace_back(a, 2 * a);
        }
        return out;
    }

private:
    std::map<RootVec, ActionLabel> labels_;
};

struct ShadowViolation {
    enum class Kind { unlabeled, neither, ln_mismatch, in_mismatch } kind;
    RootVec root;
    bool in_b = false;
    bool in_c = false;
};

inline std::string_view to_string(ShadowViolation::Kind k) {
    switch (k) {
        case ShadowViolation::Kind::unlabeled: return "unlabeled";
        case ShadowViolation::Kind::neither: return "neither";
        case ShadowViolation::Kind::ln_mismatch: return "ln_mismatch";
        case ShadowViolation::Kind::in_mismatch: return "in_mismatch";
    }
    return "?";
}

/// Shadow axioms on an explicit list of real roots:
///   every root is in B or C, ln == B and in == C away from B n C.
inline std::vector<ShadowViolation> shadow_check_roots(const std::vector<RootVec>& real_roots,
                                                       const ActionLabeling& labeling, const CosetSupport& s,
                                                       int bound) {
    std::vector<ShadowViolation> out;
    for (const auto& a : real_roots) {
        Weight w = a.to_weight();
        bool in_b = b_set_member(w, s, bound);
        bool in_c = c_set_member(w, s, bound);
        auto lab = labeling.find(a);
        if (!lab) {
            out.push_back({ShadowViolation::Kind::unlabeled, a, in_b, in_c});
            continue;
        }
        if (!in_b && !in_c) {
            out.push_back({ShadowViolation::Kind::neither, a, in_b, in_c});
            continue;
        }
        // A root in both B and C (only possible for the empty support) accepts either label.
        if (in_b && in_c) continue;
        if ((*lab == ActionLabel::ln) != in_b) out.push_back({ShadowViolation::Kind::ln_mismatch, a, in_b, in_c});
        if ((*lab == ActionLabel::in) != in_c) out.push_back({ShadowViolation::Kind::in_mismatch, a, in_b, in_c});
    }
    return out;
}

inline std::vector<RootVec> real_roots_window(const RootSystemSpec& spec, int N) {
    std::vector<RootVec> out;
    for (const auto& a : enumerate_window(spec, N))
        if (a.norm2() != 0) out.push_back(a);
    return out;
}

inline std::vector<ShadowViolation> shadow_check(const RootSystemSpec& spec, const ActionLabeling& labeling,
                                                 const CosetSupport& s, int N, int bound) {
    return shadow_check_roots(real_roots_window(spec, N), labeling, s, bound);
}

enum class Tightness { tight, hybrid };

inline std::string_view to_string(Tightness t) { return t == Tightness::tight ? "tight" : "hybrid"; }

namespace detail {

/// Real roots of S(i) in the window, grouped by dot part; each group is sorted
/// by d-coefficient.
inline std::map<RootVec, std::vector<RootVec>> real_strings(const RootSystemSpec& spec, SubsystemId i, int N) {
    std::map<RootVec, std::vector<RootVec>> out;
    for (const auto& a : enumerate_window(spec, N))
        if (a.norm2() != 0 && in_s_i(spec, i, a)) out[a.dot()].push_back(a);
    return out;
}

}  // namespace detail

/// Tight iff some real root's d-string inside S(i) is uniformly labeled.
inline Tightness classify_tightness(const RootSystemSpec& spec, SubsystemId i, const ActionLabeling& labeling, int N) {
    for (const auto& [dot, string] : detail::real_strings(spec, i, N)) {
        bool all_ln = true, all_in = true;
        for (const auto& a : string) {
            if (labeling.at(a) == ActionLabel::ln)
                all_in = false;
            else
                all_ln = false;
        }
        if (all_ln || all_in) return Tightness::tight;
    }
    return Tightness::hybrid;
}

/// t such that S(t) is integrable (all real roots ln) and S(3 - t) is hybrid.
inline std::optional<int> quasi_integrable_check(const RootSystemSpec& spec, const ActionLabeling& labeling, int N) {
    for (int t : {1, 2}) {
        SubsystemId side(t);
        bool integrable = true;
        for (const auto& [dot, string] : detail::real_strings(spec, side, N))
            for (const auto& a : string)
                if (labeling.at(a) != ActionLabel::ln) integrable = false;
        if (integrable && classify_tightness(spec, side.other(), labeling, N) == Tightness::hybrid) return t;
    }
    return std::nullopt;
}

/// +1 (up-nilpotent) when every real d-string of S(i) is ln exactly on a
/// nonempty upper tail of the window, -1 for lower tails, nullopt otherwise
/// (including when S(i) is tight).
inline std::optional<int> hybrid_direction(const RootSystemSpec& spec, SubsystemId i, const ActionLabeling& labeling,
                                           int N) {
    if (classify_tightness(spec, i, labeling, N) != Tightness::hybrid) return std::nullopt;
    auto strings = detail::real_strings(spec, i, N);
    auto tail_ln = [&](bool upward) {
        for (const auto& [dot, string] : strings) {
            std::vector<ActionLabel> labs;
            for (const auto& a : string) labs.push_back(labeling.at(a));
            if (!upward) std::reverse(labs.begin(), labs.end());
            if (labs.empty() || labs.back() != ActionLabel::ln) return false;
            // ln must form a suffix: no in after the first ln.
            bool seen_ln = false;
            for (auto lab : labs) {
                if (lab == ActionLabel::ln) seen_ln = true;
                else if (seen_ln) return false;
            }
        }
        return true;
    };
    bool up = tail_ln(true), down = tail_ln(false);
    if (up && !down) return 1;
    if (down && !up) return -1;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Extremal weights and induced support bounds
// ---------------------------------------------------------------------------

/// Some lambda in the window with (lambda + span_N S) n window = {lambda}.
/// Throws NotFound if the window has none.
inline Weight extremal_weight(const std::vector<Weight>& window, const std::vector<Weight>& S, int bound = 20) {
    if (window.empty()) throw InvalidInput("extremal_weight: empty support window");
    if (S.empty()) throw InvalidInput("extremal_weight: empty direction set");
    for (const auto& s : S) {
        if (!s.is_rational()) throw InvalidInput("extremal_weight: directions must be rational");
        bool dot_zero = true;
        for (int i = 1; i <= s.k(); ++i)
            if (!s.eps(i).is_zero()) dot_zero = false;
        for (int p = 1; p <= s.l(); ++p)
            if (!s.del(p).is_zero()) dot_zero = false;
        if (dot_zero && s.lam0().is_zero())
            throw InvalidInput("extremal_weight: direction " + s.str() + " is imaginary");
    }
    auto gens = detail::coords(S);
    for (const auto& lambda : window) {
        bool extremal = true;
        for (const auto& mu : window) {
            if (mu == lambda) continue;
            auto diff = detail::rational_coords(mu - lambda);
            if (!diff) continue;
            Decision d = linalg::in_monoid({}, gens, *diff, bound);
            if (d == Decision::unknown) throw Indeterminate("extremal_weight: undecided cone membership");
            if (d == Decision::yes) {
                extremal = false;
                break;
            }
        }
        if (extremal) return lambda;
    }
    throw NotFound("extremal_weight: no extremal weight in the window");
}

/// Lowering generator g with multiplicity cap (nullopt = unbounded).
struct NegGen {
    Weight g;
    std::optional<int> cap;
};

/// base + { -sum c_g g : 0 <= c_g <= cap(g) }; unbounded generators become
/// monoid generators -g.
inline CosetSupport induce_support_bound(const CosetSupport& base, const std::vector<NegGen>& gens) {
    CosetSupport out(base.k(), base.l());
    for (auto piece : base.pieces()) {
        std::vector<Weight> offsets = piece.offsets;
        for (const auto& ng : gens) {
            if (ng.g.k() != base.k() || ng.g.l() != base.l()) throw InvalidInput("generator dimension mismatch");
            if (!ng.cap) {
                piece.ngens.push_back(-ng.g);
                continue;
            }
            if (*ng.cap < 0) throw InvalidInput("generator cap must be non-negative");
            std::vector<Weight> next;
            for (const auto& o : offsets)
                for (int c = 0; c <= *ng.cap; ++c) next.push_back(o - Scalar(c) * ng.g);
            offsets = std::move(next);
        }
        piece.offsets = std::move(offsets);
        out.add_piece(std::move(piece));
    }
    return out;
}

}  // namespace taffine
