#pragma once
/**
 * @file subsystems.hpp
 * @brief The two affine pieces R(1), R(2) of the even root system, the closed
 *        subsystems S(i) = Zd u R(i) u (R n 1/2 R(i)), and bounded closure checks.
 */

#include <optional>
#include <string>
#include <vector>

#include "taffine/rootsys.hpp"

namespace taffine {

/// Which affine piece: 1 (the f_p side) or 2 (the e_i side).
class SubsystemId {
public:
    explicit SubsystemId(int index) : index_(index) {
        if (index != 1 && index != 2) throw InvalidInput("subsystem index must be 1 or 2");
    }
    int index() const { return index_; }
    SubsystemId other() const { return SubsystemId(3 - index_); }
    friend bool operator==(const SubsystemId&, const SubsystemId&) = default;

private:
    int index_;
};

/// Allowed d-coefficients of each dot shape inside R(i). The Kronecker-delta
/// entries make the imaginary part 2Zd when the relevant rank is 1.
inline std::optional<Progression> even_piece_progression(const RootSystemSpec& spec, SubsystemId i, DotShape shape) {
    using S = DotShape;
    const bool first = i.index() == 1;
    const Progression all{1, 0}, even{2, 0}, odd{2, 1};
    switch (spec.family()) {
        case Family::A2MIX:
            if (first) {
                switch (shape) {
                    case S::zero: return spec.l() == 1 ? even : all;
                    case S::ff: return all;
                    case S::two_f: return even;
                    default: return std::nullopt;
                }
            }
            switch (shape) {
                case S::zero: case S::e: case S::ee: return all;
                case S::two_e: return odd;
                default: return std::nullopt;
            }
        case Family::A2ODD:
            if (first) {
                switch (shape) {
                    case S::zero: return spec.l() == 1 ? even : all;
                    case S::ff: return all;
                    case S::two_f: return even;
                    default: return std::nullopt;
                }
            }
            switch (shape) {
                case S::zero: return spec.k() == 1 ? even : all;
                case S::ee: return all;
                case S::two_e: return odd;
                default: return std::nullopt;
            }
        case Family::A4:
            if (first) {
                switch (shape) {
                    case S::zero: case S::ff: return even;
                    case S::f: return odd;
                    case S::two_f: return Progression{4, 0};
                    default: return std::nullopt;
                }
            }
            switch (shape) {
                case S::zero: case S::e: case S::ee: return even;
                case S::two_e: return Progression{4, 2};
                default: return std::nullopt;
            }
        case Family::D2:
            if (first) {
                // f_p +- f_q with p == q allowed: contributes +-2f_p and 0.
                switch (shape) {
                    case S::zero: case S::ff: case S::two_f: return even;
                    default: return std::nullopt;
                }
            }
            switch (shape) {
                case S::zero: case S::e: return all;
                case S::ee: return even;
                default: return std::nullopt;
            }
    }
    return std::nullopt;
}

inline bool in_r_i(const RootSystemSpec& spec, SubsystemId i, const RootVec& w) {
    detail::require_shape(spec, w);
    auto shape = dot_shape(w);
    if (!shape) return false;
    auto prog = even_piece_progression(spec, i, *shape);
    return prog && prog->contains(w.dlt());
}

inline bool in_r_i(const RootSystemSpec& spec, SubsystemId i, const Weight& w) {
    return in_r_i(spec, i, detail::require_lattice(spec, w));
}

inline bool in_s_i(const RootSystemSpec& spec, SubsystemId i, const RootVec& w) {
    detail::require_shape(spec, w);
    if (w.dot_is_zero()) return true;
    if (in_r_i(spec, i, w)) return true;
    return is_root(spec, w) && in_r_i(spec, i, 2 * w);
}

inline bool in_s_i(const RootSystemSpec& spec, SubsystemId i, const Weight& w) {
    return in_s_i(spec, i, detail::require_lattice(spec, w));
}

enum class PieceKind { R, S };

/// Window-N portion of R(i) or S(i), canonically sorted.
inline std::vector<RootVec> subsystem_window(const RootSystemSpec& spec, SubsystemId i, PieceKind kind, int N) {
    std::vector<RootVec> out;
    for (const auto& a : enumerate_window(spec, N))
        if (kind == PieceKind::R ? in_r_i(spec, i, a) : in_s_i(spec, i, a)) out.push_back(a);
    return out;
}

struct ClosureViolation {
    RootVec a, b, sum;
};

/// Bounded closedness certificate: every pair of members in window N whose sum
/// is a root must have a member sum. An empty result certifies the window.
template <class Member>
std::vector<ClosureViolation> check_closed(const RootSystemSpec& spec, Member&& member, int N) {
    std::vector<RootVec> members;
    for (const auto& a : enumerate_window(spec, N))
        if (member(a)) members.push_back(a);
    std::vector<ClosureViolation> out;
    for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x; y < members.size(); ++y) {
            RootVec s = members[x] + members[y];
            if (is_root(spec, s) && !member(s)) out.push_back({members[x], members[y], s});
        }
    return out;
}

}  // namespace taffine
