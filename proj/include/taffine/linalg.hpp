#pragma once
/**
 * @file linalg.hpp
 * @brief Small exact linear algebra over Q: rank, affine solution sets,
 *        rational cone membership and bounded integer-monoid membership.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "taffine/errors.hpp"
#include "taffine/scalar.hpp"

namespace taffine::linalg {

using RatVec = std::vector<Rational>;

/// Reduced row echelon form of the system  sum_j c_j * columns[j] = target.
class System {
public:
    System(const std::vector<RatVec>& columns, const RatVec& target) : ncols_(columns.size()) {
        const std::size_t rows = target.size();
        for (const auto& c : columns)
            if (c.size() != rows) throw InvalidInput("linear system: column length mismatch");
        m_.assign(rows, RatVec(ncols_ + 1));
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t j = 0; j < ncols_; ++j) m_[r][j] = columns[j][r];
            m_[r][ncols_] = target[r];
        }
        reduce();
    }

    bool consistent() const { return consistent_; }
    std::size_t rank() const { return pivots_.size(); }
    const std::vector<std::size_t>& free_columns() const { return free_; }

    /// Full solution for the given values of the free columns.
    RatVec solve_with(const RatVec& free_values) const {
        RatVec x(ncols_);
        for (std::size_t i = 0; i < free_.size(); ++i) x[free_[i]] = free_values[i];
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            Rational v = m_[r][ncols_];
            for (std::size_t i = 0; i < free_.size(); ++i) v -= m_[r][free_[i]] * free_values[i];
            x[pivots_[r]] = v;
        }
        return x;
    }

private:
    void reduce() {
        const std::size_t rows = m_.size();
        std::size_t r = 0;
        std::vector<bool> is_pivot(ncols_, false);
        for (std::size_t c = 0; c < ncols_ && r < rows; ++c) {
            std::size_t p = r;
            while (p < rows && m_[p][c] == 0) ++p;
            if (p == rows) continue;
            std::swap(m_[p], m_[r]);
            Rational inv = 1 / m_[r][c];
            for (auto& v : m_[r]) v *= inv;
            for (std::size_t q = 0; q < rows; ++q) {
                if (q == r || m_[q][c] == 0) continue;
                Rational f = m_[q][c];
                for (std::size_t j = c; j <= ncols_; ++j) m_[q][j] -= f * m_[r][j];
            }
            pivots_.push_back(c);
            is_pivot[c] = true;
            ++r;
        }
        for (std::size_t q = r; q < rows; ++q)
            if (m_[q][ncols_] != 0) consistent_ = false;
        for (std::size_t c = 0; c < ncols_; ++c)
            if (!is_pivot[c]) free_.push_back(c);
    }

    std::size_t ncols_;
    std::vector<RatVec> m_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> free_;
    bool consistent_ = true;
};

inline std::size_t rank(const std::vector<RatVec>& vectors) {
    if (vectors.empty()) return 0;
    return System(vectors, RatVec(vectors.front().size())).rank();
}

inline bool linearly_independent(const std::vector<RatVec>& vectors) { return rank(vectors) == vectors.size(); }

/// The unique solution of  sum c_j columns[j] = target, if there is exactly one.
inline std::optional<RatVec> unique_solution(const std::vector<RatVec>& columns, const RatVec& target) {
    System sys(columns, target);
    if (!sys.consistent() || !sys.free_columns().empty()) return std::nullopt;
    return sys.solve_with({});
}

/// Exact test for target in the rational cone spanned by `gens`
/// (Caratheodory: enough to try linearly independent subsets).
inline bool in_rational_cone(const std::vector<RatVec>& gens, const RatVec& target) {
    bool zero = true;
    for (const auto& v : target)
        if (v != 0) zero = false;
    if (zero) return true;
    if (gens.size() > 20) throw InvalidInput("in_rational_cone: too many generators");
    const std::uint32_t subsets = 1u << gens.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        std::vector<RatVec> cols;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (mask & (1u << j)) cols.push_back(gens[j]);
        if (cols.size() > target.size()) continue;
        System sys(cols, target);
        if (!sys.consistent() || !sys.free_columns().empty()) continue;
        RatVec x = sys.solve_with({});
        bool nonneg = true;
        for (const auto& v : x)
            if (v < 0) nonneg = false;
        if (nonneg) return true;
    }
    return false;
}

/// Is target in  span_Z(zgens) + span_N(ngens)?
///
/// Decisive when the generators are independent or the rational relaxation
/// already fails; otherwise free coefficients are enumerated in [-bound, bound]
/// (resp. [0, bound]) and a miss is reported as `unknown`.
inline Decision in_monoid(const std::vector<RatVec>& zgens, const std::vector<RatVec>& ngens, const RatVec& target,
                          int bound, std::size_t budget = 2'000'000) {
    std::vector<RatVec> cols(zgens);
    cols.insert(cols.end(), ngens.begin(), ngens.end());
    const std::size_t nz = zgens.size();
    if (cols.empty()) {
        for (const auto& v : target)
            if (v != 0) return Decision::no;
        return Decision::yes;
    }
    System sys(cols, target);
    if (!sys.consistent()) return Decision::no;

    auto acceptable = [&](const RatVec& x) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (!is_integer(x[j])) return false;
            if (j >= nz && x[j] < 0) return false;
        }
        return true;
    };

    const auto& free = sys.free_columns();
    if (free.empty()) return decide(acceptable(sys.solve_with({})));

    std::vector<RatVec> cone(ngens);
    for (const auto& z : zgens) {
        cone.push_back(z);
        RatVec neg(z);
        for (auto& v : neg) v = -v;
        cone.push_back(neg);
    }
    if (cone.size() <= 16 && !in_rational_cone(cone, target)) return Decision::no;

    std::vector<long long> lo(free.size()), hi(free.size()), cur(free.size());
    std::size_t total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) {
        lo[i] = free[i] < nz ? -bound : 0;
        hi[i] = bound;
        cur[i] = lo[i];
        std::size_t span = static_cast<std::size_t>(hi[i] - lo[i] + 1);
        if (total > budget / span) return Decision::unknown;
        total *= span;
    }
    RatVec fv(free.size());
    while (true) {
        for (std::size_t i = 0; i < free.size(); ++i) fv[i] = cur[i];
        if (acceptable(sys.solve_with(fv))) return Decision::yes;
        std::size_t i = 0;
        while (i < free.size() && cur[i] == hi[i]) {
            cur[i] = lo[i];
            ++i;
        }
        if (i == free.size()) break;
        ++cur[i];
    }
    return Decision::unknown;
}

}  // namespace taffine::linalg
