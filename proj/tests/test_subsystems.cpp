#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "taffine/taffine.hpp"

using namespace taffine;

namespace {

Weight W(const char* s, int k, int l) { return Weight::parse(s, k, l); }

std::vector<RootSystemSpec> specs_upto(int n) {
    std::vector<RootSystemSpec> out;
    for (Family f : kAllFamilies)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l)
                if (!(f == Family::A2ODD && k == 1 && l == 1)) out.emplace_back(f, k, l);
    return out;
}

const SubsystemId one(1), two(2);

}  // namespace

TEST(SubsystemId, Range) {
    EXPECT_THROW(SubsystemId(0), InvalidInput);
    EXPECT_THROW(SubsystemId(3), InvalidInput);
    EXPECT_EQ(one.other(), two);
}

TEST(InRI, TableExamples) {
    RootSystemSpec d2(Family::D2, 2, 2), mix1(Family::A2MIX, 2, 1);
    EXPECT_TRUE(in_r_i(d2, two, W("e1 + d", 2, 2)));
    EXPECT_FALSE(in_r_i(d2, one, W("d", 2, 2)));
    EXPECT_TRUE(in_r_i(d2, one, W("2d", 2, 2)));
    EXPECT_FALSE(in_r_i(mix1, one, W("d", 2, 1)));
    EXPECT_TRUE(in_r_i(mix1, one, W("2d", 2, 1)));
    EXPECT_TRUE(in_r_i(RootSystemSpec(Family::A2MIX, 2, 2), one, W("d", 2, 2)));
}

TEST(InSI, Examples) {
    RootSystemSpec mix(Family::A2MIX, 2, 2);
    EXPECT_TRUE(in_s_i(mix, one, W("f1", 2, 2)));
    EXPECT_FALSE(in_s_i(mix, two, W("f1", 2, 2)));
    for (const auto& spec : specs_upto(2))
        for (SubsystemId i : {one, two}) {
            RootVec d = RootVec::d(spec.k(), spec.l());
            EXPECT_TRUE(in_s_i(spec, i, d));
            EXPECT_TRUE(in_s_i(spec, i, -3 * d));
        }
}

TEST(Subsystems, EvenPiecesInsideRootsAndMeetInNullDirection) {
    for (const auto& spec : specs_upto(3))
        for (const auto& a : enumerate_window(spec, 6)) {
            bool r1 = in_r_i(spec, one, a), r2 = in_r_i(spec, two, a);
            if (r1 && r2) { EXPECT_TRUE(a.dot_is_zero()) << a.str(); }
            if (r1 || r2) { EXPECT_TRUE(is_root(spec, a)); }
            bool s1 = in_s_i(spec, one, a), s2 = in_s_i(spec, two, a);
            if (s1 && s2) { EXPECT_TRUE(a.dot_is_zero()) << a.str(); }
            bool re_or_im = a.norm2() != 0 || a.dot_is_zero();
            EXPECT_EQ(s1 || s2, re_or_im) << family_code(spec.family()) << " " << a.str();
        }
}

TEST(Subsystems, WindowMatchesPredicate) {
    RootSystemSpec spec(Family::A4, 2, 1);
    auto w = subsystem_window(spec, one, PieceKind::S, 3);
    EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
    for (const auto& a : enumerate_window(spec, 3))
        EXPECT_EQ(std::binary_search(w.begin(), w.end(), a), in_s_i(spec, one, a));
}

TEST(Subsystems, ProgressionShiftStaysInside) {
    const int N = 8;
    for (const auto& spec : specs_upto(3))
        for (SubsystemId i : {one, two})
            for (const auto& a : subsystem_window(spec, i, PieceKind::S, N)) {
                if (a.dot_is_zero()) continue;
                auto p = s_alpha(spec, a.dot());
                for (int n = -N; n <= N; ++n)
                    if (oracle::congruent(n, p.r, p.k_off)) {
                        RootVec b = a.dot();
                        b.dlt() = n;
                        EXPECT_TRUE(in_s_i(spec, i, b)) << b.str();
                    }
            }
}

TEST(CheckClosed, SubsystemsClosedOnSmallGrid) {
    for (const auto& spec : specs_upto(2))
        for (SubsystemId i : {one, two}) {
            auto v = check_closed(spec, [&](const RootVec& a) { return in_s_i(spec, i, a); }, 8);
            EXPECT_TRUE(v.empty()) << family_code(spec.family()) << " " << spec.k() << "," << spec.l() << " S("
                                   << i.index() << ")";
        }
}

TEST(CheckClosed, ConstructedCounterexample) {
    RootSystemSpec spec(Family::A2MIX, 3, 1);
    std::set<RootVec> T{RootVec(3, 1), RootVec::e(3, 1, 1) - RootVec::e(3, 1, 2), RootVec::e(3, 1, 2) - RootVec::e(3, 1, 3)};
    auto v = check_closed(spec, [&](const RootVec& a) { return T.count(a) > 0; }, 2);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].sum, RootVec::e(3, 1, 1) - RootVec::e(3, 1, 3));
}

TEST(CheckClosed, NullLineClosed) {
    for (const auto& spec : specs_upto(2))
        EXPECT_TRUE(check_closed(spec, [](const RootVec& a) { return a.dot_is_zero(); }, 8).empty());
}
