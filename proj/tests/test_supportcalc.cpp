#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "taffine/taffine.hpp"

using namespace taffine;

namespace {

example::ExampleParams params(int k) {
    example::ExampleParams p;
    p.k = k;
    return p;
}

Weight eps(int k, int i, int c = 1) { return Weight::epsilon(k, 1, i, Scalar(c)); }
Weight f1(int k, int c = 1) { return Weight::delta_p(k, 1, 1, Scalar(c)); }
Weight nd(int k, int c = 1) { return Weight::null_root(k, 1, Scalar(c)); }

ActionLabeling uniform(const RootSystemSpec& spec, int N, ActionLabel lab) {
    ActionLabeling out;
    for (const auto& a : real_roots_window(spec, N)) out.set(a, lab);
    return out;
}

ActionLabeling mirrored(const ActionLabeling& lab) {
    ActionLabeling out;
    for (const auto& [a, l] : lab.entries()) {
        RootVec b = a;
        b.dlt() = -a.dlt();
        out.set(b, l);
    }
    return out;
}

// Axis-aligned random supports over (k, l) = (2, 1): each coordinate is
// either fixed, periodic with step m (Z-generator) or a one-sided ray with
// step m (N-generator). Membership and ray behaviour are then decidable
// coordinate by coordinate without any cone arithmetic.
struct AxisSupport {
    static constexpr int dim = 4;  // e1, e2, f1, d
    std::array<int, dim> base{};
    std::array<int, dim> step{};  // 0 fixed, else generator size
    std::array<int, dim> sign{};  // 0 two-sided, +1/-1 one-sided
    std::vector<std::array<int, dim>> offsets;

    CosetSupport build() const {
        auto vec = [](const std::array<int, dim>& c) {
            Weight w(2, 1);
            w.eps(1) = Scalar(c[0]);
            w.eps(2) = Scalar(c[1]);
            w.del(1) = Scalar(c[2]);
            w.dlt() = Scalar(c[3]);
            return w;
        };
        SupportPiece p{vec(base), {}, {}, {}};
        for (int c = 0; c < dim; ++c) {
            if (!step[c]) continue;
            std::array<int, dim> g{};
            g[c] = step[c] * (sign[c] ? sign[c] : 1);
            (sign[c] ? p.ngens : p.zgens).push_back(vec(g));
        }
        for (const auto& o : offsets) p.offsets.push_back(vec(o));
        CosetSupport s(2, 1);
        s.add_piece(p);
        return s;
    }

    bool contains(const std::array<int, dim>& x) const {
        for (const auto& o : offsets) {
            bool ok = true;
            for (int c = 0; c < dim && ok; ++c) {
                int r = x[c] - base[c] - o[c];
                if (!step[c])
                    ok = r == 0;
                else if (r % step[c] != 0)
                    ok = false;
                else if (sign[c] && r * sign[c] < 0)
                    ok = false;
            }
            if (ok) return true;
        }
        return false;
    }

    std::vector<std::array<int, dim>> samples() const {
        std::vector<std::array<int, dim>> out;
        for (const auto& o : offsets) {
            std::array<int, dim> lo{}, hi{};
            for (int c = 0; c < dim; ++c) {
                lo[c] = 0;
                hi[c] = !step[c] ? 0 : sign[c] ? 8 : 5;
            }
            std::array<int, dim> t = lo;
            while (true) {
                std::array<int, dim> x{};
                for (int c = 0; c < dim; ++c)
                    x[c] = base[c] + o[c] + t[c] * step[c] * (sign[c] ? sign[c] : 1);
                out.push_back(x);
                int c = 0;
                while (c < dim && t[c] == hi[c]) {
                    t[c] = lo[c];
                    ++c;
                }
                if (c == dim) break;
                ++t[c];
            }
        }
        return out;
    }
};

AxisSupport random_axis_support(std::mt19937_64& g) {
    std::uniform_int_distribution<int> small(-2, 2), kind(0, 2), st(1, 3), noff(1, 3);
    AxisSupport s;
    for (int c = 0; c < AxisSupport::dim; ++c) {
        s.base[c] = small(g);
        int kd = kind(g);
        if (kd == 0) continue;
        s.step[c] = st(g);
        s.sign[c] = kd == 1 ? 0 : (small(g) >= 0 ? 1 : -1);
    }
    int n = noff(g);
    s.offsets.push_back({});
    for (int j = 1; j < n; ++j) {
        std::array<int, AxisSupport::dim> o{};
        for (auto& x : o) x = small(g);
        s.offsets.push_back(o);
    }
    return s;
}

bool ray_escapes(const AxisSupport& s, const std::array<int, 4>& a) {
    for (const auto& o : s.offsets) {
        std::array<int, 4> x{};
        for (int c = 0; c < 4; ++c) x[c] = s.base[c] + o[c];
        for (int n = 30; n <= 72; ++n) {
            std::array<int, 4> y = x;
            for (int c = 0; c < 4; ++c) y[c] += n * a[c];
            if (s.contains(y)) return false;
        }
    }
    return true;
}

bool translate_contained(const AxisSupport& s, const std::array<int, 4>& a) {
    for (const auto& x : s.samples()) {
        std::array<int, 4> y = x;
        for (int c = 0; c < 4; ++c) y[c] += a[c];
        if (!s.contains(y)) return false;
    }
    return true;
}

}  // namespace

TEST(Member, CosetExamples) {
    auto p = params(2);
    auto s = example::k1_support(p);
    EXPECT_TRUE(member(s, example::rho(p) + f1(2, 4), 20));
    EXPECT_FALSE(member(s, example::rho(p) + f1(2, 1), 20));
    EXPECT_FALSE(member(s, example::rho(p) + eps(2, 1), 20));
    EXPECT_FALSE(member(CosetSupport(2, 1), example::rho(p), 20));
}

TEST(Member, RejectsBadPieces) {
    CosetSupport s(2, 1);
    EXPECT_THROW(s.add_piece({Weight(2, 1), {Weight::parse("(x)e1", 2, 1)}, {}, {}}), InvalidInput);
    EXPECT_THROW(s.add_piece({Weight(2, 2), {}, {}, {}}), InvalidInput);
}

TEST(BSet, Examples) {
    auto p = params(3);
    auto s = example::k1_support(p);
    EXPECT_TRUE(b_set_member(eps(3, 3), s, 20));
    EXPECT_FALSE(b_set_member(f1(3, 2), s, 20));
    EXPECT_FALSE(b_set_member(f1(3, -2), s, 20));
    EXPECT_TRUE(b_set_member(f1(3, 2), CosetSupport(3, 1), 20));
}

TEST(CSet, Examples) {
    auto p = params(3);
    auto s = example::k1_support(p);
    EXPECT_TRUE(c_set_member(f1(3, 2), s, 20));
    EXPECT_FALSE(c_set_member(eps(3, 1), s, 20));
    EXPECT_FALSE(c_set_member(f1(3, 1), s, 20));
    EXPECT_TRUE(c_set_member(Weight(3, 1), s, 20));
}

TEST(BSetCSet, AgreeWithRaySimulation) {
    auto g = oracle::rng(21);
    std::uniform_int_distribution<int> coord(-2, 2);
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
        AxisSupport ax = random_axis_support(g);
        CosetSupport s = ax.build();
        std::array<int, 4> a{};
        for (auto& x : a) x = coord(g);
        Weight alpha(2, 1);
        alpha.eps(1) = Scalar(a[0]);
        alpha.eps(2) = Scalar(a[1]);
        alpha.del(1) = Scalar(a[2]);
        alpha.dlt() = Scalar(a[3]);
        bool zero = a == std::array<int, 4>{};
        EXPECT_EQ(b_set_member(alpha, s, 20), !zero && ray_escapes(ax, a)) << t;
        std::array<int, 4> na{};
        for (int c = 0; c < 4; ++c) na[c] = -a[c];
        EXPECT_EQ(c_set_member(-alpha, s, 20), translate_contained(ax, na)) << t;
        ++checked;
    }
    EXPECT_EQ(checked, 1000);
}

TEST(Shadow, ExampleLevelOneRoots) {
    auto p = params(2);
    auto s = example::k1_support(p);
    std::vector<RootVec> s1{RootVec::f(2, 1, 1, 2), RootVec::f(2, 1, 1, -2)};
    ActionLabeling lab;
    for (const auto& a : s1) lab.set(a, ActionLabel::in);
    EXPECT_TRUE(shadow_check_roots(s1, lab, s, 20).empty());
    lab.set(s1[0], ActionLabel::ln);
    auto v = shadow_check_roots(s1, lab, s, 20);
    ASSERT_FALSE(v.empty());
    for (const auto& x : v) EXPECT_EQ(x.root, s1[0]);
}

TEST(Shadow, EmptySupportAllLocallyNilpotent) {
    RootSystemSpec spec(Family::A2MIX, 2, 1);
    EXPECT_TRUE(shadow_check(spec, uniform(spec, 2, ActionLabel::ln), CosetSupport(2, 1), 2, 20).empty());
}

TEST(Shadow, UnlabeledRootsReported) {
    RootSystemSpec spec(Family::A2MIX, 2, 1);
    auto v = shadow_check(spec, ActionLabeling{}, CosetSupport(2, 1), 0, 20);
    EXPECT_EQ(v.size(), real_roots_window(spec, 0).size());
    for (const auto& x : v) EXPECT_EQ(x.kind, ShadowViolation::Kind::unlabeled);
}

TEST(Shadow, ExampleLabelingConsistentWithSupportModel) {
    for (int k : {2, 3}) {
        auto p = params(k);
        auto v = shadow_check(p.spec(), example::derived_labeling(p, 6), example::example_support_model(p), 6, 20);
        EXPECT_TRUE(v.empty()) << "k=" << k << " first: " << (v.empty() ? "" : v[0].root.str());
    }
}

TEST(Labeling, DoublingConflicts) {
    ActionLabeling lab;
    RootVec a = RootVec::f(2, 1, 1);
    lab.set(a, ActionLabel::ln);
    lab.set(2 * a, ActionLabel::in);
    ASSERT_EQ(lab.doubling_conflicts().size(), 1u);
    EXPECT_THROW(lab.at(RootVec::e(2, 1, 1)), InvalidInput);
}

TEST(Tightness, ExampleAndUniformLabelings) {
    const int N = 4;
    for (int k : {2, 3}) {
        auto p = params(k);
        auto spec = p.spec();
        auto lab = example::derived_labeling(p, N);
        EXPECT_EQ(classify_tightness(spec, SubsystemId(1), lab, N), Tightness::hybrid);
        EXPECT_EQ(classify_tightness(spec, SubsystemId(2), lab, N), Tightness::tight);
        EXPECT_EQ(quasi_integrable_check(spec, lab, N), std::optional<int>(2));
        EXPECT_EQ(hybrid_direction(spec, SubsystemId(1), lab, N), std::optional<int>(1));
        EXPECT_EQ(hybrid_direction(spec, SubsystemId(1), mirrored(lab), N), std::optional<int>(-1));
        EXPECT_EQ(hybrid_direction(spec, SubsystemId(2), lab, N), std::nullopt);
        for (ActionLabel u : {ActionLabel::ln, ActionLabel::in}) {
            auto all = uniform(spec, N, u);
            EXPECT_EQ(classify_tightness(spec, SubsystemId(1), all, N), Tightness::tight);
            EXPECT_EQ(classify_tightness(spec, SubsystemId(2), all, N), Tightness::tight);
            EXPECT_EQ(quasi_integrable_check(spec, all, N), std::nullopt);
        }
        auto broken = lab;
        for (const auto& a : real_roots_window(spec, N))
            if (in_s_i(spec, SubsystemId(2), a)) {
                broken.set(a, ActionLabel::in);
                break;
            }
        EXPECT_EQ(quasi_integrable_check(spec, broken, N), std::nullopt);
    }
}

TEST(Extremal, Examples) {
    auto p = params(3);
    Weight rho = example::rho(p);
    EXPECT_EQ(extremal_weight({rho, rho + eps(3, 1)}, {eps(3, 1)}), rho + eps(3, 1));
    EXPECT_EQ(extremal_weight({rho}, {eps(3, 2)}), rho);
    EXPECT_EQ(extremal_weight({rho, rho - eps(3, 3), rho - eps(3, 3, 2)}, {eps(3, 3)}), rho);
    EXPECT_THROW(extremal_weight({}, {eps(3, 1)}), InvalidInput);
    EXPECT_THROW(extremal_weight({rho}, {}), InvalidInput);
    EXPECT_THROW(extremal_weight({rho}, {nd(3)}), InvalidInput);
    EXPECT_THROW(extremal_weight({rho, rho + eps(3, 1)}, {eps(3, 1), eps(3, 1, -1)}), NotFound);
}

TEST(Induce, Examples) {
    auto p = params(2);
    auto base = example::k1_support(p);
    EXPECT_EQ(induce_support_bound(base, {}), base);
    auto ray = induce_support_bound(base, {{eps(2, 2), std::nullopt}});
    ASSERT_EQ(ray.pieces().size(), 1u);
    EXPECT_EQ(ray.pieces()[0].ngens, std::vector<Weight>{eps(2, 2, -1)});
    EXPECT_TRUE(member(ray, example::rho(p) - eps(2, 2, 7), 20));
    EXPECT_FALSE(member(ray, example::rho(p) + eps(2, 2), 20));
    EXPECT_TRUE(induce_support_bound(CosetSupport(2, 1), {{eps(2, 2), 1}}).empty());
}

TEST(Induce, MonotoneInBaseAndCaps) {
    for (int k : {2, 3}) {
        auto p = params(k);
        auto small = example::k1_support(p);
        auto big = CosetSupport::piece(example::rho(p), {f1(k)});
        std::vector<NegGen> g1 = example::step1_generators(p, true);
        std::vector<NegGen> g2 = g1;
        for (auto& g : g2) g.cap = 2;
        std::vector<NegGen> g3 = example::step1_generators(p, false);
        EXPECT_EQ(contains(induce_support_bound(big, g1), induce_support_bound(small, g1), 20), Decision::yes);
        EXPECT_EQ(contains(induce_support_bound(small, g2), induce_support_bound(small, g1), 20), Decision::yes);
        EXPECT_EQ(contains(induce_support_bound(small, g3), induce_support_bound(small, g2), 20), Decision::yes);
        EXPECT_NE(contains(induce_support_bound(small, g1), induce_support_bound(small, g2), 20), Decision::yes);
    }
}

TEST(StringOracle, ContiguousFiniteStrings) {
    for (int dim = 1; dim <= 12; ++dim) {
        auto o = example::sl2_string_oracle(dim);
        EXPECT_TRUE(o.pass()) << dim;
        ASSERT_EQ(static_cast<int>(o.support.size()), dim);
        for (std::size_t j = 1; j < o.support.size(); ++j) EXPECT_EQ(o.support[j] - o.support[j - 1], 2);
        EXPECT_EQ(o.support.front(), -o.support.back());
    }
    EXPECT_THROW(example::sl2_string_oracle(0), InvalidInput);
}
