#include <gtest/gtest.h>

#include "oracles.hpp"
#include "taffine/taffine.hpp"

using namespace taffine;

namespace {

Weight W(const char* s, int k = 2, int l = 2) { return Weight::parse(s, k, l); }

Scalar random_scalar(std::mt19937_64& g) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5), deg(0, 3);
    Scalar s;
    for (int p = deg(g); p >= 0; --p) s += Scalar::monomial(static_cast<unsigned>(p), Rational(num(g), den(g)));
    return s;
}

Weight random_weight(std::mt19937_64& g, int k, int l) {
    std::vector<Scalar> c;
    for (int i = 0; i < k + l + 2; ++i) c.push_back(random_scalar(g));
    return Weight::from_coefficients(k, l, c);
}

}  // namespace

TEST(Scalar, CanonicalFormDropsZeros) {
    Scalar a = Scalar::xi() + Scalar(1);
    Scalar b = a - Scalar::xi();
    EXPECT_EQ(b, Scalar(1));
    EXPECT_TRUE(b.is_constant());
    EXPECT_EQ((a - a).terms().size(), 0u);
    EXPECT_TRUE((a - a).is_zero());
}

TEST(Scalar, RenderAndParseRoundTrip) {
    Scalar s = Scalar(Rational(1, 2)) - Scalar(3) * Scalar::xi() + Scalar::xi() * Scalar::xi();
    EXPECT_EQ(s.str(), "1/2 - 3x + x^2");
    EXPECT_EQ(Scalar::parse(s.str()), s);
    EXPECT_EQ(Scalar::parse("-x^3 + 2/3"), Scalar::monomial(3, -1) + Scalar(Rational(2, 3)));
    EXPECT_THROW(Scalar::parse("x^"), InvalidInput);
    EXPECT_THROW(Scalar::parse(""), InvalidInput);
}

TEST(Scalar, EvaluateMatchesExpansion) {
    Scalar s = Scalar::parse("1 - 2x + 3x^3");
    EXPECT_EQ(s.evaluate(Rational(2)), Rational(1 - 4 + 24));
    EXPECT_EQ(s.evaluate(Rational(1, 2)), Rational(1) - 1 + Rational(3, 8));
    EXPECT_EQ(s.degree(), 3);
    EXPECT_EQ(Scalar().degree(), -1);
}

TEST(Scalar, RingAxiomsOnRandomTriples) {
    auto g = oracle::rng(1);
    for (int t = 0; t < 300; ++t) {
        Scalar a = random_scalar(g), b = random_scalar(g), c = random_scalar(g);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a - a, Scalar());
        EXPECT_EQ(a * Scalar(1), a);
    }
}

TEST(Weight, LiteralGrammar) {
    Weight w = W("2e1 - 1/2f2 + 3d + (2)L0");
    EXPECT_EQ(w.eps(1), Scalar(2));
    EXPECT_EQ(w.del(2), Scalar(Rational(-1, 2)));
    EXPECT_EQ(w.dlt(), Scalar(3));
    EXPECT_EQ(w.lam0(), Scalar(2));
    EXPECT_EQ(W("(1/2 - 3x)e1").eps(1), Scalar::parse("1/2 - 3x"));
    EXPECT_EQ(W(" e1+ f1 "), W("e1 + f1"));
    EXPECT_EQ(W("2*e1"), W("2e1"));
    EXPECT_EQ(W("0"), Weight(2, 2));
    EXPECT_EQ(W("e1 + e1"), W("2e1"));
}

TEST(Weight, MalformedLiteralsRejected) {
    EXPECT_THROW(W("e3"), InvalidInput);
    EXPECT_THROW(W("e0"), InvalidInput);
    EXPECT_THROW(W("g1"), InvalidInput);
    EXPECT_THROW(W("2e1 +"), InvalidInput);
    EXPECT_THROW(W("(1 + x e1"), InvalidInput);
    EXPECT_THROW(W(""), InvalidInput);
}

TEST(Weight, CanonicalLiteralRoundTrips) {
    auto g = oracle::rng(2);
    for (int t = 0; t < 300; ++t) {
        Weight w = random_weight(g, 2, 3);
        EXPECT_EQ(Weight::parse(w.str(), 2, 3), w) << w.str();
    }
}

TEST(Form, TableNormalisation) {
    EXPECT_EQ(form_eval(W("e1"), W("e1")), Scalar(1));
    EXPECT_EQ(form_eval(W("f1"), W("f1")), Scalar(-1));
    EXPECT_EQ(form_eval(W("e1"), W("f1")), Scalar(0));
    EXPECT_EQ(form_eval(W("e1"), W("e2")), Scalar(0));
    EXPECT_EQ(form_eval(W("d"), W("e1 + f1 + 5d")), Scalar(0));
    EXPECT_EQ(form_eval(W("L0"), W("d")), Scalar(1));
    EXPECT_EQ(form_eval(W("L0"), W("L0")), Scalar(0));
    EXPECT_EQ(form_eval(W("d"), W("d")), Scalar(0));
    EXPECT_EQ(form_eval(W("L0"), W("e1 + f2")), Scalar(0));
}

TEST(Form, DimensionMismatchRejected) {
    EXPECT_THROW(form_eval(Weight::epsilon(2, 2, 1), Weight::epsilon(3, 2, 1)), InvalidInput);
}

TEST(Form, SymmetricAndBilinearOnRandomPairs) {
    auto g = oracle::rng(3);
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l)
            for (int t = 0; t < 40; ++t) {
                Weight a = random_weight(g, k, l), b = random_weight(g, k, l), c = random_weight(g, k, l);
                Scalar s = random_scalar(g);
                EXPECT_EQ(form_eval(a, b), form_eval(b, a));
                EXPECT_EQ(form_eval(a + b, c), form_eval(a, c) + form_eval(b, c));
                EXPECT_EQ(form_eval(s * a, b), s * form_eval(a, b));
            }
}

TEST(Level, Examples) {
    EXPECT_EQ(level(W("3L0 + e1")), Scalar(3));
    EXPECT_EQ(level(W("e1 + f2 - 4d")), Scalar(0));
    example::ExampleParams p;
    for (int k : {2, 3, 5}) {
        p.k = k;
        EXPECT_EQ(level(example::rho(p)), Scalar(2 * k + 2));
    }
}

TEST(Level, ZeroOnEveryEnumeratedRoot) {
    for (Family f : kAllFamilies)
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l) {
                if (f == Family::A2ODD && k == 1 && l == 1) continue;
                RootSystemSpec spec(f, k, l);
                for (const auto& a : enumerate_window(spec, 12)) EXPECT_EQ(level(a.to_weight()), Scalar(0));
            }
}

TEST(TRep, ExampleEigenvalues) {
    example::ExampleParams p;
    p.k = 3;
    p.zeta = Rational(1, 3);
    Weight rho = example::rho(p);
    EXPECT_EQ(form_eval(rho, t_rep(Weight::delta_p(3, 1, 1, Scalar(2)))), Scalar(Rational(-2, 3)));
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(form_eval(rho, t_rep(Weight::epsilon(3, 1, i))), Scalar(3 - i + 2));
    EXPECT_EQ(form_eval(Weight(3, 1), t_rep(Weight::epsilon(3, 1, 2))), Scalar(0));
}

TEST(Weight, LatticeCandidate) {
    EXPECT_TRUE(W("e1 - 2f2 + 3d").is_lattice_root_candidate());
    EXPECT_FALSE(W("1/2e1").is_lattice_root_candidate());
    EXPECT_FALSE(W("e1 + L0").is_lattice_root_candidate());
    EXPECT_FALSE(W("(x)e1").is_lattice_root_candidate());
    EXPECT_THROW(RootVec::from_weight(W("e1 + L0")), InvalidInput);
    EXPECT_EQ(RootVec::from_weight(W("e1 - 2f2 + 3d")).to_weight(), W("e1 - 2f2 + 3d"));
}

TEST(DotOf, StripsNullRoot) {
    EXPECT_EQ(dot_of(W("e1 + 5d")), W("e1"));
    EXPECT_EQ(dot_of(W("d")), W("0"));
    EXPECT_EQ(dot_of(W("2f1 - 4d")), W("2f1"));
}
