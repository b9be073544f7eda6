#include "qseries/hecke.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace qseries;

namespace {

using RS = TruncatedSeries<Rational>;

RS euler(long order) { return pochhammer<Rational>(PochhammerArg{Monomial::q_power(1), 0, 1, std::nullopt}, order); }

// Number of (x, y) in Z^2 with x^2 + y^2 = m.
int r2(int m)
{
    int count = 0;
    for (int x = -m; x <= m; ++x) {
        if (x * x > m) {
            continue;
        }
        for (int y = -m; y <= m; ++y) {
            if (x * x + y * y == m) {
                ++count;
            }
        }
    }
    return count;
}

} // namespace

TEST(Hecke, ShiftedRegionBruteForce)
{
    HeckeSpec s;
    s.A = 1;
    s.C = 1;
    s.region = Region::j_shift;
    s.n_start = 1;
    RS got = build_hecke(s, 6);
    std::map<int, int> brute;
    for (int n = 1; n <= 3; ++n) {
        for (int j = -n + 1; j <= n; ++j) {
            if (n * n + j * j < 6) {
                ++brute[n * n + j * j];
            }
        }
    }
    for (int e = 0; e < 6; ++e) {
        EXPECT_EQ(got.coefficient(e), Rational(brute[e])) << e;
    }
    // q + q^2 + q^4 + 2q^5
    EXPECT_EQ(got.coefficient(4), Rational(1));
    EXPECT_EQ(got.coefficient(5), Rational(2));
}

TEST(Hecke, JacobiCube)
{
    HeckeSpec s;
    s.A = Rational(1, 2);
    s.D = Rational(1, 2);
    s.region = Region::jacobi;
    s.sign_n = 1;
    RS got = build_hecke(s, 7);
    std::vector<Rational> expect{1, -3, 0, 5, 0, 0, -7};
    for (int e = 0; e < 7; ++e) {
        EXPECT_EQ(got.coefficient(e), expect[e]);
    }
    RS cube = euler(7) * euler(7) * euler(7);
    EXPECT_FALSE(first_difference(got, cube).has_value());
}

TEST(Hecke, EmptySum)
{
    HeckeSpec s;
    s.A = 1;
    s.C = 1;
    s.n_start = 10;
    EXPECT_TRUE(build_hecke(s, 20).is_zero());
}

TEST(Hecke, Guards)
{
    HeckeSpec indefinite;
    indefinite.A = 1;
    indefinite.C = -2;
    EXPECT_THROW(build_hecke(indefinite, 10), HeckeError);
    HeckeSpec half;
    half.A = Rational(1, 2);
    EXPECT_THROW(build_hecke(half, 10), HeckeError);
}

TEST(Hecke, FoldingSymmetry)
{
    HeckeSpec s;
    s.A = 2;
    s.C = 1;
    s.D = 1;
    s.sign_n = 1;
    s.factors.push_back(LinearFactor::minus(2, 1));
    const int order = 300;
    RS full = build_hecke(s, order);
    RS folded(order);
    for (int n = 0; 2 * n * n + n < order; ++n) {
        for (int j = 0; j <= n; ++j) {
            int mult = j == 0 ? 1 : 2;
            int e = 2 * n * n + j * j + n;
            Rational c = Rational(mult * (n % 2 ? -1 : 1));
            folded.add_coefficient(e, c);
            folded.add_coefficient(e + 2 * n + 1, -c);
        }
    }
    EXPECT_FALSE(first_difference(full, folded).has_value());
}

TEST(Theta, Examples)
{
    RS a = theta_sum(ThetaKind::square, 2, 9);
    RS b = theta_sum(ThetaKind::triangular, 0, 13);
    RS c = theta_sum(ThetaKind::square, 1, 5);
    std::vector<int> ea{1, 0, 2, 0, 0, 0, 0, 0, 2}, eb{1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1}, ec{1, 2, 0, 0, 2};
    for (int e = 0; e < 9; ++e) {
        EXPECT_EQ(a.coefficient(e), Rational(ea[e]));
    }
    for (int e = 0; e < 13; ++e) {
        EXPECT_EQ(b.coefficient(e), Rational(eb[e]));
    }
    for (int e = 0; e < 5; ++e) {
        EXPECT_EQ(c.coefficient(e), Rational(ec[e]));
    }
    EXPECT_THROW(theta_sum(ThetaKind::square, 0, 5), HeckeError);
}

TEST(Theta, TwoSquaresAgainstLatticeCount)
{
    const int order = 2001;
    RS t = theta_sum(ThetaKind::square, 1, order);
    RS sq = t * t;
    TermSumSpec lam;
    lam.start = 1;
    lam.q_exponent.n1 = 1;
    lam.factors.push_back(LinearFactor::plus(2, 0, true));
    RS rhs = build_term_sum<Rational>(lam, order).scale(Rational(4)) + RS::one(order);
    EXPECT_FALSE(first_difference(sq, rhs).has_value());
    for (int m = 0; m < order; m += (m < 200 ? 1 : 37)) {
        ASSERT_EQ(sq.coefficient(m), Rational(r2(m))) << m;
    }
}

TEST(Theta, AuxiliaryLemmaToOrder500)
{
    const int order = 500;
    HeckeSpec s;
    s.A = 1;
    s.C = 1;
    s.region = Region::j_shift;
    s.n_start = 1;
    RS lhs = build_hecke(s, order);
    RS t2 = theta_sum(ThetaKind::square, 2, order);
    RS tri = theta_sum(ThetaKind::triangular, 0, order);
    RS rhs = RS::constant(Rational(-1, 4), order) + (t2 * t2).scale(Rational(1, 4));
    RS tail = tri * tri;
    tail.mul_monomial(Monomial::q_power(1));
    rhs += tail.truncated(order);
    EXPECT_FALSE(first_difference(lhs, rhs).has_value());
}
