#include "qseries/hypergeom.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace qseries;

namespace {

using RS = TruncatedSeries<Rational>;

// Dense truncated polynomial oracle, independent of TruncatedSeries.
struct Dense {
    std::vector<Rational> c;
    explicit Dense(int n) : c(static_cast<std::size_t>(n), Rational(0)) {}
    int size() const { return static_cast<int>(c.size()); }
    void mul_one_plus(const Rational& k, int e) // *= (1 + k q^e), e >= 0
    {
        for (int i = size() - 1; i >= 0; --i) {
            if (i - e >= 0 && e > 0) {
                c[i] += k * c[i - e];
            }
        }
        if (e == 0) {
            for (auto& x : c) {
                x *= 1 + k;
            }
        }
    }
    void div_one_plus(const Rational& k, int e) // /= (1 + k q^e)
    {
        if (e == 0) {
            for (auto& x : c) {
                x /= 1 + k;
            }
            return;
        }
        for (int i = e; i < size(); ++i) {
            c[i] -= k * c[i - e];
        }
    }
};

// Number of divisors of m congruent to r mod 4.
int divisors_mod4(int m, int r)
{
    int count = 0;
    for (int d = 1; d <= m; ++d) {
        if (m % d == 0 && d % 4 == r) {
            ++count;
        }
    }
    return count;
}

TermSumSpec lambert_spec()
{
    TermSumSpec s;
    s.start = 1;
    s.q_exponent.n1 = 1;
    s.factors.push_back(LinearFactor::plus(2, 0, true));
    return s;
}

} // namespace

TEST(TermSum, LambertSeries)
{
    RS s = build_term_sum<Rational>(lambert_spec(), 6);
    // q + q^2 + 0 q^3 + q^4 + 2 q^5: the q^3 terms of n = 1 and n = 3 cancel
    std::vector<Rational> expect{0, 1, 1, 0, 1, 2};
    for (int e = 0; e < 6; ++e) {
        EXPECT_EQ(s.coefficient(e), expect[e]) << e;
    }
    RS big = build_term_sum<Rational>(lambert_spec(), 1001);
    for (int m = 1; m <= 1000; ++m) {
        ASSERT_EQ(big.coefficient(m), Rational(divisors_mod4(m, 1) - divisors_mod4(m, 3))) << m;
    }
}

TEST(TermSum, GeometricSeries)
{
    TermSumSpec s;
    s.q_exponent.n1 = 1;
    RS g = build_term_sum<Rational>(s, 30);
    for (int e = 0; e < 30; ++e) {
        EXPECT_EQ(g.coefficient(e), Rational(1));
    }
}

TEST(TermSum, RogersRamanujanTypeAgainstDenseOracle)
{
    // sum q^{n^2}/(q^2;q^2)_n
    TermSumSpec s;
    s.q_exponent.n2 = 1;
    s.denominator.push_back(TermPochhammer{Monomial::q_power(2), 0, 2, Affine{1, 0}});
    const int order = 40;
    RS got = build_term_sum<Rational>(s, order);
    Dense total(order);
    for (int n = 0; n * n < order; ++n) {
        Dense t(order);
        t.c[n * n] = 1;
        for (int k = 1; k <= n; ++k) {
            t.div_one_plus(Rational(-1), 2 * k);
        }
        for (int e = 0; e < order; ++e) {
            total.c[e] += t.c[e];
        }
    }
    for (int e = 0; e < order; ++e) {
        EXPECT_EQ(got.coefficient(e), total.c[e]) << e;
    }
    // the (q^2;q^2)_n denominators leave q^2 with no contribution
    std::vector<Rational> head{1, 1, 0, 1, 1, 1};
    for (int e = 0; e < 6; ++e) {
        EXPECT_EQ(got.coefficient(e), head[e]);
    }
}

TEST(TermSum, FactorOrderDoesNotMatter)
{
    TermSumSpec s;
    s.start = 1;
    s.q_exponent.n2 = 1;
    s.sign_exponent = 1;
    s.numerator.push_back(TermPochhammer{Monomial::q_power(1, Rational(-1)), 0, 2, Affine{1, 0}});
    s.numerator.push_back(TermPochhammer{Monomial::q_power(2), 0, 2, Affine{1, 0}});
    s.denominator.push_back(TermPochhammer{Monomial::q_power(1, Rational(-1)), 0, 1, Affine{2, 1}});
    s.factors.push_back(LinearFactor::plus(2, 0, true));
    s.factors.push_back(LinearFactor::minus(2, 1));
    RS x = build_term_sum<Rational>(s, 80);
    std::reverse(s.numerator.begin(), s.numerator.end());
    std::reverse(s.factors.begin(), s.factors.end());
    RS y = build_term_sum<Rational>(s, 80);
    EXPECT_FALSE(first_difference(x, y).has_value());
}

TEST(TermSum, ParameterGeometric)
{
    // sum (a q)^n = 1/(1 - a q)
    TermSumSpec s;
    s.q_exponent.n1 = 1;
    s.alpha = 1;
    auto got = build_term_sum<ParamPoly>(s, 40);
    auto expect = TruncatedSeries<ParamPoly>::one(40);
    expect.div_binomial(Rational(1), Monomial{Rational(-1), 1, 1, 0});
    EXPECT_FALSE(first_difference(got, expect).has_value());
}

TEST(TermSum, Guards)
{
    TermSumSpec flat;
    EXPECT_THROW(build_term_sum<Rational>(flat, 10), HypergeomError);
    TermSumSpec half;
    half.q_exponent.n1 = Rational(1, 2);
    EXPECT_THROW(build_term_sum<Rational>(half, 10), HypergeomError);
    TermSumSpec pole = lambert_spec();
    pole.start = 0;
    pole.factors[0] = LinearFactor::minus(2, 0, true);
    EXPECT_THROW(build_term_sum<Rational>(pole, 10), SeriesError);
}

TEST(TermSum, PhiConvenienceMatchesQBinomialTheorem)
{
    // 1phi0(a; ; q, z) = (az;q)_inf/(z;q)_inf with a = q^2 (ratio), z = q
    TermSumSpec s = phi_spec({Monomial::q_power(2, Rational(-1))}, {}, 1, Monomial::q_power(1));
    RS lhs = build_term_sum<Rational>(s, 50);
    RS num = pochhammer<Rational>(PochhammerArg{Monomial::q_power(3, Rational(-1)), 0, 1, std::nullopt}, 50);
    RS den = pochhammer<Rational>(PochhammerArg{Monomial::q_power(1), 0, 1, std::nullopt}, 50);
    EXPECT_FALSE(first_difference(lhs, num * den.inverse()).has_value());
}

TEST(FinitePhi, LemmaSquareSumSmallN)
{
    // (-1)^n q^{n(n+1)} 3phi2(q^{-2n}, q^{2n+2}, -q; q, -q^2; q^2, 1)
    auto value = [](int n) {
        FinitePhiSpec f;
        f.n = n;
        f.step = 2;
        f.numerator = {Monomial::q_power(-2 * n), Monomial::q_power(2 * n + 2), Monomial::q_power(1, Rational(-1))};
        f.denominator = {Monomial::q_power(1), Monomial::q_power(2, Rational(-1))};
        f.argument = Monomial::q_power(0);
        RationalFunction r = finite_phi_exact(f);
        r *= RationalFunction(SparsePoly(Monomial::q_power(n * (n + 1), Rational(n % 2 ? -1 : 1))));
        return r;
    };
    EXPECT_EQ(value(0), RationalFunction(SparsePoly(Rational(1))));
    SparsePoly one_two_q = SparsePoly(Rational(1)) + SparsePoly(Monomial::q_power(1, Rational(2)));
    EXPECT_EQ(value(1), RationalFunction(one_two_q));
    RS s = to_series(value(1), 10);
    EXPECT_EQ(s.coefficient(0), Rational(1));
    EXPECT_EQ(s.coefficient(1), Rational(2));
    EXPECT_EQ(s.coefficient(2), Rational(0));
}

TEST(FinitePhi, ThetaTwoJSquaredPlusJ)
{
    // (-1)^n q^{n(n+1)} 2phi1(q^{-2n}, q^{2n+2}; q; q^2, 1) at n = 2
    int n = 2;
    FinitePhiSpec f;
    f.n = n;
    f.step = 2;
    f.numerator = {Monomial::q_power(-2 * n), Monomial::q_power(2 * n + 2)};
    f.denominator = {Monomial::q_power(1)};
    f.argument = Monomial::q_power(0);
    RS s = finite_phi(f, 20);
    s.mul_monomial(Monomial::q_power(n * (n + 1)));
    RS expect(20);
    for (int j = -2; j <= 2; ++j) {
        expect.add_coefficient(2 * j * j + j, Rational(1));
    }
    EXPECT_FALSE(first_difference(s, expect).has_value());
    EXPECT_EQ(s.coefficient(10), Rational(1));
    EXPECT_EQ(s.coefficient(6), Rational(1));
}

TEST(FinitePhi, Guards)
{
    FinitePhiSpec f;
    f.n = 2;
    f.step = 1;
    f.numerator = {Monomial::q_power(5)};
    EXPECT_THROW(finite_phi_exact(f), HypergeomError);
    f.numerator = {Monomial::q_power(-2)};
    f.denominator = {Monomial::q_power(-1)}; // (q^{-1};q)_2 contains 1 - q^0
    EXPECT_THROW(finite_phi_exact(f), SeriesError);
}

TEST(RationalFunctionSeries, ExpandsQuotient)
{
    // q^{-1} / (1 - q) = q^{-1} + 1 + q + ...
    RationalFunction f(SparsePoly(Monomial::q_power(-1)), SparsePoly(Rational(1)) - SparsePoly(Monomial::q_power(1)));
    RS s = to_series(f, 5);
    EXPECT_EQ(s.floor(), -1);
    for (int e = -1; e < 5; ++e) {
        EXPECT_EQ(s.coefficient(e), Rational(1));
    }
}
