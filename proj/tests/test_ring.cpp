#include "qseries/ring.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qseries;

namespace {

ParamPoly a() { return ParamPoly::monomial(Rational(1), 1, 0); }
ParamPoly b() { return ParamPoly::monomial(Rational(1), 0, 1); }

ParamPoly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> nterms(0, 4), deg(-2, 3), num(-5, 5), den(1, 4);
    ParamPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        p.add_term(ParamDegree{deg(rng), deg(rng)}, make_rational(num(rng), den(rng)));
    }
    return p;
}

} // namespace

TEST(Ring, RationalAddition)
{
    EXPECT_EQ(std::get<Rational>(ring_add(Rational(1, 2), Rational(1, 2))), Rational(1));
    EXPECT_EQ(std::get<Rational>(ring_add(Rational(2, 3), Rational(1, 6))), Rational(5, 6));
    EXPECT_EQ(to_exact_string(Rational(5, 6)), "5/6");
    EXPECT_EQ(to_exact_string(make_rational(4, -2)), "-2");
}

TEST(Ring, PolynomialCancellation)
{
    RingElement x = a();
    RingElement y = -a();
    auto s = std::get<ParamPoly>(ring_add(x, y));
    EXPECT_TRUE(s.is_zero());
    EXPECT_EQ(s.size(), 0u);
}

TEST(Ring, Products)
{
    auto ab = std::get<ParamPoly>(ring_mul(a(), b()));
    EXPECT_EQ(ab, ParamPoly::monomial(Rational(1), 1, 1));
    ParamPoly one(Rational(1));
    EXPECT_EQ((a() - one) * (a() + one), a() * a() - one);
    EXPECT_EQ(a() * ParamPoly::monomial(Rational(1), -1, 0), one);
}

TEST(Ring, Units)
{
    EXPECT_EQ(std::get<Rational>(ring_inv_unit(Rational(2))), Rational(1, 2));
    auto inv = std::get<ParamPoly>(ring_inv_unit(ParamPoly::monomial(Rational(-1), 1, 1)));
    EXPECT_EQ(inv, ParamPoly::monomial(Rational(-1), -1, -1));
    EXPECT_THROW(ring_inv_unit(a() + ParamPoly(Rational(1))), RingError);
    EXPECT_THROW(ring_inv_unit(Rational(0)), RingError);
    EXPECT_THROW(ring_inv_unit(ParamPoly()), RingError);
}

TEST(Ring, MixedRingsRejected)
{
    EXPECT_THROW(ring_add(Rational(1), a()), RingError);
    EXPECT_THROW(ring_mul(a(), Rational(1)), RingError);
    ParamPoly odd(Weights{1, 2, 5});
    odd.add_term(ParamDegree{1, 0}, Rational(1));
    EXPECT_THROW(ring_add(a(), odd), RingError);
}

TEST(Ring, AxiomsOnRandomTriples)
{
    std::mt19937 rng(12345);
    for (int t = 0; t < 1000; ++t) {
        ParamPoly x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
        ASSERT_EQ((x + y) + z, x + (y + z));
        ASSERT_EQ(x + y, y + x);
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_TRUE((x - x).is_zero());
    }
}

TEST(Ring, UnitInverseIsExact)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> deg(-4, 4), num(1, 9);
    for (int t = 0; t < 200; ++t) {
        ParamPoly u = ParamPoly::monomial(make_rational(num(rng) * (t % 2 ? -1 : 1), num(rng)), deg(rng), deg(rng));
        ASSERT_EQ(u * inv_unit(u), ParamPoly(Rational(1)));
    }
}

TEST(Ring, MonomialPowers)
{
    Monomial m{Rational(-2), 1, 1, 0};
    Monomial p = pow(m, 3);
    EXPECT_EQ(p.coeff, Rational(-8));
    EXPECT_EQ(p.e_q, 3);
    Monomial inv = pow(m, -1);
    EXPECT_EQ(inv * m, Monomial{});
    EXPECT_EQ(m.weight(Weights{}), 4);
}
