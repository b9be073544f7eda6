#include "qseries/identities.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace qseries;

namespace {

// Dense truncated series used as an independent oracle.
using Dense = std::vector<Rational>;

Dense dense_one(int n)
{
    Dense d(n, Rational(0));
    d[0] = 1;
    return d;
}

Dense mul(const Dense& x, const Dense& y)
{
    Dense z(x.size(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < x.size(); ++j) {
            z[i + j] += x[i] * y[j];
        }
    }
    return z;
}

Dense inv(const Dense& x)
{
    Dense g(x.size(), Rational(0));
    g[0] = 1 / x[0];
    for (std::size_t e = 1; e < x.size(); ++e) {
        Rational s = 0;
        for (std::size_t k = 1; k <= e; ++k) {
            s += x[k] * g[e - k];
        }
        g[e] = -s / x[0];
    }
    return g;
}

// prod_{k < count} (1 - c q^{start + k step})
Dense poch(int n, Rational c, int start, int step, int count)
{
    Dense d = dense_one(n);
    for (int k = 0; k < count && start + k * step < n; ++k) {
        Dense f = dense_one(n);
        f[start + k * step] -= c;
        d = mul(d, f);
    }
    return d;
}

int first_difference(const Dense& x, const Dense& y)
{
    for (std::size_t e = 0; e < x.size(); ++e) {
        if (x[e] != y[e]) {
            return static_cast<int>(e);
        }
    }
    return -1;
}

const IdentityRecord& record(const std::string& id)
{
    const IdentityRecord* r = find_identity(id);
    if (!r) {
        throw std::runtime_error("missing " + id);
    }
    return *r;
}

} // namespace

TEST(Registry, IdsAreUniqueAndSorted)
{
    std::set<std::string> seen;
    std::string prev;
    for (const auto& r : registry()) {
        EXPECT_TRUE(seen.insert(r.id).second) << r.id;
        EXPECT_LT(prev, r.id);
        prev = r.id;
    }
    for (const auto& r : negative_controls()) {
        EXPECT_FALSE(seen.count(r.id)) << r.id;
    }
}

TEST(Registry, CoversEveryFamily)
{
    auto count = [](Mode m) {
        return std::count_if(registry().begin(), registry().end(), [m](const auto& r) { return r.mode == m; });
    };
    EXPECT_EQ(count(Mode::parameterized), 8);
    EXPECT_EQ(count(Mode::finite_lemma), 15);
    EXPECT_EQ(count(Mode::transform_sampled), 4);
    for (const char* id : {"jacobi-cube", "rogers-hecke", "liu-412", "liu-413", "liu-414", "wang-yee-61", "chan-liu-48",
                           "chan-liu-49", "thm-t1", "cor-c1", "lem-l1", "thm-t3-5", "thm-8-1", "two-squares", "eq-5-8",
                           "eq-5-11", "eq-5-12"}) {
        EXPECT_NE(find_identity(id), nullptr) << id;
    }
    EXPECT_NE(find_identity("liu-412-uncorrected"), nullptr);
    EXPECT_EQ(find_identity("no-such-id"), nullptr);
}

TEST(Registry, NearestIds)
{
    auto near = nearest_ids("thm-7-155", 3);
    ASSERT_EQ(near.size(), 3u);
    EXPECT_EQ(near.front(), "thm-7-15");
    EXPECT_THROW(verify(std::string("no-such-id")), UnknownIdentity);
}

TEST(Expressions, JacobiCubeSidesAgainstDenseOracle)
{
    const int n = 60;
    auto lhs = build_expr<Rational>(record("jacobi-cube").lhs, n);
    Dense euler = poch(n, 1, 1, 1, n);
    Dense cube = mul(mul(euler, euler), euler);
    for (int e = 0; e < n; ++e) {
        ASSERT_EQ(lhs.coefficient(e), cube[e]) << e;
    }
}

TEST(Expressions, Liu412LeftSideAgainstDenseOracle)
{
    const int n = 50;
    auto lhs = build_expr<Rational>(record("liu-412").lhs, n);
    Dense oracle(n, Rational(0));
    for (int k = 0; k * k < n; ++k) {
        Dense term(n, Rational(0));
        term[k * k] = 1;
        oracle = [&] {
            Dense t = mul(term, inv(poch(n, 1, 2, 2, k)));
            for (int e = 0; e < n; ++e) {
                t[e] += oracle[e];
            }
            return t;
        }();
    }
    for (int e = 0; e < n; ++e) {
        ASSERT_EQ(lhs.coefficient(e), oracle[e]) << e;
    }
}

TEST(Verify, ClassicalAtModerateOrder)
{
    for (const char* id : {"jacobi-cube", "rogers-hecke", "liu-412", "liu-413", "liu-414", "wang-yee-61", "chan-liu-48",
                           "chan-liu-49"}) {
        auto rep = verify(std::string(id), 120);
        EXPECT_EQ(rep.status, Status::verified) << id << " " << rep.message;
        EXPECT_EQ(rep.order, 120);
    }
}

TEST(Verify, NegativeControlMatchesOracle)
{
    // Independent expansion of both sides with the extra (-1)^n.
    const int n = 40;
    Dense lhs(n, Rational(0)), hecke(n, Rational(0));
    for (int k = 0; k * k < n; ++k) {
        Dense t(n, Rational(0));
        t[k * k] = 1;
        t = mul(t, inv(poch(n, 1, 2, 2, k)));
        for (int e = 0; e < n; ++e) {
            lhs[e] += t[e];
        }
    }
    for (int k = 0; k * k < n; ++k) {
        for (int j = -k; j <= k; ++j) {
            int e = k * k + j * j;
            int sign = ((k + j) % 2 == 0) ? 1 : -1;
            if (e < n) {
                hecke[e] += sign;
            }
            if (e + 2 * k + 1 < n) {
                hecke[e + 2 * k + 1] -= sign;
            }
        }
    }
    Dense rhs = mul(inv(poch(n, 1, 1, 1, n)), hecke);
    int e = first_difference(lhs, rhs);
    ASSERT_GE(e, 0);

    auto rep = verify(std::string("liu-412-uncorrected"), n);
    ASSERT_EQ(rep.status, Status::mismatch);
    ASSERT_TRUE(rep.mismatch);
    EXPECT_EQ(rep.mismatch->exponent, e);
    EXPECT_EQ(rep.mismatch->lhs, lhs[e]);
    EXPECT_EQ(rep.mismatch->rhs, rhs[e]);
}

TEST(Verify, Parameterized)
{
    for (const auto& r : registry()) {
        if (r.mode != Mode::parameterized) {
            continue;
        }
        EXPECT_EQ(r.weights, (Weights{1, 3, 3})) << r.id;
        auto rep = verify(r, 40);
        EXPECT_EQ(rep.status, Status::verified) << r.id << " " << rep.message;
    }
}

TEST(Verify, ParameterizedMismatchReportsDegrees)
{
    IdentityRecord r = record("thm-7-15");
    r.id = "thm-7-15-perturbed";
    Piece extra;
    extra.shift = Monomial{Rational(1), 2, 1, 0}; // a q^2
    extra.body = Rational(1);
    r.rhs.pieces.push_back(extra);
    auto rep = verify(r, 40);
    ASSERT_EQ(rep.status, Status::mismatch);
    EXPECT_EQ(rep.mismatch->exponent, 2);
    EXPECT_EQ(rep.mismatch->deg_a, 1);
    EXPECT_EQ(rep.mismatch->deg_b, 0);
    EXPECT_EQ(rep.mismatch->rhs - rep.mismatch->lhs, Rational(1));
}

TEST(Verify, BuilderErrorIsReported)
{
    IdentityRecord r = record("two-squares");
    r.id = "broken";
    HeckeSpec h;
    h.A = Rational(1, 3);
    r.rhs.pieces.push_back(Piece{Rational(1), Monomial{Rational(1)}, std::nullopt, h, 1});
    auto rep = verify(r, 20);
    EXPECT_EQ(rep.status, Status::builder_error);
    EXPECT_FALSE(rep.message.empty());
}

TEST(Verify, FiniteLemmasSmallN)
{
    for (const auto& r : registry()) {
        if (r.mode != Mode::finite_lemma) {
            continue;
        }
        ASSERT_TRUE(r.finite);
        auto rep = verify(r, 6);
        EXPECT_EQ(rep.status, Status::verified) << r.id << " " << rep.message;
    }
}

TEST(Verify, FiniteLemmaMismatchNamesSample)
{
    IdentityRecord r = record("eq-1-6");
    auto inner = r.finite->build;
    r.finite->build = [inner](int n, std::size_t s) {
        auto sides = inner(n, s);
        if (n == 3) {
            sides.second = sides.second + RationalFunction(SparsePoly(Monomial::q_power(5)));
        }
        return sides;
    };
    auto rep = verify(r, 5);
    ASSERT_EQ(rep.status, Status::mismatch);
    EXPECT_EQ(rep.mismatch->exponent, 5);
    EXPECT_EQ(rep.mismatch->rhs - rep.mismatch->lhs, Rational(1));
    EXPECT_EQ(rep.mismatch->context.rfind("n=3", 0), 0u) << rep.mismatch->context;
}

TEST(Verify, TransformSamples)
{
    for (const auto& r : registry()) {
        if (r.mode != Mode::transform_sampled) {
            continue;
        }
        ASSERT_TRUE(r.transform);
        EXPECT_GE(r.transform->samples.size(), 6u) << r.id;
        EXPECT_TRUE(std::any_of(r.transform->samples.begin(), r.transform->samples.end(),
                                [](const auto& s) { return s.canonical_substitution; }))
            << r.id;
        auto rep = verify_transform(r.id, {r.transform->samples.front()}, 30);
        EXPECT_EQ(rep.status, Status::verified) << r.id << " " << rep.message;
    }
}

TEST(Registry, TransformSamplesAreNondegenerate)
{
    // a or b equal to the base kills every term with n >= 1 on both sides.
    for (const auto& r : registry()) {
        if (!r.transform) {
            continue;
        }
        for (const auto& t : r.transform->samples) {
            Monomial base = Monomial::q_power(t.step);
            EXPECT_FALSE(t.a == base || t.b == base) << r.id << " " << t.label;
        }
    }
}

TEST(Verify, TransformDetectsWrongParameter)
{
    const auto& r = record("eq-t2-9");
    TransformParams t = r.transform->samples.front();
    auto sides = r.transform->build(t, 30);
    // Perturb only the right-hand side evaluation.
    TransformParams other = t;
    other.c = Monomial{Rational(-2), 1, 0, 0};
    auto perturbed = r.transform->build(other, 30);
    EXPECT_TRUE(first_difference(sides.first, sides.second) == std::nullopt);
    EXPECT_TRUE(first_difference(sides.first, perturbed.second).has_value());
}

TEST(Verify, AllIsDeterministicAcrossParallelism)
{
    std::vector<const IdentityRecord*> subset;
    for (const auto& r : registry()) {
        if (r.mode == Mode::univariate) {
            subset.push_back(&r);
        }
    }
    subset.push_back(find_identity("liu-412-uncorrected"));
    auto a = verify_all(subset, 60, 1);
    auto b = verify_all(subset, 60, 4);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].id, b[i].id);
        EXPECT_EQ(a[i].status, b[i].status) << a[i].id;
        EXPECT_EQ(a[i].mismatch.has_value(), b[i].mismatch.has_value());
        if (a[i].mismatch && b[i].mismatch) {
            EXPECT_EQ(a[i].mismatch->exponent, b[i].mismatch->exponent);
            EXPECT_EQ(a[i].mismatch->lhs, b[i].mismatch->lhs);
        }
    }
    EXPECT_TRUE(std::is_sorted(a.begin(), a.end(), [](const auto& x, const auto& y) { return x.id < y.id; }));
}

TEST(Links, EverySpecializationAgrees)
{
    int links = 0;
    for (const auto& r : registry()) {
        for (const auto& l : check_links(r)) {
            ++links;
            EXPECT_EQ(l.status, Status::verified) << l.id << " -> " << l.target << " " << l.message;
        }
    }
    EXPECT_GE(links, 40);
}

TEST(Links, WrongScaleIsCaught)
{
    IdentityRecord r = record("eq-5-8");
    r.links.front().scale = 3;
    auto reps = check_links(r);
    ASSERT_EQ(reps.size(), 1u);
    EXPECT_EQ(reps.front().status, Status::mismatch);
}
