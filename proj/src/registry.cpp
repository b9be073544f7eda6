#include "qseries/identities.hpp"

#include <algorithm>
#include <tuple>

namespace qseries {

namespace {

// ---------------------------------------------------------------------------
// Builders

Monomial q(int e = 1, Rational c = 1) { return Monomial::q_power(e, std::move(c)); }
Monomial mq(int e = 1) { return Monomial::q_power(e, Rational(-1)); }
Monomial aq(int e = 0) { return Monomial{Rational(1), e, 1, 0}; }
Monomial bq(int e = 0) { return Monomial{Rational(1), e, 0, 1}; }
Monomial abq(int e = 0) { return Monomial{Rational(1), e, 1, 1}; }
Rational frac(long n, long d) { return make_rational(n, d); }

using FactorList = std::vector<std::tuple<Monomial, int, int>>;

/// scale * prod (x; q^step)_inf^power
PochProduct prod(Rational scale, const FactorList& fs)
{
    PochProduct p;
    p.scale = std::move(scale);
    for (const auto& [x, step, pw] : fs) {
        p.times(x, step, pw);
    }
    return p;
}

/// (1 - q)
PochProduct one_minus_q() { return PochProduct{}.times(q(), 1, 1, 1); }

struct Sum {
    TermSumSpec s;

    Sum& from(int n)
    {
        s.start = n;
        return *this;
    }
    Sum& exp(Rational n2, Rational n1 = 0, Rational n0 = 0)
    {
        s.q_exponent = QuadraticExponent{std::move(n2), std::move(n1), std::move(n0)};
        return *this;
    }
    Sum& alt()
    {
        s.sign_exponent = 1;
        return *this;
    }
    Sum& num(const Monomial& x, int step, Affine count = {1, 0})
    {
        s.numerator.push_back(TermPochhammer{x, 0, step, count});
        return *this;
    }
    Sum& den(const Monomial& x, int step, Affine count = {1, 0})
    {
        s.denominator.push_back(TermPochhammer{x, 0, step, count});
        return *this;
    }
    /// (1 + c q^{slope n + offset})
    Sum& times(Rational c, int slope, int offset)
    {
        s.factors.push_back(LinearFactor{std::move(c), slope, offset, false});
        return *this;
    }
    Sum& over(Rational c, int slope, int offset)
    {
        s.factors.push_back(LinearFactor{std::move(c), slope, offset, true});
        return *this;
    }
    /// prod_{k<n} (a - q^{start + k step}) (b - q^{start + k step})
    Sum& shifted_ab(int start, int step)
    {
        s.shifted.push_back(TermShifted{aq(), start, step, Affine{1, 0}});
        s.shifted.push_back(TermShifted{bq(), start, step, Affine{1, 0}});
        return *this;
    }
    Sum& inner(InnerSum i)
    {
        s.inner = i;
        return *this;
    }
    Sum& scaled(Rational c)
    {
        s.scale = std::move(c);
        return *this;
    }
    operator Body() const { return s; }
};

struct Hk {
    HeckeSpec s;

    explicit Hk(Region r) { s.region = r; }
    /// q^{A n^2 + D n + C j^2 + E j}
    Hk& exp(Rational A, Rational D, Rational C, Rational E = 0)
    {
        s.A = std::move(A);
        s.D = std::move(D);
        s.C = std::move(C);
        s.E = std::move(E);
        return *this;
    }
    Hk& sign_n()
    {
        s.sign_n = 1;
        return *this;
    }
    Hk& sign_j()
    {
        s.sign_j = 1;
        return *this;
    }
    Hk& times(Rational c, int slope, int offset)
    {
        s.factors.push_back(LinearFactor{std::move(c), slope, offset, false});
        return *this;
    }
    Hk& from(int n)
    {
        s.n_start = n;
        return *this;
    }
    operator Body() const { return s; }
};

Piece piece(Body b, Rational scale = 1)
{
    Piece p;
    p.body = std::move(b);
    p.scale = std::move(scale);
    return p;
}

Piece with(PochProduct pref, Body b)
{
    Piece p = piece(std::move(b));
    p.prefactor = std::move(pref);
    return p;
}

SeriesExpr expr(std::vector<Piece> ps) { return SeriesExpr{std::move(ps)}; }

InnerSum j_full(int sign = 0, Rational jj = 1, Rational j1 = 0)
{
    return InnerSum{Affine{-1, 0}, Affine{1, 0}, sign, std::move(jj), Rational(0), std::move(j1)};
}
InnerSum j_plus(int sign = 0) { return InnerSum{Affine{-1, 0}, Affine{1, 1}, sign, Rational(1), Rational(0), Rational(0)}; }

IdentityRecord univariate(std::string id, std::string desc, SeriesExpr l, SeriesExpr r, long order = 200)
{
    IdentityRecord rec;
    rec.id = std::move(id);
    rec.description = std::move(desc);
    rec.mode = Mode::univariate;
    rec.lhs = std::move(l);
    rec.rhs = std::move(r);
    rec.default_order = order;
    return rec;
}

SpecializationLink link(std::string target, Monomial a, Monomial b, Rational scale = 1, Rational offset = 0,
                        PochProduct extra = {}, bool negate = false)
{
    return SpecializationLink{std::move(target), std::move(a), std::move(b), negate, std::move(scale), std::move(offset),
                              std::move(extra)};
}

const Monomial zero_m = Monomial::zero();
const Monomial one_m = q(0);
const Monomial m_one = Monomial::q_power(0, Rational(-1));

// ---------------------------------------------------------------------------
// Classical identities

void add_classical(std::vector<IdentityRecord>& out)
{
    out.push_back(univariate("jacobi-cube", "(q;q)_inf^3 = sum_{m>=0} sum_{|n|<=m} (-1)^m q^{m(m+1)/2}",
                             expr({piece(PochProduct{}.times(q(), 1, 3))}),
                             expr({piece(Hk(Region::jacobi).exp(frac(1, 2), frac(1, 2), 0).sign_n())}), 300));

    out.push_back(univariate("rogers-hecke",
                             "(q;q)_inf^2 = sum_{n>=0} sum_{|m|<=n/2} (-1)^{m+n} q^{(n^2-3m^2)/2 + (m+n)/2}",
                             expr({piece(PochProduct{}.times(q(), 1, 2))}),
                             expr({piece(Hk(Region::rogers).exp(frac(1, 2), frac(1, 2), frac(-3, 2), frac(1, 2)).sign_n().sign_j())}),
                             300));

    out.push_back(univariate("liu-412", "sum q^{n^2}/(q^2;q^2)_n = 1/(q;q)_inf sum sum (-1)^j (1-q^{2n+1}) q^{n^2+j^2}",
                             expr({piece(Sum().exp(1).den(q(2), 2))}),
                             expr({with(prod(1, {{q(), 1, -1}}), Hk(Region::j_full).exp(1, 0, 1).sign_j().times(-1, 2, 1))}), 300));

    out.push_back(univariate("liu-413",
                             "sum (-1)^n q^{n(n-1)/2}/(-q;q)_n = sum sum (-1)^{n+j} (1-q^{2n+1}) q^{n(n-1)/2+j^2}",
                             expr({piece(Sum().alt().exp(frac(1, 2), frac(-1, 2)).den(mq(), 1))}),
                             expr({piece(Hk(Region::j_full).exp(frac(1, 2), frac(-1, 2), 1).sign_n().sign_j().times(-1, 2, 1))}),
                             300));

    out.push_back(univariate(
        "liu-414", "sum q^{n(n-1)/2}/(q;q)_n = (-q;q)_inf/(q;q)_inf sum sum (-1)^j (1-q^{2n+1}) q^{n(n-1)/2+j^2}",
        expr({piece(Sum().exp(frac(1, 2), frac(-1, 2)).den(q(), 1))}),
        expr({with(prod(1, {{mq(), 1, 1}, {q(), 1, -1}}), Hk(Region::j_full).exp(frac(1, 2), frac(-1, 2), 1).sign_j().times(-1, 2, 1))}),
        300));

    {
        auto rec = univariate("wang-yee-61",
                              "sum_{n>=1} q^n (q;q^2)_n/((1+q^{2n})(-q;q^2)_n) = sum_n sum_{-n<j<=n} (-1)^j q^{n^2+j^2}",
                              expr({piece(Sum().from(1).exp(0, 1).num(q(), 2).den(mq(), 2).over(1, 2, 0))}),
                              expr({piece(Hk(Region::j_shift).exp(1, 0, 1).sign_j())}), 300);
        rec.links.push_back(link("thm-7-15", one_m, mq(), 2, 1, {}, true));
        out.push_back(std::move(rec));
    }

    out.push_back(univariate("chan-liu-48",
                             "1 + 2 sum_{n>=1} q^{n^2+n}/((1+q^n)(q;q)_n) = 1/(q;q)_inf sum sum (-1)^j (1-q^{2n+1}) q^{(3n^2+n)/2+j^2}",
                             expr({piece(Rational(1)), piece(Sum().from(1).exp(1, 1).den(q(), 1).over(1, 1, 0).scaled(2))}),
                             expr({with(prod(1, {{q(), 1, -1}}), Hk(Region::j_full).exp(frac(3, 2), frac(1, 2), 1).sign_j().times(-1, 2, 1))}),
                             300));

    out.push_back(univariate("chan-liu-49",
                             "1 + 2 sum_{n>=1} (-1)^n q^{n(n+1)/2}/(1+q^n) = sum sum (-1)^{n+j} (1-q^{2n+1}) q^{n^2+j^2}",
                             expr({piece(Rational(1)), piece(Sum().from(1).alt().exp(frac(1, 2), frac(1, 2)).over(1, 1, 0).scaled(2))}),
                             expr({piece(Hk(Region::j_full).exp(1, 0, 1).sign_n().sign_j().times(-1, 2, 1))}), 300));
}

// ---------------------------------------------------------------------------
// Identities in q alone

void add_univariate(std::vector<IdentityRecord>& out)
{
    // sum_{n>=1} q^n/(1+q^{2n})
    const Body lambert = Sum().from(1).exp(0, 1).over(1, 2, 0);
    // -1/4 + theta(q^2)^2/4 + q psi(q^4)^2
    const SeriesExpr theta_side = expr({piece(Rational(frac(-1, 4))), [] {
                                            Piece p = piece(ThetaBody{ThetaKind::square, 2}, frac(1, 4));
                                            p.power = 2;
                                            return p;
                                        }(),
                                        [] {
                                            Piece p = piece(ThetaBody{ThetaKind::triangular, 1});
                                            p.power = 2;
                                            p.shift = q();
                                            return p;
                                        }()});

    {
        auto rec = univariate("thm-t1",
                              "sum_{n>=1} q^n/(1+q^{2n}) = sum_{n>=1} sum_{|j|<=n} q^{n^2+j^2} - sum_{n>=1} q^{2n^2}",
                              expr({piece(lambert)}),
                              expr({piece(Hk(Region::j_full).exp(1, 0, 1).from(1)), piece(Sum().from(1).exp(2).scaled(-1))}));
        rec.links.push_back(link("thm-7-15", one_m, q(), 2, 1));
        out.push_back(std::move(rec));
    }
    out.push_back(univariate("cor-c1", "sum_{n>=1} q^n/(1+q^{2n}) = -1/4 + theta(q^2)^2/4 + q psi(q^4)^2",
                             expr({piece(lambert)}), theta_side));
    out.push_back(univariate("lem-l1", "sum_{n>=1} sum_{-n<j<=n} q^{n^2+j^2} = -1/4 + theta(q^2)^2/4 + q psi(q^4)^2",
                             expr({piece(Hk(Region::j_shift).exp(1, 0, 1).from(1))}), theta_side));
    {
        Piece lhs = piece(ThetaBody{ThetaKind::square, 1});
        lhs.power = 2;
        Piece t2 = piece(ThetaBody{ThetaKind::square, 2});
        t2.power = 2;
        Piece tri = piece(ThetaBody{ThetaKind::triangular, 1}, 4);
        tri.power = 2;
        tri.shift = q();
        out.push_back(univariate("two-squares", "theta(q)^2 = theta(q^2)^2 + 4 q psi(q^4)^2", expr({lhs}), expr({t2, tri})));
    }
    {
        auto rec = univariate(
            "thm-t3-5",
            "sum_{n>=1} (-1)^n q^{n^2+n}/((1+q^{2n})(q;q^2)_n) = sum_{n>=1} sum_{|j|<=n} (-1)^n q^{2n^2+j^2} - sum_{n>=1} (-1)^n q^{3n^2}",
            expr({piece(Sum().from(1).alt().exp(1, 1).den(q(), 2).over(1, 2, 0))}),
            expr({piece(Hk(Region::j_full).exp(2, 0, 1).sign_n().from(1)), piece(Sum().from(1).alt().exp(3).scaled(-1))}));
        rec.links.push_back(link("thm-7-15", one_m, zero_m, 2, 1));
        out.push_back(std::move(rec));
    }
    {
        auto rec = univariate("thm-8-1",
                              "sum (-1)^n (q^2;q^2)_n q^{n^2}/(-q;q)_{2n+1} = 1 + 2 sum_{n>=1} sum_{-n<j<=n} (-1)^{n+j} q^{n^2+j^2}",
                              expr({piece(Sum().alt().exp(1).num(q(2), 2).den(mq(), 1, Affine{2, 1}))}),
                              expr({piece(Rational(1)), piece(Hk(Region::j_shift).exp(1, 0, 1).sign_n().sign_j().from(1), 2)}));
        rec.links.push_back(link("thm-7-3", one_m, zero_m));
        out.push_back(std::move(rec));
    }
}

// ---------------------------------------------------------------------------
// Two-parameter theorems

PochProduct pref_q2(int shift)
{
    // (q^2, ab q^shift; q^2)_inf / (a q^{2+shift}, b q^{2+shift}; q^2)_inf
    return prod(1, {{q(2), 2, 1}, {abq(shift), 2, 1}, {aq(2 + shift), 2, -1}, {bq(2 + shift), 2, -1}});
}

IdentityRecord parameterized(std::string id, std::string desc, SeriesExpr l, SeriesExpr r)
{
    IdentityRecord rec;
    rec.id = std::move(id);
    rec.description = std::move(desc);
    rec.mode = Mode::parameterized;
    rec.lhs = std::move(l);
    rec.rhs = std::move(r);
    rec.default_order = 40;
    return rec;
}

void add_parameterized(std::vector<IdentityRecord>& out)
{
    out.push_back(parameterized(
        "thm-7-15",
        "(q^2,ab;q^2)/(aq^2,bq^2;q^2) 3phi2(q^2/a,q^2/b,-1;q,-q^2;q^2,ab) = "
        "sum sum_{|j|<=n} (1-q^{4n+2}) (q^2/a,q^2/b;q^2)_n (ab)^n/(aq^2,bq^2;q^2)_n q^{n(n-1)+j^2}",
        expr({with(pref_q2(0), Sum().shifted_ab(2, 2).num(m_one, 2).den(q(2), 2).den(q(), 2).den(mq(2), 2))}),
        expr({piece(Sum().shifted_ab(2, 2).den(aq(2), 2).den(bq(2), 2).exp(1, -1).times(-1, 4, 2).inner(j_full()))})));

    out.push_back(parameterized(
        "thm-7-13",
        "(q^2,ab;q^2)/(aq^2,bq^2;q^2) 3phi2(q^2/a,q^2/b,q;-q^2,q^3;q^2,ab) = "
        "(1-q) sum sum_{|j|<=n} (1+q^{2n+1}) (q^2/a,q^2/b;q^2)_n (-ab)^n/(aq^2,bq^2;q^2)_n q^{n^2+j^2}",
        expr({with(pref_q2(0), Sum().shifted_ab(2, 2).num(q(), 2).den(q(2), 2).den(mq(2), 2).den(q(3), 2))}),
        expr({piece(Sum().shifted_ab(2, 2).den(aq(2), 2).den(bq(2), 2).alt().exp(1).times(1, 2, 1).times(-1, 0, 1).inner(j_full()))})));

    out.push_back(parameterized(
        "thm-2-2",
        "(q^2,ab;q^2)/(aq^2,bq^2;q^2) 3phi2(q^2/a,q^2/b,-q;q,-q^2;q^2,ab/q^2) = "
        "sum sum_{|j|<=n} (1-q^{4n+2}) (q^2/a,q^2/b;q^2)_n (ab)^n q^{-2n}/(aq^2,bq^2;q^2)_n q^{j^2}",
        expr({with(pref_q2(0), Sum().shifted_ab(2, 2).exp(0, -2).num(mq(), 2).den(q(2), 2).den(q(), 2).den(mq(2), 2))}),
        expr({piece(Sum().shifted_ab(2, 2).den(aq(2), 2).den(bq(2), 2).exp(0, -2).times(-1, 4, 2).inner(j_full()))})));

    out.push_back(parameterized(
        "thm-7-3",
        "(q^2,ab;q^2)/(aq^2,bq^2;q^2) sum (q^2/a,q^2/b;q^2)_n (ab)^n q^{-n}/(-q;q)_{2n+1} = "
        "sum sum_{|j|<=n} (-1)^j (1-q^{2n+1}) (q^2/a,q^2/b;q^2)_n (ab)^n q^{-n}/(aq^2,bq^2;q^2)_n q^{j^2}",
        expr({with(pref_q2(0), Sum().shifted_ab(2, 2).exp(0, -1).den(mq(), 1, Affine{2, 1}))}),
        expr({piece(Sum().shifted_ab(2, 2).den(aq(2), 2).den(bq(2), 2).exp(0, -1).times(-1, 2, 1).inner(j_full(1)))})));

    out.push_back(parameterized(
        "thm-9-2",
        "(q^2,abq^2;q^2)/(aq^4,bq^4;q^2) 3phi2(q^2/a,q^2/b,-q;-q^2,q^3;q^2,ab) = "
        "(1-q) sum sum_{-n<=j<=n+1} (1-q^{4n+4}) (q^2/a,q^2/b;q^2)_n (ab)^n/(aq^4,bq^4;q^2)_n q^{j^2}",
        expr({with(pref_q2(2), Sum().shifted_ab(2, 2).num(mq(), 2).den(q(2), 2).den(mq(2), 2).den(q(3), 2))}),
        expr({piece(Sum().shifted_ab(2, 2).den(aq(4), 2).den(bq(4), 2).times(-1, 4, 4).times(-1, 0, 1).inner(j_plus()))})));

    out.push_back(parameterized(
        "thm-9-4",
        "(q^2,abq^2;q^2)/(aq^4,bq^4;q^2) 3phi2(q^2/a,q^2/b,q;-q^2,q^3;q^2,abq^2) = "
        "(1-q) sum sum_{-n<=j<=n+1} (1-q^{4n+4}) (q^2/a,q^2/b;q^2)_n (-ab)^n/(aq^4,bq^4;q^2)_n q^{n(n+2)+j^2}",
        expr({with(pref_q2(2), Sum().shifted_ab(2, 2).exp(0, 2).num(q(), 2).den(q(2), 2).den(mq(2), 2).den(q(3), 2))}),
        expr({piece(Sum().shifted_ab(2, 2).den(aq(4), 2).den(bq(4), 2).alt().exp(1, 2).times(-1, 4, 4).times(-1, 0, 1).inner(j_plus()))})));

    out.push_back(parameterized(
        "thm-7-9",
        "(q,abq;q)/(aq^2,bq^2;q) 2phi1(q/a,q/b;-q;q,ab) = "
        "sum sum_{-n<=j<=n+1} (-1)^j (1-q^{2n+2}) (q/a,q/b;q)_n (ab)^n/(aq^2,bq^2;q)_n q^{j^2}",
        expr({with(prod(1, {{q(), 1, 1}, {abq(1), 1, 1}, {aq(2), 1, -1}, {bq(2), 1, -1}}),
                   Sum().shifted_ab(1, 1).den(q(), 1).den(mq(), 1))}),
        expr({piece(Sum().shifted_ab(1, 1).den(aq(2), 1).den(bq(2), 1).times(-1, 2, 2).inner(j_plus(1)))})));

    out.push_back(parameterized(
        "thm-7-11",
        "(q^2,ab;q^2)/(aq^2,bq^2;q^2) 2phi1(q^2/a,q^2/b;q;q^2,ab/q^2) = "
        "sum sum_{|j|<=n} (1-q^{4n+2}) (q^2/a,q^2/b;q^2)_n (ab)^n q^{-2n}/(aq^2,bq^2;q^2)_n q^{2j^2+j}",
        expr({with(pref_q2(0), Sum().shifted_ab(2, 2).exp(0, -2).den(q(2), 2).den(q(), 2))}),
        expr({piece(Sum().shifted_ab(2, 2).den(aq(2), 2).den(bq(2), 2).exp(0, -2).times(-1, 4, 2).inner(j_full(0, 2, 1)))})));
}

// ---------------------------------------------------------------------------
// Specializations of the two-parameter theorems

struct Spec {
    const char* id;
    const char* desc;
    SeriesExpr lhs;
    SeriesExpr rhs;
    SpecializationLink link;
};

void add_specializations(std::vector<IdentityRecord>& out)
{
    const PochProduct e1 = one_minus_q();
    PochProduct e1_over_1p = one_minus_q();
    e1_over_1p.times(mq(), 1, -1, 1);
    PochProduct e_512 = one_minus_q();
    e_512.times(mq(2), 2, -1);

    const PochProduct inv_q2 = prod(1, {{q(2), 2, -1}});
    const PochProduct mq2_q2 = prod(1, {{mq(2), 2, 1}, {q(2), 2, -1}});
    const PochProduct q_q2 = prod(1, {{q(), 2, 1}, {q(2), 2, -1}});
    const PochProduct mq_q2 = prod(1, {{mq(), 2, 1}, {q(2), 2, -1}});
    const PochProduct mq_q = prod(1, {{mq(), 1, 1}, {q(), 1, -1}});

    std::vector<Spec> specs;
    // thm-7-15
    specs.push_back({"sp-7-15-q-mq",
                     "sum (-1)^n (-q;q^2)_n q^{2n}/((1+q^{2n})(q^2;q^2)_n) = (q^2;q^4)/(2(q^4;q^4)) sum sum (-1)^n q^{n(n+1)+j^2}",
                     expr({piece(Sum().alt().exp(0, 2).num(mq(), 2).den(q(2), 2).over(1, 2, 0))}),
                     expr({with(prod(frac(1, 2), {{q(2), 4, 1}, {q(4), 4, -1}}), Hk(Region::j_full).exp(1, 1, 1).sign_n())}),
                     link("thm-7-15", q(), mq(), 2)});
    specs.push_back({"sp-7-15-m1-q",
                     "sum (-1;q^2)_n q^n/(q^2;q^2)_n = (-q;q)/(q;q) sum sum (-1)^j (1-q^{2n+1}) q^{n^2+j^2}",
                     expr({piece(Sum().exp(0, 1).num(m_one, 2).den(q(2), 2))}),
                     expr({with(mq_q, Hk(Region::j_full).exp(1, 0, 1).sign_j().times(-1, 2, 1))}),
                     link("thm-7-15", m_one, q(), 1, 0, {}, true)});
    specs.push_back({"sp-7-15-m1-mq",
                     "sum (-1;q)_{2n} q^n/(q;q)_{2n} = (-q;q)/(q;q) sum sum (1-q^{2n+1}) q^{n^2+j^2}",
                     expr({piece(Sum().exp(0, 1).num(m_one, 1, Affine{2, 0}).den(q(), 1, Affine{2, 0}))}),
                     expr({with(mq_q, Hk(Region::j_full).exp(1, 0, 1).times(-1, 2, 1))}),
                     link("thm-7-15", m_one, mq())});
    specs.push_back({"eq-5-8",
                     "sum (-1)^n q^{n^2+2n}/((1+q^{2n})(q^2;q^2)_n) = (q;q^2)/(2(q^2;q^2)) sum sum (-1)^n (1+q^{2n+1}) q^{2n^2+n+j^2}",
                     expr({piece(Sum().alt().exp(1, 2).den(q(2), 2).over(1, 2, 0))}),
                     expr({with(prod(frac(1, 2), {{q(), 2, 1}, {q(2), 2, -1}}), Hk(Region::j_full).exp(2, 1, 1).sign_n().times(1, 2, 1))}),
                     link("thm-7-15", zero_m, q(), 2)});
    specs.push_back({"sp-7-15-0-mq",
                     "sum (-q;q^2)_n q^{n^2+2n}/((1+q^{2n})(q;q)_{2n}) = (-q;q^2)/(2(q^2;q^2)) sum sum (1-q^{2n+1}) q^{2n^2+n+j^2}",
                     expr({piece(Sum().exp(1, 2).num(mq(), 2).den(q(), 1, Affine{2, 0}).over(1, 2, 0))}),
                     expr({with(prod(frac(1, 2), {{mq(), 2, 1}, {q(2), 2, -1}}), Hk(Region::j_full).exp(2, 1, 1).times(-1, 2, 1))}),
                     link("thm-7-15", zero_m, mq(), 2)});
    specs.push_back({"sp-7-15-0-m1",
                     "sum (-1;q^2)_n q^{n^2+n}/(q;q)_{2n} = (-q^2;q^2)/(q^2;q^2) sum sum (1-q^{4n+2}) q^{2n^2+j^2}",
                     expr({piece(Sum().exp(1, 1).num(m_one, 2).den(q(), 1, Affine{2, 0}))}),
                     expr({with(mq2_q2, Hk(Region::j_full).exp(2, 0, 1).times(-1, 4, 2))}),
                     link("thm-7-15", zero_m, m_one)});
    specs.push_back({"sp-7-15-0-0",
                     "sum q^{2n^2+2n}/((1+q^{2n})(q;q)_{2n}) = 1/(2(q^2;q^2)) sum sum (1-q^{4n+2}) q^{3n^2+n+j^2}",
                     expr({piece(Sum().exp(2, 2).den(q(), 1, Affine{2, 0}).over(1, 2, 0))}),
                     expr({with(prod(frac(1, 2), {{q(2), 2, -1}}), Hk(Region::j_full).exp(3, 1, 1).times(-1, 4, 2))}),
                     link("thm-7-15", zero_m, zero_m, 2)});

    // thm-7-13
    specs.push_back({"sp-7-13-1-mq", "sum (-q;q^2)_n (-q)^n/((-q^2;q^2)_n (1-q^{2n+1})) = sum sum q^{n^2+n+j^2}",
                     expr({piece(Sum().alt().exp(0, 1).num(mq(), 2).den(mq(2), 2).over(-1, 2, 1))}),
                     expr({piece(Hk(Region::j_full).exp(1, 1, 1))}), link("thm-7-13", one_m, mq(), 1, 0, e1)});
    specs.push_back({"eq-5-1",
                     "sum (-q;q^2)_n q^n/((q^2;q^2)_n (1-q^{2n+1})) = (-q;q)/(q;q) sum sum (-1)^n q^{n^2+n+j^2}",
                     expr({piece(Sum().exp(0, 1).num(mq(), 2).den(q(2), 2).over(-1, 2, 1))}),
                     expr({with(mq_q, Hk(Region::j_full).exp(1, 1, 1).sign_n())}), link("thm-7-13", m_one, mq(), 1, 0, e1)});
    specs.push_back({"sp-7-13-1-0", "sum (-1)^n q^{n^2+n}/((-q^2;q^2)_n (1-q^{2n+1})) = sum sum (1+q^{2n+1}) q^{2n^2+n+j^2}",
                     expr({piece(Sum().alt().exp(1, 1).den(mq(2), 2).over(-1, 2, 1))}),
                     expr({piece(Hk(Region::j_full).exp(2, 1, 1).times(1, 2, 1))}), link("thm-7-13", one_m, zero_m, 1, 0, e1)});
    specs.push_back({"eq-5-2",
                     "sum (-q;q^2)_n q^{n^2+2n}/((1-q^{2n+1})(q^4;q^4)_n) = (-q;q^2)/(q^2;q^2) sum sum (-1)^n q^{2n^2+2n+j^2}",
                     expr({piece(Sum().exp(1, 2).num(mq(), 2).den(q(4), 4).over(-1, 2, 1))}),
                     expr({with(mq_q2, Hk(Region::j_full).exp(2, 2, 1).sign_n())}), link("thm-7-13", mq(), zero_m, 1, 0, e1)});
    specs.push_back({"eq-5-3",
                     "sum q^{n^2+n}/((1-q^{2n+1})(q^2;q^2)_n) = (-q^2;q^2)/(q^2;q^2) sum sum (-1)^n (1+q^{2n+1}) q^{2n^2+n+j^2}",
                     expr({piece(Sum().exp(1, 1).den(q(2), 2).over(-1, 2, 1))}),
                     expr({with(mq2_q2, Hk(Region::j_full).exp(2, 1, 1).sign_n().times(1, 2, 1))}),
                     link("thm-7-13", m_one, zero_m, 1, 0, e1)});
    specs.push_back({"eq-5-4",
                     "sum q^{2n^2+2n}/((1-q^{2n+1})(q^4;q^4)_n) = 1/(q^2;q^2) sum sum (-1)^n (1+q^{2n+1}) q^{3n^2+2n+j^2}",
                     expr({piece(Sum().exp(2, 2).den(q(4), 4).over(-1, 2, 1))}),
                     expr({with(inv_q2, Hk(Region::j_full).exp(3, 2, 1).sign_n().times(1, 2, 1))}),
                     link("thm-7-13", zero_m, zero_m, 1, 0, e1)});

    // thm-2-2
    specs.push_back({"sp-2-2-0-0",
                     "sum (-q;q^2)_n q^{2n^2}/((q;q^2)_n (q^4;q^4)_n) = 1/(q^2;q^2) sum sum (1-q^{4n+2}) q^{2n^2+j^2}",
                     expr({piece(Sum().exp(2).num(mq(), 2).den(q(), 2).den(q(4), 4))}),
                     expr({with(inv_q2, Hk(Region::j_full).exp(2, 0, 1).times(-1, 4, 2))}), link("thm-2-2", zero_m, zero_m)});
    specs.push_back({"sp-2-2-m1-0",
                     "sum (-q;q^2)_n q^{n^2-n}/(q;q)_{2n} = (-q^2;q^2)/(q^2;q^2) sum sum (1-q^{4n+2}) q^{n^2-n+j^2}",
                     expr({piece(Sum().exp(1, -1).num(mq(), 2).den(q(), 1, Affine{2, 0}))}),
                     expr({with(mq2_q2, Hk(Region::j_full).exp(1, -1, 1).times(-1, 4, 2))}), link("thm-2-2", m_one, zero_m)});
    specs.push_back({"sp-2-2-1-0",
                     "sum (-1)^n (-q;q^2)_n q^{n^2-n}/(q,-q^2;q^2)_n = sum sum (-1)^n (1-q^{4n+2}) q^{n^2-n+j^2}",
                     expr({piece(Sum().alt().exp(1, -1).num(mq(), 2).den(q(), 2).den(mq(2), 2))}),
                     expr({piece(Hk(Region::j_full).exp(1, -1, 1).sign_n().times(-1, 4, 2))}), link("thm-2-2", one_m, zero_m)});
    specs.push_back({"sp-2-2-q-0",
                     "sum (-1)^n (-q;q^2)_n q^{n^2}/(q^4;q^4)_n = (q;q^2)/(q^2;q^2) sum sum (-1)^n (1+q^{2n+1}) q^{n^2+j^2}",
                     expr({piece(Sum().alt().exp(1).num(mq(), 2).den(q(4), 4))}),
                     expr({with(q_q2, Hk(Region::j_full).exp(1, 0, 1).sign_n().times(1, 2, 1))}), link("thm-2-2", q(), zero_m)});
    specs.push_back({"sp-2-2-mq-0",
                     "sum (-q;q^2)_n^2 q^{n^2}/((q;q^2)_n (q^4;q^4)_n) = (-q;q^2)/(q^2;q^2) sum sum (1-q^{2n+1}) q^{n^2+j^2}",
                     expr({piece(Sum().exp(1).num(mq(), 2).num(mq(), 2).den(q(), 2).den(q(4), 4))}),
                     expr({with(mq_q2, Hk(Region::j_full).exp(1, 0, 1).times(-1, 2, 1))}), link("thm-2-2", mq(), zero_m)});

    // thm-7-3
    specs.push_back({"sp-7-3-0-0",
                     "sum q^{2n^2+n}/(-q;q)_{2n+1} = 1/(q^2;q^2) sum sum (-1)^j (1-q^{2n+1}) q^{2n^2+n+j^2}",
                     expr({piece(Sum().exp(2, 1).den(mq(), 1, Affine{2, 1}))}),
                     expr({with(inv_q2, Hk(Region::j_full).exp(2, 1, 1).sign_j().times(-1, 2, 1))}), link("thm-7-3", zero_m, zero_m)});
    specs.push_back({"sp-7-3-m1-0",
                     "sum q^{n^2}/(-q;q^2)_{n+1} = (-q^2;q^2)/(q^2;q^2) sum sum (-1)^j (1-q^{2n+1}) q^{n^2+j^2}",
                     expr({piece(Sum().exp(1).den(mq(), 2, Affine{1, 1}))}),
                     expr({with(mq2_q2, Hk(Region::j_full).exp(1, 0, 1).sign_j().times(-1, 2, 1))}), link("thm-7-3", m_one, zero_m)});
    specs.push_back({"sp-7-3-q-0",
                     "sum (-1)^n (q;q^2)_n q^{n^2+n}/(-q;q)_{2n+1} = (q;q^2)/(q^2;q^2) sum sum (-1)^{n+j} q^{n^2+n+j^2}",
                     expr({piece(Sum().alt().exp(1, 1).num(q(), 2).den(mq(), 1, Affine{2, 1}))}),
                     expr({with(q_q2, Hk(Region::j_full).exp(1, 1, 1).sign_n().sign_j())}), link("thm-7-3", q(), zero_m)});

    // thm-9-2, inner sums over -n <= j <= n+1
    specs.push_back({"sp-9-2-1-0",
                     "sum (-1)^n (-q;q^2)_n q^{n^2+n}/((-q^2;q^2)_n (q;q^2)_{n+1}) = sum sum (-1)^n (1+q^{2n+2}) q^{n^2+n+j^2}",
                     expr({piece(Sum().alt().exp(1, 1).num(mq(), 2).den(mq(2), 2).den(q(), 2, Affine{1, 1}))}),
                     expr({piece(Hk(Region::j_plus).exp(1, 1, 1).sign_n().times(1, 2, 2))}), link("thm-9-2", one_m, zero_m, 1, 0, e1)});
    specs.push_back({"sp-9-2-m1-0",
                     "sum (-q;q^2)_n q^{n^2+n}/(q;q)_{2n+1} = (-q^2;q^2)/(q^2;q^2) sum sum (1-q^{2n+2}) q^{n^2+n+j^2}",
                     expr({piece(Sum().exp(1, 1).num(mq(), 2).den(q(), 1, Affine{2, 1}))}),
                     expr({with(mq2_q2, Hk(Region::j_plus).exp(1, 1, 1).times(-1, 2, 2))}), link("thm-9-2", m_one, zero_m, 1, 0, e1)});
    specs.push_back({"sp-9-2-qinv-0",
                     "sum (-1)^n (-q;q^2)_n q^{n^2}/(q^4;q^4)_n = (q;q^2)/(q^2;q^2) sum sum (-1)^n (1-q^{4n+4}) q^{n^2+j^2}",
                     expr({piece(Sum().alt().exp(1).num(mq(), 2).den(q(4), 4))}),
                     expr({with(q_q2, Hk(Region::j_plus).exp(1, 0, 1).sign_n().times(-1, 4, 4))}), link("thm-9-2", q(-1), zero_m)});
    specs.push_back({"sp-9-2-mqinv-0",
                     "sum (-q;q^2)_n (-q;q^2)_{n+1} q^{n^2}/((-q^2;q^2)_n (q;q)_{2n+1}) = (-q;q^2)/(q^2;q^2) sum sum (1-q^{4n+4}) q^{n^2+j^2}",
                     expr({piece(Sum().exp(1).num(mq(), 2).num(mq(), 2, Affine{1, 1}).den(mq(2), 2).den(q(), 1, Affine{2, 1}))}),
                     expr({with(mq_q2, Hk(Region::j_plus).exp(1, 0, 1).times(-1, 4, 4))}),
                     link("thm-9-2", mq(-1), zero_m, 1, 0, e1_over_1p)});
    specs.push_back({"sp-9-2-0-0",
                     "sum (-q;q^2)_n q^{2n^2+2n}/((-q^2;q^2)_n (q;q)_{2n+1}) = 1/(q^2;q^2) sum sum (1-q^{4n+4}) q^{2n^2+2n+j^2}",
                     expr({piece(Sum().exp(2, 2).num(mq(), 2).den(mq(2), 2).den(q(), 1, Affine{2, 1}))}),
                     expr({with(inv_q2, Hk(Region::j_plus).exp(2, 2, 1).times(-1, 4, 4))}), link("thm-9-2", zero_m, zero_m, 1, 0, e1)});

    // thm-9-4, inner sums over -n <= j <= n+1
    specs.push_back({"sp-9-4-1-m1", "sum (-1)^n q^{2n}/(1-q^{2n+1}) = sum sum q^{n^2+2n+j^2}",
                     expr({piece(Sum().alt().exp(0, 2).over(-1, 2, 1))}), expr({piece(Hk(Region::j_plus).exp(1, 2, 1))}),
                     link("thm-9-4", one_m, m_one, 1, 0, e1)});
    specs.push_back({"sp-9-4-1-qinv", "sum (q;q^2)_n q^n/(-q^2;q^2)_n = sum sum (-1)^n (1+q^{2n+2}) q^{n^2+n+j^2}",
                     expr({piece(Sum().exp(0, 1).num(q(), 2).den(mq(2), 2))}),
                     expr({piece(Hk(Region::j_plus).exp(1, 1, 1).sign_n().times(1, 2, 2))}), link("thm-9-4", one_m, q(-1))});
    specs.push_back({"sp-9-4-1-mqinv",
                     "sum (-q;q^2)_{n+1} (-q)^n/((1-q^{2n+1})(-q^2;q^2)_n) = sum sum (1+q^{2n+2}) q^{n^2+n+j^2}",
                     expr({piece(Sum().alt().exp(0, 1).num(mq(), 2, Affine{1, 1}).den(mq(2), 2).over(-1, 2, 1))}),
                     expr({piece(Hk(Region::j_plus).exp(1, 1, 1).times(1, 2, 2))}), link("thm-9-4", one_m, mq(-1), 1, 0, e1_over_1p)});
    specs.push_back({"sp-9-4-0-1",
                     "sum (-1)^n q^{n^2+3n}/((1-q^{2n+1})(-q^2;q^2)_n) = sum sum (1+q^{2n+2}) q^{2n^2+3n+j^2}",
                     expr({piece(Sum().alt().exp(1, 3).den(mq(2), 2).over(-1, 2, 1))}),
                     expr({piece(Hk(Region::j_plus).exp(2, 3, 1).times(1, 2, 2))}), link("thm-9-4", zero_m, one_m, 1, 0, e1)});
    specs.push_back({"eq-5-5",
                     "sum q^{n^2+3n}/((1-q^{2n+1})(q^2;q^2)_n) = (-q^2;q^2)/(q^2;q^2) sum sum (-1)^n (1-q^{2n+2}) q^{2n^2+3n+j^2}",
                     expr({piece(Sum().exp(1, 3).den(q(2), 2).over(-1, 2, 1))}),
                     expr({with(mq2_q2, Hk(Region::j_plus).exp(2, 3, 1).sign_n().times(-1, 2, 2))}),
                     link("thm-9-4", zero_m, m_one, 1, 0, e1)});

    // thm-7-9, inner sums over -n <= j <= n+1
    specs.push_back({"sp-7-9-1-0",
                     "sum (-1)^n q^{n(n+1)/2}/(-q;q)_n = sum sum (-1)^{n+j} (1+q^{n+1}) q^{n(n+1)/2+j^2}",
                     expr({piece(Sum().alt().exp(frac(1, 2), frac(1, 2)).den(mq(), 1))}),
                     expr({piece(Hk(Region::j_plus).exp(frac(1, 2), frac(1, 2), 1).sign_n().sign_j().times(1, 1, 1))}),
                     link("thm-7-9", one_m, zero_m)});
    specs.push_back({"sp-7-9-m1-0",
                     "sum q^{n(n+1)/2}/(q;q)_n = (-q;q)/(q;q) sum sum (-1)^j (1-q^{n+1}) q^{n(n+1)/2+j^2}",
                     expr({piece(Sum().exp(frac(1, 2), frac(1, 2)).den(q(), 1))}),
                     expr({with(mq_q, Hk(Region::j_plus).exp(frac(1, 2), frac(1, 2), 1).sign_j().times(-1, 1, 1))}),
                     link("thm-7-9", m_one, zero_m)});
    specs.push_back({"sp-7-9-0-0",
                     "sum q^{n^2+n}/(q^2;q^2)_n = 1/(q;q) sum sum (-1)^j (1-q^{2n+2}) q^{n^2+n+j^2}",
                     expr({piece(Sum().exp(1, 1).den(q(2), 2))}),
                     expr({with(prod(1, {{q(), 1, -1}}), Hk(Region::j_plus).exp(1, 1, 1).sign_j().times(-1, 2, 2))}),
                     link("thm-7-9", zero_m, zero_m)});

    // thm-7-11
    specs.push_back({"sp-7-11-1-0",
                     "sum (-1)^n q^{n^2-n}/(q;q^2)_n = sum sum (-1)^n (1-q^{4n+2}) q^{n^2-n+2j^2+j}",
                     expr({piece(Sum().alt().exp(1, -1).den(q(), 2))}),
                     expr({piece(Hk(Region::j_full).exp(1, -1, 2, 1).sign_n().times(-1, 4, 2))}), link("thm-7-11", one_m, zero_m)});
    specs.push_back({"sp-7-11-m1-0",
                     "sum (-q^2;q^2)_n q^{n^2-n}/(q;q)_{2n} = (-q^2;q^2)/(q^2;q^2) sum sum (1-q^{4n+2}) q^{n^2-n+2j^2+j}",
                     expr({piece(Sum().exp(1, -1).num(mq(2), 2).den(q(), 1, Affine{2, 0}))}),
                     expr({with(mq2_q2, Hk(Region::j_full).exp(1, -1, 2, 1).times(-1, 4, 2))}), link("thm-7-11", m_one, zero_m)});
    specs.push_back({"sp-7-11-q-0",
                     "sum (-1)^n q^{n^2}/(q^2;q^2)_n = (q;q^2)/(q^2;q^2) sum sum (-1)^n (1+q^{2n+1}) q^{n^2+2j^2+j}",
                     expr({piece(Sum().alt().exp(1).den(q(2), 2))}),
                     expr({with(q_q2, Hk(Region::j_full).exp(1, 0, 2, 1).sign_n().times(1, 2, 1))}), link("thm-7-11", q(), zero_m)});
    specs.push_back({"sp-7-11-mq-0",
                     "sum (-q;q^2)_n q^{n^2}/(q;q)_{2n} = (-q;q^2)/(q^2;q^2) sum sum (1-q^{2n+1}) q^{n^2+2j^2+j}",
                     expr({piece(Sum().exp(1).num(mq(), 2).den(q(), 1, Affine{2, 0}))}),
                     expr({with(mq_q2, Hk(Region::j_full).exp(1, 0, 2, 1).times(-1, 2, 1))}), link("thm-7-11", mq(), zero_m)});
    specs.push_back({"sp-7-11-0-0",
                     "sum q^{2n^2}/(q;q)_{2n} = 1/(q^2;q^2) sum sum (1-q^{4n+2}) q^{2n^2+2j^2+j}",
                     expr({piece(Sum().exp(2).den(q(), 1, Affine{2, 0}))}),
                     expr({with(inv_q2, Hk(Region::j_full).exp(2, 0, 2, 1).times(-1, 4, 2))}), link("thm-7-11", zero_m, zero_m)});

    // Bridges to the partition inequalities.
    specs.push_back({"eq-5-11",
                     "sum q^{n^2+2n}/((1+q^{2n})(q^2;q^2)_n) = (-q;q^2)/(2(q^2;q^2)) sum sum (-1)^j (1-q^{2n+1}) q^{2n^2+n+j^2}",
                     expr({piece(Sum().exp(1, 2).den(q(2), 2).over(1, 2, 0))}),
                     expr({with(prod(frac(1, 2), {{mq(), 2, 1}, {q(2), 2, -1}}), Hk(Region::j_full).exp(2, 1, 1).sign_j().times(-1, 2, 1))}),
                     link("thm-7-15", zero_m, q(), 2, 0, {}, true)});
    specs.push_back({"eq-5-12",
                     "(-q^2;q^2) sum (-q;q^2)_n q^{n^2+2n}/((1-q^{2n+1})(q^4;q^4)_n) = 1/(q;q) sum sum (-1)^n q^{2n^2+2n+j^2}",
                     expr({with(prod(1, {{mq(2), 2, 1}}), Sum().exp(1, 2).num(mq(), 2).den(q(4), 4).over(-1, 2, 1))}),
                     expr({with(prod(1, {{q(), 1, -1}}), Hk(Region::j_full).exp(2, 2, 1).sign_n())}),
                     link("thm-7-13", mq(), zero_m, 1, 0, e_512)});

    for (auto& s : specs) {
        auto rec = univariate(s.id, s.desc, std::move(s.lhs), std::move(s.rhs));
        rec.links.push_back(std::move(s.link));
        out.push_back(std::move(rec));
    }
}

// ---------------------------------------------------------------------------
// Terminating identities, checked exactly for n = 0..N

SparsePoly mono(const Monomial& m) { return SparsePoly(m); }
SparsePoly sign_pow(int n) { return SparsePoly(Rational(n % 2 == 0 ? 1 : -1)); }
SparsePoly fpoch(const Monomial& x, int step, int n) { return finite_pochhammer(x, step, n); }

RationalFunction phi(int n, int step, std::vector<Monomial> num, std::vector<Monomial> den, const Monomial& z)
{
    return finite_phi_exact(FinitePhiSpec{n, step, std::move(num), std::move(den), z});
}

/// sum_{j=lo}^{hi} (-1)^{sign j} q^{c j^2 + e j}
SparsePoly theta_range(int lo, int hi, int sign, int c = 1, int e = 0)
{
    SparsePoly s;
    for (int j = lo; j <= hi; ++j) {
        Rational k = (sign != 0 && j % 2 != 0) ? -1 : 1;
        s += SparsePoly(Monomial::q_power(c * j * j + e * j, k));
    }
    return s;
}

RationalFunction ratio(SparsePoly num, SparsePoly den) { return RationalFunction(std::move(num), std::move(den)); }
SparsePoly binom(long c0, const Monomial& m) { return SparsePoly::binomial(Rational(c0), m); }

/// sum_{j=0}^{n} num(j) / prod_x (x; q^s)_j over the common denominator prod_x (x; q^s)_n.
RationalFunction common_sum(int n, int s, const std::vector<Monomial>& den, const std::function<SparsePoly(int)>& num)
{
    SparsePoly total;
    SparsePoly d(Rational(1));
    for (const auto& x : den) {
        d *= fpoch(x, s, n);
    }
    for (int j = 0; j <= n; ++j) {
        SparsePoly t = num(j);
        for (const auto& x : den) {
            t *= fpoch(x * q(s * j), s, n - j);
        }
        total += t;
    }
    return ratio(total, d);
}

FiniteLemma fixed(std::string label, std::function<std::pair<RationalFunction, RationalFunction>(int)> f)
{
    return FiniteLemma{{std::move(label)},
                       [f = std::move(f)](int n, std::size_t) { return f(n); }};
}

IdentityRecord finite(std::string id, std::string desc, FiniteLemma lemma)
{
    IdentityRecord rec;
    rec.id = std::move(id);
    rec.description = std::move(desc);
    rec.mode = Mode::finite_lemma;
    rec.default_order = 12;
    rec.finite = std::move(lemma);
    return rec;
}

Monomial inv(const Monomial& m) { return pow(m, -1); }

/// (1 - alpha q^{2sj}) (alpha; q^s)_j / (1 - alpha), written so that alpha = 1 is allowed.
SparsePoly alpha_head(const Monomial& alpha, int s, int j)
{
    if (j == 0) {
        return SparsePoly(Rational(1));
    }
    return binom(1, Monomial{-alpha.coeff, alpha.e_q + 2 * s * j, 0, 0}) * fpoch(alpha * q(s), s, j - 1);
}

void add_finite(std::vector<IdentityRecord>& out)
{
    // Parameterized lemmas, each checked at several parameter choices with base q^s.
    {
        struct P {
            int s;
            Monomial a, b, d, e;
        };
        std::vector<P> ps{{1, q(1, 2), q(2, 3), q(1, 5), q(3, frac(-1, 2))},
                          {2, q(1), mq(1), q(3), q(1, 3)},
                          {1, q(0, frac(1, 2)), q(1), mq(2), q(2)},
                          {3, q(2), q(0, 2), q(1), m_one}};
        std::vector<std::string> labels{"s=1 a=2q b=3q^2 d=5q e=-q^3/2", "s=2 a=q b=-q d=q^3 e=3q", "s=1 a=1/2 b=q d=-q^2 e=q^2",
                                        "s=3 a=q^2 b=2 d=q e=-1"};
        out.push_back(finite("eq-1-1",
                             "3phi2(q^-n,a,b;d,e;q,de q^n/(ab)) = (e/a;q)_n/(e;q)_n 3phi2(q^-n,a,d/b;d,a q^{1-n}/e;q,q)",
                             FiniteLemma{labels, [ps](int n, std::size_t i) {
                                             const P& p = ps[i];
                                             Monomial pn = q(p.s * n);
                                             auto l = phi(n, p.s, {q(-p.s * n), p.a, p.b}, {p.d, p.e}, p.d * p.e * pn * inv(p.a * p.b));
                                             auto r = ratio(fpoch(p.e * inv(p.a), p.s, n), fpoch(p.e, p.s, n)) *
                                                      phi(n, p.s, {q(-p.s * n), p.a, p.d * inv(p.b)}, {p.d, p.a * q(p.s * (1 - n)) * inv(p.e)},
                                                          q(p.s));
                                             return std::pair{l, r};
                                         }}));
    }
    {
        struct P {
            int s;
            Monomial a, b, d, e;
        };
        std::vector<P> ps{{1, q(1, 2), q(0, 3), q(2, 5), q(1, frac(-1, 2))},
                          {2, q(1), mq(1), q(2, 3), q(3, frac(1, 2))},
                          {1, q(0, frac(1, 3)), q(2), mq(1), q(1, 2)},
                          {2, mq(2), q(0, frac(1, 2)), q(1), q(3, 3)}};
        std::vector<std::string> labels{"s=1 a=2q b=3 d=5q^2 e=-q/2", "s=2 a=q b=-q d=3q^2 e=q^3/2", "s=1 a=1/3 b=q^2 d=-q e=2q",
                                        "s=2 a=-q^2 b=1/2 d=q e=3q^3"};
        out.push_back(finite(
            "eq-7-1",
            "3phi2(q^-n,aq^n,b;d,e;q,de/(ab)) = (aq/d,aq/e;q)_n/(d,e;q)_n (de/(aq))^n 3phi2(q^-n,aq^n,abq/(de);aq/d,aq/e;q,q/b)",
            FiniteLemma{labels, [ps](int n, std::size_t i) {
                            const P& p = ps[i];
                            Monomial ps_ = q(p.s);
                            Monomial apd = p.a * ps_ * inv(p.d);
                            Monomial ape = p.a * ps_ * inv(p.e);
                            auto l = phi(n, p.s, {q(-p.s * n), p.a * q(p.s * n), p.b}, {p.d, p.e}, p.d * p.e * inv(p.a * p.b));
                            auto r = ratio(fpoch(apd, p.s, n) * fpoch(ape, p.s, n) * mono(pow(p.d * p.e * inv(p.a * ps_), n)),
                                           fpoch(p.d, p.s, n) * fpoch(p.e, p.s, n)) *
                                     phi(n, p.s, {q(-p.s * n), p.a * q(p.s * n), p.a * p.b * ps_ * inv(p.d * p.e)}, {apd, ape},
                                         ps_ * inv(p.b));
                            return std::pair{l, r};
                        }}));
    }
    {
        struct P {
            int s;
            Monomial alpha, c, d;
        };
        std::vector<P> ps{{2, one_m, q(1), mq(2)}, {2, q(2), m_one, q(1)}, {1, q(1), q(0, 2), mq(1)}, {1, q(0, frac(1, 2)), q(1), q(2, 3)}};
        std::vector<std::string> labels{"s=2 alpha=1 c=q d=-q^2", "s=2 alpha=q^2 c=-1 d=q", "s=1 alpha=q c=2 d=-q",
                                        "s=1 alpha=1/2 c=q d=3q^2"};
        out.push_back(finite(
            "eq-1-2",
            "(-1)^n (alpha q;q)_n/(q;q)_n q^{n(n+1)/2} 3phi2(q^-n,alpha q^{n+1},alpha cd/q;alpha c,alpha d;q,1) = "
            "sum_j (-1)^j (1-alpha q^{2j}) (alpha,q/c,q/d;q)_j/((1-alpha)(q,alpha c,alpha d;q)_j) q^{j(j-3)/2} (alpha cd)^j",
            FiniteLemma{labels, [ps](int n, std::size_t i) {
                            const P& p = ps[i];
                            const int s = p.s;
                            Monomial ps_ = q(s);
                            Monomial ac = p.alpha * p.c, ad = p.alpha * p.d;
                            auto l = ratio(sign_pow(n) * fpoch(p.alpha * ps_, s, n) * mono(q(s * n * (n + 1) / 2)), fpoch(ps_, s, n)) *
                                     phi(n, s, {q(-s * n), p.alpha * q(s * (n + 1)), ac * p.d * inv(ps_)}, {ac, ad}, one_m);
                            auto r = common_sum(n, s, {ps_, ac, ad}, [&](int j) {
                                return sign_pow(j) * alpha_head(p.alpha, s, j) * fpoch(ps_ * inv(p.c), s, j) * fpoch(ps_ * inv(p.d), s, j) *
                                       mono(q(s * j * (j - 3) / 2) * pow(ac * p.d, j));
                            });
                            return std::pair{l, r};
                        }}));
    }
    {
        struct P {
            int s;
            Monomial alpha, c;
        };
        std::vector<P> ps{{1, q(1), m_one}, {2, one_m, q(1)}, {1, q(0, 2), q(1)}, {3, q(1), mq(2)}};
        std::vector<std::string> labels{"s=1 alpha=q c=-1", "s=2 alpha=1 c=q", "s=1 alpha=2 c=q", "s=3 alpha=q c=-q^2"};
        out.push_back(finite(
            "eq-7-12",
            "(-1)^n (alpha q;q)_n/(q;q)_n q^{n(n+1)/2} 2phi1(q^-n,alpha q^{n+1};alpha c;q,1) = "
            "sum_j (1-alpha q^{2j}) (alpha,q/c;q)_j/((1-alpha)(q,alpha c;q)_j) q^{j^2-j} (alpha c)^j",
            FiniteLemma{labels, [ps](int n, std::size_t i) {
                            const P& p = ps[i];
                            const int s = p.s;
                            Monomial ps_ = q(s);
                            Monomial ac = p.alpha * p.c;
                            auto l = ratio(sign_pow(n) * fpoch(p.alpha * ps_, s, n) * mono(q(s * n * (n + 1) / 2)), fpoch(ps_, s, n)) *
                                     phi(n, s, {q(-s * n), p.alpha * q(s * (n + 1))}, {ac}, one_m);
                            auto r = common_sum(n, s, {ps_, ac}, [&](int j) {
                                return alpha_head(p.alpha, s, j) * fpoch(ps_ * inv(p.c), s, j) * mono(q(s * (j * j - j)) * pow(ac, j));
                            });
                            return std::pair{l, r};
                        }}));
    }

    // Fixed lemmas in base q^2 (base q for eq-7-8).
    auto top = [](int n) { return q(-2 * n); };
    out.push_back(finite("eq-1-6", "(-1)^n q^{n(n+1)} 3phi2(q^-2n,q^{2n+2},-q;q,-q^2;q^2,1) = sum_{|j|<=n} q^{j^2}",
                         fixed("base q^2", [top](int n) {
                             auto l = RationalFunction(sign_pow(n) * mono(q(n * (n + 1)))) *
                                      phi(n, 2, {top(n), q(2 * n + 2), mq(1)}, {q(1), mq(2)}, one_m);
                             return std::pair{l, RationalFunction(theta_range(-n, n, 0))};
                         })));
    out.push_back(finite("eq-1-7",
                         "3phi2(q^-2n,q^{2n+2},-1;q,-q^2;q^2,q^2) = q^{n(n+1)} 3phi2(q^-2n,q^{2n+2},-q;q,-q^2;q^2,1)",
                         fixed("base q^2", [top](int n) {
                             auto l = phi(n, 2, {top(n), q(2 * n + 2), m_one}, {q(1), mq(2)}, q(2));
                             auto r = RationalFunction(mono(q(n * (n + 1)))) * phi(n, 2, {top(n), q(2 * n + 2), mq(1)}, {q(1), mq(2)}, one_m);
                             return std::pair{l, r};
                         })));
    out.push_back(finite("eq-7-14", "3phi2(q^-2n,q^{2n+2},-1;q,-q^2;q^2,q^2) = (-1)^n sum_{|j|<=n} q^{j^2}",
                         fixed("base q^2", [top](int n) {
                             auto l = phi(n, 2, {top(n), q(2 * n + 2), m_one}, {q(1), mq(2)}, q(2));
                             return std::pair{l, RationalFunction(sign_pow(n) * theta_range(-n, n, 0))};
                         })));
    out.push_back(finite("eq-7-2", "(-1)^n q^{n(n+1)} 3phi2(q^-2n,q^{2n+2},q;-q,-q^2;q^2,1) = sum_{|j|<=n} (-1)^j q^{j^2}",
                         fixed("base q^2", [top](int n) {
                             auto l = RationalFunction(sign_pow(n) * mono(q(n * (n + 1)))) *
                                      phi(n, 2, {top(n), q(2 * n + 2), q(1)}, {mq(1), mq(2)}, one_m);
                             return std::pair{l, RationalFunction(theta_range(-n, n, 1))};
                         })));
    out.push_back(finite("eq-7-4",
                         "3phi2(q^-2n,q^{2n+2},q^2;-q^2,-q^3;q^2,q) = (-1)^n (1+q)/(q^{n^2}(1+q^{2n+1})) sum_{|j|<=n} (-1)^j q^{j^2}",
                         fixed("base q^2", [top](int n) {
                             auto l = phi(n, 2, {top(n), q(2 * n + 2), q(2)}, {mq(2), mq(3)}, q(1));
                             auto r = ratio(sign_pow(n) * binom(1, q(1)) * theta_range(-n, n, 1), mono(q(n * n)) * binom(1, q(2 * n + 1)));
                             return std::pair{l, r};
                         })));
    out.push_back(finite("eq-7-6",
                         "3phi2(q^-2n,q^{2n+2},q^2;-q^2,q^3;q^2,-q) = (1-q)/(q^{n^2}(1-q^{2n+1})) sum_{|j|<=n} q^{j^2}",
                         fixed("base q^2", [top](int n) {
                             auto l = phi(n, 2, {top(n), q(2 * n + 2), q(2)}, {mq(2), q(3)}, mq(1));
                             auto r = ratio(binom(1, mq(1)) * theta_range(-n, n, 0), mono(q(n * n)) * binom(1, mq(2 * n + 1)));
                             return std::pair{l, r};
                         })));
    out.push_back(finite("eq-7-7", "3phi2(q^-2n,q^{2n+2},q;-q^2,q^3;q^2,q^2) = (1-q) q^n/(1-q^{2n+1}) sum_{|j|<=n} q^{j^2}",
                         fixed("base q^2", [top](int n) {
                             auto l = phi(n, 2, {top(n), q(2 * n + 2), q(1)}, {mq(2), q(3)}, q(2));
                             auto r = ratio(binom(1, mq(1)) * mono(q(n)) * theta_range(-n, n, 0), binom(1, mq(2 * n + 1)));
                             return std::pair{l, r};
                         })));
    out.push_back(finite("eq-7-8",
                         "(1-q^{n+1}) q^{n(n+1)/2} 2phi1(q^-n,q^{n+2};-q;q,1) = sum_{j=-n}^{n+1} (-1)^{n+j} q^{j^2}",
                         fixed("base q", [](int n) {
                             auto l = RationalFunction(binom(1, mq(n + 1)) * mono(q(n * (n + 1) / 2))) *
                                      phi(n, 1, {q(-n), q(n + 2)}, {mq(1)}, one_m);
                             return std::pair{l, RationalFunction(sign_pow(n) * theta_range(-n, n + 1, 1))};
                         })));
    out.push_back(finite("eq-7-10", "(-1)^n q^{n(n+1)} 2phi1(q^-2n,q^{2n+2};q;q^2,1) = sum_{|j|<=n} q^{2j^2+j}",
                         fixed("base q^2", [top](int n) {
                             auto l = RationalFunction(sign_pow(n) * mono(q(n * (n + 1)))) * phi(n, 2, {top(n), q(2 * n + 2)}, {q(1)}, one_m);
                             return std::pair{l, RationalFunction(theta_range(-n, n, 0, 2, 1))};
                         })));
    out.push_back(finite("eq-9-1",
                         "3phi2(q^-2n,q^{2n+4},-q;-q^2,q^3;q^2,1) = (-1)^n (1-q)/(q^{n^2+n}(1-q^{2n+2})) sum_{j=-n}^{n+1} q^{j^2}",
                         fixed("base q^2", [top](int n) {
                             auto l = phi(n, 2, {top(n), q(2 * n + 4), mq(1)}, {mq(2), q(3)}, one_m);
                             auto r = ratio(sign_pow(n) * binom(1, mq(1)) * theta_range(-n, n + 1, 0),
                                            mono(q(n * n + n)) * binom(1, mq(2 * n + 2)));
                             return std::pair{l, r};
                         })));
    out.push_back(finite("eq-9-3",
                         "3phi2(q^-2n,q^{2n+4},q;-q^2,q^3;q^2,q^2) = q^n (1-q)/(1-q^{2n+2}) sum_{j=-n}^{n+1} q^{j^2}",
                         fixed("base q^2", [top](int n) {
                             auto l = phi(n, 2, {top(n), q(2 * n + 4), q(1)}, {mq(2), q(3)}, q(2));
                             auto r = ratio(mono(q(n)) * binom(1, mq(1)) * theta_range(-n, n + 1, 0), binom(1, mq(2 * n + 2)));
                             return std::pair{l, r};
                         })));
}

// ---------------------------------------------------------------------------
// Transformations, checked at sampled parameter values

enum class Shape { four_three, three_two, two_one };

/// lead * prod (1 - m)^power with every m of positive q-degree.
struct Factored {
    Monomial lead{Rational(1)};
    std::vector<std::pair<Monomial, int>> factors;
    bool zero = false;

    void mono(const Monomial& m) { lead = lead * m; }
    void times(const Monomial& m, int power)
    {
        if (m.is_zero() || power == 0) {
            return;
        }
        if (m.e_q > 0) {
            factors.emplace_back(m, power);
        }
        else if (m.e_q == 0) {
            Rational c = 1 - m.coeff;
            if (c == 0) {
                if (power < 0) {
                    throw SeriesError(SeriesError::Kind::pole, "vanishing factor in a denominator");
                }
                zero = true;
                return;
            }
            lead = lead * pow(Monomial{c, 0, 0, 0}, power);
        }
        else {
            // 1 - m = -m (1 - 1/m)
            lead = lead * pow(Monomial{-m.coeff, m.e_q, 0, 0}, power);
            factors.emplace_back(pow(m, -1), power);
        }
    }
    /// (x; q^step)_k ^ power
    void poch(const Monomial& x, int step, int k, int power)
    {
        for (int i = 0; i < k && !zero; ++i) {
            times(x * q(step * i), power);
        }
    }
    TruncatedSeries<Rational> series(long order) const
    {
        long inner = order - lead.e_q;
        auto s = TruncatedSeries<Rational>::one(inner);
        for (const auto& [m, power] : factors) {
            Monomial neg{-m.coeff, m.e_q, 0, 0};
            for (int i = 0; i < std::abs(power); ++i) {
                if (power > 0) {
                    s.mul_binomial(Rational(1), neg);
                }
                else {
                    s.div_binomial(Rational(1), neg);
                }
            }
        }
        s.mul_monomial(lead);
        s.truncate(order);
        return s;
    }
};

std::pair<TruncatedSeries<Rational>, TruncatedSeries<Rational>> transform_sides(const TransformParams& t, Shape shape,
                                                                                bool unit_z, long order)
{
    const int s = t.step;
    const Monomial p = q(s);
    const Monomial z = unit_z ? one_m : t.z;
    const Monomial pa = p * inv(t.a), pb = p * inv(t.b);
    std::vector<Monomial> extra_num, extra_den;
    if (shape != Shape::two_one) {
        extra_num.push_back(t.beta);
        extra_den.push_back(t.d);
    }
    if (shape == Shape::four_three) {
        extra_num.push_back(t.gamma);
        extra_den.push_back(t.h);
    }
    std::vector<Monomial> den{t.c};
    den.insert(den.end(), extra_den.begin(), extra_den.end());

    std::vector<Monomial> lnum{pa, pb};
    lnum.insert(lnum.end(), extra_num.begin(), extra_num.end());
    Piece lhs;
    lhs.body = phi_spec(lnum, den, s, t.alpha * t.a * t.b * z * inv(p));
    lhs.prefactor = PochProduct{}
                        .times(t.alpha * p, s, 1)
                        .times(t.alpha * t.a * t.b * inv(p), s, 1)
                        .times(t.alpha * t.a, s, -1)
                        .times(t.alpha * t.b, s, -1);
    auto left = build_expr<Rational>(SeriesExpr{{lhs}}, order);

    // Outer sum over n, each summand expanded term by term of the inner sum.
    TruncatedSeries<Rational> right(order);
    const int sign_power = 1 + static_cast<int>(den.size()) - 2 - static_cast<int>(extra_num.size());
    int quiet = 0;
    for (int n = 0;; ++n) {
        if (n > 400) {
            throw HypergeomError(HypergeomError::Kind::divergent, "outer sum did not terminate");
        }
        Factored outer;
        outer.times(t.alpha * q(2 * s * n), 1);
        outer.times(t.alpha, -1);
        outer.poch(t.alpha, s, n, 1);
        outer.poch(pa, s, n, 1);
        outer.poch(pb, s, n, 1);
        outer.poch(p, s, n, -1);
        outer.poch(t.alpha * t.a, s, n, -1);
        outer.poch(t.alpha * t.b, s, n, -1);
        outer.mono(pow(Monomial{-t.alpha.coeff, t.alpha.e_q - s, 0, 0} * t.a * t.b, n) * q(s * n * (n - 1) / 2));
        bool negligible = true;
        for (int k = 0; k <= n; ++k) {
            Factored term = outer;
            term.poch(q(-s * n), s, k, 1);
            term.poch(t.alpha * q(s * n), s, k, 1);
            for (const auto& x : extra_num) {
                term.poch(x, s, k, 1);
            }
            term.poch(p, s, k, -1);
            for (const auto& x : den) {
                term.poch(x, s, k, -1);
            }
            term.mono(pow(Monomial::q_power(s * k * (k - 1) / 2, k % 2 == 0 ? 1 : -1), sign_power) * pow(p * z, k));
            if (term.zero || term.lead.e_q >= order) {
                continue;
            }
            negligible = false;
            right += term.series(order);
        }
        quiet = negligible ? quiet + 1 : 0;
        if (quiet >= divergence_window) {
            break;
        }
    }
    return {left, right};
}

TransformParams tp(std::string label, int step, Monomial alpha, Monomial beta, Monomial gamma, Monomial c, Monomial d,
                   Monomial h, Monomial z, Monomial a, Monomial b)
{
    return TransformParams{std::move(label), step, alpha, beta, gamma, c, d, h, z, a, b};
}

TransformParams canonical(TransformParams t)
{
    t.canonical_substitution = true;
    return t;
}

IdentityRecord transform(std::string id, std::string desc, std::vector<TransformParams> samples, Shape shape, bool unit_z)
{
    IdentityRecord rec;
    rec.id = std::move(id);
    rec.description = std::move(desc);
    rec.mode = Mode::transform_sampled;
    rec.default_order = 80;
    rec.transform = TransformSpec{std::move(samples), [shape, unit_z](const TransformParams& t, long order) {
                                      return transform_sides(t, shape, unit_z, order);
                                  }};
    return rec;
}

void add_transforms(std::vector<IdentityRecord>& out)
{
    const Monomial u = one_m; // unused slot
    out.push_back(transform(
        "eq-2-1",
        "(alpha q,alpha ab/q;q)/(alpha a,alpha b;q) 4phi3(q/a,q/b,beta,gamma;c,d,h;q,alpha abz/q) = "
        "sum (1-alpha q^{2n})(alpha,q/a,q/b;q)_n (-alpha ab/q)^n q^{n(n-1)/2}/((1-alpha)(q,alpha a,alpha b;q)_n) "
        "4phi3(q^-n,alpha q^n,beta,gamma;c,d,h;q,qz)",
        {tp("s=1 alpha=q beta=2 gamma=-q c=3q d=-q^2 h=q/2 z=q a=1 b=-q^2", 1, q(1), q(0, 2), mq(1), q(1, 3), mq(2), q(1, frac(1, 2)),
            q(1), one_m, mq(2)),
         tp("s=2 alpha=q^2 beta=-1 gamma=q c=q d=-q^2 h=-q z=1 a=1 b=q", 2, q(2), m_one, q(1), q(1), mq(2), mq(1), one_m, one_m, q(1)),
         tp("s=2 alpha=q^4 beta=q gamma=3 c=-q^2 d=q^3 h=2q z=q^-2 a=-1 b=q", 2, q(4), q(1), q(0, 3), mq(2), q(3), q(1, 2), q(-2), m_one,
            q(1)),
         tp("s=1 alpha=q^2 beta=q gamma=q^2 c=-q d=q/3 h=-q^2 z=q^-1 a=-q^2 b=1/2", 1, q(2), q(1), q(2), mq(1), q(1, frac(1, 3)),
            mq(2), q(-1), mq(2), q(0, frac(1, 2))),
         tp("s=3 alpha=q beta=-q gamma=1/2 c=q^2 d=2q h=-q z=1 a=q b=q^2", 3, q(1), mq(1), q(0, frac(1, 2)), q(2), q(1, 2), mq(1), one_m,
            q(1), q(2)),
         tp("s=1 alpha=1/3 beta=q gamma=-2 c=q d=-q h=q^2 z=q^2 a=-q b=2q", 1, q(0, frac(1, 3)), q(1), q(0, -2), q(1), mq(1), q(2),
            q(2), mq(1), q(1, 2)),
         canonical(tp("s=2 alpha=q^2 beta=q^2 gamma=h=3q c=-q^2 d=-q^3 z=q^-1 a=q b=q", 2, q(2), q(2), q(1, 3), mq(2), mq(3),
                       q(1, 3), q(-1), q(1), q(1)))},
        Shape::four_three, false));

    out.push_back(transform(
        "eq-t2-4",
        "(alpha q,alpha ab/q;q)/(alpha a,alpha b;q) 3phi2(q/a,q/b,beta;c,d;q,alpha abz/q) = "
        "sum (1-alpha q^{2n})(alpha,q/a,q/b;q)_n (-alpha ab/q)^n q^{n(n-1)/2}/((1-alpha)(q,alpha a,alpha b;q)_n) "
        "3phi2(q^-n,alpha q^n,beta;c,d;q,qz)",
        {tp("s=2 alpha=q^2 beta=q c=-q d=-q^2 z=q^-2 a=q b=-q^2", 2, q(2), q(1), u, mq(1), mq(2), u, q(-2), q(1), mq(2)),
         canonical(tp("s=2 alpha=q^2 beta=q^2 c=-q^2 d=-q^3 z=q^-1 a=q b=q", 2, q(2), q(2), u, mq(2), mq(3), u, q(-1), q(1), q(1))),
         canonical(tp("s=2 alpha=q^4 beta=-q c=-q^2 d=q^3 z=q^-2 a=1 b=q", 2, q(4), mq(1), u, mq(2), q(3), u, q(-2), one_m, q(1))),
         tp("s=1 alpha=q beta=3 c=-q d=2q z=q/2 a=1 b=-1", 1, q(1), q(0, 3), u, mq(1), q(1, 2), u, q(1, frac(1, 2)), one_m, m_one),
         tp("s=1 alpha=q^2 beta=q c=q^3/2 d=-2 z=1 a=-q b=3q^2", 1, q(2), q(1), u, q(3, frac(1, 2)), q(0, -2), u, one_m, mq(1), q(2, 3)),
         tp("s=3 alpha=q^3 beta=-1 c=q d=-q^2 z=q a=q b=2", 3, q(3), m_one, u, q(1), mq(2), u, q(1), q(1), q(0, 2))},
        Shape::three_two, false));

    out.push_back(transform(
        "eq-1-3",
        "(alpha q,alpha ab/q;q)/(alpha a,alpha b;q) 3phi2(q/a,q/b,beta;c,d;q,alpha ab/q) = "
        "sum (1-alpha q^{2n})(alpha,q/a,q/b;q)_n (-alpha ab/q)^n q^{n(n-1)/2}/((1-alpha)(q,alpha a,alpha b;q)_n) "
        "3phi2(q^-n,alpha q^n,beta;c,d;q,q)",
        {canonical(tp("s=2 alpha=q^2 beta=-1 c=q d=-q^2 a=1 b=q", 2, q(2), m_one, u, q(1), mq(2), u, u, one_m, q(1))),
         tp("s=2 alpha=q^2 beta=q c=-q^2 d=q^3 a=1 b=q", 2, q(2), q(1), u, mq(2), q(3), u, u, one_m, q(1)),
         tp("s=2 alpha=q^4 beta=q c=-q^2 d=q^3 a=-1 b=q", 2, q(4), q(1), u, mq(2), q(3), u, u, m_one, q(1)),
         canonical(tp("s=2 alpha=q^2 beta=-1 c=q d=-q^2 a=q b=-q", 2, q(2), m_one, u, q(1), mq(2), u, u, q(1), mq(1))),
         tp("s=1 alpha=q beta=2 c=3q d=-q a=-q b=1/2", 1, q(1), q(0, 2), u, q(1, 3), mq(1), u, u, mq(1), q(0, frac(1, 2))),
         tp("s=3 alpha=q^2 beta=-q c=q/2 d=5q^2 a=2 b=q^2", 3, q(2), mq(1), u, q(1, frac(1, 2)), q(2, 5), u, u, q(0, 2), q(2))},
        Shape::three_two, true));

    out.push_back(transform(
        "eq-t2-9",
        "(alpha q,alpha ab/q;q)/(alpha a,alpha b;q) 2phi1(q/a,q/b;c;q,alpha abz/q) = "
        "sum (1-alpha q^{2n})(alpha,q/a,q/b;q)_n (-alpha ab/q)^n q^{n(n-1)/2}/((1-alpha)(q,alpha a,alpha b;q)_n) "
        "2phi1(q^-n,alpha q^n;c;q,qz)",
        {canonical(tp("s=1 alpha=q^2 c=-q z=q^-1 a=-1 b=q^2", 1, q(2), u, u, mq(1), u, u, q(-1), m_one, q(2))),
         canonical(tp("s=2 alpha=q^2 c=q z=q^-2 a=q b=-q^3", 2, q(2), u, u, q(1), u, u, q(-2), q(1), mq(3))),
         tp("s=1 alpha=q c=2 z=1 a=-q b=2q", 1, q(1), u, u, q(0, 2), u, u, one_m, mq(1), q(1, 2)),
         tp("s=2 alpha=q^4 c=-q z=q^-1 a=-1 b=q", 2, q(4), u, u, mq(1), u, u, q(-1), m_one, q(1)),
         tp("s=1 alpha=1/2 c=q z=q a=-q b=q^2", 1, q(0, frac(1, 2)), u, u, q(1), u, u, q(1), mq(1), q(2)),
         tp("s=3 alpha=q c=-1 z=q^2 a=q b=1", 3, q(1), u, u, m_one, u, u, q(2), q(1), one_m)},
        Shape::two_one, false));
}

std::vector<IdentityRecord> build_registry()
{
    std::vector<IdentityRecord> out;
    add_classical(out);
    add_univariate(out);
    add_parameterized(out);
    add_specializations(out);
    add_finite(out);
    add_transforms(out);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    return out;
}

std::vector<IdentityRecord> build_controls()
{
    // The RHS of liu-412 with an extra (-1)^n.
    std::vector<IdentityRecord> out;
    out.push_back(univariate("liu-412-uncorrected",
                             "sum q^{n^2}/(q^2;q^2)_n = 1/(q;q)_inf sum sum (-1)^{n+j} (1-q^{2n+1}) q^{n^2+j^2} (wrong sign)",
                             expr({piece(Sum().exp(1).den(q(2), 2))}),
                             expr({with(prod(1, {{q(), 1, -1}}), Hk(Region::j_full).exp(1, 0, 1).sign_n().sign_j().times(-1, 2, 1))}),
                             300));
    return out;
}

} // namespace

const std::vector<IdentityRecord>& registry()
{
    static const std::vector<IdentityRecord> r = build_registry();
    return r;
}

const std::vector<IdentityRecord>& negative_controls()
{
    static const std::vector<IdentityRecord> r = build_controls();
    return r;
}

} // namespace qseries
