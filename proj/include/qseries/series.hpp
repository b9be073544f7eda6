#ifndef QSERIES_SERIES_HPP
#define QSERIES_SERIES_HPP

#include "qseries/poly.hpp"
#include "qseries/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qseries {

class SeriesError : public std::runtime_error {
public:
    enum class Kind { weight_mismatch, out_of_order, not_a_unit, non_terminating, zero_into_negative_degree, pole, inexact };
    SeriesError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// ---------------------------------------------------------------------------
// Coefficient traits. `bound` is the exclusive limit on the parameter weight
// of monomials kept in a coefficient (order minus the weight of the q-power).

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
    static Rational zero(const Weights&) { return Rational(0); }
    static Rational constant(const Rational& c, const Weights&) { return c; }
    static bool is_zero(const Rational& c) { return sgn(c) == 0; }
    static long min_param_weight(const Rational&) { return 0; }
    static void truncate(Rational& c, long bound)
    {
        if (bound <= 0) {
            c = 0;
        }
    }
    static void add_mul(Rational& acc, const Rational& x, const Rational& y, long bound)
    {
        if (bound > 0) {
            acc += x * y;
        }
    }
    static void add_mul_monomial(Rational& acc, const Rational& x, const Monomial& m, long bound)
    {
        require_plain(m);
        if (bound > 0) {
            acc += x * m.coeff;
        }
    }
    static void scale(Rational& x, const Rational& c) { x *= c; }
    static std::optional<Rational> as_unit(const Rational& x)
    {
        if (x == 0) {
            return std::nullopt;
        }
        return x;
    }
    static Monomial unit_monomial(const Rational& x, int e) { return Monomial{x, e, 0, 0}; }
    static void for_each_term(const Rational& x, const auto& f)
    {
        if (x != 0) {
            f(ParamDegree{}, x);
        }
    }
    static void require_plain(const Monomial& m)
    {
        if (m.has_params()) {
            throw SeriesError(SeriesError::Kind::weight_mismatch, "parameter monomial applied to a univariate series");
        }
    }
};

template <>
struct CoeffTraits<Integer> {
    static Integer zero(const Weights&) { return Integer(0); }
    static Integer constant(const Rational& c, const Weights&) { return integral(c); }
    static bool is_zero(const Integer& c) { return sgn(c) == 0; }
    static long min_param_weight(const Integer&) { return 0; }
    static void truncate(Integer& c, long bound)
    {
        if (bound <= 0) {
            c = 0;
        }
    }
    static void add_mul(Integer& acc, const Integer& x, const Integer& y, long bound)
    {
        if (bound > 0) {
            acc += x * y;
        }
    }
    static void add_mul_monomial(Integer& acc, const Integer& x, const Monomial& m, long bound)
    {
        CoeffTraits<Rational>::require_plain(m);
        if (bound > 0) {
            acc += x * integral(m.coeff);
        }
    }
    static void scale(Integer& x, const Rational& c) { x *= integral(c); }
    static std::optional<Rational> as_unit(const Integer& x)
    {
        if (x == 1 || x == -1) {
            return Rational(x);
        }
        return std::nullopt;
    }
    static Monomial unit_monomial(const Integer& x, int e) { return Monomial{Rational(x), e, 0, 0}; }
    static void for_each_term(const Integer& x, const auto& f)
    {
        if (x != 0) {
            f(ParamDegree{}, Rational(x));
        }
    }
    static Integer integral(const Rational& c)
    {
        if (c.get_den() != 1) {
            throw SeriesError(SeriesError::Kind::inexact, "non-integral factor in an integer series");
        }
        return c.get_num();
    }
};

template <>
struct CoeffTraits<ParamPoly> {
    static ParamPoly zero(const Weights& w) { return ParamPoly(w); }
    static ParamPoly constant(const Rational& c, const Weights& w) { return ParamPoly(c, w); }
    static bool is_zero(const ParamPoly& c) { return c.is_zero(); }
    static long min_param_weight(const ParamPoly& c) { return c.min_param_weight(); }
    static void truncate(ParamPoly& c, long bound) { c.truncate(bound); }
    static void add_mul(ParamPoly& acc, const ParamPoly& x, const ParamPoly& y, long bound)
    {
        for (const auto& [d, c] : y.terms()) {
            acc.add_scaled_shift(x, c, d, bound);
        }
    }
    static void add_mul_monomial(ParamPoly& acc, const ParamPoly& x, const Monomial& m, long bound)
    {
        acc.add_scaled_shift(x, m.coeff, ParamDegree{m.e_a, m.e_b}, bound);
    }
    static void scale(ParamPoly& x, const Rational& c) { x *= c; }
    static std::optional<Rational> as_unit(const ParamPoly& x)
    {
        if (x.size() == 1 && x.terms().begin()->first == ParamDegree{}) {
            return x.terms().begin()->second;
        }
        return std::nullopt;
    }
    static void for_each_term(const ParamPoly& x, const auto& f)
    {
        for (const auto& [d, c] : x.terms()) {
            f(d, c);
        }
    }
};

/// Largest q-exponent e with w_q * e < order.
inline int max_exponent(long order, const Weights& w)
{
    long num = order - 1;
    long e = num >= 0 ? num / w.q : -((-num + w.q - 1) / w.q);
    return static_cast<int>(e);
}

/// Formal Laurent series in q whose coefficients live in C, truncated by
/// weighted total degree: a monomial q^e a^i b^j is kept iff its weight
/// w_q*e + w_a*i + w_b*j is below order().
template <class C>
class TruncatedSeries {
public:
    using Traits = CoeffTraits<C>;

    explicit TruncatedSeries(long order = 0, Weights w = {}) : order_(order), w_(w) {}

    static TruncatedSeries constant(const Rational& c, long order, Weights w = {})
    {
        TruncatedSeries s(order, w);
        s.add_coefficient(0, Traits::constant(c, w));
        return s;
    }
    static TruncatedSeries one(long order, Weights w = {}) { return constant(Rational(1), order, w); }
    static TruncatedSeries from_monomial(const Monomial& m, long order, Weights w = {})
    {
        TruncatedSeries s = one(order - m.weight(w), w);
        s.mul_monomial(m);
        s.order_ = order;
        s.truncate_coefficients();
        return s;
    }
    static TruncatedSeries from_poly(const SparsePoly& p, long order, Weights w = {})
    {
        TruncatedSeries s(order, w);
        for (const auto& m : p.monomials()) {
            s += from_monomial(m, order, w);
        }
        return s;
    }

    long order() const noexcept { return order_; }
    const Weights& weights() const noexcept { return w_; }
    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const C& c) { return Traits::is_zero(c); });
    }
    /// Minimal q-exponent with a nonzero coefficient; 0 for the zero series.
    int floor() const
    {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!Traits::is_zero(c_[i])) {
                return lo_ + static_cast<int>(i);
            }
        }
        return 0;
    }
    /// Maximal q-exponent with a nonzero coefficient; floor()-1 when zero.
    int top() const
    {
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (!Traits::is_zero(c_[i])) {
                return lo_ + static_cast<int>(i);
            }
        }
        return floor() - 1;
    }
    /// Smallest weight of a stored monomial; nullopt when zero.
    std::optional<long> valuation() const
    {
        std::optional<long> v;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (Traits::is_zero(c_[i])) {
                continue;
            }
            long w = long(w_.q) * (lo_ + long(i)) + Traits::min_param_weight(c_[i]);
            v = v ? std::min(*v, w) : w;
        }
        return v;
    }

    C coefficient(int e) const
    {
        if (long(w_.q) * e >= order_) {
            throw SeriesError(SeriesError::Kind::out_of_order,
                              "coefficient of q^" + std::to_string(e) + " is beyond truncation order " + std::to_string(order_));
        }
        if (const C* c = find(e)) {
            return *c;
        }
        return Traits::zero(w_);
    }
    const C* find(int e) const
    {
        if (e < lo_ || e >= lo_ + static_cast<int>(c_.size())) {
            return nullptr;
        }
        return &c_[static_cast<std::size_t>(e - lo_)];
    }
    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!Traits::is_zero(c_[i])) {
                f(lo_ + static_cast<int>(i), c_[i]);
            }
        }
    }

    /// coefficient(e) += c, dropping monomials at or above the order.
    void add_coefficient(int e, const C& c)
    {
        if (e > max_exponent(order_, w_) || Traits::is_zero(c)) {
            return;
        }
        C& slot = at(e);
        slot += c;
        Traits::truncate(slot, bound_at(e));
    }

    void truncate(long order)
    {
        if (order < order_) {
            order_ = order;
            truncate_coefficients();
        }
    }
    TruncatedSeries truncated(long order) const
    {
        TruncatedSeries s(*this);
        s.truncate(order);
        return s;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o)
    {
        check_weights(o);
        truncate(o.order_);
        o.for_each([&](int e, const C& c) { add_coefficient(e, c); });
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this += -o; }
    TruncatedSeries operator-() const
    {
        TruncatedSeries s(*this);
        for (auto& c : s.c_) {
            Traits::scale(c, Rational(-1));
        }
        return s;
    }
    friend TruncatedSeries operator+(TruncatedSeries x, const TruncatedSeries& y) { return x += y; }
    friend TruncatedSeries operator-(TruncatedSeries x, const TruncatedSeries& y) { return x -= y; }

    TruncatedSeries& scale(const Rational& k)
    {
        for (auto& c : c_) {
            Traits::scale(c, k);
        }
        return *this;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        x.check_weights(y);
        long vx = x.valuation().value_or(x.order_);
        long vy = y.valuation().value_or(y.order_);
        long order = std::min(x.order_ + vy, y.order_ + vx);
        TruncatedSeries r(order, x.w_);
        if (x.is_zero() || y.is_zero()) {
            return r;
        }
        int emax = max_exponent(order, x.w_);
        int lo = x.floor() + y.floor();
        int hi = std::min(emax, x.top() + y.top());
        if (hi < lo) {
            return r;
        }
        r.reserve_range(lo, hi);
        x.for_each([&](int ex, const C& cx) {
            y.for_each([&](int ey, const C& cy) {
                int e = ex + ey;
                if (e > emax) {
                    return;
                }
                Traits::add_mul(r.at(e), cx, cy, r.bound_at(e));
            });
        });
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    /// Exact shift by a monomial; the order moves by the monomial's weight.
    void mul_monomial(const Monomial& m)
    {
        long new_order = order_ + m.weight(w_);
        if (m.is_zero()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        TruncatedSeries r(new_order, w_);
        for_each([&](int e, const C& c) {
            int ne = e + m.e_q;
            if (ne > max_exponent(new_order, w_)) {
                return;
            }
            Traits::add_mul_monomial(r.at(ne), c, m, r.bound_at(ne));
        });
        *this = std::move(r);
    }

    /// Multiply by an exact polynomial; the order moves by its valuation.
    void mul_poly(const SparsePoly& p)
    {
        auto v = p.valuation(w_);
        if (!v) {
            c_.clear();
            lo_ = 0;
            return;
        }
        long new_order = order_ + *v;
        TruncatedSeries r(new_order, w_);
        int emax = max_exponent(new_order, w_);
        auto monos = p.monomials();
        for_each([&](int e, const C& c) {
            for (const auto& m : monos) {
                int ne = e + m.e_q;
                if (ne > emax) {
                    continue;
                }
                Traits::add_mul_monomial(r.at(ne), c, m, r.bound_at(ne));
            }
        });
        *this = std::move(r);
    }

    /// Multiply by (c0 + m).
    void mul_binomial(const Rational& c0, const Monomial& m) { mul_poly(SparsePoly::binomial(c0, m)); }

    /// Divide by (c0 + m). Requires the lowest-weight part of the binomial to
    /// be a single unit monomial.
    void div_binomial(const Rational& c0, const Monomial& m)
    {
        long wm = m.weight(w_);
        if (m.is_zero() || (wm == 0 && !m.has_params() && m.e_q == 0)) {
            Rational d = c0 + (m.is_zero() ? Rational(0) : m.coeff);
            if (d == 0) {
                throw SeriesError(SeriesError::Kind::pole, "division by a vanishing factor");
            }
            scale_inverse(d);
            return;
        }
        if (c0 == 0) {
            mul_monomial(pow(m, -1));
            return;
        }
        if (wm == 0) {
            throw SeriesError(SeriesError::Kind::not_a_unit, "binomial with two lowest-weight terms is not invertible: " + m.to_string());
        }
        if (wm < 0) {
            if (m.has_params()) {
                // The expansion in powers of c0/m has unbounded q-degree at bounded weight.
                throw SeriesError(SeriesError::Kind::not_a_unit,
                                  "negative-weight parameter binomial cannot be inverted: " + m.to_string());
            }
            // c0 + m = m (1 + c0/m)
            Monomial inv = pow(m, -1);
            mul_monomial(inv);
            div_binomial(Rational(1), Monomial{c0 * inv.coeff, inv.e_q, inv.e_a, inv.e_b});
            return;
        }
        divide_positive(c0, m);
    }

    /// Multiplicative inverse. The lowest-weight monomial must be unique and
    /// a unit of the coefficient ring.
    TruncatedSeries inverse() const;

    /// q -> -q
    TruncatedSeries negate_q() const
    {
        TruncatedSeries s(*this);
        for (std::size_t i = 0; i < s.c_.size(); ++i) {
            if ((s.lo_ + static_cast<long>(i)) % 2 != 0) {
                Traits::scale(s.c_[i], Rational(-1));
            }
        }
        return s;
    }

    void check_weights(const TruncatedSeries& o) const
    {
        if (!(w_ == o.w_)) {
            throw SeriesError(SeriesError::Kind::weight_mismatch, "series with different weights");
        }
    }

private:
    long bound_at(int e) const { return order_ - long(w_.q) * e; }

    void reserve_range(int lo, int hi)
    {
        at(lo);
        at(hi);
    }

    C& at(int e)
    {
        if (c_.empty()) {
            lo_ = e;
            c_.push_back(Traits::zero(w_));
            return c_.front();
        }
        if (e < lo_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - e), Traits::zero(w_));
            lo_ = e;
        }
        else if (e >= lo_ + static_cast<int>(c_.size())) {
            c_.resize(static_cast<std::size_t>(e - lo_ + 1), Traits::zero(w_));
        }
        return c_[static_cast<std::size_t>(e - lo_)];
    }

    void truncate_coefficients()
    {
        int emax = max_exponent(order_, w_);
        if (!c_.empty() && lo_ + static_cast<int>(c_.size()) - 1 > emax) {
            long keep = std::max<long>(0, long(emax) - lo_ + 1);
            c_.resize(static_cast<std::size_t>(keep), Traits::zero(w_));
        }
        for (std::size_t i = 0; i < c_.size(); ++i) {
            Traits::truncate(c_[i], bound_at(lo_ + static_cast<int>(i)));
        }
    }

    void scale_inverse(const Rational& d)
    {
        Rational inv = 1 / d;
        for (auto& c : c_) {
            Traits::scale(c, inv);
        }
    }

    void divide_positive(const Rational& c0, const Monomial& m);

    long order_;
    Weights w_;
    int lo_ = 0;
    std::vector<C> c_;
};

template <class C>
void TruncatedSeries<C>::divide_positive(const Rational& c0, const Monomial& m)
{
    // f = s/c0 + (-m/c0) f
    Rational inv_c0 = 1 / c0;
    Monomial neg_m{-m.coeff * inv_c0, m.e_q, m.e_a, m.e_b};
    if (c_.empty()) {
        return;
    }
    scale_inverse(c0);
    if (m.e_q > 0) {
        int emax = max_exponent(order_, w_);
        int lo = lo_;
        at(emax);
        for (int e = lo + m.e_q; e <= emax; ++e) {
            const C& prev = c_[static_cast<std::size_t>(e - m.e_q - lo_)];
            if (Traits::is_zero(prev)) {
                continue;
            }
            C& fe = c_[static_cast<std::size_t>(e - lo_)];
            Traits::add_mul_monomial(fe, prev, neg_m, bound_at(e));
        }
    }
    else {
        // Neumann series in -m/c0; terminates because m has positive weight.
        TruncatedSeries term(*this);
        while (!term.is_zero()) {
            term.mul_monomial(neg_m);
            term.truncate(order_);
            *this += term;
        }
    }
    truncate_coefficients();
}

template <class C>
TruncatedSeries<C> TruncatedSeries<C>::inverse() const
{
    if (is_zero()) {
        throw SeriesError(SeriesError::Kind::not_a_unit, "zero series is not invertible");
    }
    // Locate the unique lowest-weight monomial u.
    std::optional<long> best;
    int count = 0;
    Monomial u;
    for_each([&](int e, const C& c) {
        Traits::for_each_term(c, [&](const ParamDegree& d, const Rational& v) {
            long wt = long(w_.q) * e + long(w_.a) * d.a + long(w_.b) * d.b;
            if (!best || wt < *best) {
                best = wt;
                count = 1;
                u = Monomial{v, e, d.a, d.b};
            }
            else if (wt == *best) {
                ++count;
            }
        });
    });
    if (count != 1) {
        throw SeriesError(SeriesError::Kind::not_a_unit, "lowest-weight part of the series is not a single monomial");
    }
    if constexpr (std::is_same_v<C, Integer>) {
        if (u.coeff != 1 && u.coeff != -1) {
            throw SeriesError(SeriesError::Kind::not_a_unit, "lowest coefficient is not a unit of the integers");
        }
    }
    Monomial u_inv = pow(u, -1);
    TruncatedSeries s(*this);
    s.mul_monomial(u_inv); // now 1 + r, with r of positive weight
    long work_order = s.order_;
    TruncatedSeries g(work_order, w_);
    bool has_negative_q = s.floor() < 0;
    if (has_negative_q) {
        // Neumann series: sum (-r)^t
        TruncatedSeries r = s - one(work_order, w_);
        TruncatedSeries term = one(work_order, w_);
        g = term;
        while (!term.is_zero()) {
            term = -(term * r);
            term.truncate(work_order);
            g += term;
        }
    }
    else {
        const C* r0p = s.find(0);
        C r0 = r0p ? *r0p : Traits::zero(w_);
        r0 -= Traits::constant(Rational(1), w_);
        int emax = max_exponent(work_order, w_);
        int top_s = s.top();
        for (int e = 0; e <= emax; ++e) {
            C h = e == 0 ? Traits::constant(Rational(1), w_) : Traits::zero(w_);
            for (int k = 1; k <= std::min(e, top_s); ++k) {
                const C* rk = s.find(k);
                const C* gk = g.find(e - k);
                if (!rk || !gk || Traits::is_zero(*rk) || Traits::is_zero(*gk)) {
                    continue;
                }
                C neg = *rk;
                Traits::scale(neg, Rational(-1));
                Traits::add_mul(h, *gk, neg, g.bound_at(e));
            }
            // g_e = h - r0 g_e
            C ge = h;
            C term = h;
            while (!Traits::is_zero(r0) && !Traits::is_zero(term)) {
                C next = Traits::zero(w_);
                C neg_r0 = r0;
                Traits::scale(neg_r0, Rational(-1));
                Traits::add_mul(next, term, neg_r0, g.bound_at(e));
                ge += next;
                term = std::move(next);
            }
            Traits::truncate(ge, g.bound_at(e));
            if (!Traits::is_zero(ge)) {
                g.at(e) = std::move(ge);
            }
        }
    }
    g.mul_monomial(u_inv);
    return g;
}

// ---------------------------------------------------------------------------

/// (x q^start; q^step)_count, count = nullopt meaning infinity.
struct PochhammerArg {
    Monomial x;
    int start = 0;
    int step = 1;
    std::optional<int> count;

    Monomial factor(int k) const { return Monomial{x.coeff, x.e_q + start + k * step, x.e_a, x.e_b}; }
};

/// Truncated product prod_k (1 - x q^{start + k step}).
template <class C>
TruncatedSeries<C> pochhammer(const PochhammerArg& arg, long order, Weights w = {})
{
    if (arg.step < 1) {
        throw SeriesError(SeriesError::Kind::non_terminating, "pochhammer step must be positive");
    }
    if (arg.count && *arg.count < 0) {
        throw SeriesError(SeriesError::Kind::non_terminating, "negative pochhammer length");
    }
    if (!arg.count && arg.x.is_zero()) {
        return TruncatedSeries<C>::one(order, w);
    }
    // Extend the working order by the weight lost to negative-weight factors.
    long deficit = 0;
    int n = 0;
    for (int k = 0;; ++k) {
        if (arg.count && k >= *arg.count) {
            break;
        }
        long wk = arg.factor(k).weight(w);
        if (!arg.count && wk >= order) {
            break;
        }
        if (wk < 0 && !arg.x.is_zero()) {
            deficit -= wk;
        }
        n = k + 1;
    }
    TruncatedSeries<C> s = TruncatedSeries<C>::one(order + deficit, w);
    for (int k = 0; k < n; ++k) {
        Monomial f = arg.factor(k);
        if (f.is_zero()) {
            continue;
        }
        f.coeff = -f.coeff;
        s.mul_binomial(Rational(1), f);
    }
    s.truncate(order);
    return s;
}

/// prod_{k<n} (x - q^{start + k step}) as an exact polynomial; equals
/// (q^start/x; q^step)_n x^n without negative powers of x.
SparsePoly shifted_pochhammer_poly(const Monomial& x, int start, int step, int n);

template <class C>
TruncatedSeries<C> shifted_pochhammer(const Monomial& x, int start, int step, int n, long order, Weights w = {})
{
    return TruncatedSeries<C>::from_poly(shifted_pochhammer_poly(x, start, step, n), order, w);
}

/// Substitute a -> sub_a, b -> sub_b (monomials in q only) and truncate to a
/// univariate series of q-order target_order.
TruncatedSeries<Rational> specialize(const TruncatedSeries<ParamPoly>& s, const Monomial& sub_a, const Monomial& sub_b,
                                     long target_order);

/// Coefficient-ring changes.
TruncatedSeries<ParamPoly> lift(const TruncatedSeries<Rational>& s, Weights w);
TruncatedSeries<Rational> to_rational(const TruncatedSeries<Integer>& s);

/// First differing monomial in (weight, e_q, deg_a, deg_b) order below the
/// common order of the two series.
struct SeriesDifference {
    int e_q = 0;
    int deg_a = 0;
    int deg_b = 0;
    Rational lhs;
    Rational rhs;
};

template <class C>
std::optional<SeriesDifference> first_difference(const TruncatedSeries<C>& x, const TruncatedSeries<C>& y)
{
    x.check_weights(y);
    long order = std::min(x.order(), y.order());
    TruncatedSeries<C> d = x.truncated(order) - y.truncated(order);
    std::optional<std::tuple<long, int, int, int>> best;
    const Weights& w = x.weights();
    d.for_each([&](int e, const C& c) {
        CoeffTraits<C>::for_each_term(c, [&](const ParamDegree& pd, const Rational&) {
            std::tuple<long, int, int, int> key{long(w.q) * e + long(w.a) * pd.a + long(w.b) * pd.b, e, pd.a, pd.b};
            if (!best || key < *best) {
                best = key;
            }
        });
    });
    if (!best) {
        return std::nullopt;
    }
    auto [wt, e, da, db] = *best;
    auto coeff_of = [&](const TruncatedSeries<C>& s) -> Rational {
        const C* c = s.find(e);
        if (!c) {
            return Rational(0);
        }
        Rational out = 0;
        CoeffTraits<C>::for_each_term(*c, [&](const ParamDegree& pd, const Rational& v) {
            if (pd.a == da && pd.b == db) {
                out = v;
            }
        });
        return out;
    };
    return SeriesDifference{e, da, db, coeff_of(x), coeff_of(y)};
}

std::string to_string(const TruncatedSeries<Rational>& s);
std::string to_string(const TruncatedSeries<ParamPoly>& s);

} // namespace qseries

#endif
