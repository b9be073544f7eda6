#include "qseries/hypergeom.hpp"

#include <climits>

namespace qseries {

namespace {

int integral_exponent(const Rational& e, const std::string& where)
{
    if (e.get_den() != 1) {
        throw HypergeomError(HypergeomError::Kind::non_integer_exponent,
                             "non-integer q-exponent " + to_exact_string(e) + " in " + where);
    }
    if (!e.get_num().fits_sint_p()) {
        throw HypergeomError(HypergeomError::Kind::invalid_spec, "q-exponent out of range in " + where);
    }
    return static_cast<int>(e.get_num().get_si());
}

Rational rational_power(const Rational& r, int k)
{
    if (k < 0) {
        if (r == 0) {
            throw HypergeomError(HypergeomError::Kind::invalid_spec, "negative power of a zero ratio");
        }
        return rational_power(1 / r, -k);
    }
    Rational out = 1;
    for (int i = 0; i < k; ++i) {
        out *= r;
    }
    return out;
}

// Everything needed to advance from term n-1 to term n.
struct Step {
    SparsePoly ratio;
    std::vector<Monomial> den; // divide by (1 + m)
    long mu = 0;
    SparsePoly extra{Rational(1)};
    std::vector<Monomial> extra_den;
    std::optional<long> vp;
};

long denominator_shift(const Monomial& m, const Weights& w)
{
    long wm = m.weight(w);
    return wm < 0 ? -wm : 0;
}

class StepBuilder {
public:
    StepBuilder(const TermSumSpec& spec, const Weights& w) : spec_(spec), w_(w)
    {
        for (const auto* list : {&spec.numerator, &spec.denominator}) {
            for (const auto& p : *list) {
                if (p.step < 1 || p.count.mult < 0) {
                    throw HypergeomError(HypergeomError::Kind::invalid_spec, "pochhammer counts must be nondecreasing");
                }
            }
        }
        for (const auto& s : spec.shifted) {
            if (s.count.mult < 0) {
                throw HypergeomError(HypergeomError::Kind::invalid_spec, "shifted product counts must be nondecreasing");
            }
        }
    }

    Rational exponent(int n) const
    {
        Rational e = spec_.q_exponent.at(n);
        e += Rational(spec_.phi_sign_power) * spec_.phi_step * n * (n - 1) / 2;
        return e;
    }

    Step make(int n) const
    {
        Step st;
        int sign = spec_.sign_exponent + spec_.phi_sign_power;
        int e_now = integral_exponent(exponent(n), "summand exponent at n=" + std::to_string(n));
        if (n == spec_.start) {
            Rational c = spec_.scale * rational_power(spec_.ratio, n);
            if ((long(sign) * n) % 2 != 0) {
                c = -c;
            }
            st.ratio = SparsePoly(Monomial{c, e_now, spec_.alpha * n, spec_.beta * n});
        }
        else {
            int e_prev = integral_exponent(exponent(n - 1), "summand exponent at n=" + std::to_string(n - 1));
            Rational c = sign % 2 != 0 ? Rational(-spec_.ratio) : spec_.ratio;
            st.ratio = SparsePoly(Monomial{c, e_now - e_prev, spec_.alpha, spec_.beta});
        }
        for (const auto& p : spec_.numerator) {
            for_new_factors(p.count, n, [&](int k) {
                Monomial m{-p.x.coeff, p.x.e_q + p.start + k * p.step, p.x.e_a, p.x.e_b};
                st.ratio *= SparsePoly::binomial(Rational(1), m);
            });
        }
        for (const auto& s : spec_.shifted) {
            for_new_factors(s.count, n, [&](int k) {
                st.ratio *= SparsePoly(s.x) - SparsePoly(Monomial::q_power(s.start + k * s.step));
            });
        }
        for (const auto& p : spec_.denominator) {
            for_new_factors(p.count, n, [&](int k) {
                st.den.push_back(Monomial{-p.x.coeff, p.x.e_q + p.start + k * p.step, p.x.e_a, p.x.e_b});
            });
        }
        if (auto v = st.ratio.valuation(w_)) {
            st.mu = *v;
        }
        for (const auto& m : st.den) {
            st.mu += denominator_shift(m, w_);
        }

        for (const auto& f : spec_.factors) {
            Monomial m{f.c, f.slope * n + f.offset, 0, 0};
            if (f.inverse) {
                st.extra_den.push_back(m);
            }
            else {
                st.extra *= SparsePoly::binomial(Rational(1), m);
            }
        }
        if (spec_.inner) {
            st.extra *= inner_sum(*spec_.inner, n);
        }
        if (auto v = st.extra.valuation(w_)) {
            long vp = *v;
            for (const auto& m : st.extra_den) {
                vp += denominator_shift(m, w_);
            }
            st.vp = vp;
        }
        return st;
    }

    bool vanishes(const Step& st) const { return st.ratio.is_zero(); }

private:
    template <class F>
    void for_new_factors(const Affine& count, int n, F&& f) const
    {
        int hi = count.at(n);
        int lo = n == spec_.start ? 0 : count.at(n - 1);
        if (hi < 0 || lo < 0) {
            throw HypergeomError(HypergeomError::Kind::invalid_spec, "negative pochhammer length at n=" + std::to_string(n));
        }
        for (int k = lo; k < hi; ++k) {
            f(k);
        }
    }

    static SparsePoly inner_sum(const InnerSum& in, int n)
    {
        SparsePoly s;
        for (int j = in.lo.at(n); j <= in.hi.at(n); ++j) {
            Rational e = in.jj * j * j + in.nj * n * j + in.j1 * j;
            int ej = integral_exponent(e, "inner sum at n=" + std::to_string(n) + ", j=" + std::to_string(j));
            bool neg = in.sign_j != 0 && j % 2 != 0;
            s += SparsePoly(Monomial::q_power(ej, Rational(neg ? -1 : 1)));
        }
        return s;
    }

    const TermSumSpec& spec_;
    Weights w_;
};

} // namespace

TermSumSpec phi_spec(const std::vector<Monomial>& numerator, const std::vector<Monomial>& denominator, int step,
                     const Monomial& argument)
{
    TermSumSpec spec;
    for (const auto& a : numerator) {
        spec.numerator.push_back(TermPochhammer{a, 0, step, Affine{1, 0}});
    }
    spec.denominator.push_back(TermPochhammer{Monomial::q_power(step), 0, step, Affine{1, 0}});
    for (const auto& b : denominator) {
        spec.denominator.push_back(TermPochhammer{b, 0, step, Affine{1, 0}});
    }
    spec.ratio = argument.coeff;
    spec.q_exponent.n1 = argument.e_q;
    spec.alpha = argument.e_a;
    spec.beta = argument.e_b;
    spec.phi_sign_power = 1 + static_cast<int>(denominator.size()) - static_cast<int>(numerator.size());
    spec.phi_step = step;
    return spec;
}

template <class C>
TruncatedSeries<C> build_term_sum(const TermSumSpec& spec, long order, Weights w)
{
    StepBuilder builder(spec, w);
    std::vector<Step> steps;
    long base = 0;
    long best = LONG_MIN;
    int stall = 0;
    int above = 0;
    constexpr std::size_t max_terms = 1'000'000;
    for (int n = spec.start;; ++n) {
        if (spec.stop && n > *spec.stop) {
            break;
        }
        Step st = builder.make(n);
        if (builder.vanishes(st)) {
            break; // this and every later term is zero
        }
        base += st.mu;
        long lb = st.vp ? base + *st.vp : LONG_MAX;
        steps.push_back(std::move(st));
        if (spec.stop) {
            continue;
        }
        if (lb >= order) {
            if (++above >= divergence_window) {
                steps.resize(steps.size() - divergence_window);
                break;
            }
        }
        else {
            above = 0;
        }
        if (lb > best) {
            best = lb;
            stall = 0;
        }
        else if (++stall >= divergence_window && lb < order) {
            throw HypergeomError(HypergeomError::Kind::divergent,
                                 "term weights stopped increasing near n=" + std::to_string(n));
        }
        if (steps.size() > max_terms) {
            throw HypergeomError(HypergeomError::Kind::divergent, "term sum did not reach the truncation order");
        }
    }

    TruncatedSeries<C> sum(order, w);
    if (steps.empty()) {
        return sum;
    }
    // Working order needed for the running product after step i.
    std::vector<std::optional<long>> need(steps.size());
    for (std::size_t i = steps.size(); i-- > 0;) {
        std::optional<long> req;
        if (steps[i].vp) {
            req = order - *steps[i].vp;
        }
        if (i + 1 < steps.size() && need[i + 1]) {
            long later = *need[i + 1] - steps[i + 1].mu;
            req = req ? std::max(*req, later) : later;
        }
        need[i] = req;
    }
    if (!need[0]) {
        return sum;
    }
    TruncatedSeries<C> running = TruncatedSeries<C>::one(*need[0] - steps[0].mu, w);
    for (std::size_t i = 0; i < steps.size() && need[i]; ++i) {
        const Step& st = steps[i];
        running.mul_poly(st.ratio);
        for (const auto& m : st.den) {
            running.div_binomial(Rational(1), m);
        }
        running.truncate(*need[i]);
        if (!st.vp) {
            continue;
        }
        TruncatedSeries<C> term = running;
        term.mul_poly(st.extra);
        for (const auto& m : st.extra_den) {
            term.div_binomial(Rational(1), m);
        }
        if (term.order() < order) {
            throw std::logic_error("term sum working order underestimated");
        }
        term.truncate(order);
        sum += term;
    }
    return sum;
}

template TruncatedSeries<Rational> build_term_sum<Rational>(const TermSumSpec&, long, Weights);
template TruncatedSeries<Integer> build_term_sum<Integer>(const TermSumSpec&, long, Weights);
template TruncatedSeries<ParamPoly> build_term_sum<ParamPoly>(const TermSumSpec&, long, Weights);

SparsePoly finite_pochhammer(const Monomial& x, int step, int n)
{
    SparsePoly p(Rational(1));
    for (int k = 0; k < n; ++k) {
        p *= SparsePoly::binomial(Rational(1), Monomial{-x.coeff, x.e_q + step * k, x.e_a, x.e_b});
    }
    return p;
}

RationalFunction finite_phi_exact(const FinitePhiSpec& spec)
{
    const int n = spec.n;
    const int s = spec.step;
    if (n < 0 || s < 1) {
        throw HypergeomError(HypergeomError::Kind::invalid_spec, "finite phi needs n >= 0 and step >= 1");
    }
    bool terminates = false;
    for (const auto& a : spec.numerator) {
        terminates = terminates || a == Monomial::q_power(-s * n);
    }
    if (!terminates) {
        throw HypergeomError(HypergeomError::Kind::invalid_spec, "finite phi needs a numerator parameter q^{-step n}");
    }
    auto check_plain = [](const Monomial& m) {
        if (m.has_params()) {
            throw HypergeomError(HypergeomError::Kind::invalid_spec, "finite phi parameters must be monomials in q");
        }
    };
    for (const auto* list : {&spec.numerator, &spec.denominator}) {
        for (const auto& m : *list) {
            check_plain(m);
        }
    }
    check_plain(spec.argument);

    // cof[k] = prod over k <= t < n of the t-th denominator factors, so every
    // term shares the denominator cof[0].
    std::vector<SparsePoly> cof(static_cast<std::size_t>(n) + 1, SparsePoly(Rational(1)));
    for (int k = n - 1; k >= 0; --k) {
        SparsePoly f = SparsePoly::binomial(Rational(1), Monomial::q_power(s * (k + 1), Rational(-1)));
        for (const auto& b : spec.denominator) {
            f *= SparsePoly::binomial(Rational(1), Monomial{-b.coeff, b.e_q + s * k, 0, 0});
        }
        if (f.is_zero()) {
            throw SeriesError(SeriesError::Kind::pole, "finite phi denominator vanishes at k=" + std::to_string(k));
        }
        cof[k] = cof[k + 1] * f;
    }
    const int p = 1 + static_cast<int>(spec.denominator.size()) - static_cast<int>(spec.numerator.size());
    SparsePoly num;
    SparsePoly rising(Rational(1));
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            for (const auto& a : spec.numerator) {
                rising *= SparsePoly::binomial(Rational(1), Monomial{-a.coeff, a.e_q + s * (k - 1), 0, 0});
            }
        }
        if (rising.is_zero()) {
            break;
        }
        Monomial z = pow(spec.argument, k);
        Monomial norm{Rational((p * k) % 2 != 0 ? -1 : 1), p * s * k * (k - 1) / 2, 0, 0};
        num += rising * SparsePoly(z * norm) * cof[k];
    }
    return RationalFunction(num, cof[0]);
}

TruncatedSeries<Rational> to_series(const RationalFunction& f, long order)
{
    if (f.num.has_params() || f.den.has_params()) {
        throw SeriesError(SeriesError::Kind::weight_mismatch, "rational function with parameters");
    }
    TruncatedSeries<Rational> out(order);
    if (f.num.is_zero()) {
        return out;
    }
    int vn = f.num.terms().begin()->first.e_q;
    int vd = f.den.terms().begin()->first.e_q;
    long inner = order - (vn - vd);
    if (inner <= 0) {
        return out;
    }
    SparsePoly den = f.den * SparsePoly(Monomial::q_power(-vd));
    SparsePoly num = f.num * SparsePoly(Monomial::q_power(-vn));
    TruncatedSeries<Rational> s = TruncatedSeries<Rational>::from_poly(den, inner).inverse();
    s.mul_poly(num);
    s.mul_monomial(Monomial::q_power(vn - vd));
    return s;
}

TruncatedSeries<Rational> finite_phi(const FinitePhiSpec& spec, long order) { return to_series(finite_phi_exact(spec), order); }

} // namespace qseries
