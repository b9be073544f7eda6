#include "qseries/ring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace qseries {

Rational make_rational(long num, long den)
{
    if (den == 0) {
        throw RingError(RingError::Kind::not_a_unit, "rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_exact_string(const Rational& r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_exact_string(const Integer& z) { return z.get_str(); }

ParamPoly::ParamPoly(const Rational& c, Weights w) : weights_(w)
{
    if (c != 0) {
        terms_.emplace(ParamDegree{0, 0}, c);
    }
}

ParamPoly ParamPoly::monomial(const Rational& c, int deg_a, int deg_b, Weights w)
{
    ParamPoly p(w);
    if (c != 0) {
        p.terms_.emplace(ParamDegree{deg_a, deg_b}, c);
    }
    return p;
}

Rational ParamPoly::coefficient(int deg_a, int deg_b) const
{
    auto it = terms_.find(ParamDegree{deg_a, deg_b});
    return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::min_param_weight() const noexcept
{
    if (terms_.empty()) {
        return 0;
    }
    int m = std::numeric_limits<int>::max();
    for (const auto& [d, c] : terms_) {
        m = std::min(m, param_weight(d));
    }
    return m;
}

bool ParamPoly::has_negative_degree() const noexcept
{
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.a < 0 || t.first.b < 0; });
}

void ParamPoly::add_term(const ParamDegree& d, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void ParamPoly::add_scaled_shift(const ParamPoly& x, const Rational& c, const ParamDegree& shift, long bound)
{
    check_weights(x);
    if (c == 0) {
        return;
    }
    for (const auto& [d, v] : x.terms_) {
        ParamDegree nd{d.a + shift.a, d.b + shift.b};
        if (param_weight(nd) >= bound) {
            continue;
        }
        add_term(nd, v * c);
    }
}

void ParamPoly::truncate(long bound)
{
    std::erase_if(terms_, [&](const auto& t) { return param_weight(t.first) >= bound; });
}

void ParamPoly::check_weights(const ParamPoly& o) const
{
    if (!(weights_ == o.weights_)) {
        throw RingError(RingError::Kind::mismatch, "parameter polynomials with different weights");
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o)
{
    check_weights(o);
    for (const auto& [d, c] : o.terms_) {
        add_term(d, c);
    }
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o)
{
    check_weights(o);
    for (const auto& [d, c] : o.terms_) {
        add_term(d, -c);
    }
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, v] : terms_) {
        v *= c;
    }
    return *this;
}

ParamPoly ParamPoly::operator-() const
{
    ParamPoly r(*this);
    for (auto& [d, v] : r.terms_) {
        v = -v;
    }
    return r;
}

ParamPoly operator*(const ParamPoly& x, const ParamPoly& y)
{
    x.check_weights(y);
    ParamPoly r(x.weights_);
    for (const auto& [dx, cx] : x.terms_) {
        for (const auto& [dy, cy] : y.terms_) {
            r.add_term(ParamDegree{dx.a + dy.a, dx.b + dy.b}, cx * cy);
        }
    }
    return r;
}

std::string ParamPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << to_exact_string(c);
        if (d.a != 0) {
            os << "*a^" << d.a;
        }
        if (d.b != 0) {
            os << "*b^" << d.b;
        }
    }
    return os.str();
}

ParamPoly inv_unit(const ParamPoly& x)
{
    if (x.size() != 1) {
        throw RingError(RingError::Kind::not_a_unit,
                        x.is_zero() ? "zero is not a unit" : "multi-term polynomial is not a unit: " + x.to_string());
    }
    const auto& [d, c] = *x.terms().begin();
    return ParamPoly::monomial(1 / Rational(c), -d.a, -d.b, x.weights());
}

Rational inv_unit(const Rational& x)
{
    if (x == 0) {
        throw RingError(RingError::Kind::not_a_unit, "zero is not a unit");
    }
    return 1 / x;
}

std::string Monomial::to_string() const
{
    std::ostringstream os;
    os << to_exact_string(coeff);
    if (e_q != 0) {
        os << "*q^" << e_q;
    }
    if (e_a != 0) {
        os << "*a^" << e_a;
    }
    if (e_b != 0) {
        os << "*b^" << e_b;
    }
    return os.str();
}

Monomial pow(const Monomial& m, int k)
{
    if (k < 0) {
        if (m.coeff == 0) {
            throw RingError(RingError::Kind::not_a_unit, "negative power of zero monomial");
        }
        Monomial inv{1 / m.coeff, -m.e_q, -m.e_a, -m.e_b};
        return pow(inv, -k);
    }
    Rational c = 1;
    for (int i = 0; i < k; ++i) {
        c *= m.coeff;
    }
    return {c, m.e_q * k, m.e_a * k, m.e_b * k};
}

namespace {

[[noreturn]] void mismatch()
{
    throw RingError(RingError::Kind::mismatch, "operands belong to different coefficient rings");
}

} // namespace

RingElement ring_add(const RingElement& x, const RingElement& y)
{
    if (x.index() != y.index()) {
        mismatch();
    }
    if (const auto* r = std::get_if<Rational>(&x)) {
        return Rational(*r + std::get<Rational>(y));
    }
    return std::get<ParamPoly>(x) + std::get<ParamPoly>(y);
}

RingElement ring_mul(const RingElement& x, const RingElement& y)
{
    if (x.index() != y.index()) {
        mismatch();
    }
    if (const auto* r = std::get_if<Rational>(&x)) {
        return Rational(*r * std::get<Rational>(y));
    }
    return std::get<ParamPoly>(x) * std::get<ParamPoly>(y);
}

RingElement ring_inv_unit(const RingElement& x)
{
    return std::visit([](const auto& v) -> RingElement { return inv_unit(v); }, x);
}

} // namespace qseries
