#include "qseries/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qseries {

SparsePoly::SparsePoly(const Rational& c)
{
    add_term(Key{}, c);
}

SparsePoly::SparsePoly(const Monomial& m)
{
    add_term(Key{m.e_q, m.e_a, m.e_b}, m.coeff);
}

void SparsePoly::add_term(const Key& k, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

std::vector<Monomial> SparsePoly::monomials() const
{
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) {
        out.push_back(Monomial{c, k.e_q, k.e_a, k.e_b});
    }
    return out;
}

Rational SparsePoly::coefficient(int e_q, int e_a, int e_b) const
{
    auto it = terms_.find(Key{e_q, e_a, e_b});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<long> SparsePoly::valuation(const Weights& w) const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    long v = std::numeric_limits<long>::max();
    for (const auto& [k, c] : terms_) {
        v = std::min(v, long(w.q) * k.e_q + long(w.a) * k.e_a + long(w.b) * k.e_b);
    }
    return v;
}

bool SparsePoly::has_params() const
{
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.e_a != 0 || t.first.e_b != 0; });
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o)
{
    for (const auto& [k, c] : o.terms_) {
        add_term(k, c);
    }
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o)
{
    for (const auto& [k, c] : o.terms_) {
        add_term(k, -c);
    }
    return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o)
{
    SparsePoly r;
    for (const auto& [kx, cx] : terms_) {
        for (const auto& [ky, cy] : o.terms_) {
            r.add_term(Key{kx.e_q + ky.e_q, kx.e_a + ky.e_a, kx.e_b + ky.e_b}, cx * cy);
        }
    }
    *this = std::move(r);
    return *this;
}

SparsePoly SparsePoly::operator-() const
{
    SparsePoly r(*this);
    for (auto& [k, c] : r.terms_) {
        c = -c;
    }
    return r;
}

SparsePoly SparsePoly::negate_q() const
{
    SparsePoly r(*this);
    for (auto& [k, c] : r.terms_) {
        if (k.e_q % 2 != 0) {
            c = -c;
        }
    }
    return r;
}

std::string SparsePoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& m : monomials()) {
        os << (first ? "" : " + ") << m.to_string();
        first = false;
    }
    return os.str();
}

RationalFunction::RationalFunction(SparsePoly n, SparsePoly d) : num(std::move(n)), den(std::move(d))
{
    if (den.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o)
{
    if (den == o.den) {
        num += o.num;
        return *this;
    }
    num = num * o.den + o.num * den;
    den *= o.den;
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o)
{
    num *= o.num;
    den *= o.den;
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o)
{
    if (o.num.is_zero()) {
        throw std::domain_error("division by a zero rational function");
    }
    num *= o.den;
    den *= o.num;
    return *this;
}

} // namespace qseries
