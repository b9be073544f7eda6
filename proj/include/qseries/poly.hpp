#ifndef QSERIES_POLY_HPP
#define QSERIES_POLY_HPP

#include "qseries/ring.hpp"

#include <limits>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace qseries {

/// Exact (untruncated) Laurent polynomial in q, a, b. Used for finite
/// products such as the factors of a single summand.
class SparsePoly {
public:
    struct Key {
        int e_q = 0;
        int e_a = 0;
        int e_b = 0;
        friend auto operator<=>(const Key&, const Key&) = default;
    };

    SparsePoly() = default;
    SparsePoly(const Rational& c);
    SparsePoly(const Monomial& m);

    static SparsePoly binomial(const Rational& c0, const Monomial& m) { return SparsePoly(c0) + SparsePoly(m); }

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const noexcept { return terms_; }
    std::vector<Monomial> monomials() const;
    Rational coefficient(int e_q, int e_a = 0, int e_b = 0) const;

    /// Minimum weighted degree; nullopt for zero.
    std::optional<long> valuation(const Weights& w) const;
    bool has_params() const;

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const SparsePoly& o);
    SparsePoly operator-() const;
    friend SparsePoly operator+(SparsePoly x, const SparsePoly& y) { return x += y; }
    friend SparsePoly operator-(SparsePoly x, const SparsePoly& y) { return x -= y; }
    friend SparsePoly operator*(SparsePoly x, const SparsePoly& y) { return x *= y; }
    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    /// q -> -q
    SparsePoly negate_q() const;
    std::string to_string() const;

private:
    void add_term(const Key& k, const Rational& c);
    std::map<Key, Rational> terms_;
};

/// Exact quotient of two Laurent polynomials in q (no parameters).
/// Equality is decided by cross-multiplication; no gcd reduction.
struct RationalFunction {
    SparsePoly num{Rational(0)};
    SparsePoly den{Rational(1)};

    RationalFunction() = default;
    RationalFunction(SparsePoly n) : num(std::move(n)) {}
    RationalFunction(SparsePoly n, SparsePoly d);

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction x, const RationalFunction& y) { return x += y; }
    friend RationalFunction operator*(RationalFunction x, const RationalFunction& y) { return x *= y; }
    friend RationalFunction operator/(RationalFunction x, const RationalFunction& y) { return x /= y; }
    friend bool operator==(const RationalFunction& x, const RationalFunction& y) { return x.num * y.den == y.num * x.den; }
    bool is_zero() const { return num.is_zero(); }
};

} // namespace qseries

#endif
