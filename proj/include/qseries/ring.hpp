#ifndef QSERIES_RING_HPP
#define QSERIES_RING_HPP

#include <gmpxx.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace qseries {

using Integer = mpz_class;
using Rational = mpq_class;

/// Build a canonical rational num/den.
Rational make_rational(long num, long den = 1);

/// "num/den" (or "num" when den == 1); never a float.
std::string to_exact_string(const Rational& r);
std::string to_exact_string(const Integer& z);

class RingError : public std::runtime_error {
public:
    enum class Kind { mismatch, not_a_unit };
    RingError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Grading used for truncation: weight(q^e a^i b^j) = q*e + a*i + b*j.
struct Weights {
    int q = 1;
    int a = 3;
    int b = 3;
    friend bool operator==(const Weights&, const Weights&) = default;
};

struct ParamDegree {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const ParamDegree&, const ParamDegree&) = default;
};

/// Sparse Laurent polynomial in the free parameters a, b over the rationals.
/// Canonical: no stored coefficient is zero.
class ParamPoly {
public:
    using TermMap = std::map<ParamDegree, Rational>;

    ParamPoly() = default;
    explicit ParamPoly(Weights w) : weights_(w) {}
    ParamPoly(const Rational& c, Weights w = {});
    static ParamPoly monomial(const Rational& c, int deg_a, int deg_b, Weights w = {});

    const TermMap& terms() const noexcept { return terms_; }
    const Weights& weights() const noexcept { return weights_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of a^i b^j (zero when absent).
    Rational coefficient(int deg_a, int deg_b) const;
    int param_weight(const ParamDegree& d) const noexcept { return weights_.a * d.a + weights_.b * d.b; }
    /// Smallest parameter weight over stored terms; 0 for the zero polynomial.
    int min_param_weight() const noexcept;
    bool has_negative_degree() const noexcept;

    /// this += c * a^i b^j
    void add_term(const ParamDegree& d, const Rational& c);
    /// this += x * c * a^i b^j, keeping only terms with parameter weight < bound.
    void add_scaled_shift(const ParamPoly& x, const Rational& c, const ParamDegree& shift, long bound);
    /// Drop terms with parameter weight >= bound.
    void truncate(long bound);

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const Rational& c);
    ParamPoly operator-() const;

    friend ParamPoly operator+(ParamPoly x, const ParamPoly& y) { return x += y; }
    friend ParamPoly operator-(ParamPoly x, const ParamPoly& y) { return x -= y; }
    friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y);
    friend ParamPoly operator*(ParamPoly x, const Rational& c) { return x *= c; }
    friend bool operator==(const ParamPoly& x, const ParamPoly& y)
    {
        return x.weights_ == y.weights_ && x.terms_ == y.terms_;
    }

    std::string to_string() const;

private:
    void check_weights(const ParamPoly& o) const;

    Weights weights_{};
    TermMap terms_;
};

/// Exact inverse of a unit: a single-term polynomial.
ParamPoly inv_unit(const ParamPoly& x);
Rational inv_unit(const Rational& x);

/// c * q^e_q * a^e_a * b^e_b. A zero coefficient is the "zero parameter"
/// used when specializing a or b to 0.
struct Monomial {
    Rational coeff{1};
    int e_q = 0;
    int e_a = 0;
    int e_b = 0;

    static Monomial q_power(int e, Rational c = 1) { return {std::move(c), e, 0, 0}; }
    static Monomial zero() { return {Rational(0), 0, 0, 0}; }
    bool is_zero() const { return coeff == 0; }
    bool has_params() const { return e_a != 0 || e_b != 0; }
    long weight(const Weights& w) const { return long(w.q) * e_q + long(w.a) * e_a + long(w.b) * e_b; }

    friend Monomial operator*(const Monomial& x, const Monomial& y)
    {
        return {x.coeff * y.coeff, x.e_q + y.e_q, x.e_a + y.e_a, x.e_b + y.e_b};
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    std::string to_string() const;
};

Monomial pow(const Monomial& m, int k);

/// Ring element of either flavour, for the dynamically typed entry points.
using RingElement = std::variant<Rational, ParamPoly>;

RingElement ring_add(const RingElement& x, const RingElement& y);
RingElement ring_mul(const RingElement& x, const RingElement& y);
RingElement ring_inv_unit(const RingElement& x);

} // namespace qseries

#endif
