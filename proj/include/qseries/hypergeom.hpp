#ifndef QSERIES_HYPERGEOM_HPP
#define QSERIES_HYPERGEOM_HPP

#include "qseries/poly.hpp"
#include "qseries/series.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qseries {

class HypergeomError : public std::runtime_error {
public:
    enum class Kind { divergent, non_integer_exponent, invalid_spec };
    HypergeomError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// mult * n + offset
struct Affine {
    int mult = 1;
    int offset = 0;
    int at(int n) const { return mult * n + offset; }
};

/// (x q^start; q^step)_{count(n)}
struct TermPochhammer {
    Monomial x;
    int start = 0;
    int step = 1;
    Affine count;
};

/// prod_{k < count(n)} (x - q^{start + k step})
struct TermShifted {
    Monomial x;
    int start = 0;
    int step = 1;
    Affine count;
};

/// (1 + c q^{slope n + offset}), or its reciprocal when `inverse` is set.
struct LinearFactor {
    Rational c{1};
    int slope = 0;
    int offset = 0;
    bool inverse = false;

    static LinearFactor plus(int slope, int offset, bool inverse = false) { return {Rational(1), slope, offset, inverse}; }
    static LinearFactor minus(int slope, int offset, bool inverse = false) { return {Rational(-1), slope, offset, inverse}; }
};

/// n2 n^2 + n1 n + n0 with rational coefficients.
struct QuadraticExponent {
    Rational n2{0};
    Rational n1{0};
    Rational n0{0};
    Rational at(long n) const { return n2 * n * n + n1 * n + n0; }
};

/// sum_{j = lo(n)}^{hi(n)} (-1)^{sign_j j} q^{jj j^2 + nj n j + j1 j}
struct InnerSum {
    Affine lo{-1, 0};
    Affine hi{1, 0};
    int sign_j = 0;
    Rational jj{1};
    Rational nj{0};
    Rational j1{0};
};

/// Declarative single-index sum
///   scale * sum_{n >= start} (-1)^{sign n} ratio^n q^{Q(n)} a^{alpha n} b^{beta n}
///     * prod numerator / prod denominator * prod shifted * prod factors
///     * ((-1)^n q^{phi_step n(n-1)/2})^{phi_sign_power} * inner(n)
struct TermSumSpec {
    int start = 0;
    std::optional<int> stop;
    Rational scale{1};
    std::vector<TermPochhammer> numerator;
    std::vector<TermPochhammer> denominator;
    std::vector<TermShifted> shifted;
    int sign_exponent = 0;
    Rational ratio{1};
    QuadraticExponent q_exponent;
    int alpha = 0;
    int beta = 0;
    std::vector<LinearFactor> factors;
    int phi_sign_power = 0;
    int phi_step = 1;
    std::optional<InnerSum> inner;
};

/// Standard r-phi-s with base q^step: numerator parameters a_i, denominator
/// parameters b_j (the (q^step; q^step)_n factor is added) and argument z.
TermSumSpec phi_spec(const std::vector<Monomial>& numerator, const std::vector<Monomial>& denominator, int step,
                     const Monomial& argument);

/// Consecutive terms whose weight bound fails to grow before the sum is rejected.
inline constexpr int divergence_window = 8;

template <class C>
TruncatedSeries<C> build_term_sum(const TermSumSpec& spec, long order, Weights w = {});

extern template TruncatedSeries<Rational> build_term_sum<Rational>(const TermSumSpec&, long, Weights);
extern template TruncatedSeries<Integer> build_term_sum<Integer>(const TermSumSpec&, long, Weights);
extern template TruncatedSeries<ParamPoly> build_term_sum<ParamPoly>(const TermSumSpec&, long, Weights);

// ---------------------------------------------------------------------------
// Exact finite sums

/// prod_{k < n} (1 - x q^{step k}) as an exact polynomial.
SparsePoly finite_pochhammer(const Monomial& x, int step, int n);

/// Terminating r-phi-s with base q^step summed over k = 0..n. One numerator
/// parameter must be q^{-step n}.
struct FinitePhiSpec {
    int n = 0;
    int step = 1;
    std::vector<Monomial> numerator;
    std::vector<Monomial> denominator;
    Monomial argument;
};

RationalFunction finite_phi_exact(const FinitePhiSpec& spec);
TruncatedSeries<Rational> finite_phi(const FinitePhiSpec& spec, long order);

/// Expansion of a univariate rational function to the given q-order.
TruncatedSeries<Rational> to_series(const RationalFunction& f, long order);

} // namespace qseries

#endif
