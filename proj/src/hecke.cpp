#include "qseries/hecke.hpp"

#include <climits>

namespace qseries {

namespace {

std::pair<int, int> row_range(Region r, int n)
{
    switch (r) {
    case Region::j_full:
    case Region::jacobi:
        return {-n, n};
    case Region::j_plus:
        return {-n, n + 1};
    case Region::j_shift:
        return {-n + 1, n};
    case Region::rogers:
        return {-(n / 2), n / 2};
    }
    return {0, -1};
}

// Limits of j/n on the region as n grows.
std::pair<Rational, Rational> slope_range(Region r)
{
    if (r == Region::rogers) {
        return {Rational(-1, 2), Rational(1, 2)};
    }
    return {Rational(-1), Rational(1)};
}

// The quadratic part A + B t + C t^2 must be positive for t in the slope range,
// otherwise row minima do not grow.
void check_definite(const HeckeSpec& s)
{
    auto [lo, hi] = slope_range(s.region);
    auto f = [&](const Rational& t) -> Rational { return s.A + s.B * t + s.C * t * t; };
    Rational m = std::min(f(lo), f(hi));
    if (s.C > 0) {
        Rational vertex = -s.B / (2 * s.C);
        if (vertex > lo && vertex < hi) {
            m = std::min(m, f(vertex));
        }
    }
    if (m <= 0) {
        throw HeckeError(HeckeError::Kind::non_terminating, "quadratic form is not positive on the summation region");
    }
}

int lattice_exponent(const HeckeSpec& s, int n, int j)
{
    Rational e = s.A * n * n + s.B * n * j + s.C * j * j + s.D * n + s.E * j + s.F;
    if (e.get_den() != 1 || !e.get_num().fits_sint_p()) {
        throw HeckeError(HeckeError::Kind::non_integer_exponent,
                         "exponent " + to_exact_string(e) + " at (n, j) = (" + std::to_string(n) + ", " + std::to_string(j) + ")");
    }
    return static_cast<int>(e.get_num().get_si());
}

} // namespace

TruncatedSeries<Rational> build_hecke(const HeckeSpec& spec, long order)
{
    check_definite(spec);
    TruncatedSeries<Rational> sum(order);
    int above = 0;
    for (int n = spec.n_start;; ++n) {
        // Row factor as a list of (shift, coefficient).
        SparsePoly row_factor(Rational(1));
        for (const auto& f : spec.factors) {
            row_factor *= SparsePoly::binomial(Rational(1), Monomial::q_power(f.slope * n + f.offset, f.c));
        }
        auto monos = row_factor.monomials();
        int shift_min = 0;
        for (const auto& m : monos) {
            shift_min = std::min(shift_min, m.e_q);
        }
        auto [jlo, jhi] = row_range(spec.region, n);
        long row_min = LONG_MAX;
        for (int j = jlo; j <= jhi; ++j) {
            int e = lattice_exponent(spec, n, j);
            row_min = std::min(row_min, long(e) + shift_min);
            if (long(e) + shift_min >= order) {
                continue;
            }
            bool neg = ((long(spec.sign_n) * n + long(spec.sign_j) * j) % 2) != 0;
            Rational c = neg ? Rational(-spec.scale) : spec.scale;
            for (const auto& m : monos) {
                sum.add_coefficient(e + m.e_q, c * m.coeff);
            }
        }
        if (row_min >= order) {
            if (++above >= row_window) {
                break;
            }
        }
        else {
            above = 0;
        }
    }
    if (spec.prefactor) {
        return sum * *spec.prefactor;
    }
    return sum;
}

TruncatedSeries<Rational> theta_sum(ThetaKind kind, int c, long order)
{
    TruncatedSeries<Rational> s(order);
    if (kind == ThetaKind::square) {
        if (c < 1) {
            throw HeckeError(HeckeError::Kind::non_terminating, "theta series needs c >= 1");
        }
        s.add_coefficient(0, Rational(1));
        for (long n = 1; long(c) * n * n < order; ++n) {
            s.add_coefficient(static_cast<int>(c * n * n), Rational(2));
        }
        return s;
    }
    for (long n = 0; 2 * n * (n + 1) < order; ++n) {
        s.add_coefficient(static_cast<int>(2 * n * (n + 1)), Rational(1));
    }
    return s;
}

} // namespace qseries
