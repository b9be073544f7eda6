#ifndef QSERIES_HECKE_HPP
#define QSERIES_HECKE_HPP

#include "qseries/hypergeom.hpp"
#include "qseries/series.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qseries {

class HeckeError : public std::runtime_error {
public:
    enum class Kind { non_terminating, non_integer_exponent };
    HeckeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// Summation regions for the inner index j at outer index n.
//   j_full  : -n     <= j <= n
//   j_plus  : -n     <= j <= n + 1
//   j_shift : -n + 1 <= j <= n
//   jacobi  : -n     <= j <= n, exponent free of j
//   rogers  : |j| <= floor(n/2)
enum class Region { j_full, j_plus, j_shift, jacobi, rogers };

// sum_{n >= n_start} sum_{j in region(n)} (-1)^{sign_n n + sign_j j}
//   prod (1 + c q^{slope n + offset}) q^{A n^2 + B n j + C j^2 + D n + E j + F}
struct HeckeSpec {
    Rational A{0}, B{0}, C{0}, D{0}, E{0}, F{0};
    Region region = Region::j_full;
    int n_start = 0;
    int sign_n = 0;
    int sign_j = 0;
    Rational scale{1};
    std::vector<LinearFactor> factors;
    std::optional<TruncatedSeries<Rational>> prefactor;
};

inline constexpr int row_window = 8;

TruncatedSeries<Rational> build_hecke(const HeckeSpec& spec, long order);

enum class ThetaKind { square, triangular };

// square:     sum_{n in Z} q^{c n^2}
// triangular: sum_{n >= 0} q^{2n(n+1)}
TruncatedSeries<Rational> theta_sum(ThetaKind kind, int c, long order);

} // namespace qseries

#endif
