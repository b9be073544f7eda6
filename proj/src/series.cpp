#include "qseries/series.hpp"

#include <sstream>

namespace qseries {

SparsePoly shifted_pochhammer_poly(const Monomial& x, int start, int step, int n)
{
    SparsePoly p(Rational(1));
    for (int k = 0; k < n; ++k) {
        SparsePoly factor = SparsePoly(x) - SparsePoly(Monomial::q_power(start + k * step));
        p *= factor;
    }
    return p;
}

TruncatedSeries<Rational> specialize(const TruncatedSeries<ParamPoly>& s, const Monomial& sub_a, const Monomial& sub_b,
                                     long target_order)
{
    if (sub_a.has_params() || sub_b.has_params()) {
        throw SeriesError(SeriesError::Kind::weight_mismatch, "specialization values must be monomials in q");
    }
    TruncatedSeries<Rational> out(target_order, Weights{});
    s.for_each([&](int e, const ParamPoly& c) {
        for (const auto& [d, v] : c.terms()) {
            if ((sub_a.is_zero() && d.a < 0) || (sub_b.is_zero() && d.b < 0)) {
                throw SeriesError(SeriesError::Kind::zero_into_negative_degree,
                                  "zero substituted into a negative parameter degree");
            }
            if ((sub_a.is_zero() && d.a > 0) || (sub_b.is_zero() && d.b > 0)) {
                continue;
            }
            Rational k = v;
            int ne = e;
            if (d.a != 0) {
                Monomial pa = pow(sub_a, d.a);
                k *= pa.coeff;
                ne += pa.e_q;
            }
            if (d.b != 0) {
                Monomial pb = pow(sub_b, d.b);
                k *= pb.coeff;
                ne += pb.e_q;
            }
            out.add_coefficient(ne, k);
        }
    });
    return out;
}

TruncatedSeries<ParamPoly> lift(const TruncatedSeries<Rational>& s, Weights w)
{
    if (s.weights().q != w.q) {
        throw SeriesError(SeriesError::Kind::weight_mismatch, "lifting requires the same q weight");
    }
    TruncatedSeries<ParamPoly> out(s.order(), w);
    s.for_each([&](int e, const Rational& c) { out.add_coefficient(e, ParamPoly(c, w)); });
    return out;
}

TruncatedSeries<Rational> to_rational(const TruncatedSeries<Integer>& s)
{
    TruncatedSeries<Rational> out(s.order(), s.weights());
    s.for_each([&](int e, const Integer& c) { out.add_coefficient(e, Rational(c)); });
    return out;
}

std::string to_string(const TruncatedSeries<Rational>& s)
{
    std::ostringstream os;
    bool first = true;
    s.for_each([&](int e, const Rational& c) {
        os << (first ? "" : " + ") << to_exact_string(c) << "*q^" << e;
        first = false;
    });
    if (first) {
        os << "0";
    }
    os << " + O(order " << s.order() << ")";
    return os.str();
}

std::string to_string(const TruncatedSeries<ParamPoly>& s)
{
    std::ostringstream os;
    bool first = true;
    s.for_each([&](int e, const ParamPoly& c) {
        os << (first ? "" : " + ") << "(" << c.to_string() << ")*q^" << e;
        first = false;
    });
    if (first) {
        os << "0";
    }
    os << " + O(weight " << s.order() << ")";
    return os.str();
}

} // namespace qseries
