#include "qseries/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>
#include <type_traits>

namespace qseries {

namespace {

template <class C>
TruncatedSeries<C> from_rational(const TruncatedSeries<Rational>& s, Weights w)
{
    if constexpr (std::is_same_v<C, Rational>) {
        return s;
    }
    else {
        return lift(s, w);
    }
}

template <class C>
TruncatedSeries<C> power(const TruncatedSeries<C>& s, int k)
{
    if (k < 0) {
        return power(s.inverse(), -k);
    }
    TruncatedSeries<C> r = TruncatedSeries<C>::one(s.order(), s.weights());
    for (int i = 0; i < k; ++i) {
        r *= s;
    }
    return r;
}

template <class C>
TruncatedSeries<C> build_body(const Body& body, long order, Weights w)
{
    return std::visit(
        [&](const auto& b) -> TruncatedSeries<C> {
            using B = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<B, Rational>) {
                return TruncatedSeries<C>::constant(b, order, w);
            }
            else if constexpr (std::is_same_v<B, TermSumSpec>) {
                return build_term_sum<C>(b, order, w);
            }
            else if constexpr (std::is_same_v<B, HeckeSpec>) {
                return from_rational<C>(build_hecke(b, order), w);
            }
            else if constexpr (std::is_same_v<B, ThetaBody>) {
                return from_rational<C>(theta_sum(b.kind, b.c, order), w);
            }
            else {
                return build_product<C>(b, order, w);
            }
        },
        body);
}

template <class C>
TruncatedSeries<C> build_piece(const Piece& p, long order, Weights w, bool with_prefactor = true)
{
    long target = order - p.shift.weight(w);
    long extra = 0;
    for (int attempt = 0; attempt < 6; ++attempt) {
        long o = target + extra;
        TruncatedSeries<C> r = power(build_body<C>(p.body, o, w), p.power);
        if (with_prefactor && p.prefactor) {
            r = build_product<C>(*p.prefactor, o, w) * r;
        }
        r.scale(p.scale);
        r.mul_monomial(p.shift);
        if (r.order() >= order) {
            r.truncate(order);
            return r;
        }
        extra += order - r.order();
    }
    throw std::logic_error("could not reach the requested order for a series piece");
}

template <class C>
std::size_t monomial_count(const TruncatedSeries<C>& s)
{
    std::size_t n = 0;
    s.for_each([&](int, const C& c) { CoeffTraits<C>::for_each_term(c, [&](const ParamDegree&, const Rational&) { ++n; }); });
    return n;
}

Monomial substitute(const Monomial& x, const Monomial& sub_a, const Monomial& sub_b)
{
    Monomial out{x.coeff, x.e_q, 0, 0};
    auto apply = [&](int deg, const Monomial& sub) {
        if (deg == 0) {
            return;
        }
        if (sub.is_zero()) {
            if (deg < 0) {
                throw SeriesError(SeriesError::Kind::zero_into_negative_degree, "zero substituted into a negative parameter degree");
            }
            out = Monomial::zero();
            return;
        }
        out = out * pow(sub, deg);
    };
    apply(x.e_a, sub_a);
    if (!out.is_zero()) {
        apply(x.e_b, sub_b);
    }
    return out;
}

int lowest_q(const SparsePoly& p) { return p.terms().begin()->first.e_q; }

Mismatch finite_mismatch(const RationalFunction& l, const RationalFunction& r, const std::string& context)
{
    SparsePoly diff = l.num * r.den - r.num * l.den;
    int e = lowest_q(diff) - lowest_q(l.den * r.den);
    auto coeff = [&](const RationalFunction& f) { return to_series(f, e + 1).coefficient(e); };
    return Mismatch{e, 0, 0, coeff(l), coeff(r), context};
}

double millis_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <class C>
void compare_series(const TruncatedSeries<C>& l, const TruncatedSeries<C>& r, VerificationReport& rep, const std::string& context)
{
    rep.lhs_terms += monomial_count(l);
    rep.rhs_terms += monomial_count(r);
    if (rep.status != Status::verified) {
        return;
    }
    if (auto d = first_difference(l, r)) {
        rep.status = Status::mismatch;
        rep.mismatch = Mismatch{d->e_q, d->deg_a, d->deg_b, d->lhs, d->rhs, context};
    }
}

std::size_t edit_distance(const std::string& x, const std::string& y)
{
    std::vector<std::size_t> row(y.size() + 1);
    for (std::size_t j = 0; j <= y.size(); ++j) {
        row[j] = j;
    }
    for (std::size_t i = 1; i <= x.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= y.size(); ++j) {
            std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (x[i - 1] == y[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[y.size()];
}

} // namespace

template <class C>
TruncatedSeries<C> build_product(const PochProduct& p, long order, Weights w)
{
    // Multiplying by a factor of negative weight lowers the order; start higher.
    long deficit = 0;
    for (const auto& f : p.factors) {
        if (f.power <= 0 || f.arg.x.is_zero()) {
            continue;
        }
        for (int k = 0; !f.arg.count || k < *f.arg.count; ++k) {
            long wk = f.arg.factor(k).weight(w);
            if (wk >= 0) {
                break;
            }
            deficit -= f.power * wk;
        }
    }
    long work = order + deficit;
    TruncatedSeries<C> s = TruncatedSeries<C>::one(work, w);
    for (const auto& f : p.factors) {
        if (f.arg.x.is_zero() || f.power == 0) {
            continue;
        }
        if (f.arg.step < 1) {
            throw SeriesError(SeriesError::Kind::non_terminating, "pochhammer step must be positive");
        }
        for (int k = 0; !f.arg.count || k < *f.arg.count; ++k) {
            Monomial m = f.arg.factor(k);
            if (!f.arg.count && m.weight(w) >= work) {
                break;
            }
            m.coeff = -m.coeff;
            for (int t = 0; t < std::abs(f.power); ++t) {
                if (f.power > 0) {
                    s.mul_binomial(Rational(1), m);
                }
                else {
                    s.div_binomial(Rational(1), m);
                }
            }
        }
    }
    s.scale(p.scale);
    if (s.order() < order) {
        throw std::logic_error("pochhammer product lost order");
    }
    s.truncate(order);
    return s;
}

template TruncatedSeries<Rational> build_product<Rational>(const PochProduct&, long, Weights);
template TruncatedSeries<ParamPoly> build_product<ParamPoly>(const PochProduct&, long, Weights);

PochProduct specialize(const PochProduct& p, const Monomial& sub_a, const Monomial& sub_b)
{
    PochProduct out;
    out.scale = p.scale;
    for (const auto& f : p.factors) {
        PochFactor g = f;
        g.arg.x = substitute(f.arg.x, sub_a, sub_b);
        if (!g.arg.x.is_zero()) {
            out.factors.push_back(g);
        }
    }
    return out;
}

template <class C>
TruncatedSeries<C> build_expr(const SeriesExpr& e, long order, Weights w)
{
    TruncatedSeries<C> sum(order, w);
    for (const auto& p : e.pieces) {
        sum += build_piece<C>(p, order, w);
    }
    return sum;
}

template TruncatedSeries<Rational> build_expr<Rational>(const SeriesExpr&, long, Weights);
template TruncatedSeries<ParamPoly> build_expr<ParamPoly>(const SeriesExpr&, long, Weights);

std::string to_string(Mode m)
{
    switch (m) {
    case Mode::univariate:
        return "UNIVARIATE";
    case Mode::parameterized:
        return "PARAMETERIZED";
    case Mode::finite_lemma:
        return "FINITE_LEMMA";
    case Mode::transform_sampled:
        return "TRANSFORM_SAMPLED";
    }
    return "?";
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::verified:
        return "VERIFIED";
    case Status::mismatch:
        return "MISMATCH";
    case Status::builder_error:
        return "BUILDER_ERROR";
    }
    return "?";
}

const IdentityRecord* find_identity(const std::string& id)
{
    for (const auto* list : {&registry(), &negative_controls()}) {
        for (const auto& r : *list) {
            if (r.id == id) {
                return &r;
            }
        }
    }
    return nullptr;
}

std::vector<std::string> nearest_ids(const std::string& id, std::size_t count)
{
    std::vector<std::pair<std::size_t, std::string>> scored;
    for (const auto* list : {&registry(), &negative_controls()}) {
        for (const auto& r : *list) {
            scored.emplace_back(edit_distance(id, r.id), r.id);
        }
    }
    std::sort(scored.begin(), scored.end());
    std::vector<std::string> out;
    for (std::size_t i = 0; i < scored.size() && i < count; ++i) {
        out.push_back(scored[i].second);
    }
    return out;
}

namespace {

void run_transform(const IdentityRecord& r, const std::vector<TransformParams>& samples, long order, VerificationReport& rep)
{
    for (const auto& t : samples) {
        auto [l, rs] = r.transform->build(t, order);
        compare_series(l, rs, rep, t.label);
    }
}

} // namespace

VerificationReport verify(const IdentityRecord& r, std::optional<long> order)
{
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = r.id;
    rep.mode = r.mode;
    rep.order = order.value_or(r.default_order);
    try {
        switch (r.mode) {
        case Mode::univariate: {
            auto l = build_expr<Rational>(r.lhs, rep.order, r.weights);
            auto rs = build_expr<Rational>(r.rhs, rep.order, r.weights);
            compare_series(l, rs, rep, "");
            break;
        }
        case Mode::parameterized: {
            auto l = build_expr<ParamPoly>(r.lhs, rep.order, r.weights);
            auto rs = build_expr<ParamPoly>(r.rhs, rep.order, r.weights);
            compare_series(l, rs, rep, "");
            break;
        }
        case Mode::finite_lemma: {
            const auto& f = *r.finite;
            for (int n = 0; n <= rep.order && rep.status == Status::verified; ++n) {
                for (std::size_t s = 0; s < f.samples.size(); ++s) {
                    auto [l, rs] = f.build(n, s);
                    ++rep.lhs_terms;
                    ++rep.rhs_terms;
                    if (!(l == rs)) {
                        rep.status = Status::mismatch;
                        rep.mismatch = finite_mismatch(l, rs, "n=" + std::to_string(n) + " " + f.samples[s]);
                        break;
                    }
                }
            }
            break;
        }
        case Mode::transform_sampled:
            run_transform(r, r.transform->samples, rep.order, rep);
            break;
        }
    }
    catch (const std::exception& e) {
        rep.status = Status::builder_error;
        rep.mismatch.reset();
        rep.message = e.what();
    }
    rep.elapsed_ms = millis_since(t0);
    return rep;
}

VerificationReport verify(const std::string& id, std::optional<long> order)
{
    const IdentityRecord* r = find_identity(id);
    if (!r) {
        throw UnknownIdentity(id);
    }
    return verify(*r, order);
}

VerificationReport verify_transform(const std::string& id, const std::vector<TransformParams>& samples, long order)
{
    const IdentityRecord* r = find_identity(id);
    if (!r) {
        throw UnknownIdentity(id);
    }
    if (r->mode != Mode::transform_sampled) {
        throw std::invalid_argument(id + " is not a transformation");
    }
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = id;
    rep.mode = r->mode;
    rep.order = order;
    try {
        run_transform(*r, samples, order, rep);
    }
    catch (const std::exception& e) {
        rep.status = Status::builder_error;
        rep.mismatch.reset();
        rep.message = e.what();
    }
    rep.elapsed_ms = millis_since(t0);
    return rep;
}

std::vector<VerificationReport> verify_all(const std::vector<const IdentityRecord*>& records, std::optional<long> order,
                                           int parallelism)
{
    std::vector<VerificationReport> out(records.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < records.size(); i = next++) {
            out[i] = verify(*records[i], order);
        }
    };
    int threads = std::max(1, parallelism);
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    return out;
}

std::vector<VerificationReport> verify_all(std::optional<long> order, int parallelism)
{
    std::vector<const IdentityRecord*> all;
    for (const auto& r : registry()) {
        all.push_back(&r);
    }
    return verify_all(all, order, parallelism);
}

std::vector<LinkReport> check_links(const IdentityRecord& r, long weighted_order, long univariate_order)
{
    const long M = univariate_order;
    std::vector<LinkReport> out;
    for (const auto& link : r.links) {
        LinkReport rep{r.id, link.target, Status::verified, std::nullopt, ""};
        try {
            const IdentityRecord* p = find_identity(link.target);
            if (!p || p->mode != Mode::parameterized) {
                throw std::invalid_argument("link target is not a parameterized identity: " + link.target);
            }
            // Prefactor of the parameterized left-hand side, specialized.
            PochProduct pref;
            if (!p->lhs.pieces.empty() && p->lhs.pieces.front().prefactor) {
                pref = specialize(*p->lhs.pieces.front().prefactor, link.sub_a, link.sub_b);
            }
            auto flip = [&](TruncatedSeries<Rational> s) { return link.negate_q ? s.negate_q() : s; };
            auto specialized_side = [&](const SeriesExpr& e, long W) {
                TruncatedSeries<Rational> sum(M);
                for (const auto& piece : e.pieces) {
                    auto body = build_piece<ParamPoly>(piece, W, p->weights, false);
                    auto s = specialize(body, link.sub_a, link.sub_b, M);
                    if (piece.prefactor) {
                        s = build_product<Rational>(specialize(*piece.prefactor, link.sub_a, link.sub_b), M) * s;
                    }
                    sum += s;
                }
                return flip(sum.truncated(M));
            };
            TruncatedSeries<Rational> k = flip(build_product<Rational>(pref, M));
            TruncatedSeries<Rational> extra = build_product<Rational>(link.extra, M);
            for (int side = 0; side < 2 && rep.status == Status::verified; ++side) {
                const SeriesExpr& pe = side == 0 ? p->lhs : p->rhs;
                const SeriesExpr& ue = side == 0 ? r.lhs : r.rhs;
                auto s1 = specialized_side(pe, weighted_order);
                auto s2 = specialized_side(pe, weighted_order + 12);
                if (first_difference(s1, s2)) {
                    rep.status = Status::builder_error;
                    rep.message = "specialization is not stable at weighted order " + std::to_string(weighted_order);
                    break;
                }
                auto u = build_expr<Rational>(ue, M);
                u.scale(link.scale);
                u += TruncatedSeries<Rational>::constant(link.offset, M);
                auto target = (k * u * extra).truncated(M);
                if (auto d = first_difference(s1, target)) {
                    rep.status = Status::mismatch;
                    rep.mismatch = Mismatch{d->e_q, 0, 0, d->lhs, d->rhs, side == 0 ? "lhs" : "rhs"};
                }
            }
        }
        catch (const std::exception& e) {
            rep.status = Status::builder_error;
            rep.message = e.what();
        }
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace qseries
