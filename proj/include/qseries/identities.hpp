#ifndef QSERIES_IDENTITIES_HPP
#define QSERIES_IDENTITIES_HPP

#include "qseries/hecke.hpp"
#include "qseries/hypergeom.hpp"
#include "qseries/series.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qseries {

// ---------------------------------------------------------------------------
// Series expressions

struct PochFactor {
    PochhammerArg arg;
    int power = 1;
};

/// scale * prod (x q^start; q^step)_count^power
struct PochProduct {
    Rational scale{1};
    std::vector<PochFactor> factors;

    PochProduct& times(const Monomial& x, int step, int power = 1, std::optional<int> count = std::nullopt, int start = 0)
    {
        factors.push_back(PochFactor{PochhammerArg{x, start, step, count}, power});
        return *this;
    }
};

template <class C>
TruncatedSeries<C> build_product(const PochProduct& p, long order, Weights w = {});

/// Substitute a, b into every factor; factors whose argument becomes zero drop out.
PochProduct specialize(const PochProduct& p, const Monomial& sub_a, const Monomial& sub_b);

struct ThetaBody {
    ThetaKind kind = ThetaKind::square;
    int c = 1;
};

using Body = std::variant<Rational, TermSumSpec, HeckeSpec, ThetaBody, PochProduct>;

/// scale * shift * prefactor * body^power
struct Piece {
    Rational scale{1};
    Monomial shift{Rational(1)};
    std::optional<PochProduct> prefactor;
    Body body;
    int power = 1;
};

struct SeriesExpr {
    std::vector<Piece> pieces;
};

template <class C>
TruncatedSeries<C> build_expr(const SeriesExpr& e, long order, Weights w = {});

// ---------------------------------------------------------------------------
// Registry

enum class Mode { univariate, parameterized, finite_lemma, transform_sampled };
std::string to_string(Mode m);

/// The univariate record equals a specialization of a parameterized one:
///   specialize(P side at (sub_a, sub_b)) [q -> -q]
///     == pref_P(sub_a, sub_b) [q -> -q] * (scale * U side + offset) * extra
struct SpecializationLink {
    std::string target;
    Monomial sub_a;
    Monomial sub_b;
    bool negate_q = false;
    Rational scale{1};
    Rational offset{0};
    PochProduct extra;
};

struct FiniteLemma {
    std::vector<std::string> samples;
    std::function<std::pair<RationalFunction, RationalFunction>(int n, std::size_t sample)> build;
};

/// Values of the free parameters of a transformation, all monomials in q,
/// with the base replaced by q^step.
struct TransformParams {
    std::string label;
    int step = 1;
    Monomial alpha, beta, gamma, c, d, h, z, a, b;
    bool canonical_substitution = false; // the specialization used to derive a named corollary
};

struct TransformSpec {
    std::vector<TransformParams> samples;
    std::function<std::pair<TruncatedSeries<Rational>, TruncatedSeries<Rational>>(const TransformParams&, long order)> build;
};

struct IdentityRecord {
    std::string id;
    std::string description;
    Mode mode = Mode::univariate;
    SeriesExpr lhs;
    SeriesExpr rhs;
    long default_order = 200;
    Weights weights{};
    std::vector<SpecializationLink> links;
    std::optional<FiniteLemma> finite;
    std::optional<TransformSpec> transform;
};

/// Records verified by a full run, sorted by id.
const std::vector<IdentityRecord>& registry();
/// Deliberately wrong variants kept as negative controls.
const std::vector<IdentityRecord>& negative_controls();
/// Looks in both lists.
const IdentityRecord* find_identity(const std::string& id);
/// Registered ids closest to `id` by edit distance.
std::vector<std::string> nearest_ids(const std::string& id, std::size_t count = 3);

class UnknownIdentity : public std::invalid_argument {
public:
    explicit UnknownIdentity(const std::string& id) : std::invalid_argument("unknown identity id: " + id), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

// ---------------------------------------------------------------------------
// Verification

enum class Status { verified, mismatch, builder_error };
std::string to_string(Status s);

struct Mismatch {
    int exponent = 0;
    int deg_a = 0;
    int deg_b = 0;
    Rational lhs;
    Rational rhs;
    std::string context; // lemma index or transform sample
};

struct VerificationReport {
    std::string id;
    Mode mode = Mode::univariate;
    long order = 0;
    Status status = Status::verified;
    std::optional<Mismatch> mismatch;
    std::string message;
    double elapsed_ms = 0;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
};

/// order = nullopt uses the record's default (for finite lemmas the order is
/// the largest n checked).
VerificationReport verify(const IdentityRecord& r, std::optional<long> order = std::nullopt);
VerificationReport verify(const std::string& id, std::optional<long> order = std::nullopt);
VerificationReport verify_transform(const std::string& id, const std::vector<TransformParams>& samples, long order);

std::vector<VerificationReport> verify_all(const std::vector<const IdentityRecord*>& records, std::optional<long> order,
                                           int parallelism);
std::vector<VerificationReport> verify_all(std::optional<long> order, int parallelism);

struct LinkReport {
    std::string id;
    std::string target;
    Status status = Status::verified;
    std::optional<Mismatch> mismatch;
    std::string message;
};

/// Check every specialization link of a univariate record: the parameterized
/// sides are built at weighted order W and W + 12 and must agree after
/// specialization below q-order M before being compared with the record.
std::vector<LinkReport> check_links(const IdentityRecord& r, long weighted_order = 80, long univariate_order = 10);

} // namespace qseries

#endif
