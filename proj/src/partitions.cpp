#include "qseries/partitions.hpp"

#include "qseries/identities.hpp"
#include "qseries/series.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <thread>

namespace qseries {

namespace {

std::vector<Integer> coefficients(const TruncatedSeries<Integer>& s, int max_n)
{
    std::vector<Integer> out(max_n + 1);
    for (int e = 0; e <= max_n; ++e) {
        out[e] = s.coefficient(e);
    }
    return out;
}

TruncatedSeries<Integer> poch(long x, int start, int step, long order)
{
    return pochhammer<Integer>(PochhammerArg{Monomial{Rational(x), 0, 0, 0}, start, step, std::nullopt}, order);
}

} // namespace

// ---------------------------------------------------------------------------
// Tables

std::vector<Integer> partitions_pentagonal(int max_n)
{
    std::vector<Integer> p(max_n + 1);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        Integer s = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            if (g1 > n) {
                break;
            }
            int g2 = k * (3 * k + 1) / 2;
            Integer t = p[n - g1];
            if (g2 <= n) {
                t += p[n - g2];
            }
            if (k % 2 == 1) {
                s += t;
            }
            else {
                s -= t;
            }
        }
        p[n] = s;
    }
    return p;
}

std::vector<Integer> partitions_series(int max_n)
{
    return coefficients(poch(1, 1, 1, max_n + 1).inverse(), max_n);
}

std::vector<Integer> pod_series(int max_n)
{
    long order = max_n + 1;
    return coefficients(poch(-1, 1, 2, order) * poch(1, 2, 2, order).inverse(), max_n);
}

std::vector<Integer> overpartitions_series(int max_n)
{
    long order = max_n + 1;
    return coefficients(poch(-1, 1, 1, order) * poch(1, 1, 1, order).inverse(), max_n);
}

PartitionTable partition_table(int max_n)
{
    if (max_n < 0) {
        throw std::invalid_argument("partition table size must be nonnegative");
    }
    return PartitionTable{max_n, partitions_pentagonal(max_n), pod_series(max_n), overpartitions_series(max_n)};
}

std::shared_ptr<const PartitionTable> shared_partition_table(int max_n)
{
    static std::mutex mu;
    static std::shared_ptr<const PartitionTable> cached;
    std::lock_guard lock(mu);
    if (!cached || cached->max_n < max_n) {
        int size = std::max(max_n, cached ? 2 * cached->max_n : 0);
        cached = std::make_shared<const PartitionTable>(partition_table(size));
    }
    return cached;
}

EnumeratedCounts enumerate_counts(int n)
{
    EnumeratedCounts out{0, 0, 0};
    std::vector<int> parts;
    // Parts are generated in nonincreasing order.
    std::function<void(int, int)> walk = [&](int remaining, int largest) {
        if (remaining == 0) {
            out.p += 1;
            bool odd_distinct = true;
            int distinct = 0;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                bool repeat = i > 0 && parts[i] == parts[i - 1];
                if (!repeat) {
                    ++distinct;
                }
                else if (parts[i] % 2 == 1) {
                    odd_distinct = false;
                }
            }
            if (odd_distinct) {
                out.pod += 1;
            }
            Integer ways = 1;
            ways <<= distinct;
            out.pbar += ways;
            return;
        }
        for (int part = std::min(remaining, largest); part >= 1; --part) {
            parts.push_back(part);
            walk(remaining - part, part);
            parts.pop_back();
        }
    };
    walk(n, n);
    return out;
}

// ---------------------------------------------------------------------------
// Inequalities

std::string to_string(PartitionFunction f)
{
    switch (f) {
    case PartitionFunction::p:
        return "p";
    case PartitionFunction::pod:
        return "pod";
    case PartitionFunction::pbar:
        return "pbar";
    }
    return "?";
}

std::optional<long> ArgumentExpr::evaluate(long N, long n, long j) const
{
    long num = N + long(nn) * n * n + long(n1) * n + long(jj) * j * j + c0;
    if (num < 0 || num % den != 0) {
        return std::nullopt;
    }
    return num / den;
}

long NBound::evaluate(long N) const
{
    if (kind == Kind::linear) {
        return N / c;
    }
    long m = N / c; // floor(sqrt(N/c)) = floor(sqrt(floor(N/c)))
    long r = static_cast<long>(std::sqrt(static_cast<double>(m)));
    while (r * r > m) {
        --r;
    }
    while ((r + 1) * (r + 1) <= m) {
        ++r;
    }
    return r;
}

namespace {

InequalitySpec make(std::string id, std::string desc, PartitionFunction f, int sign_n, int sign_j, int j_extra,
                    NBound bound, std::vector<InequalityTerm> terms)
{
    return InequalitySpec{std::move(id), std::move(desc), f, sign_n, sign_j, j_extra, bound, std::move(terms)};
}

ArgumentExpr arg(int nn, int n1, int c0 = 0, int den = 1) { return ArgumentExpr{nn, n1, -1, c0, den}; }

std::vector<InequalitySpec> build_inequalities()
{
    using F = PartitionFunction;
    using K = NBound::Kind;
    std::vector<InequalitySpec> v;
    v.push_back(make("thm-t4-1-1", "sum_{n<=sqrt(N)} sum_{|j|<=n} (-1)^n pbar(N-n^2-n-j^2) >= 0", F::pbar, 1, 0, 0,
                     {K::sqrt, 1}, {{1, arg(-1, -1)}}));
    v.push_back(make("thm-t4-1-2", "sum_{n<=sqrt(N/2)} sum_{|j|<=n} (-1)^n pod(N-2n^2-2n-j^2) >= 0", F::pod, 1, 0, 0,
                     {K::sqrt, 2}, {{1, arg(-2, -2)}}));
    v.push_back(make("thm-t4-1-4-1",
                     "sum_{n<=sqrt(N/2)} sum_{|j|<=n} (-1)^n (pbar((N-n-j^2)/2-n^2) + pbar((N-3n-j^2-1)/2-n^2)) >= 0",
                     F::pbar, 1, 0, 0, {K::sqrt, 2}, {{1, arg(-2, -1, 0, 2)}, {1, arg(-2, -3, -1, 2)}}));
    v.push_back(make("thm-t4-1-4",
                     "sum_{n<=sqrt(N/3)} sum_{|j|<=n} (-1)^n (p((N-3n^2-2n-j^2)/2) + p((N-3n^2-4n-j^2-1)/2)) >= 0",
                     F::p, 1, 0, 0, {K::sqrt, 3}, {{1, arg(-3, -2, 0, 2)}, {1, arg(-3, -4, -1, 2)}}));
    v.push_back(make("thm-t4-1-5",
                     "sum_{n<=sqrt(N/2)} sum_{-n<=j<=n+1} (-1)^n (pbar((N-3n-j^2)/2-n^2) - pbar((N-5n-j^2-2)/2-n^2)) >= 0",
                     F::pbar, 1, 0, 1, {K::sqrt, 2}, {{1, arg(-2, -3, 0, 2)}, {-1, arg(-2, -5, -2, 2)}}));
    v.push_back(make("thm-t4-1-5-10",
                     "sum_{n<=sqrt(N/2)} sum_{|j|<=n} (-1)^j (pod(N-2n^2-n-j^2) - pod(N-2n^2-3n-j^2-1)) >= 0", F::pod, 0,
                     1, 0, {K::sqrt, 2}, {{1, arg(-2, -1)}, {-1, arg(-2, -3, -1)}}));
    v.push_back(make("thm-t4-2-5-13", "sum_{n<=N/2} sum_{|j|<=n} (-1)^n p(N-2n^2-2n-j^2) >= 0", F::p, 1, 0, 0,
                     {K::linear, 2}, {{1, arg(-2, -2)}}));
    v.push_back(make("thm-t4-2-2", "sum_{n<=N/2} sum_{|j|<=n} (-1)^n (p(N-2n^2-n-j^2) + p(N-2n^2-3n-1-j^2)) >= 0", F::p,
                     1, 0, 0, {K::linear, 2}, {{1, arg(-2, -1)}, {1, arg(-2, -3, -1)}}));
    v.push_back(make("thm-t4-2-3", "sum_{n<=N/3} sum_{|j|<=n} (-1)^n (p(N-3n^2-2n-j^2) + p(N-3n^2-4n-1-j^2)) >= 0",
                     F::p, 1, 0, 0, {K::linear, 3}, {{1, arg(-3, -2)}, {1, arg(-3, -4, -1)}}));
    v.push_back(make("thm-t4-2-4",
                     "sum_{n<=N/2} sum_{-n<=j<=n+1} (-1)^n (p(N-2n^2-3n-j^2) - p(N-2n^2-5n-2-j^2)) >= 0", F::p, 1, 0, 1,
                     {K::linear, 2}, {{1, arg(-2, -3)}, {-1, arg(-2, -5, -2)}}));
    return v;
}

const std::vector<Integer>& column(const PartitionTable& t, PartitionFunction f)
{
    switch (f) {
    case PartitionFunction::p:
        return t.p;
    case PartitionFunction::pod:
        return t.pod;
    case PartitionFunction::pbar:
        return t.pbar;
    }
    return t.p;
}

} // namespace

const std::vector<InequalitySpec>& inequalities()
{
    static const std::vector<InequalitySpec> specs = build_inequalities();
    return specs;
}

const InequalitySpec* find_inequality(const std::string& id)
{
    for (const auto& s : inequalities()) {
        if (s.id == id) {
            return &s;
        }
    }
    return nullptr;
}

Integer inequality_sum(const InequalitySpec& spec, const PartitionTable& table, long N, int bound_extension)
{
    const auto& f = column(table, spec.function);
    long n_max = spec.bound.evaluate(N) + bound_extension;
    Integer total = 0;
    for (long n = 0; n <= n_max; ++n) {
        for (long j = -n; j <= n + spec.j_extra; ++j) {
            bool negative = ((spec.sign_n * n + spec.sign_j * j) % 2) != 0;
            for (const auto& term : spec.terms) {
                auto x = term.arg.evaluate(N, n, j);
                if (!x) {
                    continue;
                }
                if (*x > table.max_n) {
                    throw CoverageError(spec.id + ": argument " + std::to_string(*x) + " exceeds table size " +
                                        std::to_string(table.max_n));
                }
                if ((term.sign < 0) != negative) {
                    total -= f[*x];
                }
                else {
                    total += f[*x];
                }
            }
        }
    }
    return total;
}

InequalityReport inequality_check(const InequalitySpec& spec, long max_n, int bound_extension)
{
    auto t0 = std::chrono::steady_clock::now();
    auto table = shared_partition_table(static_cast<int>(max_n));
    InequalityReport rep;
    rep.id = spec.id;
    rep.max_n = max_n;
    rep.values.reserve(max_n + 1);
    for (long N = 0; N <= max_n; ++N) {
        Integer s = inequality_sum(spec, *table, N, bound_extension);
        if (sgn(s) < 0) {
            rep.violations.push_back(N);
        }
        else if (sgn(s) == 0) {
            rep.zeros.push_back(N);
        }
        rep.values.push_back(std::move(s));
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<InequalityReport> inequality_check_all(const std::vector<const InequalitySpec*>& specs, long max_n,
                                                   int parallelism)
{
    shared_partition_table(static_cast<int>(max_n));
    std::vector<InequalityReport> out(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            out[i] = inequality_check(*specs[i], max_n);
        }
    };
    int threads = std::max(1, std::min<int>(parallelism, static_cast<int>(specs.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bridges

const std::vector<Bridge>& bridges()
{
    static const std::vector<Bridge> list = {
        {"eq-5-3", "thm-t4-1-4-1", Rational(1)},
        {"eq-5-11", "thm-t4-1-5-10", Rational(2)},
        {"eq-5-12", "thm-t4-2-5-13", Rational(1)},
    };
    return list;
}

BridgeReport coefficient_nonnegativity_bridge(const std::string& identity_id, long order)
{
    auto b = std::find_if(bridges().begin(), bridges().end(),
                          [&](const Bridge& x) { return x.identity_id == identity_id; });
    if (b == bridges().end()) {
        throw std::invalid_argument("no inequality is attached to identity " + identity_id);
    }
    const IdentityRecord* rec = find_identity(identity_id);
    if (!rec) {
        throw UnknownIdentity(identity_id);
    }
    const InequalitySpec* spec = find_inequality(b->inequality_id);
    auto lhs = build_expr<Rational>(rec->lhs, order + 1);
    auto table = shared_partition_table(static_cast<int>(order));

    BridgeReport rep;
    rep.identity_id = identity_id;
    rep.inequality_id = b->inequality_id;
    rep.order = order;
    for (long N = 0; N <= order; ++N) {
        Rational c = lhs.coefficient(static_cast<int>(N)) * b->factor;
        Integer s = inequality_sum(*spec, *table, N);
        if (sgn(c) < 0 || sgn(s) < 0) {
            rep.nonnegative = false;
        }
        if (c != Rational(s) && !rep.first_difference) {
            rep.equal = false;
            rep.first_difference = N;
            rep.coefficient = c;
            rep.sum = s;
        }
    }
    return rep;
}

} // namespace qseries
