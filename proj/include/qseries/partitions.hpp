#ifndef QSERIES_PARTITIONS_HPP
#define QSERIES_PARTITIONS_HPP

#include "qseries/ring.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qseries {

// ---------------------------------------------------------------------------
// Partition-count tables

/// p(n), pod(n) (odd parts distinct) and pbar(n) (overpartitions) for n <= max_n.
struct PartitionTable {
    int max_n = 0;
    std::vector<Integer> p;
    std::vector<Integer> pod;
    std::vector<Integer> pbar;
};

/// p from the pentagonal recurrence, pod and pbar from their products.
PartitionTable partition_table(int max_n);

/// Shared immutable table covering at least max_n; grows on demand.
std::shared_ptr<const PartitionTable> shared_partition_table(int max_n);

/// p(n) = sum_k (-1)^{k+1} (p(n - k(3k-1)/2) + p(n - k(3k+1)/2))
std::vector<Integer> partitions_pentagonal(int max_n);
/// Coefficients of 1/(q;q)_inf.
std::vector<Integer> partitions_series(int max_n);
/// Coefficients of (-q;q^2)_inf/(q^2;q^2)_inf.
std::vector<Integer> pod_series(int max_n);
/// Coefficients of (-q;q)_inf/(q;q)_inf.
std::vector<Integer> overpartitions_series(int max_n);

/// Brute-force counts by walking every partition of n.
struct EnumeratedCounts {
    Integer p;
    Integer pod;
    Integer pbar;
};
EnumeratedCounts enumerate_counts(int n);

// ---------------------------------------------------------------------------
// Inequalities

enum class PartitionFunction { p, pod, pbar };
std::string to_string(PartitionFunction f);

/// (N + nn n^2 + n1 n + jj j^2 + c0) / den
struct ArgumentExpr {
    int nn = 0;
    int n1 = 0;
    int jj = 0;
    int c0 = 0;
    int den = 1;

    /// nullopt when the value is not a nonnegative integer.
    std::optional<long> evaluate(long N, long n, long j) const;
};

struct InequalityTerm {
    int sign = 1;
    ArgumentExpr arg;
};

/// n runs to floor(sqrt(N/c)) or floor(N/c).
struct NBound {
    enum class Kind { sqrt, linear };
    Kind kind = Kind::sqrt;
    int c = 1;

    long evaluate(long N) const;
};

/// S(N) = sum_{n=0}^{bound} sum_{j=-n}^{n + j_extra} (-1)^{sign_n n + sign_j j} sum_terms sign f(arg)
struct InequalitySpec {
    std::string id;
    std::string description;
    PartitionFunction function = PartitionFunction::p;
    int sign_n = 0;
    int sign_j = 0;
    int j_extra = 0;
    NBound bound;
    std::vector<InequalityTerm> terms;
};

const std::vector<InequalitySpec>& inequalities();
const InequalitySpec* find_inequality(const std::string& id);

class CoverageError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// S(N) for one N; bound_extension widens the n range.
Integer inequality_sum(const InequalitySpec& spec, const PartitionTable& table, long N, int bound_extension = 0);

struct InequalityReport {
    std::string id;
    long max_n = 0;
    std::vector<Integer> values; // S(0..max_n)
    std::vector<long> violations; // N with S(N) < 0
    std::vector<long> zeros;      // N with S(N) = 0
    double elapsed_ms = 0;

    bool holds() const noexcept { return violations.empty(); }
};

InequalityReport inequality_check(const InequalitySpec& spec, long max_n, int bound_extension = 0);
std::vector<InequalityReport> inequality_check_all(const std::vector<const InequalitySpec*>& specs, long max_n,
                                                   int parallelism);

// ---------------------------------------------------------------------------
// Bridges: S(N) = factor * [q^N] (left side of a registered identity)

struct Bridge {
    std::string identity_id;
    std::string inequality_id;
    Rational factor{1};
};

const std::vector<Bridge>& bridges();

struct BridgeReport {
    std::string identity_id;
    std::string inequality_id;
    long order = 0;
    bool equal = true;
    bool nonnegative = true;
    std::optional<long> first_difference;
    Rational coefficient;
    Integer sum;
};

BridgeReport coefficient_nonnegativity_bridge(const std::string& identity_id, long order);

} // namespace qseries

#endif
