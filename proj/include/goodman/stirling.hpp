#ifndef GOODMAN_STIRLING_HPP
#define GOODMAN_STIRLING_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "goodman/numbers.hpp"

// Stirling numbers of the second kind S(n, m) — the count of partitions of
// an n-element set into exactly m non-empty blocks — computed by three
// independent routes (closed alternating sum, triangle recurrence, explicit
// partition enumeration) so each can serve as an oracle for the others.
// In Goodman's complexity calculus these are the multiplicities of m-place
// thoroughly-irreflexive predicates in the expansion of an n-place
// predicate (the Goodman-Savage numbers).
//
// Index convention: one canonical pair (n, m) with 1 <= m <= n everywhere;
// S(n, m) = 0 outside that triangle so boundary terms of summations vanish
// instead of needing special cases.

namespace goodman {

/// Hard bound for the brute-force enumeration routes. Bell(12) = 4,213,597
/// partitions, still seconds of work; beyond that the oracle refuses.
inline constexpr int enumeration_cap = 12;

/// Lower-triangular table of exact integers indexed 1 <= m <= n <= max_n.
/// Stored dense with zeros above the diagonal so the table doubles as a
/// square matrix operand.
template <typename Scalar = Natural>
class TriangularTable {
public:
    explicit TriangularTable(Eigen::Index max_n)
        : entries_(Table<Scalar>::Zero(checked(max_n), checked(max_n))) {}

    Eigen::Index max_n() const { return entries_.rows(); }

    const Scalar& operator()(Eigen::Index n, Eigen::Index m) const {
        check_indices(n, m);
        return entries_(n - 1, m - 1);
    }

    Scalar& operator()(Eigen::Index n, Eigen::Index m) {
        check_indices(n, m);
        return entries_(n - 1, m - 1);
    }

    /// Entries (n, 1)..(n, n) as a column vector.
    Vector<Scalar> row(Eigen::Index n) const {
        if (n < 1 || n > max_n()) throw std::out_of_range("TriangularTable: row out of range");
        return entries_.row(n - 1).head(n).transpose();
    }

    /// The full square matrix view (zeros above the diagonal).
    const Table<Scalar>& matrix() const { return entries_; }

    friend bool operator==(const TriangularTable& a, const TriangularTable& b) {
        return a.entries_.rows() == b.entries_.rows() && a.entries_ == b.entries_;
    }

private:
    static Eigen::Index checked(Eigen::Index max_n) {
        if (max_n < 1) throw std::invalid_argument("TriangularTable: max_n must be >= 1");
        return max_n;
    }

    void check_indices(Eigen::Index n, Eigen::Index m) const {
        if (n < 1 || n > max_n() || m < 1 || m > n)
            throw std::out_of_range("TriangularTable: entry (" + std::to_string(n) + ", " +
                                    std::to_string(m) + ") outside 1 <= m <= n <= " +
                                    std::to_string(max_n()));
    }

    Table<Scalar> entries_;
};

namespace detail {

inline void require_positive_n(int n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}

/// S(n, 1..n) by the triangle recurrence, one rolling row.
/// S(n+1, m) = m*S(n, m) + S(n, m-1), starting from S(1, 1) = 1.
template <typename Scalar>
std::vector<Scalar> stirling_row(int n) {
    std::vector<Scalar> row(static_cast<std::size_t>(n) + 1, Scalar(0));
    row[1] = Scalar(1);
    for (int nn = 2; nn <= n; ++nn)
        for (int m = nn; m >= 1; --m) row[m] = Scalar(m) * row[m] + row[m - 1];
    return row;
}

}  // namespace detail

/// Closed form: S(n, m) = (1/m!) * sum_{k=0..m} (-1)^(m-k) C(m, k) k^n.
/// The alternating sum is accumulated in exact integers and must divide by
/// m! exactly; a remainder would mean the arithmetic is broken, so it throws.
template <typename Scalar = Natural>
Scalar stirling_second_closed(int n, int m) {
    detail::require_positive_n(n, "stirling_second_closed");
    if (m < 1 || m > n) return Scalar(0);
    Scalar sum{0};
    Scalar binomial{1};  // C(m, 0)
    for (int k = 0; k <= m; ++k) {
        if (k > 0) {
            Scalar power = integer_pow(Scalar(k), n);
            if ((m - k) % 2 == 0)
                sum += binomial * power;
            else
                sum -= binomial * power;
        }
        // C(m, k+1) = C(m, k) * (m-k) / (k+1), exact at every step
        binomial *= Scalar(m - k);
        binomial /= Scalar(k + 1);
    }
    Scalar divisor = factorial<Scalar>(m);
    if (sum % divisor != 0)
        throw std::logic_error("stirling_second_closed: alternating sum not divisible by m!");
    return sum / divisor;
}

/// Triangle recurrence route; same value as the closed form for every
/// argument, zero outside the triangle.
template <typename Scalar = Natural>
Scalar stirling_second_recurrence(int n, int m) {
    detail::require_positive_n(n, "stirling_second_recurrence");
    if (m < 1 || m > n) return Scalar(0);
    return detail::stirling_row<Scalar>(n)[static_cast<std::size_t>(m)];
}

/// Visits every set partition of {1..n}, encoded as its restricted-growth
/// string, in lexicographic order: labels[i] is the block of element i+1,
/// labels[0] = 0 and labels[i] <= max(labels[0..i-1]) + 1.
/// The visitor receives (labels, block_count). Callers bound n themselves;
/// the walk is Bell(n) visits long.
template <typename Visitor>
void for_each_set_partition(int n, Visitor&& visit) {
    detail::require_positive_n(n, "for_each_set_partition");
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
    for (;;) {
        visit(labels, prefix_max[n - 1] + 1);
        int i = n - 1;
        while (i > 0 && labels[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) return;
        ++labels[i];
        prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
        for (int j = i + 1; j < n; ++j) {
            labels[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

/// Brute-force oracle: counts the partitions of {1..n} with exactly m
/// blocks by enumerating them. Rejects n above the enumeration cap.
inline Natural stirling_second_enumerate(int n, int m) {
    detail::require_positive_n(n, "stirling_second_enumerate");
    if (n > enumeration_cap)
        throw std::domain_error("stirling_second_enumerate: oracle limit is n <= " +
                                std::to_string(enumeration_cap) + " (got n = " +
                                std::to_string(n) + ")");
    if (m < 1 || m > n) return Natural(0);
    unsigned long count = 0;
    for_each_set_partition(n, [&](const std::vector<int>&, int blocks) {
        if (blocks == m) ++count;
    });
    return Natural(count);
}

/// The Goodman-Savage triangle: entry (n, m) = S(n, m) for n <= max_n,
/// built by the recurrence. First column and diagonal are all ones.
template <typename Scalar = Natural>
TriangularTable<Scalar> goodman_savage_table(Eigen::Index max_n) {
    TriangularTable<Scalar> table(max_n);
    table(1, 1) = Scalar(1);
    for (Eigen::Index n = 2; n <= max_n; ++n) {
        table(n, 1) = Scalar(1);
        for (Eigen::Index m = 2; m < n; ++m)
            table(n, m) = Scalar(static_cast<long>(m)) * table(n - 1, m) + table(n - 1, m - 1);
        table(n, n) = Scalar(1);
    }
    return table;
}

/// Bell number: total partitions of an n-element set, i.e. the row sum of
/// the Goodman-Savage triangle. Counts the argument-identification forms
/// of an n-place relation.
template <typename Scalar = Natural>
Scalar bell(int n) {
    detail::require_positive_n(n, "bell");
    auto row = detail::stirling_row<Scalar>(n);
    Scalar sum{0};
    for (int m = 1; m <= n; ++m) sum += row[static_cast<std::size_t>(m)];
    return sum;
}

}  // namespace goodman

#endif  // GOODMAN_STIRLING_HPP
