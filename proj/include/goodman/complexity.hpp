#ifndef GOODMAN_COMPLEXITY_HPP
#define GOODMAN_COMPLEXITY_HPP

#include <string>
#include <vector>

#include "goodman/stirling.hpp"

// Maximum primary complexity of predicates, after Goodman. An n-place
// predicate is worth v(n) = sum_{k=1..n} (2k-1) * S(n, k); the per-k
// contributions (2k-1) * S(n, k) are the Goodman-Fine numbers. The whole
// Goodman-Fine triangle is the Goodman-Savage triangle right-multiplied by
// the diagonal of odd weights 1, 3, 5, ..., 2n-1, and that identity is
// checked entrywise here via an actual matrix product.

namespace goodman {

/// (2k-1) * S(n, k), with S from the triangle recurrence. The maximum value
/// a k-place predicate contributes to an n-place expansion. Rejects k
/// outside 1..n.
template <typename Scalar = Natural>
Scalar goodman_fine(int n, int k) {
    detail::require_positive_n(n, "goodman_fine");
    if (k < 1 || k > n)
        throw std::domain_error("goodman_fine: k must satisfy 1 <= k <= n (got k = " +
                                std::to_string(k) + ", n = " + std::to_string(n) + ")");
    return Scalar(2 * k - 1) * stirling_second_recurrence<Scalar>(n, k);
}

/// Same quantity by the alternating-sum route instead of the recurrence;
/// the two must agree everywhere.
template <typename Scalar = Natural>
Scalar goodman_fine_closed(int n, int k) {
    detail::require_positive_n(n, "goodman_fine_closed");
    if (k < 1 || k > n)
        throw std::domain_error("goodman_fine_closed: k must satisfy 1 <= k <= n (got k = " +
                                std::to_string(k) + ", n = " + std::to_string(n) + ")");
    return Scalar(2 * k - 1) * stirling_second_closed<Scalar>(n, k);
}

/// v(n): the maximum primary complexity of one unrestricted n-place
/// predicate, as the odd-weighted row sum of the Goodman-Savage triangle.
template <typename Scalar = Natural>
Scalar primary_complexity(int n) {
    detail::require_positive_n(n, "primary_complexity");
    auto row = detail::stirling_row<Scalar>(n);
    Scalar total{0};
    for (int k = 1; k <= n; ++k) total += Scalar(2 * k - 1) * row[static_cast<std::size_t>(k)];
    return total;
}

/// v(n) evaluated as the literal double sum
///   sum_{k=1..n} sum_{r=0..k} (-1)^r (2k-1) (k-r)^n / ((k-r)! r!)
/// in exact rational arithmetic, term by term. Independent of the Stirling
/// recurrence and of the common-denominator trick; the result must be an
/// integer or the formula itself is wrong.
Natural primary_complexity_double_sum(int n);

template <typename Scalar = Natural>
struct ComplexityBreakdown {
    int n = 1;
    Vector<Scalar> contributions;  // entry k-1 is (2k-1) * S(n, k)
    Scalar total{0};
};

template <typename Scalar = Natural>
ComplexityBreakdown<Scalar> complexity_breakdown(int n) {
    detail::require_positive_n(n, "complexity_breakdown");
    ComplexityBreakdown<Scalar> result;
    result.n = n;
    result.contributions = Vector<Scalar>(n);
    auto row = detail::stirling_row<Scalar>(n);
    for (int k = 1; k <= n; ++k) {
        result.contributions(k - 1) = Scalar(2 * k - 1) * row[static_cast<std::size_t>(k)];
        result.total += result.contributions(k - 1);
    }
    return result;
}

/// The Goodman-Fine triangle: entry (n, k) = (2k-1) * S(n, k).
template <typename Scalar = Natural>
TriangularTable<Scalar> goodman_fine_table(Eigen::Index max_n) {
    TriangularTable<Scalar> gs = goodman_savage_table<Scalar>(max_n);
    TriangularTable<Scalar> table(max_n);
    for (Eigen::Index n = 1; n <= max_n; ++n)
        for (Eigen::Index k = 1; k <= n; ++k)
            table(n, k) = Scalar(static_cast<long>(2 * k - 1)) * gs(n, k);
    return table;
}

/// The odd weights 1, 3, 5, ..., 2*max_n - 1 as a vector; used as the
/// diagonal factor relating the two triangles.
template <typename Scalar = Natural>
Vector<Scalar> diagonal_weights(Eigen::Index max_n) {
    if (max_n < 1) throw std::invalid_argument("diagonal_weights: max_n must be >= 1");
    Vector<Scalar> weights(max_n);
    for (Eigen::Index k = 1; k <= max_n; ++k)
        weights(k - 1) = Scalar(static_cast<long>(2 * k - 1));
    return weights;
}

struct MatrixIdentityResult {
    bool holds = true;
    // First offending entry, 1-based, when holds is false.
    Eigen::Index n = 0;
    Eigen::Index m = 0;
};

/// Checks entrywise that gs * diag(1, 3, ..., 2n-1) == gf. Separated from
/// table construction so a deliberately corrupted table exercises the
/// witness reporting.
template <typename Scalar = Natural>
MatrixIdentityResult matrix_identity_check(const TriangularTable<Scalar>& gs,
                                           const TriangularTable<Scalar>& gf) {
    if (gs.max_n() != gf.max_n())
        throw std::invalid_argument("matrix_identity_check: tables differ in size");
    const Eigen::Index size = gs.max_n();
    Table<Scalar> product = gs.matrix() * diagonal_weights<Scalar>(size).asDiagonal();
    for (Eigen::Index n = 1; n <= size; ++n)
        for (Eigen::Index m = 1; m <= n; ++m)
            if (product(n - 1, m - 1) != gf(n, m)) return {false, n, m};
    return {};
}

/// Builds both triangles up to max_n and checks the identity.
template <typename Scalar = Natural>
MatrixIdentityResult matrix_identity_holds(Eigen::Index max_n) {
    return matrix_identity_check(goodman_savage_table<Scalar>(max_n),
                                 goodman_fine_table<Scalar>(max_n));
}

/// Count of argument-identification forms of one n-place relation: Bell(n).
/// A 3-place relation has the five forms xxx, xxy, xyx, yxx, xyz.
template <typename Scalar = Natural>
Scalar svenonius_forms(int n) {
    return bell<Scalar>(n);
}

enum class DefinabilityVerdict { NotDefinable, Inconclusive };

/// One-directional definability pre-check: relations of n1 places are not
/// definable in terms of relations of n2 places when n1 has strictly more
/// forms (2^Bell(n1) > 2^Bell(n2)). No positive verdict exists: anything
/// else is Inconclusive.
inline DefinabilityVerdict svenonius_precheck(int n1, int n2) {
    return bell<Natural>(n1) > bell<Natural>(n2) ? DefinabilityVerdict::NotDefinable
                                                 : DefinabilityVerdict::Inconclusive;
}

/// The form patterns themselves, one string per partition of the argument
/// positions, in restricted-growth order. Letters x, y, z, w, v, u are
/// assigned to blocks by decreasing block size, ties by first occurrence,
/// which reproduces the conventional listing (n = 3: xxx, xxy, xyx, yxx,
/// xyz). Only defined for n <= 6, where six letters suffice.
std::vector<std::string> form_patterns(int n);

}  // namespace goodman

#endif  // GOODMAN_COMPLEXITY_HPP
