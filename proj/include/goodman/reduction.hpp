#ifndef GOODMAN_REDUCTION_HPP
#define GOODMAN_REDUCTION_HPP

#include <string>
#include <vector>

#include "goodman/complexity.hpp"
#include "goodman/stirling.hpp"

// Reduction of v(n) to weighted sums over lower rows of the Goodman-Savage
// triangle. One operator does all the work: the push-down step
// B'_j = j*B_j + B_{j+1}, which rewrites a level-m weighted sum as a
// level-(m-1) one with the same value. Iterating it from the odd weights
// [1, 3, ..., 2n-1] at level n ends in a single integer K = v(n), so a
// maximal n-place basis is worth exactly K one-place predicates. The
// closed coefficient families that appear along the way are
// reduction_coefficient (one push of the odd weights) and
// remainder_coefficient (what is left after splitting off three copies of
// the next-lower odd weights).

namespace goodman {

/// 2j^2 + j + 1: coefficient j after one push of the odd weights, i.e.
/// j*(2j-1) + (2j+1).
template <typename Scalar = Natural>
Scalar reduction_coefficient(int j) {
    if (j < 1)
        throw std::invalid_argument("reduction_coefficient: j must be >= 1 (got " +
                                    std::to_string(j) + ")");
    return Scalar(2 * j * j + j + 1);
}

/// 2j^2 - 5j + 4: reduction_coefficient(j) minus three times the odd
/// weight 2j-1. Always positive.
template <typename Scalar = Natural>
Scalar remainder_coefficient(int j) {
    if (j < 1)
        throw std::invalid_argument("remainder_coefficient: j must be >= 1 (got " +
                                    std::to_string(j) + ")");
    return Scalar(2 * j * j - 5 * j + 4);
}

/// Weights B_1..B_m over the Goodman-Savage row at one level: the value
/// represented is sum_j B_j * S(level, j).
template <typename Scalar = Natural>
struct CoefficientVector {
    int level = 1;
    Vector<Scalar> coefficients;
};

template <typename Scalar>
bool operator==(const CoefficientVector<Scalar>& a, const CoefficientVector<Scalar>& b) {
    return a.level == b.level && a.coefficients.size() == b.coefficients.size() &&
           a.coefficients == b.coefficients;
}

namespace detail {

template <typename Scalar>
void require_consistent(const CoefficientVector<Scalar>& cv, const char* who) {
    if (cv.level < 1) throw std::invalid_argument(std::string(who) + ": level must be >= 1");
    if (cv.coefficients.size() != static_cast<Eigen::Index>(cv.level))
        throw std::invalid_argument(std::string(who) +
                                    ": coefficient count must equal the level");
}

}  // namespace detail

/// The represented value: dot product with the Stirling row at cv.level.
template <typename Scalar = Natural>
Scalar evaluate(const CoefficientVector<Scalar>& cv) {
    detail::require_consistent(cv, "evaluate");
    auto row = detail::stirling_row<Scalar>(cv.level);
    Vector<Scalar> h(cv.level);
    for (int j = 1; j <= cv.level; ++j) h(j - 1) = row[static_cast<std::size_t>(j)];
    return cv.coefficients.dot(h);
}

/// One chain step: B'_j = j*B_j + B_{j+1} for j = 1..m-1. Value-preserving
/// because S(m, j) = j*S(m-1, j) + S(m-1, j-1) and S(m-1, m) = 0 kills the
/// top term. Level 1 has nothing below it.
template <typename Scalar = Natural>
CoefficientVector<Scalar> push_down(const CoefficientVector<Scalar>& cv) {
    detail::require_consistent(cv, "push_down");
    if (cv.level < 2) throw std::domain_error("push_down: level 1 has nothing below it");
    CoefficientVector<Scalar> out;
    out.level = cv.level - 1;
    out.coefficients = Vector<Scalar>(out.level);
    for (int j = 1; j < cv.level; ++j)
        out.coefficients(j - 1) = Scalar(j) * cv.coefficients(j - 1) + cv.coefficients(j);
    return out;
}

/// Starts from the odd weights [1, 3, ..., 2n-1] at level n and pushes
/// down to the requested level m < n. The result still evaluates to v(n).
template <typename Scalar = Natural>
CoefficientVector<Scalar> reduce_to_level(int n, int m) {
    detail::require_positive_n(n, "reduce_to_level");
    if (m < 1 || m > n - 1)
        throw std::domain_error("reduce_to_level: level must satisfy 1 <= level <= n-1 (got level = " +
                                std::to_string(m) + ", n = " + std::to_string(n) + ")");
    CoefficientVector<Scalar> cv{n, diagonal_weights<Scalar>(n)};
    while (cv.level > m) cv = push_down(cv);
    return cv;
}

/// The whole descent for one n: every intermediate vector, levels n-1
/// down to 1, plus the final integer K. K = v(n) since S(1, 1) = 1.
template <typename Scalar = Natural>
struct ReductionChain {
    int n = 1;
    std::vector<CoefficientVector<Scalar>> levels;  // empty when n = 1
    Scalar K{1};
};

template <typename Scalar = Natural>
ReductionChain<Scalar> reduction_chain(int n) {
    detail::require_positive_n(n, "reduction_chain");
    ReductionChain<Scalar> chain;
    chain.n = n;
    if (n == 1) return chain;
    CoefficientVector<Scalar> cv{n, diagonal_weights<Scalar>(n)};
    while (cv.level > 1) {
        cv = push_down(cv);
        chain.levels.push_back(cv);
    }
    chain.K = chain.levels.back().coefficients(0);
    return chain;
}

/// One split: v(n) = 3*v(n-1) + sum_j remainder_coefficient(j)*S(n-1, j).
template <typename Scalar = Natural>
struct StepDecomposition {
    int n = 2;
    Scalar factor{3};
    Scalar lower_value{0};                 // v(n-1)
    CoefficientVector<Scalar> remainder;   // remainder_coefficient family at level n-1
    Scalar remainder_value{0};
    Scalar total{0};                       // factor*lower_value + remainder_value = v(n)
};

template <typename Scalar = Natural>
StepDecomposition<Scalar> decompose_once(int n) {
    detail::require_positive_n(n, "decompose_once");
    if (n < 2) throw std::domain_error("decompose_once: needs n >= 2, there is nothing below n = 1");
    StepDecomposition<Scalar> d;
    d.n = n;
    d.lower_value = primary_complexity<Scalar>(n - 1);
    d.remainder.level = n - 1;
    d.remainder.coefficients = Vector<Scalar>(n - 1);
    for (int j = 1; j < n; ++j) d.remainder.coefficients(j - 1) = remainder_coefficient<Scalar>(j);
    d.remainder_value = evaluate(d.remainder);
    d.total = d.factor * d.lower_value + d.remainder_value;
    return d;
}

/// One addend of the fully unrolled remainder: weight 3^(n-1-level) times
/// the partial sum S_level = sum_j remainder_coefficient(j)*S(level, j).
template <typename Scalar = Natural>
struct RemainderTerm {
    int level = 1;
    Scalar weight{1};
    Scalar partial{0};
};

/// The split iterated all the way down: v(n) = 3^(n-1) + R with R the
/// weighted sum of the terms, levels 1..n-1. n = 1 gives 1 + 0.
template <typename Scalar = Natural>
struct FullDecomposition {
    int n = 1;
    Scalar power{1};  // 3^(n-1)
    Scalar remainder{0};
    Scalar total{1};
    std::vector<RemainderTerm<Scalar>> terms;
};

template <typename Scalar = Natural>
FullDecomposition<Scalar> decompose_fully(int n) {
    detail::require_positive_n(n, "decompose_fully");
    FullDecomposition<Scalar> d;
    d.n = n;
    d.power = integer_pow<Scalar>(Scalar(3), n - 1);
    d.remainder = Scalar(0);
    for (int i = 1; i < n; ++i) {
        RemainderTerm<Scalar> term;
        term.level = i;
        term.weight = integer_pow<Scalar>(Scalar(3), n - 1 - i);
        CoefficientVector<Scalar> partial{i, Vector<Scalar>(i)};
        for (int j = 1; j <= i; ++j)
            partial.coefficients(j - 1) = remainder_coefficient<Scalar>(j);
        term.partial = evaluate(partial);
        d.remainder += term.weight * term.partial;
        d.terms.push_back(std::move(term));
    }
    d.total = d.power + d.remainder;
    return d;
}

}  // namespace goodman

#endif  // GOODMAN_REDUCTION_HPP
