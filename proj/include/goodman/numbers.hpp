#ifndef GOODMAN_NUMBERS_HPP
#define GOODMAN_NUMBERS_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

// Eigen needs NumTraits for any custom scalar it carries. Exact integer
// semantics only: no epsilon, no precision loss.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpz_class;
    using Nested = mpz_class;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 30,
        MulCost = 50
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace goodman {

/// Arbitrary-precision non-negative integer; every published quantity in
/// this library is one. Intermediate alternating sums may dip below zero,
/// so the underlying type is signed.
using Natural = mpz_class;

/// Exact rational, used where a formula is evaluated literally (per-term
/// fractions) rather than over a common denominator.
using Rational = mpq_class;

template <typename Scalar>
using Table = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using NaturalTable = Table<Natural>;
using NaturalVector = Vector<Natural>;

template <typename Scalar>
Scalar integer_pow(Scalar base, int exponent) {
    Scalar result{1};
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

template <typename Scalar>
Scalar factorial(int n) {
    Scalar result{1};
    for (int i = 2; i <= n; ++i) result *= Scalar(i);
    return result;
}

inline std::string decimal_string(const Natural& value) { return value.get_str(); }

}  // namespace goodman

#endif  // GOODMAN_NUMBERS_HPP
