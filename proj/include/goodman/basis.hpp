#ifndef GOODMAN_BASIS_HPP
#define GOODMAN_BASIS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "goodman/complexity.hpp"

// Bracket notation for predicate bases, e.g. "[2-pl.irref.; two 1-pl.]",
// and the valuation of a basis as the sum of its predicates' maximum
// primary complexity values. Grammar:
//
//   basis := "[" [ item (";" item)* ] "]"
//   item  := count? places "-" "pl" "."? ("irref" "."?)?
//   count := decimal integer | "one" .. "ten"
//
// Keywords are case-insensitive and whitespace is free. A predicate worth
// tracking separately is a (places, irreflexive) pair; repeated items
// merge into one entry with a summed multiplicity.

namespace goodman {

struct PredicateSpec {
    int places = 1;
    bool irreflexive = false;
    Natural multiplicity{1};
    // The unit entry an n-place schema expansion carries alongside its
    // irreflexive predicates. Formats like a plain 1-place predicate.
    bool synthetic_unit = false;

    friend bool operator==(const PredicateSpec&, const PredicateSpec&) = default;
};

/// Predicates in canonical order: descending places, irreflexive before
/// plain, the synthetic unit last, one entry per kind.
struct BasisSpec {
    std::vector<PredicateSpec> predicates;

    friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

/// Validates, merges and orders arbitrary entries into canonical form.
BasisSpec make_basis(std::vector<PredicateSpec> entries);

class BasisParseError : public std::runtime_error {
  public:
    BasisParseError(std::size_t position, std::vector<std::string> expected,
                    const std::string& message)
        : std::runtime_error(message), position_(position), expected_(std::move(expected)) {}

    /// 1-based character offset of the offending input.
    std::size_t position() const { return position_; }
    /// What would have been accepted there; empty for value errors.
    const std::vector<std::string>& expected() const { return expected_; }

  private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

/// Parses the bracket notation; throws BasisParseError on malformed input.
BasisSpec parse_basis(std::string_view text);

/// Canonical rendering; multiplicity 1 is left implicit. Parsing the
/// result reproduces the basis except that a synthetic unit comes back as
/// an ordinary 1-place predicate.
std::string format_basis(const BasisSpec& basis);

/// The value of one predicate of this kind: 2*places - 1 when thoroughly
/// irreflexive, v(places) when unrestricted, 1 for any 1-place predicate.
Natural predicate_unit_value(const PredicateSpec& predicate);

/// Maximum primary complexity of the basis: the multiplicity-weighted sum
/// of unit values. Empty bases are worth 0.
Natural basis_value(const BasisSpec& basis);

/// The n-place expansion schema: h_{n,m} thoroughly irreflexive m-place
/// predicates for each m in 2..n, plus the synthetic unit. Its value is
/// v(n). Defined for n >= 2; a 1-place predicate needs no schema.
BasisSpec expand_schema(int n);

}  // namespace goodman

#endif  // GOODMAN_BASIS_HPP
