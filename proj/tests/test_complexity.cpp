#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "goodman/complexity.hpp"

using goodman::Natural;

namespace {

// Frozen Goodman-Fine triangle, rows 1..7.
const std::vector<std::vector<long>> gf_rows = {
    {1},
    {1, 3},
    {1, 9, 5},
    {1, 21, 30, 7},
    {1, 45, 125, 70, 9},
    {1, 93, 450, 455, 135, 11},
    {1, 189, 1505, 2450, 1260, 231, 13},
};

const std::vector<long> v_totals = {1, 4, 15, 59, 250, 1145, 5649};

}  // namespace

TEST_CASE("frozen contribution rows 1..7") {
    auto table = goodman::goodman_fine_table<Natural>(7);
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(table(n, k) == Natural(gf_rows[n - 1][k - 1]));
}

TEST_CASE("frozen totals v(1)..v(7)") {
    for (int n = 1; n <= 7; ++n)
        CHECK(goodman::primary_complexity<Natural>(n) ==
              Natural(v_totals[static_cast<std::size_t>(n - 1)]));
}

TEST_CASE("both contribution routes agree") {
    for (int n = 1; n <= 16; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(goodman::goodman_fine<Natural>(n, k) ==
                  goodman::goodman_fine_closed<Natural>(n, k));
}

TEST_CASE("contribution arity is range-checked") {
    CHECK_THROWS_AS(goodman::goodman_fine<Natural>(4, 0), std::domain_error);
    CHECK_THROWS_AS(goodman::goodman_fine<Natural>(4, 5), std::domain_error);
    CHECK_THROWS_AS(goodman::goodman_fine_closed<Natural>(4, 5), std::domain_error);
    CHECK_THROWS_AS(goodman::goodman_fine<Natural>(0, 1), std::invalid_argument);
}

TEST_CASE("the n-arity contribution is the odd weight") {
    for (int n = 1; n <= 12; ++n)
        CHECK(goodman::goodman_fine<Natural>(n, n) == Natural(2 * n - 1));
}

TEST_CASE("breakdown lists every contribution and their sum") {
    auto breakdown = goodman::complexity_breakdown<Natural>(4);
    REQUIRE(breakdown.contributions.size() == 4);
    CHECK(breakdown.contributions(0) == 1);
    CHECK(breakdown.contributions(1) == 21);
    CHECK(breakdown.contributions(2) == 30);
    CHECK(breakdown.contributions(3) == 7);
    CHECK(breakdown.total == 59);
    CHECK(breakdown.n == 4);
}

TEST_CASE("rational double sum lands on the same integers") {
    // Term-by-term evaluation over exact rationals; no shared code with
    // the Stirling routes.
    for (int n = 1; n <= 12; ++n)
        CHECK(goodman::primary_complexity_double_sum(n) ==
              goodman::primary_complexity<Natural>(n));
}

TEST_CASE("diagonal weights are the odd numbers") {
    auto weights = goodman::diagonal_weights<Natural>(6);
    REQUIRE(weights.size() == 6);
    for (int k = 1; k <= 6; ++k) CHECK(weights(k - 1) == Natural(2 * k - 1));
    CHECK_THROWS_AS(goodman::diagonal_weights<Natural>(0), std::invalid_argument);
}

TEST_CASE("weighting the triangle gives the contribution table") {
    for (int size : {1, 2, 4, 8, 12}) {
        auto result = goodman::matrix_identity_holds<Natural>(size);
        CHECK(result.holds);
    }
}

TEST_CASE("the 4x4 product instance, entry for entry") {
    auto gs = goodman::goodman_savage_table<Natural>(4);
    auto weights = goodman::diagonal_weights<Natural>(4);
    goodman::Table<Natural> product = gs.matrix() * weights.asDiagonal();
    const long expected[4][4] = {
        {1, 0, 0, 0},
        {1, 3, 0, 0},
        {1, 9, 5, 0},
        {1, 21, 30, 7},
    };
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(product(r, c) == Natural(expected[r][c]));
}

TEST_CASE("a corrupted entry is reported as a witness") {
    auto gs = goodman::goodman_savage_table<Natural>(5);
    auto gf = goodman::goodman_fine_table<Natural>(5);
    gf(4, 3) += 1;
    auto result = goodman::matrix_identity_check(gs, gf);
    CHECK_FALSE(result.holds);
    CHECK(result.n == 4);
    CHECK(result.m == 3);
    CHECK_THROWS_AS(
        goodman::matrix_identity_check(gs, goodman::goodman_fine_table<Natural>(6)),
        std::invalid_argument);
}

TEST_CASE("form counts") {
    CHECK(goodman::svenonius_forms<Natural>(1) == 1);
    CHECK(goodman::svenonius_forms<Natural>(2) == 2);
    CHECK(goodman::svenonius_forms<Natural>(3) == 5);
    CHECK(goodman::svenonius_forms<Natural>(4) == 15);
}

TEST_CASE("definability pre-check is one-directional") {
    using goodman::DefinabilityVerdict;
    CHECK(goodman::svenonius_precheck(3, 2) == DefinabilityVerdict::NotDefinable);
    CHECK(goodman::svenonius_precheck(2, 3) == DefinabilityVerdict::Inconclusive);
    CHECK(goodman::svenonius_precheck(3, 3) == DefinabilityVerdict::Inconclusive);
    CHECK(goodman::svenonius_precheck(1, 1) == DefinabilityVerdict::Inconclusive);
    CHECK(goodman::svenonius_precheck(6, 2) == DefinabilityVerdict::NotDefinable);
}

TEST_CASE("form patterns up to n = 4") {
    using Patterns = std::vector<std::string>;
    CHECK(goodman::form_patterns(1) == Patterns{"x"});
    CHECK(goodman::form_patterns(2) == Patterns{"xx", "xy"});
    CHECK(goodman::form_patterns(3) == Patterns{"xxx", "xxy", "xyx", "yxx", "xyz"});
    // n = 4: fifteen patterns, one per partition, larger blocks first.
    Patterns four = goodman::form_patterns(4);
    REQUIRE(four.size() == 15);
    CHECK(four.front() == "xxxx");
    CHECK(four.back() == "xyzw");
    CHECK(four[1] == "xxxy");
    CHECK(std::count(four.begin(), four.end(), "xxyx") == 1);
    CHECK(std::count(four.begin(), four.end(), "yxxx") == 1);
}

TEST_CASE("pattern letters run out above n = 6") {
    CHECK(goodman::form_patterns(6).size() == 203);
    CHECK_THROWS_AS(goodman::form_patterns(7), std::domain_error);
    CHECK_THROWS_AS(goodman::form_patterns(0), std::invalid_argument);
}
