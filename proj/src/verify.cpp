#include "goodman/verify.hpp"

#include <algorithm>
#include <functional>

#include "goodman/basis.hpp"
#include "goodman/complexity.hpp"
#include "goodman/reduction.hpp"
#include "goodman/stirling.hpp"

namespace goodman {

namespace {

std::string scope(int max_n) { return "checked n <= " + std::to_string(max_n); }

CheckResult check(const std::string& name, int max_n,
                  const std::function<std::string(int)>& first_failure) {
    for (int n = 1; n <= max_n; ++n) {
        std::string witness = first_failure(n);
        if (!witness.empty()) return {name, false, witness};
    }
    return {name, true, scope(max_n)};
}

std::string format_entry(int n, int m) {
    return "(n = " + std::to_string(n) + ", m = " + std::to_string(m) + ")";
}

CheckResult stirling_route_agreement(int max_n) {
    return check("stirling-route-agreement", max_n, [](int n) -> std::string {
        for (int m = 1; m <= n; ++m) {
            Natural closed = stirling_second_closed(n, m);
            Natural recurrence = stirling_second_recurrence(n, m);
            if (closed != recurrence)
                return "closed " + decimal_string(closed) + " != recurrence " +
                       decimal_string(recurrence) + " at " + format_entry(n, m);
        }
        return {};
    });
}

CheckResult stirling_oracle_agreement(int max_n) {
    const int bound = std::min(max_n, enumeration_cap);
    return check("stirling-oracle-agreement", bound, [](int n) -> std::string {
        if (n <= 8) {
            for (int m = 1; m <= n; ++m)
                if (stirling_second_enumerate(n, m) != stirling_second_recurrence(n, m))
                    return "enumeration != recurrence at " + format_entry(n, m);
            return {};
        }
        // Larger rows: one sweep tallies every m at once; the per-entry
        // oracle would walk all Bell(n) partitions n times over.
        std::vector<unsigned long> counted(static_cast<std::size_t>(n) + 1, 0);
        for_each_set_partition(n, [&](const std::vector<int>&, int blocks) {
            ++counted[static_cast<std::size_t>(blocks)];
        });
        for (int m = 1; m <= n; ++m) {
            Natural computed = stirling_second_recurrence(n, m);
            if (Natural(counted[static_cast<std::size_t>(m)]) != computed)
                return "enumeration " + std::to_string(counted[static_cast<std::size_t>(m)]) +
                       " != recurrence " + decimal_string(computed) + " at " + format_entry(n, m);
        }
        return {};
    });
}

CheckResult stirling_recurrence_identity(int max_n) {
    return check("stirling-recurrence-identity", max_n, [max_n](int n) -> std::string {
        if (n == max_n) return {};
        for (int m = 1; m <= n + 1; ++m) {
            // S(n, 0) and S(n, n+1) are 0 by the out-of-triangle convention.
            Natural lhs = stirling_second_recurrence(n + 1, m);
            Natural rhs = Natural(m) * stirling_second_recurrence(n, m) +
                          stirling_second_recurrence(n, m - 1);
            if (lhs != rhs)
                return "S(n+1, m) != m*S(n, m) + S(n, m-1) at " + format_entry(n + 1, m);
        }
        return {};
    });
}

CheckResult stirling_boundary(int max_n) {
    return check("stirling-boundary", max_n, [](int n) -> std::string {
        if (stirling_second_recurrence(n, 1) != 1) return "S(n, 1) != 1 at n = " + std::to_string(n);
        if (stirling_second_recurrence(n, n) != 1) return "S(n, n) != 1 at n = " + std::to_string(n);
        if (stirling_second_recurrence(n, n + 1) != 0 || stirling_second_closed(n, n + 1) != 0)
            return "S(n, n+1) != 0 at n = " + std::to_string(n);
        if (stirling_second_recurrence(n, 0) != 0 || stirling_second_closed(n, 0) != 0)
            return "S(n, 0) != 0 at n = " + std::to_string(n);
        return {};
    });
}

CheckResult bell_row_sums(int max_n) {
    const int bound = std::min(max_n, enumeration_cap);
    return check("bell-row-sums", bound, [](int n) -> std::string {
        Natural row_sum{0};
        for (int m = 1; m <= n; ++m) row_sum += stirling_second_recurrence(n, m);
        if (bell(n) != row_sum)
            return "bell(n) != Goodman-Savage row sum at n = " + std::to_string(n);
        unsigned long partitions = 0;
        for_each_set_partition(n, [&](const std::vector<int>&, int) { ++partitions; });
        if (bell(n) != Natural(partitions))
            return "bell(n) != partition count at n = " + std::to_string(n);
        return {};
    });
}

CheckResult complexity_route_agreement(int max_n) {
    return check("complexity-route-agreement", max_n, [](int n) -> std::string {
        const Natural weighted = primary_complexity(n);
        const ComplexityBreakdown<Natural> breakdown = complexity_breakdown<Natural>(n);
        Natural by_contribution{0};
        Natural by_closed{0};
        for (int k = 1; k <= n; ++k) {
            if (breakdown.contributions(k - 1) != goodman_fine(n, k))
                return "breakdown contribution disagrees at k = " + std::to_string(k) +
                       ", n = " + std::to_string(n);
            by_contribution += goodman_fine(n, k);
            by_closed += goodman_fine_closed(n, k);
        }
        if (breakdown.total != weighted)
            return "breakdown total disagrees at n = " + std::to_string(n);
        const Natural double_sum = primary_complexity_double_sum(n);
        const Natural chain = reduction_chain(n).K;
        const Natural unrolled = decompose_fully(n).total;
        if (by_contribution != weighted)
            return "sum of contributions disagrees at n = " + std::to_string(n);
        if (by_closed != weighted)
            return "closed-form contributions disagree at n = " + std::to_string(n);
        if (double_sum != weighted)
            return "double sum " + decimal_string(double_sum) + " != weighted row sum " +
                   decimal_string(weighted) + " at n = " + std::to_string(n);
        if (chain != weighted)
            return "chain K " + decimal_string(chain) + " != v(n) at n = " + std::to_string(n);
        if (unrolled != weighted)
            return "full decomposition total != v(n) at n = " + std::to_string(n);
        return {};
    });
}

CheckResult goodman_fine_diagonal(int max_n) {
    return check("goodman-fine-diagonal", max_n, [](int n) -> std::string {
        if (goodman_fine(n, n) != Natural(2 * n - 1))
            return "v_k(n, n) != 2n-1 at n = " + std::to_string(n);
        return {};
    });
}

CheckResult matrix_identity(int max_n) {
    MatrixIdentityResult result = matrix_identity_holds<Natural>(max_n);
    if (!result.holds)
        return {"matrix-identity", false,
                "product entry disagrees at " +
                    format_entry(static_cast<int>(result.n), static_cast<int>(result.m))};
    return {"matrix-identity", true, scope(max_n)};
}

CheckResult reduction_value_preservation(int max_n) {
    return check("reduction-value-preservation", max_n, [](int n) -> std::string {
        const Natural value = primary_complexity(n);
        ReductionChain<Natural> chain = reduction_chain(n);
        for (const CoefficientVector<Natural>& cv : chain.levels)
            if (evaluate(cv) != value)
                return "level " + std::to_string(cv.level) + " of the n = " + std::to_string(n) +
                       " chain evaluates to " + decimal_string(evaluate(cv)) + ", not " +
                       decimal_string(value);
        if (chain.K != value) return "K != v(n) at n = " + std::to_string(n);
        return {};
    });
}

CheckResult one_step_coefficients(int max_n) {
    return check("one-step-coefficients", max_n, [](int n) -> std::string {
        if (n < 2) return {};
        CoefficientVector<Natural> cv = reduce_to_level(n, n - 1);
        for (int j = 1; j <= n - 1; ++j)
            if (cv.coefficients(j - 1) != reduction_coefficient(j))
                return "one push of the odd weights misses 2j^2+j+1 at j = " + std::to_string(j) +
                       ", n = " + std::to_string(n);
        return {};
    });
}

CheckResult coefficient_families() {
    for (int j = 1; j <= 64; ++j) {
        if (remainder_coefficient(j) != reduction_coefficient(j) - Natural(3 * (2 * j - 1)))
            return {"coefficient-families", false,
                    "2j^2-5j+4 != (2j^2+j+1) - 3(2j-1) at j = " + std::to_string(j)};
    }
    return {"coefficient-families", true, "checked j <= 64"};
}

CheckResult decomposition_agreement(int max_n) {
    return check("decomposition-agreement", max_n, [](int n) -> std::string {
        const Natural value = primary_complexity(n);
        FullDecomposition<Natural> full = decompose_fully(n);
        if (full.total != value) return "full decomposition total != v(n) at n = " + std::to_string(n);
        if (n >= 2) {
            StepDecomposition<Natural> step = decompose_once(n);
            if (step.total != value)
                return "one-step decomposition total != v(n) at n = " + std::to_string(n);
            if (step.remainder_value != full.terms.back().partial)
                return "one-step remainder != top unrolled term at n = " + std::to_string(n);
        }
        // Unroll the one-step split by hand and match the terms exactly.
        Natural weight{1};
        for (int i = n - 1; i >= 1; --i) {
            StepDecomposition<Natural> step = decompose_once(i + 1);
            const RemainderTerm<Natural>& term = full.terms[static_cast<std::size_t>(i - 1)];
            if (term.level != i || term.weight != weight || term.partial != step.remainder_value)
                return "unrolled term at level " + std::to_string(i) + " disagrees for n = " +
                       std::to_string(n);
            weight *= 3;
        }
        return {};
    });
}

CheckResult schema_value(int max_n) {
    return check("schema-value", max_n, [](int n) -> std::string {
        if (n < 2) return {};
        BasisSpec schema = expand_schema(n);
        const Natural value = basis_value(schema);
        if (value != primary_complexity(n))
            return "schema value " + decimal_string(value) + " != v(n) at n = " + std::to_string(n);
        if (basis_value(parse_basis(format_basis(schema))) != value)
            return "schema value changes under format/parse at n = " + std::to_string(n);
        return {};
    });
}

CheckResult svenonius_counts(int max_n) {
    if (svenonius_forms(3) != 5 || svenonius_forms(2) != 2)
        return {"svenonius-counts", false, "form counts for n = 2, 3 are off"};
    if (svenonius_precheck(3, 2) != DefinabilityVerdict::NotDefinable)
        return {"svenonius-counts", false, "3-place in terms of 2-place should be NotDefinable"};
    if (svenonius_precheck(2, 3) != DefinabilityVerdict::Inconclusive ||
        svenonius_precheck(3, 3) != DefinabilityVerdict::Inconclusive)
        return {"svenonius-counts", false, "precheck claims more than the count argument gives"};
    for (int n = 1; n <= std::min(max_n, 6); ++n)
        if (Natural(form_patterns(n).size()) != svenonius_forms(n))
            return {"svenonius-counts", false,
                    "pattern list length != bell(n) at n = " + std::to_string(n)};
    return {"svenonius-counts", true, scope(max_n)};
}

}  // namespace

std::vector<CheckResult> run_verification(int max_n) {
    detail::require_positive_n(max_n, "run_verification");
    std::vector<CheckResult> results;
    results.push_back(stirling_route_agreement(max_n));
    results.push_back(stirling_oracle_agreement(max_n));
    results.push_back(stirling_recurrence_identity(max_n));
    results.push_back(stirling_boundary(max_n));
    results.push_back(bell_row_sums(max_n));
    results.push_back(complexity_route_agreement(max_n));
    results.push_back(goodman_fine_diagonal(max_n));
    results.push_back(matrix_identity(max_n));
    results.push_back(reduction_value_preservation(max_n));
    results.push_back(one_step_coefficients(max_n));
    results.push_back(coefficient_families());
    results.push_back(decomposition_agreement(max_n));
    results.push_back(schema_value(max_n));
    results.push_back(svenonius_counts(max_n));
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace goodman
