#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "goodman/basis.hpp"
#include "goodman/complexity.hpp"
#include "goodman/reduction.hpp"
#include "goodman/stirling.hpp"
#include "goodman/verify.hpp"

// Exit codes: 0 success, 1 verification failure, 2 argument error,
// 3 basis parse error.

namespace {

using goodman::Natural;
using ordered_json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_argument_error = 2;
constexpr int exit_parse_error = 3;

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string escaped = "\"";
    for (char c : field) {
        if (c == '"') escaped += '"';
        escaped += c;
    }
    escaped += '"';
    return escaped;
}

std::string join_row(const goodman::Vector<Natural>& values, const std::string& separator) {
    std::string out;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (i > 0) out += separator;
        out += goodman::decimal_string(values(i));
    }
    return out;
}

std::vector<std::string> decimal_strings(const goodman::Vector<Natural>& values) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(values.size()));
    for (Eigen::Index i = 0; i < values.size(); ++i)
        out.push_back(goodman::decimal_string(values(i)));
    return out;
}

void emit(const ordered_json& document) { std::cout << document.dump(2) << "\n"; }

int cmd_table(const std::string& kind, int max_n, int ceiling, const std::string& format) {
    if (max_n < 1) throw std::invalid_argument("table: --max-n must be >= 1");
    if (ceiling < 1) throw std::invalid_argument("table: --ceiling must be >= 1");
    if (max_n > ceiling)
        throw std::invalid_argument("table: --max-n " + std::to_string(max_n) +
                                    " exceeds the ceiling " + std::to_string(ceiling) +
                                    " (raise --ceiling to go higher)");
    goodman::TriangularTable<Natural> table = kind == "gs"
                                                  ? goodman::goodman_savage_table<Natural>(max_n)
                                                  : goodman::goodman_fine_table<Natural>(max_n);
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (int n = 1; n <= max_n; ++n) rows.push_back(decimal_strings(table.row(n)));
        emit(rows);
        return exit_ok;
    }
    const std::string separator = format == "csv" ? "," : " ";
    for (int n = 1; n <= max_n; ++n) std::cout << join_row(table.row(n), separator) << "\n";
    return exit_ok;
}

int cmd_value(int n, const std::string& format) {
    goodman::ComplexityBreakdown<Natural> breakdown = goodman::complexity_breakdown<Natural>(n);
    if (format == "json") {
        ordered_json terms = ordered_json::array();
        for (int k = 1; k <= n; ++k)
            terms.push_back({{"m", k},
                             {"value", goodman::decimal_string(breakdown.contributions(k - 1))}});
        emit({{"n", n}, {"terms", terms}, {"total", goodman::decimal_string(breakdown.total)}});
        return exit_ok;
    }
    if (format == "csv") {
        for (int k = 1; k <= n; ++k)
            std::cout << k << "," << goodman::decimal_string(breakdown.contributions(k - 1))
                      << "\n";
        std::cout << "total," << goodman::decimal_string(breakdown.total) << "\n";
        return exit_ok;
    }
    if (n == 1) {
        std::cout << goodman::decimal_string(breakdown.total) << "\n";
        return exit_ok;
    }
    std::cout << join_row(breakdown.contributions, " + ") << " = "
              << goodman::decimal_string(breakdown.total) << "\n";
    return exit_ok;
}

int cmd_reduce(int n, int level, const std::string& format) {
    goodman::CoefficientVector<Natural> cv = goodman::reduce_to_level<Natural>(n, level);
    const Natural value = goodman::evaluate(cv);
    const Natural total = goodman::primary_complexity<Natural>(n);
    if (format == "json") {
        emit({{"n", n},
              {"m", cv.level},
              {"coefficients", decimal_strings(cv.coefficients)},
              {"value", goodman::decimal_string(value)},
              {"total", goodman::decimal_string(total)}});
        return exit_ok;
    }
    if (format == "csv") {
        for (int j = 1; j <= cv.level; ++j)
            std::cout << j << "," << goodman::decimal_string(cv.coefficients(j - 1)) << "\n";
        std::cout << "value," << goodman::decimal_string(value) << "\n";
        return exit_ok;
    }
    std::cout << "level " << cv.level << ": " << join_row(cv.coefficients, " ") << "\n";
    std::cout << "value " << goodman::decimal_string(value) << " = v(" << n << ")\n";
    if (cv.level == 1) std::cout << "K = " << goodman::decimal_string(value) << "\n";
    return exit_ok;
}

int cmd_chain(int n, const std::string& format) {
    goodman::ReductionChain<Natural> chain = goodman::reduction_chain<Natural>(n);
    if (format == "json") {
        ordered_json levels = ordered_json::array();
        for (const auto& cv : chain.levels)
            levels.push_back({{"m", cv.level},
                              {"coefficients", decimal_strings(cv.coefficients)},
                              {"value", goodman::decimal_string(goodman::evaluate(cv))}});
        emit({{"n", n}, {"levels", levels}, {"K", goodman::decimal_string(chain.K)}});
        return exit_ok;
    }
    if (format == "csv") {
        for (const auto& cv : chain.levels)
            std::cout << cv.level << "," << join_row(cv.coefficients, ",") << "\n";
        std::cout << "K," << goodman::decimal_string(chain.K) << "\n";
        return exit_ok;
    }
    for (const auto& cv : chain.levels)
        std::cout << "level " << cv.level << ": " << join_row(cv.coefficients, " ") << "\n";
    std::cout << "K = " << goodman::decimal_string(chain.K) << "\n";
    return exit_ok;
}

int cmd_basis(const std::string& text, const std::string& format) {
    goodman::BasisSpec basis = goodman::parse_basis(text);
    const std::string canonical = goodman::format_basis(basis);
    const Natural value = goodman::basis_value(basis);
    if (format == "json") {
        emit({{"canonical", canonical}, {"value", goodman::decimal_string(value)}});
        return exit_ok;
    }
    if (format == "csv") {
        std::cout << csv_escape(canonical) << "," << goodman::decimal_string(value) << "\n";
        return exit_ok;
    }
    std::cout << canonical << "\n";
    std::cout << "maximum primary complexity: " << goodman::decimal_string(value) << "\n";
    return exit_ok;
}

int cmd_verify(int max_n, const std::string& format) {
    std::vector<goodman::CheckResult> results = goodman::run_verification(max_n);
    const bool passed = goodman::all_passed(results);
    if (format == "json") {
        ordered_json checks = ordered_json::array();
        for (const auto& result : results)
            checks.push_back(
                {{"name", result.name}, {"passed", result.passed}, {"detail", result.detail}});
        emit({{"max_n", max_n}, {"passed", passed}, {"checks", checks}});
    } else if (format == "csv") {
        for (const auto& result : results)
            std::cout << csv_escape(result.name) << "," << (result.passed ? "true" : "false")
                      << "," << csv_escape(result.detail) << "\n";
    } else {
        std::size_t failures = 0;
        for (const auto& result : results) {
            std::cout << (result.passed ? "pass " : "FAIL ") << result.name << ": "
                      << result.detail << "\n";
            if (!result.passed) ++failures;
        }
        if (passed)
            std::cout << "all " << results.size() << " checks passed\n";
        else
            std::cout << failures << " of " << results.size() << " checks failed\n";
    }
    return passed ? exit_ok : exit_verification_failure;
}

int cmd_forms(int n, const std::string& format) {
    const Natural count = goodman::svenonius_forms<Natural>(n);
    std::vector<std::string> patterns;
    if (n <= 6) patterns = goodman::form_patterns(n);
    if (format == "json") {
        ordered_json document = {{"n", n}, {"value", goodman::decimal_string(count)}};
        if (n <= 6) document["forms"] = patterns;
        emit(document);
        return exit_ok;
    }
    if (format == "csv") {
        std::cout << goodman::decimal_string(count) << "\n";
        for (const std::string& pattern : patterns) std::cout << pattern << "\n";
        return exit_ok;
    }
    std::cout << goodman::decimal_string(count) << (count == 1 ? " form" : " forms");
    if (n <= 6) {
        std::cout << ": ";
        for (std::size_t i = 0; i < patterns.size(); ++i) {
            if (i > 0) std::cout << ", ";
            std::cout << patterns[i];
        }
    }
    std::cout << "\n";
    return exit_ok;
}

void add_format_option(CLI::App* command, std::string& format) {
    command->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for Goodman's primary complexity calculus"};
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "Print the Goodman-Savage or Goodman-Fine triangle");
    std::string table_kind;
    int table_max_n = 0;
    int table_ceiling = 50;
    table->add_option("kind", table_kind, "Which triangle: gs or gf")
        ->required()
        ->check(CLI::IsMember({"gs", "gf"}));
    table->add_option("--max-n", table_max_n, "Number of rows")->required();
    table->add_option("--ceiling", table_ceiling, "Upper bound on --max-n (default 50)");
    std::string table_format = "plain";
    add_format_option(table, table_format);

    auto* value = app.add_subcommand("value", "Per-arity contributions to v(n) and their sum");
    int value_n = 0;
    value->add_option("n", value_n, "Number of places")->required();
    std::string value_format = "plain";
    add_format_option(value, value_format);

    auto* reduce = app.add_subcommand("reduce", "Push v(n) down to one level and show the coefficients");
    int reduce_n = 0;
    int reduce_level = 0;
    reduce->add_option("n", reduce_n, "Number of places")->required();
    reduce->add_option("--level", reduce_level, "Target level, 1..n-1")->required();
    std::string reduce_format = "plain";
    add_format_option(reduce, reduce_format);

    auto* chain = app.add_subcommand("chain", "The whole reduction chain down to K");
    int chain_n = 0;
    chain->add_option("n", chain_n, "Number of places")->required();
    std::string chain_format = "plain";
    add_format_option(chain, chain_format);

    auto* basis = app.add_subcommand("basis", "Evaluate a predicate basis in bracket notation");
    std::string basis_text;
    basis->add_option("text", basis_text, "e.g. \"[2-pl.irref.; two 1-pl.]\"")->required();
    std::string basis_format = "plain";
    add_format_option(basis, basis_format);

    auto* verify = app.add_subcommand("verify", "Run the cross-module identity suite");
    int verify_max_n = 10;
    verify->add_option("--max-n", verify_max_n, "Bound for every identity (default 10)");
    std::string verify_format = "plain";
    add_format_option(verify, verify_format);

    auto* forms = app.add_subcommand("forms", "Argument-identification forms of an n-place relation");
    int forms_n = 0;
    forms->add_option("n", forms_n, "Number of places")->required();
    std::string forms_format = "plain";
    add_format_option(forms, forms_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return exit_argument_error;
    }

    try {
        if (app.got_subcommand(table))
            return cmd_table(table_kind, table_max_n, table_ceiling, table_format);
        if (app.got_subcommand(value)) return cmd_value(value_n, value_format);
        if (app.got_subcommand(reduce)) return cmd_reduce(reduce_n, reduce_level, reduce_format);
        if (app.got_subcommand(chain)) return cmd_chain(chain_n, chain_format);
        if (app.got_subcommand(basis)) return cmd_basis(basis_text, basis_format);
        if (app.got_subcommand(verify)) return cmd_verify(verify_max_n, verify_format);
        if (app.got_subcommand(forms)) return cmd_forms(forms_n, forms_format);
    } catch (const goodman::BasisParseError& error) {
        std::cerr << "error: " << error.what() << "\n";
        std::cerr << "  " << basis_text << "\n";
        if (error.position() >= 1)
            std::cerr << "  " << std::string(error.position() - 1, ' ') << "^\n";
        return exit_parse_error;
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << "\n";
        return exit_argument_error;
    } catch (const std::domain_error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return exit_argument_error;
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << "\n";
        return exit_verification_failure;
    }
    return exit_argument_error;
}
