#include "goodman/basis.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace goodman {

namespace {

bool same_kind(const PredicateSpec& a, const PredicateSpec& b) {
    return a.places == b.places && a.irreflexive == b.irreflexive &&
           a.synthetic_unit == b.synthetic_unit;
}

bool canonical_before(const PredicateSpec& a, const PredicateSpec& b) {
    if (a.synthetic_unit != b.synthetic_unit) return b.synthetic_unit;
    if (a.places != b.places) return a.places > b.places;
    return a.irreflexive && !b.irreflexive;
}

enum class TokenKind { LBracket, RBracket, Semicolon, Hyphen, Dot, Number, Word, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::size_t position = 0;  // 1-based offset into the input
    std::string text;          // words lowercased, numbers verbatim
};

std::string describe(const Token& token) {
    if (token.kind == TokenKind::End) return "end of input";
    return "\"" + token.text + "\"";
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        Token token;
        token.position = i + 1;
        if (c == '[' || c == ']' || c == ';' || c == '-' || c == '.') {
            token.kind = c == '[' ? TokenKind::LBracket
                       : c == ']' ? TokenKind::RBracket
                       : c == ';' ? TokenKind::Semicolon
                       : c == '-' ? TokenKind::Hyphen
                                  : TokenKind::Dot;
            token.text = std::string(1, static_cast<char>(c));
            ++i;
        } else if (std::isdigit(c)) {
            token.kind = TokenKind::Number;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                token.text.push_back(text[i++]);
        } else if (std::isalpha(c)) {
            token.kind = TokenKind::Word;
            while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
                token.text.push_back(
                    static_cast<char>(std::tolower(static_cast<unsigned char>(text[i++]))));
        } else {
            throw BasisParseError(token.position, {},
                                  "basis notation error at position " +
                                      std::to_string(token.position) +
                                      ": unexpected character '" + std::string(1, text[i]) + "'");
        }
        tokens.push_back(std::move(token));
    }
    Token end;
    end.kind = TokenKind::End;
    end.position = text.size() + 1;
    tokens.push_back(std::move(end));
    return tokens;
}

constexpr std::array<std::string_view, 10> count_words = {
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten"};

int count_word_value(std::string_view word) {
    auto it = std::find(count_words.begin(), count_words.end(), word);
    if (it == count_words.end()) return 0;
    return static_cast<int>(it - count_words.begin()) + 1;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    BasisSpec parse() {
        expect(TokenKind::LBracket, {"'['"});
        std::vector<PredicateSpec> entries;
        if (peek().kind != TokenKind::RBracket) {
            entries.push_back(item());
            while (peek().kind == TokenKind::Semicolon) {
                advance();
                entries.push_back(item());
            }
        }
        expect(TokenKind::RBracket, {"';'", "']'"});
        if (peek().kind != TokenKind::End) fail({"end of input"});
        return make_basis(std::move(entries));
    }

  private:
    const Token& peek() const { return tokens_[next_]; }
    const Token& advance() { return tokens_[next_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& found = peek();
        std::string message =
            "basis notation error at position " + std::to_string(found.position) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) message += i + 1 == expected.size() ? " or " : ", ";
            message += expected[i];
        }
        message += ", found " + describe(found);
        throw BasisParseError(found.position, std::move(expected), message);
    }

    const Token& expect(TokenKind kind, std::vector<std::string> expected) {
        if (peek().kind != kind) fail(std::move(expected));
        return advance();
    }

    /// A number token as an int, for place counts; rejects 0 and overflow.
    int places_value(const Token& token) const {
        if (token.text.size() > 9)
            throw BasisParseError(token.position, {},
                                  "basis notation error at position " +
                                      std::to_string(token.position) + ": place count " +
                                      token.text + " is out of range");
        int value = std::stoi(token.text);
        if (value == 0)
            throw BasisParseError(token.position, {},
                                  "basis notation error at position " +
                                      std::to_string(token.position) +
                                      ": place count must be at least 1");
        return value;
    }

    PredicateSpec item() {
        PredicateSpec predicate;
        bool have_count = false;
        if (peek().kind == TokenKind::Word) {
            const Token& word = peek();
            int count = count_word_value(word.text);
            if (count == 0) fail({"a count", "a place count"});
            predicate.multiplicity = count;
            have_count = true;
            advance();
        } else if (peek().kind == TokenKind::Number) {
            // A number followed by another number is a count; otherwise it
            // is the place count itself.
            if (tokens_[next_ + 1].kind == TokenKind::Number) {
                const Token& count = advance();
                predicate.multiplicity = Natural(count.text, 10);
                if (predicate.multiplicity == 0)
                    throw BasisParseError(count.position, {},
                                          "basis notation error at position " +
                                              std::to_string(count.position) +
                                              ": count must be at least 1");
                have_count = true;
            }
        } else {
            fail({"a count", "a place count"});
        }
        const Token& places =
            expect(TokenKind::Number, have_count ? std::vector<std::string>{"a place count"}
                                                 : std::vector<std::string>{"a count", "a place count"});
        predicate.places = places_value(places);
        expect(TokenKind::Hyphen, {"'-'"});
        const Token& keyword = expect(TokenKind::Word, {"'pl'"});
        if (keyword.text != "pl") {
            --next_;
            fail({"'pl'"});
        }
        if (peek().kind == TokenKind::Dot) advance();
        if (peek().kind == TokenKind::Word && peek().text == "irref") {
            advance();
            predicate.irreflexive = true;
            if (peek().kind == TokenKind::Dot) advance();
        }
        return predicate;
    }

    std::vector<Token> tokens_;
    std::size_t next_ = 0;
};

}  // namespace

BasisSpec make_basis(std::vector<PredicateSpec> entries) {
    for (const PredicateSpec& predicate : entries) {
        if (predicate.places < 1)
            throw std::invalid_argument("make_basis: places must be >= 1");
        if (predicate.multiplicity < 1)
            throw std::invalid_argument("make_basis: multiplicity must be >= 1");
        if (predicate.synthetic_unit && predicate.places != 1)
            throw std::invalid_argument("make_basis: a synthetic unit is 1-place by definition");
    }
    std::sort(entries.begin(), entries.end(),
              [](const PredicateSpec& a, const PredicateSpec& b) { return canonical_before(a, b); });
    BasisSpec basis;
    for (PredicateSpec& predicate : entries) {
        if (!basis.predicates.empty() && same_kind(basis.predicates.back(), predicate))
            basis.predicates.back().multiplicity += predicate.multiplicity;
        else
            basis.predicates.push_back(std::move(predicate));
    }
    return basis;
}

BasisSpec parse_basis(std::string_view text) { return Parser(text).parse(); }

std::string format_basis(const BasisSpec& basis) {
    std::string out = "[";
    bool first = true;
    for (const PredicateSpec& predicate : basis.predicates) {
        if (!first) out += "; ";
        first = false;
        if (predicate.multiplicity != 1) out += decimal_string(predicate.multiplicity) + " ";
        out += std::to_string(predicate.places) + "-pl.";
        if (predicate.irreflexive) out += "irref.";
    }
    out += "]";
    return out;
}

Natural predicate_unit_value(const PredicateSpec& predicate) {
    if (predicate.places < 1)
        throw std::invalid_argument("predicate_unit_value: places must be >= 1");
    if (predicate.places == 1) return Natural(1);
    if (predicate.irreflexive) return Natural(2 * predicate.places - 1);
    return primary_complexity(predicate.places);
}

Natural basis_value(const BasisSpec& basis) {
    Natural total{0};
    for (const PredicateSpec& predicate : basis.predicates)
        total += predicate.multiplicity * predicate_unit_value(predicate);
    return total;
}

BasisSpec expand_schema(int n) {
    detail::require_positive_n(n, "expand_schema");
    if (n < 2)
        throw std::domain_error(
            "expand_schema: the schema needs n >= 2, a 1-place predicate stands alone");
    auto row = detail::stirling_row<Natural>(n);
    std::vector<PredicateSpec> entries;
    for (int m = n; m >= 2; --m)
        entries.push_back({m, true, row[static_cast<std::size_t>(m)], false});
    entries.push_back({1, false, Natural(1), true});
    return make_basis(std::move(entries));
}

}  // namespace goodman
