#pragma once

// Text grammar for polynomials:
//
//   poly     := ['-'] term { ('+'|'-') term }
//   term     := factor { '*' factor }
//   factor   := rational | ident ['^' nat]
//   rational := nat ['/' nat]
//
// Whitespace is insignificant. Example: t^2 - 1/2*x^6 - y^6 - z^3

#include "delpezzo/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace delpezzo {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& what, int l, int c)
        : std::runtime_error(what + " at line " + std::to_string(l) + ", column " + std::to_string(c)),
          line(l),
          column(c) {}
};

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, const std::vector<std::string>* fixed_vars)
        : text_(text), fixed_vars_(fixed_vars) {
        if (fixed_vars_) vars_ = *fixed_vars_;
    }

    Polynomial parse() {
        skip_ws();
        if (eof()) fail("empty polynomial");
        // First pass: with a fixed variable list we can build terms directly;
        // otherwise collect variables in order of first appearance, then
        // re-parse. Two passes keep the term maps well-formed throughout.
        if (!fixed_vars_) {
            collect_variables();
            pos_ = 0;
            line_ = 1;
            col_ = 1;
        }
        Polynomial acc(vars_);
        bool negative = consume_sign(true);
        acc = acc + parse_term(negative);
        skip_ws();
        while (!eof()) {
            char c = peek();
            if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
            advance();
            acc = acc + parse_term(c == '-');
            skip_ws();
        }
        return acc;
    }

private:
    void collect_variables() {
        while (!eof()) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string id = read_ident();
                if (std::find(vars_.begin(), vars_.end(), id) == vars_.end()) vars_.push_back(id);
            } else {
                advance();
            }
        }
    }

    Polynomial parse_term(bool negative) {
        Rational coeff = negative ? -1 : 1;
        Exponents exps(vars_.size(), 0);
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (eof()) fail("unexpected end of input in term");
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= read_rational();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                int l = line_, cc = col_;
                std::string id = read_ident();
                auto it = std::find(vars_.begin(), vars_.end(), id);
                if (it == vars_.end()) throw ParseError("unknown variable '" + id + "'", l, cc);
                int exp = 1;
                skip_ws();
                if (!eof() && peek() == '^') {
                    advance();
                    skip_ws();
                    exp = read_nat_int();
                }
                exps[static_cast<std::size_t>(it - vars_.begin())] += exp;
            } else {
                fail(std::string("expected factor, found '") + c + "'");
            }
            skip_ws();
            if (!eof() && peek() == '*') {
                advance();
            } else {
                expect_factor = false;
            }
        }
        return Polynomial::monomial(vars_, std::move(exps), coeff);
    }

    bool consume_sign(bool allow) {
        skip_ws();
        if (allow && !eof() && peek() == '-') {
            advance();
            return true;
        }
        if (allow && !eof() && peek() == '+') advance();
        return false;
    }

    Rational read_rational() {
        Int num = read_nat();
        skip_ws();
        if (!eof() && peek() == '/') {
            advance();
            skip_ws();
            int l = line_, c = col_;
            Int den = read_nat();
            if (den == 0) throw ParseError("zero denominator", l, c);
            return Rational(num) / Rational(den);
        }
        return Rational(num);
    }

    Int read_nat() {
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected number");
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        return Int(digits);
    }

    int read_nat_int() {
        Int n = read_nat();
        if (n > 1000000) fail("exponent too large");
        return static_cast<int>(n);
    }

    std::string read_ident() {
        std::string id;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                id += c;
                advance();
            } else {
                break;
            }
        }
        return id;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

    const std::string& text_;
    const std::vector<std::string>* fixed_vars_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace detail

// Parses with variables collected in order of first appearance.
inline Polynomial parse_polynomial(const std::string& text) {
    return detail::PolyParser(text, nullptr).parse();
}

// Parses against a fixed variable list; unknown identifiers are errors.
inline Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
    return detail::PolyParser(text, &variables).parse();
}

}  // namespace delpezzo
