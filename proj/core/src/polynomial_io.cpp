#include "polyaut/polynomial_io.hpp"

#include <cctype>
#include <sstream>

#include "polyaut/errors.hpp"

namespace polyaut {

std::string to_string(const Polynomial& p, std::string_view variable_prefix) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        const Rational c = t.coefficient;
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        const Rational a = c.abs();
        if (t.monomial.is_unit()) {
            os << a.to_string();
            continue;
        }
        bool need_star = false;
        if (!a.is_one()) {
            os << a.to_string();
            need_star = true;
        }
        for (int v = 0; v < t.monomial.arity(); ++v) {
            const auto e = t.monomial.exponent(v);
            if (e == 0) continue;
            if (need_star) os << '*';
            os << variable_prefix << (v + 1);
            if (e > 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

namespace {

enum class Tok { integer, variable, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;  // digits for integer
    int var_index = 0; // 0-based for variable
    int line;
    int column;
};

class Lexer {
public:
    Lexer(std::string_view text, int line, int column_base)
        : text_(text), line_(line), col_base_(column_base) {}

    Token next() {
        while (pos_ < text_.size() && lex_space(text_[pos_])) advance_one();
        const int line = line_;
        const int col = current_column();
        if (pos_ >= text_.size()) return {Tok::end, "", 0, line, col};
        const char c = text_[pos_];
        switch (c) {
            case '+': advance_one(); return {Tok::plus, "+", 0, line, col};
            case '-': advance_one(); return {Tok::minus, "-", 0, line, col};
            case '*': advance_one(); return {Tok::star, "*", 0, line, col};
            case '^': advance_one(); return {Tok::caret, "^", 0, line, col};
            case '/': advance_one(); return {Tok::slash, "/", 0, line, col};
            case '(': advance_one(); return {Tok::lparen, "(", 0, line, col};
            case ')': advance_one(); return {Tok::rparen, ")", 0, line, col};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits.push_back(text_[pos_]);
                advance_one();
            }
            // "2x1" would be implicit multiplication
            if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
                throw ParseError("implicit multiplication is not allowed, write '*'", line_, current_column());
            }
            return {Tok::integer, std::move(digits), 0, line, col};
        }
        if (c == 'x' || c == 'X') {
            advance_one();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw ParseError("expected variable index after 'x'", line, col);
            }
            long idx = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                idx = idx * 10 + (text_[pos_] - '0');
                if (idx > 1'000'000) throw ParseError("variable index too large", line, col);
                advance_one();
            }
            if (idx < 1) throw ParseError("variable indices start at 1", line, col);
            return {Tok::variable, "", static_cast<int>(idx) - 1, line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    static bool lex_space(char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n';
    }
    static bool is_ident_char(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) != 0;
    }
    int current_column() const { return static_cast<int>(pos_ - line_start_) + 1 + (line_start_ == 0 ? col_base_ : 0); }
    void advance_one() {
        if (text_[pos_] == '\n') {
            ++line_;
            line_start_ = pos_ + 1;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_start_ = 0;
    int line_;
    int col_base_;
};

class Parser {
public:
    Parser(std::string_view text, int arity, int line, int column_base)
        : lexer_(text, line, column_base), arity_(arity) {
        current_ = lexer_.next();
    }

    Polynomial parse() {
        Polynomial p = expression();
        expect(Tok::end, "unexpected trailing input");
        return p;
    }

private:
    // expression := ['+'|'-'] term (('+'|'-') term)*
    Polynomial expression() {
        bool negate = false;
        if (current_.kind == Tok::plus) {
            consume();
        } else if (current_.kind == Tok::minus) {
            negate = true;
            consume();
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (current_.kind == Tok::plus || current_.kind == Tok::minus) {
            const bool subtract = current_.kind == Tok::minus;
            consume();
            Polynomial t = term();
            acc = subtract ? acc - t : acc + t;
        }
        return acc;
    }

    // term := factor ('*' factor)*
    Polynomial term() {
        Polynomial acc = factor();
        while (current_.kind == Tok::star) {
            consume();
            acc = acc * factor();
        }
        return acc;
    }

    // factor := base ('^' nat)?
    Polynomial factor() {
        Polynomial base = this->base();
        if (current_.kind == Tok::caret) {
            consume();
            if (current_.kind != Tok::integer) {
                throw ParseError("expected a non-negative integer exponent", current_.line, current_.column);
            }
            unsigned long e = 0;
            try {
                e = std::stoul(current_.text);
            } catch (const std::exception&) {
                throw ParseError("exponent too large", current_.line, current_.column);
            }
            if (e > 100'000) throw ParseError("exponent too large", current_.line, current_.column);
            consume();
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    // base := INT ('/' INT)? | VAR | '(' expression ')'
    Polynomial base() {
        if (current_.kind == Tok::integer) {
            std::string num = current_.text;
            consume();
            if (current_.kind == Tok::slash) {
                consume();
                if (current_.kind != Tok::integer) {
                    throw ParseError("expected denominator digits after '/'", current_.line, current_.column);
                }
                std::string den = current_.text;
                if (Rational::from_string(den).is_zero()) {
                    throw ParseError("zero denominator", current_.line, current_.column);
                }
                consume();
                return Polynomial::constant(arity_, Rational::from_string(num + "/" + den));
            }
            return Polynomial::constant(arity_, Rational::from_string(num));
        }
        if (current_.kind == Tok::variable) {
            if (current_.var_index >= arity_) {
                throw ParseError("variable index x" + std::to_string(current_.var_index + 1) +
                                     " exceeds the ring arity " + std::to_string(arity_),
                                 current_.line, current_.column);
            }
            Polynomial v = Polynomial::variable(arity_, current_.var_index);
            consume();
            return v;
        }
        if (current_.kind == Tok::lparen) {
            consume();
            Polynomial inner = expression();
            expect(Tok::rparen, "expected ')'");
            return inner;
        }
        throw ParseError("expected a number, variable or '('", current_.line, current_.column);
    }

    void consume() { current_ = lexer_.next(); }

    void expect(Tok kind, const std::string& message) {
        if (current_.kind != kind) throw ParseError(message, current_.line, current_.column);
        if (kind != Tok::end) consume();
    }

    Lexer lexer_;
    int arity_;
    Token current_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int arity, int line, int column_base) {
    if (arity < 1) throw std::invalid_argument("parse_polynomial: arity must be positive");
    return Parser(text, arity, line, column_base).parse();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace polyaut
