#include "diffmod/parse.hpp"

#include <cctype>
#include <optional>

namespace diffmod {

namespace {

struct Token {
    enum Kind { Number, Symbol, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, ""};
            return;
        }
        char c = s_[i_];
        // U+2212 minus sign
        if (static_cast<unsigned char>(c) == 0xE2 && i_ + 2 < s_.size() &&
            static_cast<unsigned char>(s_[i_ + 1]) == 0x88 &&
            static_cast<unsigned char>(s_[i_ + 2]) == 0x92) {
            i_ += 3;
            tok_ = {Token::Minus, "-"};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Number, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Symbol, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
        case '+': tok_ = {Token::Plus, "+"}; return;
        case '-': tok_ = {Token::Minus, "-"}; return;
        case '*': tok_ = {Token::Star, "*"}; return;
        case '/': tok_ = {Token::Slash, "/"}; return;
        case '^': tok_ = {Token::Caret, "^"}; return;
        case '(': tok_ = {Token::LParen, "("}; return;
        case ')': tok_ = {Token::RParen, ")"}; return;
        default: throw ParseError(std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

// Algebra concept: from_rat, symbol, add, neg, mul, div, pow.
template <typename A>
class ExprParser {
public:
    using V = typename A::Value;
    explicit ExprParser(const std::string& s) : lex_(s) {}

    V parse() {
        V v = expr();
        if (lex_.peek().kind != Token::End) throw ParseError("trailing input after expression");
        return v;
    }

private:
    V expr() {
        bool neg = false;
        if (lex_.peek().kind == Token::Plus) lex_.take();
        else if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            neg = true;
        }
        V v = term();
        if (neg) v = A::neg(v);
        for (;;) {
            if (lex_.peek().kind == Token::Plus) {
                lex_.take();
                v = A::add(v, term());
            } else if (lex_.peek().kind == Token::Minus) {
                lex_.take();
                v = A::add(v, A::neg(term()));
            } else {
                return v;
            }
        }
    }

    V term() {
        V v = factor();
        for (;;) {
            if (lex_.peek().kind == Token::Star) {
                lex_.take();
                v = A::mul(v, factor());
            } else if (lex_.peek().kind == Token::Slash) {
                lex_.take();
                v = A::div(v, factor());
            } else {
                return v;
            }
        }
    }

    V factor() {
        V v = atom();
        if (lex_.peek().kind == Token::Caret) {
            lex_.take();
            long e = exponent();
            v = A::pow(v, e);
        }
        return v;
    }

    long exponent() {
        bool neg = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            neg = true;
        }
        Token t = lex_.take();
        if (t.kind != Token::Number) throw ParseError("expected an integer exponent");
        long e = std::stol(t.text);
        return neg ? -e : e;
    }

    V atom() {
        Token t = lex_.take();
        switch (t.kind) {
        case Token::Number: return A::from_rat(rat_from_string(t.text));
        case Token::Symbol: return A::symbol(t.text);
        case Token::Minus: return A::neg(atom());
        case Token::LParen: {
            V v = expr();
            if (lex_.take().kind != Token::RParen) throw ParseError("missing ')'");
            return v;
        }
        default: throw ParseError("unexpected token '" + t.text + "'");
        }
    }

    Lexer lex_;
};

struct RatFuncAlgebra {
    using Value = RatFunc;
    static RatFunc from_rat(const Rat& q) { return RatFunc(q); }
    static RatFunc symbol(const std::string& s) {
        if (s == "z") return RatFunc::variable();
        throw ParseError("unknown symbol '" + s + "' in a rational-function expression");
    }
    static RatFunc add(const RatFunc& a, const RatFunc& b) { return a + b; }
    static RatFunc neg(const RatFunc& a) { return -a; }
    static RatFunc mul(const RatFunc& a, const RatFunc& b) { return a * b; }
    static RatFunc div(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw ParseError("division by zero");
        return a / b;
    }
    static RatFunc pow(const RatFunc& a, long e) {
        RatFunc base = e < 0 ? a.inverse() : a;
        RatFunc r(Rat(1));
        for (long i = 0; i < std::abs(e); ++i) r *= base;
        return r;
    }
};

struct DifferenceAlgebra {
    using Value = DifferenceOperator;
    static Value from_rat(const Rat& q) { return DifferenceOperator::term(Poly(q), 0); }
    static Value symbol(const std::string& s) {
        if (s == "z") return DifferenceOperator::z();
        if (s == "T") return DifferenceOperator::tau();
        throw ParseError("unknown symbol '" + s + "' in a difference-operator expression");
    }
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value neg(const Value& a) { return -a; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static std::optional<Rat> as_constant(const Value& v) {
        if (v.is_zero()) return Rat(0);
        if (v.terms().size() == 1 && v.terms().begin()->first == 0 &&
            v.terms().begin()->second.is_constant())
            return v.terms().begin()->second.coeff(0);
        return std::nullopt;
    }
    static Value div(const Value& a, const Value& b) {
        auto c = as_constant(b);
        if (!c || *c == 0) throw ParseError("operator division is only defined by nonzero constants");
        return a.scaled(Rat(1) / *c);
    }
    static Value pow(const Value& a, long e) {
        if (e >= 0) return a.pow(static_cast<int>(e));
        // invertible monomials only: c * T^k
        if (a.terms().size() == 1 && a.terms().begin()->second.is_constant()) {
            long k = a.terms().begin()->first;
            Rat c = a.terms().begin()->second.coeff(0);
            Value inv = DifferenceOperator::term(Poly(Rat(1) / c), -k);
            return inv.pow(static_cast<int>(-e));
        }
        throw ParseError("negative power of a non-invertible operator");
    }
};

struct DifferentialAlgebra {
    using Value = DifferentialOperator;
    static Value from_rat(const Rat& q) { return DifferentialOperator::term(0, 0, q); }
    static Value symbol(const std::string& s) {
        if (s == "x") return DifferentialOperator::x();
        if (s == "Dx") return DifferentialOperator::dx();
        throw ParseError("unknown symbol '" + s + "' in a differential-operator expression");
    }
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value neg(const Value& a) { return -a; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value div(const Value& a, const Value& b) {
        if (b.terms().size() == 1 && b.terms().begin()->first.first == 0) {
            long k = b.terms().begin()->first.second;
            Rat c = b.terms().begin()->second;
            return a * DifferentialOperator::term(0, -k, Rat(1) / c);
        }
        throw ParseError("operator division is only defined by monomials in x");
    }
    static Value pow(const Value& a, long e) {
        if (e >= 0) return a.pow(static_cast<int>(e));
        if (a.terms().size() == 1 && a.terms().begin()->first.first == 0) {
            long k = a.terms().begin()->first.second;
            Rat c = a.terms().begin()->second;
            Value inv = DifferentialOperator::term(0, -k, Rat(1) / c);
            return inv.pow(static_cast<int>(-e));
        }
        throw ParseError("negative power of a non-invertible operator");
    }
};

} // namespace

RatFunc parse_ratfunc(const std::string& text) {
    return ExprParser<RatFuncAlgebra>(text).parse();
}

DifferenceOperator parse_difference_operator(const std::string& text) {
    return ExprParser<DifferenceAlgebra>(text).parse();
}

DifferentialOperator parse_differential_operator(const std::string& text) {
    return ExprParser<DifferentialAlgebra>(text).parse();
}

namespace {
bool mentions_symbol(const std::string& text, const std::string& sym) {
    Lexer lex(text);
    while (lex.peek().kind != Token::End) {
        Token t = lex.take();
        if (t.kind == Token::Symbol && t.text == sym) return true;
    }
    return false;
}
} // namespace

bool mentions_differential_symbols(const std::string& text) {
    return mentions_symbol(text, "x") || mentions_symbol(text, "Dx");
}

bool mentions_difference_symbols(const std::string& text) {
    return mentions_symbol(text, "T");
}

} // namespace diffmod
