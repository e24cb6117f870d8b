/// @file parser.cpp
/// @brief Recursive-descent polynomial parser with positioned errors.

#include "logres/parser.hpp"

#include "logres/errors.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace logres {

namespace {

// ==== LEXER ====

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int col = 1;
};

std::string tok_name(Tok k) {
    switch (k) {
        case Tok::Number: return "number";
        case Tok::Ident: return "identifier";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Caret: return "'^'";
        case Tok::Slash: return "'/'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            Token t;
            t.line = line_;
            t.col = col_;
            if (pos_ >= text_.size()) {
                t.kind = Tok::End;
                out.push_back(t);
                return out;
            }
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.kind = Tok::Number;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    t.text.push_back(take());
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.kind = Tok::Ident;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                        text_[pos_] == '_'))
                    t.text.push_back(take());
            } else {
                t.text.push_back(take());
                switch (c) {
                    case '+': t.kind = Tok::Plus; break;
                    case '-': t.kind = Tok::Minus; break;
                    case '*': t.kind = Tok::Star; break;
                    case '^': t.kind = Tok::Caret; break;
                    case '/': t.kind = Tok::Slash; break;
                    case '(': t.kind = Tok::LParen; break;
                    case ')': t.kind = Tok::RParen; break;
                    default:
                        throw InputError("line " + std::to_string(t.line) +
                                         ", column " + std::to_string(t.col) +
                                         ": unexpected character '" + t.text + "'");
                }
            }
            out.push_back(std::move(t));
        }
    }

private:
    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            take();
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// ==== PARSER ====

class Parser {
public:
    Parser(std::vector<Token> toks, const RingPtr& R)
        : toks_(std::move(toks)), R_(R) {}

    Polynomial run() {
        Polynomial p = expr();
        if (cur().kind != Tok::End) {
            if (cur().kind == Tok::Number || cur().kind == Tok::Ident ||
                cur().kind == Tok::LParen)
                fail("expected '*' between factors (implicit multiplication "
                     "is not allowed), found " + describe(cur()));
            fail("unexpected " + describe(cur()));
        }
        return p;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = cur();
        throw InputError("line " + std::to_string(t.line) + ", column " +
                         std::to_string(t.col) + ": " + msg);
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::Number || t.kind == Tok::Ident)
            return tok_name(t.kind) + " '" + t.text + "'";
        return tok_name(t.kind);
    }

    Polynomial expr() {
        bool neg = false;
        if (cur().kind == Tok::Minus) {
            next();
            neg = true;
        }
        Polynomial p = term();
        if (neg) p = p.scaled(Rat(-1));
        while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
            bool minus = (next().kind == Tok::Minus);
            Polynomial t = term();
            p = minus ? p - t : p + t;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (true) {
            if (cur().kind == Tok::Star) {
                next();
                p = p * factor();
            } else if (cur().kind == Tok::Number || cur().kind == Tok::Ident ||
                       cur().kind == Tok::LParen) {
                fail("expected '*' between factors (implicit multiplication "
                     "is not allowed), found " + describe(cur()));
            } else {
                return p;
            }
        }
    }

    Polynomial factor() {
        bool neg = false;
        if (cur().kind == Tok::Minus) {
            next();
            neg = true;
        }
        Polynomial p = base();
        while (cur().kind == Tok::Caret) {
            next();
            if (cur().kind != Tok::Number)
                fail("'^' needs a nonnegative integer exponent, found " +
                     describe(cur()));
            long e = to_bounded(cur().text, "exponent");
            next();
            Polynomial q(R_, Rat(1));
            for (long j = 0; j < e; ++j) q = q * p;
            p = q;
        }
        if (neg) p = p.scaled(Rat(-1));
        return p;
    }

    Polynomial base() {
        const Token& t = cur();
        switch (t.kind) {
            case Tok::Number: {
                std::string num = next().text;
                if (cur().kind == Tok::Slash) {
                    next();
                    if (cur().kind != Tok::Number)
                        fail("'/' joins integer literals only, found " +
                             describe(cur()));
                    std::string den = next().text;
                    if (all_zero(den))
                        fail("division by zero in rational literal " + num +
                             "/" + den);
                    Rat r(num + "/" + den);
                    r.canonicalize();
                    return Polynomial(R_, r);
                }
                return Polynomial(R_, Rat(num));
            }
            case Tok::Ident: {
                for (int v = 0; v < R_->nvars(); ++v)
                    if (R_->vars[v] == t.text) {
                        next();
                        return var_poly(R_, v);
                    }
                fail("unknown identifier '" + t.text +
                     "' (declared variables: " + var_list() + ")");
            }
            case Tok::LParen: {
                next();
                Polynomial p = expr();
                if (cur().kind != Tok::RParen)
                    fail("expected ')', found " + describe(cur()));
                next();
                return p;
            }
            default:
                fail("expected a number, variable, or '(', found " +
                     describe(cur()));
        }
    }

    long to_bounded(const std::string& digits, const std::string& what) const {
        if (digits.size() > 6)
            fail(what + " " + digits + " is out of range");
        return std::stol(digits);
    }

    static bool all_zero(const std::string& s) {
        for (char c : s)
            if (c != '0') return false;
        return true;
    }

    std::string var_list() const {
        std::string s;
        for (int v = 0; v < R_->nvars(); ++v) {
            if (v) s += ", ";
            s += R_->vars[v];
        }
        return s;
    }

    std::vector<Token> toks_;
    RingPtr R_;
    size_t i_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& R) {
    std::vector<Token> toks = Lexer(text).run();
    if (toks.size() == 1)
        throw InputError("line 1, column 1: empty polynomial expression");
    return Parser(std::move(toks), R).run();
}

} // namespace logres
