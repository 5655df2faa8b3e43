#include "qsp/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "qsp/forms.hpp"

namespace qsp {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Tok::Number, src.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, src.substr(start, i - start), start});
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default:
                throw std::invalid_argument("parse error at column " + std::to_string(i + 1) +
                                            ": unexpected character '" + std::string(1, c) + "'");
        }
        out.push_back({k, src.substr(i, 1), i});
        ++i;
    }
    out.push_back({Tok::End, "", src.size()});
    return out;
}

[[noreturn]] void fail(const Token& t, const std::string& expected) {
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw std::invalid_argument("parse error at column " + std::to_string(t.pos + 1) +
                                ": expected " + expected + ", got " + got);
}

// True when the element is a pure coefficient (a multiple of the empty word).
bool scalar_of(const Element& e, ParamRational& out) {
    if (e.is_zero()) {
        out = ParamRational(0);
        return true;
    }
    if (e.size() == 1 && e.terms().begin()->first.is_one()) {
        out = e.terms().begin()->second;
        return true;
    }
    return false;
}

class Parser {
  public:
    Parser(const std::string& src, const Presentation& pres)
        : toks_(lex(src)), pres_(pres), bindings_(pres.bindings()) {}

    Element run() {
        Element e = expression();
        if (peek().kind != Tok::End) fail(peek(), "'+', '-', '*', '/', '^', or end of input");
        return e;
    }

  private:
    const Token& peek() const { return toks_[idx_]; }
    Token take() { return toks_[idx_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++idx_;
        return true;
    }

    Element expression() {
        Element acc = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = take().kind == Tok::Minus;
            Element rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    static bool starts_atom(const Token& t) {
        return t.kind == Tok::Number || t.kind == Tok::Ident || t.kind == Tok::LParen;
    }

    Element term() {
        Element acc = factor();
        for (;;) {
            if (accept(Tok::Star)) {
                acc = acc * factor();
            } else if (accept(Tok::Slash)) {
                Token at = peek();
                ParamRational c;
                if (!scalar_of(factor(), c))
                    throw std::invalid_argument("parse error at column " +
                                                std::to_string(at.pos + 1) +
                                                ": division is only defined by scalars");
                if (c.is_zero())
                    throw std::invalid_argument("parse error at column " +
                                                std::to_string(at.pos + 1) + ": division by zero");
                acc = c.inv() * acc;
            } else if (starts_atom(peek())) {
                acc = acc * factor();  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Element factor() {
        if (accept(Tok::Minus)) return -factor();
        return power();
    }

    Element power() {
        Element base = atom();
        if (!accept(Tok::Caret)) return base;
        bool neg = accept(Tok::Minus);
        if (peek().kind != Tok::Number) fail(peek(), "an integer exponent");
        long long n = std::stoll(take().text);
        if (neg) n = -n;

        ParamRational c;
        if (scalar_of(base, c)) {
            if (n < 0 && c.is_zero())
                throw std::invalid_argument("parse error: negative power of zero");
            return Element::scalar(pres_, pow(c, n));
        }
        if (n >= 0) return pow(base, static_cast<int>(n));
        // Negative exponents on algebra elements: only powers of x invert.
        if (base.size() == 1) {
            const auto& [m, coeff] = *base.terms().begin();
            if (m.e[0] == 0 && m.e[1] == 0 && m.e[2] == 0)
                return Element::mono(pres_, NormalMono{0, 0, 0, int32_t(m.e[3] * n)},
                                     pow(coeff, n));
        }
        throw std::invalid_argument("parse error: negative power of a non-invertible element");
    }

    Element atom() {
        Token t = take();
        switch (t.kind) {
            case Tok::LParen: {
                Element e = expression();
                if (!accept(Tok::RParen)) fail(peek(), "')'");
                return e;
            }
            case Tok::Number:
                return Element::scalar(pres_, ParamRational(Rat(t.text)));
            case Tok::Ident: {
                int v = param_index(t.text);
                if (v >= 0)
                    return Element::scalar(pres_, ParamRational::param(v).substitute(bindings_));
                int l = pres_.letter_by_name(t.text);
                if (l >= 0) return Element::generator(pres_, Letter(l));
                throw std::invalid_argument(
                    "parse error at column " + std::to_string(t.pos + 1) + ": unknown token '" +
                    t.text + "' (generators: " + known_names() + "; parameters: q, p, r, s)");
            }
            default:
                fail(t, "a number, a generator, a parameter, or '('");
        }
    }

    std::string known_names() const {
        std::string s;
        for (const auto& g : pres_.alphabet()) s += g.name + ", ";
        return s + "xinv";
    }

    std::vector<Token> toks_;
    size_t idx_ = 0;
    const Presentation& pres_;
    const Bindings& bindings_;
};

}  // namespace

AlgebraKind expression_kind(const std::string& src, AlgebraKind preferred) {
    bool gamma = false, omega_gen = false;
    for (const Token& t : lex(src)) {
        if (t.kind != Tok::Ident) continue;
        if (t.text == "dx" || t.text == "dth") gamma = true;
        if (t.text == "u" || t.text == "w") omega_gen = true;
    }
    if (gamma && omega_gen)
        throw std::invalid_argument(
            "expression mixes calculus generators (dx, dth) with form generators (u, w)");
    if (gamma) return AlgebraKind::Gamma;
    if (omega_gen) return AlgebraKind::Omega;
    return preferred;
}

Element parse_expression(const std::string& src, Family f, const Bindings& b,
                         AlgebraKind preferred) {
    AlgebraKind kind = expression_kind(src, preferred);
    const Presentation& pres =
        kind == AlgebraKind::Gamma ? Presentation::gamma(f, b) : omega(f, b);
    return Parser(src, pres).run();
}

}  // namespace qsp
