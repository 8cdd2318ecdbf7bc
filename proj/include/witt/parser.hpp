#ifndef WITT_PARSER_HPP
#define WITT_PARSER_HPP

#include <cctype>
#include <functional>
#include <string>
#include <vector>

#include "witt/envelope.hpp"
#include "witt/poly.hpp"

namespace witt {

// Parser for the canonical text forms:
//   2*e1*e3 - e2^2 - e4        (enveloping algebra; e-1 allowed in WITT mode)
//   t1^2*t2 - t2*t1^2 - 2*t2^2 (free algebra)
//   y^3*z - y^2*z^2            (polynomials)
// '*' is mandatory between factors; coefficients are integers or p/q.

namespace detail {

struct Token {
    enum Kind { Ident, Number, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
    std::string text; // Ident
    long value = 0;   // Number
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                v = v * 10 + (s[i++] - '0');
            out.push_back({Token::Number, "", v});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name(1, c);
            ++i;
            // `e-1` is a single token: a sign directly after `e`, then digits
            if (c == 'e' && i < s.size() &&
                (std::isdigit(static_cast<unsigned char>(s[i])) ||
                 (s[i] == '-' && i + 1 < s.size() &&
                  std::isdigit(static_cast<unsigned char>(s[i + 1]))))) {
                if (s[i] == '-') name += s[i++];
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    name += s[i++];
            } else {
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    name += s[i++];
            }
            out.push_back({Token::Ident, name, 0});
            continue;
        }
        Token::Kind k;
        switch (c) {
        case '+': k = Token::Plus; break;
        case '-': k = Token::Minus; break;
        case '*': k = Token::Star; break;
        case '^': k = Token::Caret; break;
        case '/': k = Token::Slash; break;
        case '(': k = Token::LParen; break;
        case ')': k = Token::RParen; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, "", 0});
        ++i;
    }
    out.push_back({Token::End, "", 0});
    return out;
}

} // namespace detail

/// Recursive-descent parser over an abstract algebra: supply how to build
/// constants, resolve identifiers, and multiply (the product need not be
/// commutative).
template <typename T, typename K>
class ExprParser {
public:
    ExprParser(std::function<T(const K&)> constant, std::function<T(const std::string&)> atom,
               std::function<T(const T&, const T&)> mul)
        : constant_(std::move(constant)), atom_(std::move(atom)), mul_(std::move(mul)) {}

    T parse(const std::string& text) const {
        std::vector<detail::Token> toks = detail::tokenize(text);
        size_t pos = 0;
        T v = expr(toks, pos);
        if (toks[pos].kind != detail::Token::End) throw ParseError("trailing input");
        return v;
    }

private:
    using Token = detail::Token;

    T expr(const std::vector<Token>& t, size_t& p) const {
        bool neg = false;
        if (t[p].kind == Token::Minus) {
            neg = true;
            ++p;
        }
        T v = term(t, p);
        if (neg) v = mul_(constant_(-K::one()), v);
        for (;;) {
            if (t[p].kind == Token::Plus) {
                ++p;
                v = v + term(t, p);
            } else if (t[p].kind == Token::Minus) {
                ++p;
                v = v - term(t, p);
            } else {
                return v;
            }
        }
    }

    T term(const std::vector<Token>& t, size_t& p) const {
        T v = factor(t, p);
        while (t[p].kind == Token::Star) {
            ++p;
            v = mul_(v, factor(t, p));
        }
        return v;
    }

    T factor(const std::vector<Token>& t, size_t& p) const {
        T v = atom(t, p);
        if (t[p].kind == Token::Caret) {
            ++p;
            if (t[p].kind != Token::Number) throw ParseError("expected exponent");
            long e = t[p++].value;
            T r = constant_(K::one());
            for (long i = 0; i < e; ++i) r = mul_(r, v);
            return r;
        }
        return v;
    }

    T atom(const std::vector<Token>& t, size_t& p) const {
        if (t[p].kind == Token::LParen) {
            ++p;
            T v = expr(t, p);
            if (t[p].kind != Token::RParen) throw ParseError("expected ')'");
            ++p;
            return v;
        }
        if (t[p].kind == Token::Number) {
            long num = t[p++].value;
            if (t[p].kind == Token::Slash) {
                ++p;
                if (t[p].kind != Token::Number) throw ParseError("expected denominator");
                long den = t[p++].value;
                if (den == 0) throw ParseError("zero denominator in literal");
                return constant_(K::from_int(num) / K::from_int(den));
            }
            return constant_(K::from_int(num));
        }
        if (t[p].kind == Token::Ident) return atom_(t[p++].text);
        throw ParseError("expected atom");
    }

    std::function<T(const K&)> constant_;
    std::function<T(const std::string&)> atom_;
    std::function<T(const T&, const T&)> mul_;
};

/// `2*e1*e3 - e2^2 - e4` -> EnvElement.
template <typename K>
EnvElement<K> parse_env(const std::string& text, Mode mode = Mode::WPlus) {
    ExprParser<EnvElement<K>, K> p(
        [mode](const K& c) { return EnvElement<K>::one(mode).scaled(c); },
        [mode](const std::string& name) {
            if (name.size() < 2 || name[0] != 'e')
                throw ParseError("unknown identifier " + name);
            return EnvElement<K>::generator(std::stoi(name.substr(1)), mode);
        },
        [](const EnvElement<K>& a, const EnvElement<K>& b) { return env_mul(a, b); });
    return p.parse(text);
}

/// `t1^2*t2 - t2*t1^2 - 2*t2^2` -> FreeElement.
template <typename K>
FreeElement<K> parse_free(const std::string& text) {
    ExprParser<FreeElement<K>, K> p(
        [](const K& c) { return FreeElement<K>::one().scaled(c); },
        [](const std::string& name) {
            if (name == "t1") return FreeElement<K>::letter(1);
            if (name == "t2") return FreeElement<K>::letter(2);
            throw ParseError("unknown identifier " + name);
        },
        [](const FreeElement<K>& a, const FreeElement<K>& b) { return a * b; });
    return p.parse(text);
}

/// `y^3*z - y^2*z^2` -> commutative Poly over the given ring.
template <typename K>
Poly<K> parse_poly(const std::string& text, const RingPtr& ring) {
    ExprParser<Poly<K>, K> p(
        [&ring](const K& c) { return Poly<K>::constant(ring, c); },
        [&ring](const std::string& name) { return Poly<K>::var(ring, name); },
        [](const Poly<K>& a, const Poly<K>& b) { return a * b; });
    return p.parse(text);
}

} // namespace witt

#endif
