#ifndef WITT_HILBERT_HPP
#define WITT_HILBERT_HPP

#include <cctype>
#include <string>
#include <vector>

#include "witt/algebras.hpp"
#include "witt/morphism.hpp"
#include "witt/named_elements.hpp"
#include "witt/ratfunc.hpp"

namespace witt {

/// Hilbert series as an exact rational function of t, expandable to any order.
class RationalSeries {
public:
    RationalSeries() : num_(), den_(1) {}
    RationalSeries(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw SeriesError("RationalSeries: zero denominator");
        if (den_.coeff(0) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    std::string str() const {
        RatFunc r(num_, den_);
        return r.str("t");
    }

    /// Closed forms in the grammar `t^5/((1-t)^2*(1-t^2))`.
    static RationalSeries parse(const std::string& text);

private:
    UniPoly num_, den_;
};

/// First N+1 coefficients by exact power-series division.
inline std::vector<Int> series_expand(const RationalSeries& s, int N) {
    const UniPoly& num = s.num();
    const UniPoly& den = s.den();
    if (den.coeff(0) == 0) throw SeriesError("series_expand: denominator vanishes at 0");
    std::vector<Rational> c(N + 1, Rational::zero());
    Rational d0(den.coeff(0), 1);
    for (int n = 0; n <= N; ++n) {
        Rational acc(num.coeff(n), 1);
        for (int k = 1; k <= n && k <= den.degree(); ++k)
            acc -= Rational(den.coeff(k), 1) * c[n - k];
        c[n] = acc / d0;
    }
    std::vector<Int> out;
    out.reserve(N + 1);
    for (const auto& x : c) {
        if (x.den() != 1) throw SeriesError("series_expand: non-integer coefficient");
        out.push_back(x.num());
    }
    return out;
}

namespace detail {

struct SeriesParser {
    const std::string& s;
    size_t pos = 0;

    explicit SeriesParser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    RatFunc term() {
        RatFunc v = factor();
        for (;;) {
            if (eat('*'))
                v *= factor();
            else if (eat('/')) {
                RatFunc d = factor();
                if (d.is_zero()) throw ParseError("series: division by zero");
                v /= d;
            } else
                return v;
        }
    }
    RatFunc factor() {
        RatFunc v = atom();
        if (eat('^')) {
            long e = integer();
            RatFunc r = RatFunc::one();
            for (long i = 0; i < e; ++i) r *= v;
            if (e < 0) throw ParseError("series: negative exponent");
            return r;
        }
        return v;
    }
    RatFunc atom() {
        skip();
        if (eat('(')) {
            RatFunc v = expr();
            if (!eat(')')) throw ParseError("series: expected ')'");
            return v;
        }
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            return RatFunc(UniPoly::variable(), UniPoly(1));
        }
        return RatFunc::from_int(integer());
    }
    long integer() {
        skip();
        bool neg = eat('-');
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("series: expected integer at position " + std::to_string(pos));
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }
};

} // namespace detail

inline RationalSeries RationalSeries::parse(const std::string& text) {
    detail::SeriesParser p(text);
    RatFunc v = p.expr();
    p.skip();
    if (p.pos != text.size()) throw ParseError("series: trailing input");
    return RationalSeries(v.num(), v.den());
}

struct MeasuredSeries {
    std::string label;
    int start_degree = 0;
    std::vector<Int> coeffs;
};

/// Graded dimensions of the named families, computed from scratch.
/// Labels: B, Q, R, S, A(0), A(1), A(a), I, M, M', ker phi, ker lambda.
inline MeasuredSeries measure(const std::string& label, int N) {
    MeasuredSeries out;
    out.label = label;
    using K = Rational;

    auto idealizer_dims = [&](const K& a) {
        auto R = make_R<K>();
        EnvMorphism<K> lam(MorphName::Lambda, R, Mode::WPlus, a);
        std::vector<Poly<K>> gens;
        for (int n = 1; n <= std::max(N, 1); ++n) gens.push_back(lam.gen_image(n));
        for (int n = 0; n <= N; ++n)
            out.coeffs.push_back(Int(span_generated(R, gens, n).dim()));
    };

    if (label == "B" || label == "Q") {
        auto S = make_S<K>();
        auto gens = label == "B" ? b_generators(S) : q_generators(S);
        for (int n = 0; n <= N; ++n)
            out.coeffs.push_back(Int(span_generated(S, gens, n).dim()));
    } else if (label == "R") {
        auto R = make_R<K>();
        for (int n = 0; n <= N; ++n) out.coeffs.push_back(Int(R.degree_basis(n).size()));
    } else if (label == "S") {
        auto S = make_S<K>();
        for (int n = 0; n <= N; ++n) out.coeffs.push_back(Int(S.degree_basis(n).size()));
    } else if (label == "A(0)") {
        idealizer_dims(K::zero());
    } else if (label == "A(1)") {
        idealizer_dims(K::one());
    } else if (label == "A(a)") {
        auto R = make_R<RatFunc>();
        EnvMorphism<RatFunc> lam(MorphName::Lambda, R, Mode::WPlus, RatFunc::param());
        std::vector<Poly<RatFunc>> gens;
        for (int n = 1; n <= std::max(N, 1); ++n) gens.push_back(lam.gen_image(n));
        for (int n = 0; n <= N; ++n)
            out.coeffs.push_back(Int(span_generated(R, gens, n).dim()));
    } else if (label == "I") {
        // I = Qp, left multiples of the normal element p by Q
        auto S = make_S<K>();
        Poly<K> p = p_element(S);
        for (int n = 0; n <= N; ++n) {
            std::vector<Poly<K>> elems;
            for (const auto& m : graded_monomials(*S.carrier(), n - 4, q_membership))
                elems.push_back(S.mul(Poly<K>::term(S.carrier(), m, K::one()), p));
            out.coeffs.push_back(Int(make_span(S, n, elems).dim()));
        }
    } else if (label == "M" || label == "M'") {
        auto S = make_S<K>();
        auto bg = b_generators(S);
        Poly<K> u = S.var("x");
        Poly<K> uwv = S.mul(S.var("x") - S.var("z"), S.var("y"));
        EnvMorphism<K> phi(MorphName::Phi, S, Mode::WPlus);
        for (int n = 0; n <= N; ++n) {
            if (label == "M") {
                auto left = module_piece(S, {{u, Side::Right}}, bg, n);
                auto right = module_piece(S, {{uwv, Side::Right}}, bg, n);
                out.coeffs.push_back(Int(graded_intersection(left, right).dim()));
            } else {
                std::vector<std::pair<Poly<K>, Side>> gens;
                for (int k = 5; k <= 7; ++k)
                    gens.emplace_back(eval_morphism(phi, r_element<K>(k)), Side::Right);
                out.coeffs.push_back(Int(module_piece(S, gens, bg, n).dim()));
            }
        }
    } else if (label == "ker phi") {
        auto S = make_S<K>();
        EnvMorphism<K> phi(MorphName::Phi, S, Mode::WPlus);
        for (int n = 0; n <= N; ++n)
            out.coeffs.push_back(n == 0 ? Int(0) : Int(kernel_at_degree(phi, n).dimension()));
    } else if (label == "ker lambda") {
        auto R = make_R<RatFunc>();
        EnvMorphism<RatFunc> lam(MorphName::Lambda, R, Mode::WPlus, RatFunc::param());
        for (int n = 0; n <= N; ++n)
            out.coeffs.push_back(n == 0 ? Int(0) : Int(kernel_at_degree(lam, n).dimension()));
    } else {
        throw DomainError("measure: unknown label " + label);
    }
    return out;
}

struct CompareVerdict {
    bool match = true;
    int first_mismatch = -1; // degree of first disagreement, -1 if none
};

inline CompareVerdict compare(const MeasuredSeries& measured, const RationalSeries& closed) {
    int N = measured.start_degree + static_cast<int>(measured.coeffs.size()) - 1;
    std::vector<Int> expanded = series_expand(closed, N);
    CompareVerdict v;
    for (int d = 0; d <= N; ++d) {
        Int got = 0;
        if (d >= measured.start_degree) got = measured.coeffs[d - measured.start_degree];
        if (expanded[d] != got) {
            v.match = false;
            v.first_mismatch = d;
            return v;
        }
    }
    return v;
}

} // namespace witt

#endif
