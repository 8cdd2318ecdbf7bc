#ifndef WITT_UNIPOLY_HPP
#define WITT_UNIPOLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "witt/rational.hpp"

namespace witt {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficients stored low degree first; no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(long c) {
        if (c != 0) coeffs_.push_back(Int(c));
    }
    UniPoly(Int c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    explicit UniPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly variable() { return UniPoly(std::vector<Int>{0, 1}); }
    static UniPoly monomial(int deg, Int c) {
        std::vector<Int> v(deg + 1, Int(0));
        v[deg] = std::move(c);
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& coeff(int i) const {
        static const Int z = 0;
        if (i < 0 || i > degree()) return z;
        return coeffs_[i];
    }
    const Int& leading() const { return coeffs_.back(); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return UniPoly(std::move(v));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
        return UniPoly(std::move(v));
    }
    UniPoly operator-() const {
        std::vector<Int> v = coeffs_;
        for (auto& c : v) c = -c;
        return UniPoly(std::move(v));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(v));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly scaled(const Int& c) const {
        if (c == 0) return UniPoly();
        std::vector<Int> v = coeffs_;
        for (auto& x : v) x *= c;
        return UniPoly(std::move(v));
    }

    /// gcd of coefficients, sign matching the leading coefficient; 0 for the zero polynomial.
    Int content() const {
        Int g = 0;
        for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
        if (!is_zero() && leading() < 0) g = -g;
        return g;
    }

    UniPoly primitive_part() const {
        if (is_zero()) return UniPoly();
        Int g = content();
        std::vector<Int> v = coeffs_;
        for (auto& c : v) c /= g;
        return UniPoly(std::move(v));
    }

    /// Exact division; caller guarantees divisibility.
    UniPoly divide_exact(const UniPoly& d) const {
        if (d.is_zero()) throw DomainError("UniPoly: division by zero");
        if (is_zero()) return UniPoly();
        UniPoly rem = *this;
        std::vector<Int> q(degree() - d.degree() + 1, Int(0));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int k = rem.degree() - d.degree();
            Int c = rem.leading() / d.leading();
            q[k] = c;
            rem = rem - (d * monomial(k, c));
        }
        if (!rem.is_zero()) throw DomainError("UniPoly: inexact division");
        return UniPoly(std::move(q));
    }

    /// Pseudo-remainder: lc(d)^(deg f - deg d + 1) * f mod d.
    static UniPoly prem(UniPoly f, const UniPoly& d) {
        int e = f.degree() - d.degree() + 1;
        while (!f.is_zero() && f.degree() >= d.degree()) {
            int k = f.degree() - d.degree();
            Int c = f.leading();
            f = f.scaled(d.leading()) - d * monomial(k, c);
            --e;
        }
        if (e > 0) {
            Int lc = 1;
            for (int i = 0; i < e; ++i) lc *= d.leading();
            f = f.scaled(lc);
        }
        return f;
    }

    /// Primitive-PRS gcd, normalized primitive with positive leading coefficient.
    static UniPoly gcd(UniPoly a, UniPoly b) {
        if (a.is_zero()) return b.is_zero() ? UniPoly() : b.primitive_part().positive_leading();
        if (b.is_zero()) return a.primitive_part().positive_leading();
        a = a.primitive_part();
        b = b.primitive_part();
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            UniPoly r = prem(a, b);
            a = b;
            b = r.is_zero() ? UniPoly() : r.primitive_part();
        }
        return a.positive_leading();
    }

    UniPoly positive_leading() const {
        if (!is_zero() && leading() < 0) return -*this;
        return *this;
    }

    UniPoly derivative() const {
        if (degree() < 1) return UniPoly();
        std::vector<Int> v(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Int(i);
        return UniPoly(std::move(v));
    }

    UniPoly squarefree_part() const {
        if (is_zero()) return UniPoly();
        UniPoly g = gcd(*this, derivative());
        return primitive_part().divide_exact(g).positive_leading().primitive_part();
    }

    Rational eval(const Rational& x) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }

    /// Rational roots of the polynomial (each listed once) and the cofactor left
    /// after dividing out the corresponding linear factors.
    std::pair<std::vector<Rational>, UniPoly> rational_roots() const {
        std::vector<Rational> roots;
        UniPoly f = primitive_part().positive_leading();
        if (f.is_zero() || f.degree() == 0) return {roots, f};
        // strip factors of the variable
        while (f.coeff(0) == 0) {
            if (std::find(roots.begin(), roots.end(), Rational(0)) == roots.end())
                roots.push_back(Rational(0));
            std::vector<Int> v(f.coeffs_.begin() + 1, f.coeffs_.end());
            f = UniPoly(std::move(v));
        }
        bool progress = true;
        while (f.degree() >= 1 && progress) {
            progress = false;
            Int a0 = boost::multiprecision::abs(f.coeff(0));
            Int an = boost::multiprecision::abs(f.leading());
            for (Int p = 1; p <= a0 && !progress; ++p) {
                if (a0 % p != 0) continue;
                for (Int q = 1; q <= an && !progress; ++q) {
                    if (an % q != 0) continue;
                    for (int s : {1, -1}) {
                        Rational cand(s > 0 ? p : -p, q);
                        if (f.eval(cand).is_zero()) {
                            if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                                roots.push_back(cand);
                            // divide by (q*x - s*p)
                            UniPoly lin(std::vector<Int>{s > 0 ? -p : p, q});
                            f = f.scaled(q).divide_exact(lin).primitive_part().positive_leading();
                            progress = true;
                            break;
                        }
                    }
                }
            }
        }
        return {roots, f};
    }

    std::string str(const std::string& var = "a") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const Int& c = coeffs_[i];
            if (c == 0) continue;
            Int ac = boost::multiprecision::abs(c);
            if (s.empty())
                s += (c < 0) ? "-" : "";
            else
                s += (c < 0) ? " - " : " + ";
            bool coef_shown = (ac != 1 || i == 0);
            if (coef_shown) s += ac.str();
            if (i > 0) {
                if (coef_shown) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Int> coeffs_;
};

} // namespace witt

#endif
