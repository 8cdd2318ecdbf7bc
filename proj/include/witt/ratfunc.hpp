#ifndef WITT_RATFUNC_HPP
#define WITT_RATFUNC_HPP

#include <string>
#include <utility>

#include "witt/unipoly.hpp"

namespace witt {

/// Rational function in one parameter over the rationals: num/den with
/// integer-coefficient polynomials.  Canonical form: den != 0, the primitive
/// parts of num and den are coprime, the integer contents of num and den are
/// coprime, and den has positive leading coefficient.  Zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long n) : num_(n), den_(1) {}
    RatFunc(const Rational& r) : num_(r.num()), den_(r.den()) {}
    RatFunc(UniPoly n, UniPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    static RatFunc from_int(long n) { return RatFunc(n); }
    /// The parameter itself.
    static RatFunc param() { return RatFunc(UniPoly::variable(), UniPoly(1)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == UniPoly(1) && den_ == UniPoly(1); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DomainError("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inv() const {
        if (is_zero()) throw DomainError("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Exact evaluation at a rational parameter value; throws PoleError at a pole.
    Rational eval(const Rational& a0) const {
        Rational d = den_.eval(a0);
        if (d.is_zero()) throw PoleError("RatFunc: pole at a = " + a0.str());
        return num_.eval(a0) / d;
    }

    std::string str(const std::string& var = "a") const {
        if (den_ == UniPoly(1)) return num_.str(var);
        return wrap(num_, var) + "/" + wrap(den_, var);
    }

private:
    static std::string wrap(const UniPoly& p, const std::string& var) {
        std::string s = p.str(var);
        if (s.find(' ') != std::string::npos) return "(" + s + ")";
        return s;
    }

    void normalize() {
        if (den_.is_zero()) throw DomainError("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly(1);
            return;
        }
        UniPoly g = UniPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            Int cn = num_.content(), cd = den_.content();
            num_ = num_.primitive_part().divide_exact(g).scaled(boost::multiprecision::abs(cn));
            if (cn < 0) num_ = -num_;
            den_ = den_.primitive_part().divide_exact(g).scaled(boost::multiprecision::abs(cd));
            if (cd < 0) den_ = -den_;
        }
        Int cn = num_.content(), cd = den_.content();
        Int gc = boost::multiprecision::gcd(boost::multiprecision::abs(cn),
                                            boost::multiprecision::abs(cd));
        num_ = num_.divide_exact(UniPoly(gc));
        den_ = den_.divide_exact(UniPoly(gc));
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    UniPoly num_;
    UniPoly den_;
};

inline bool is_param_constant(const RatFunc& x) { return x.is_constant(); }

} // namespace witt

#endif
