#ifndef WITT_GEOMETRY_HPP
#define WITT_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "witt/poly.hpp"
#include "witt/rational.hpp"

namespace witt {

// Commutative geometry checks over Q[x,y,a] (a is a weight-0 parameter
// variable): the projective maps tau, mu, nu, psi_a, i_a as coordinate
// pullbacks, the compatibility squares, and pullbacks of rational functions.

template <typename K>
struct ProjectiveMapSpec {
    std::string name;
    RingPtr source; // coordinate ring of the source
    RingPtr target; // coordinate ring of the target
    std::vector<Poly<K>> coords; // target coordinates as polynomials in source vars

    RingMap<K> pullback() const {
        if (coords.size() != target->nvars())
            throw RingMismatch("ProjectiveMapSpec: coordinate count mismatch");
        int deg = -1;
        for (size_t i = 0; i < coords.size(); ++i) {
            const auto& c = coords[i];
            if (c.is_zero()) continue;
            if (!c.is_homogeneous())
                throw DomainError("ProjectiveMapSpec: inhomogeneous coordinate");
            if (target->weights[i] == 0) {
                if (c.degree() != 0)
                    throw DomainError("ProjectiveMapSpec: parameter coordinate must have degree 0");
                continue;
            }
            if (deg == -1) deg = c.degree();
            if (c.degree() != deg)
                throw DomainError("ProjectiveMapSpec: coordinates of mixed degree");
        }
        return RingMap<K>{target, source, coords};
    }

    ProjectiveMapSpec rescaled(const K& c) const {
        ProjectiveMapSpec m = *this;
        for (auto& f : m.coords) f = f.scaled(c);
        return m;
    }
};

namespace geom {

/// P^3 coordinate ring Q[w,x,y,z].
inline const RingPtr& ring_p3() {
    static RingPtr r = PolyRing::make({"w", "x", "y", "z"});
    return r;
}
/// P^2 coordinate ring Q[x,y,z].
inline const RingPtr& ring_p2() {
    static RingPtr r = PolyRing::make({"x", "y", "z"});
    return r;
}
/// P^1 coordinate ring with the parameter adjoined: Q[x,y,a], a of weight 0.
inline const RingPtr& ring_p1a() {
    static RingPtr r = PolyRing::make({"x", "y", "a"}, {}, {1, 1, 0});
    return r;
}
/// Q[w,x,y,z,a] and Q[x,y,z,a], for curve equations with parameter coefficients.
inline const RingPtr& ring_p3a() {
    static RingPtr r = PolyRing::make({"w", "x", "y", "z", "a"}, {}, {1, 1, 1, 1, 0});
    return r;
}
inline const RingPtr& ring_p2a() {
    static RingPtr r = PolyRing::make({"x", "y", "z", "a"}, {}, {1, 1, 1, 0});
    return r;
}

template <typename K>
ProjectiveMapSpec<K> tau() {
    RingPtr r = ring_p3();
    Poly<K> w = Poly<K>::var(r, "w"), x = Poly<K>::var(r, "x");
    Poly<K> y = Poly<K>::var(r, "y"), z = Poly<K>::var(r, "z");
    return {"tau", r, r,
            {w - x.scaled(K::from_int(2)) + z.scaled(K::from_int(2)), z,
             -y - z.scaled(K::from_int(2)),
             x + y.scaled(K::from_int(4)) + z.scaled(K::from_int(4))}};
}

template <typename K>
ProjectiveMapSpec<K> mu_p2() {
    RingPtr r = ring_p2();
    Poly<K> x = Poly<K>::var(r, "x"), y = Poly<K>::var(r, "y"), z = Poly<K>::var(r, "z");
    return {"mu", r, r, {x - y, y, z}};
}

template <typename K>
ProjectiveMapSpec<K> nu_p1() {
    RingPtr r = ring_p1a();
    Poly<K> x = Poly<K>::var(r, "x"), y = Poly<K>::var(r, "y"), a = Poly<K>::var(r, "a");
    return {"nu", r, r, {x - y, y, a}};
}

template <typename K>
ProjectiveMapSpec<K> psi() {
    RingPtr src = ring_p1a();
    Poly<K> x = Poly<K>::var(src, "x"), y = Poly<K>::var(src, "y"), a = Poly<K>::var(src, "a");
    Poly<K> x2 = x * x, xy = x * y, y2 = y * y;
    return {"psi", src, ring_p3(),
            {x2.scaled(K::from_int(2)) - xy.scaled(K::from_int(4)) -
                 (a * y2).scaled(K::from_int(6)),
             x2 - xy.scaled(K::from_int(2)) + y2,
             -x2 + xy.scaled(K::from_int(3)) - y2.scaled(K::from_int(2)),
             x2 - xy.scaled(K::from_int(4)) + y2.scaled(K::from_int(4))}};
}

template <typename K>
ProjectiveMapSpec<K> i_a() {
    RingPtr src = ring_p1a();
    Poly<K> x = Poly<K>::var(src, "x"), y = Poly<K>::var(src, "y"), a = Poly<K>::var(src, "a");
    return {"i_a", src, ring_p2(), {x, y, a * y}};
}

} // namespace geom

/// For f: source -> target with automorphisms s of the source and t of the
/// target, check s* f* = f* t* on each target coordinate (f t = s^{-1}... the
/// square f o s = t o f at pullback level).
template <typename K>
std::vector<std::pair<std::string, bool>> square_commutes(const ProjectiveMapSpec<K>& f,
                                                          const ProjectiveMapSpec<K>& src_auto,
                                                          const ProjectiveMapSpec<K>& tgt_auto) {
    if (src_auto.source != f.source || src_auto.target != f.source ||
        tgt_auto.source != f.target || tgt_auto.target != f.target)
        throw RingMismatch("square_commutes: maps do not compose");
    RingMap<K> fstar = f.pullback();
    RingMap<K> sstar = src_auto.pullback();
    RingMap<K> tstar = tgt_auto.pullback();
    std::vector<std::pair<std::string, bool>> out;
    for (size_t i = 0; i < f.target->nvars(); ++i) {
        Poly<K> g = Poly<K>::var(f.target, f.target->vars[i]);
        out.emplace_back(f.target->vars[i], sstar.apply(fstar.apply(g)) == fstar.apply(tstar.apply(g)));
    }
    return out;
}

template <typename K>
struct RationalExpr {
    Poly<K> num, den;

    /// Equality by cross-multiplication; no gcd normalization.
    friend bool operator==(const RationalExpr& a, const RationalExpr& b) {
        if (a.den.is_zero() || b.den.is_zero())
            throw DomainError("RationalExpr: zero denominator");
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator!=(const RationalExpr& a, const RationalExpr& b) { return !(a == b); }

    std::string str() const { return "(" + num.str() + ")/(" + den.str() + ")"; }
};

template <typename K>
RationalExpr<K> pullback_rational(const ProjectiveMapSpec<K>& m, const RationalExpr<K>& e) {
    RingMap<K> p = m.pullback();
    RationalExpr<K> out{p.apply(e.num), p.apply(e.den)};
    if (out.den.is_zero()) throw DomainError("pullback_rational: denominator pulls back to 0");
    return out;
}

/// True iff every defining equation of the curve pulls back to 0.
template <typename K>
bool curve_containment(const RingMap<K>& pullback, const std::vector<Poly<K>>& curve_eqs) {
    for (const auto& eq : curve_eqs)
        if (!pullback.apply(eq).is_zero()) return false;
    return true;
}

template <typename K>
bool curve_containment(const ProjectiveMapSpec<K>& m, const std::vector<Poly<K>>& curve_eqs) {
    return curve_containment(m.pullback(), curve_eqs);
}

/// psi's pullback extended to Q[w,x,y,z,a] -> Q[x,y,a] (a -> a), so curves
/// whose equations carry the parameter can be checked.
template <typename K>
RingMap<K> psi_extended_pullback() {
    auto m = geom::psi<K>();
    std::vector<Poly<K>> imgs = m.coords;
    imgs.push_back(Poly<K>::var(geom::ring_p1a(), "a"));
    return RingMap<K>{geom::ring_p3a(), geom::ring_p1a(), imgs};
}

/// i_a's pullback extended to Q[x,y,z,a] -> Q[x,y,a].
template <typename K>
RingMap<K> ia_extended_pullback() {
    auto m = geom::i_a<K>();
    std::vector<Poly<K>> imgs = m.coords;
    imgs.push_back(Poly<K>::var(geom::ring_p1a(), "a"));
    return RingMap<K>{geom::ring_p2a(), geom::ring_p1a(), imgs};
}

/// f = (w + 12x + 22y + 8z) / (12x + 6y) on X.
template <typename K>
RationalExpr<K> f_expr() {
    RingPtr r = geom::ring_p3();
    Poly<K> w = Poly<K>::var(r, "w"), x = Poly<K>::var(r, "x");
    Poly<K> y = Poly<K>::var(r, "y"), z = Poly<K>::var(r, "z");
    return {w + x.scaled(K::from_int(12)) + y.scaled(K::from_int(22)) + z.scaled(K::from_int(8)),
            x.scaled(K::from_int(12)) + y.scaled(K::from_int(6))};
}

/// Generator-level compatibility of the two degree maps into k(P^1)[s]:
/// index 1 is trivial (both sides give s); index 2 amounts to
/// psi*(f) = lambda_a(e_2) / (x(x-y)) as rational expressions.
template <typename K>
bool gamma_check(int generator_index,
                 const std::optional<RationalExpr<K>>& f_override = std::nullopt) {
    if (generator_index == 1) return true;
    if (generator_index != 2) throw DomainError("gamma_check: generator index must be 1 or 2");
    auto m = geom::psi<K>();
    RationalExpr<K> pf = pullback_rational(m, f_override ? *f_override : f_expr<K>());
    RingPtr r = geom::ring_p1a();
    Poly<K> x = Poly<K>::var(r, "x"), y = Poly<K>::var(r, "y"), a = Poly<K>::var(r, "a");
    RationalExpr<K> rhs{(x - a * y) * y, x * (x - y)};
    return pf == rhs;
}

/// The defining equations of the curve C_a inside X, in Q[w,x,y,z] with the
/// parameter carried in the coefficients via a weight-0 variable is not
/// available there, so they are produced in a ring with `a` adjoined.
template <typename K>
std::vector<Poly<K>> ca_equations(const RingPtr& p3a) {
    Poly<K> w = Poly<K>::var(p3a, "w"), x = Poly<K>::var(p3a, "x");
    Poly<K> y = Poly<K>::var(p3a, "y"), z = Poly<K>::var(p3a, "z");
    Poly<K> a = Poly<K>::var(p3a, "a");
    Poly<K> lin = w + (a * x).scaled(K::from_int(6)) + y.scaled(K::from_int(4)) +
                  (a * y).scaled(K::from_int(12)) + z.scaled(K::from_int(2)) +
                  (a * z).scaled(K::from_int(6));
    return {lin, x * z - y * y};
}

} // namespace witt

#endif
