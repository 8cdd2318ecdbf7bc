#include <doctest.h>

#include "witt/geometry.hpp"

using namespace witt;
using K = Rational;

TEST_CASE("pullback squares commute coordinate by coordinate") {
    auto psi = geom::psi<K>();
    for (const auto& [coord, ok] : square_commutes(psi, geom::nu_p1<K>(), geom::tau<K>()))
        CHECK(ok);
    auto ia = geom::i_a<K>();
    for (const auto& [coord, ok] : square_commutes(ia, geom::nu_p1<K>(), geom::mu_p2<K>()))
        CHECK(ok);
}

TEST_CASE("a broken square is detected") {
    auto psi = geom::psi<K>();
    // perturb by x^2, which is not invariant under nu: x -> x - y
    psi.coords[0] = psi.coords[0] + Poly<K>::var(geom::ring_p1a(), "x") *
                                        Poly<K>::var(geom::ring_p1a(), "x");
    bool all = true;
    for (const auto& [coord, ok] : square_commutes(psi, geom::nu_p1<K>(), geom::tau<K>()))
        all = all && ok;
    CHECK_FALSE(all);
}

TEST_CASE("psi lands on the quadric xz = y^2") {
    auto psi = geom::psi<K>();
    RingPtr p3 = geom::ring_p3();
    Poly<K> rel = Poly<K>::var(p3, "x") * Poly<K>::var(p3, "z") -
                  Poly<K>::var(p3, "y") * Poly<K>::var(p3, "y");
    CHECK(curve_containment(psi, {rel}));
    CHECK_FALSE(curve_containment(psi, {Poly<K>::var(p3, "z")}));
}

TEST_CASE("rescaling a projective map changes nothing observable") {
    auto psi = geom::psi<K>().rescaled(Rational(5));
    RingPtr p3 = geom::ring_p3();
    Poly<K> rel = Poly<K>::var(p3, "x") * Poly<K>::var(p3, "z") -
                  Poly<K>::var(p3, "y") * Poly<K>::var(p3, "y");
    CHECK(curve_containment(psi, {rel}));
    for (const auto& [coord, ok] : square_commutes(psi, geom::nu_p1<K>(), geom::tau<K>()))
        CHECK(ok);
}

TEST_CASE("RationalExpr equality is cross-multiplicative") {
    RingPtr r = geom::ring_p1a();
    Poly<K> x = Poly<K>::var(r, "x"), y = Poly<K>::var(r, "y");
    RationalExpr<K> a{x * y, y * y};
    RationalExpr<K> b{x, y};
    CHECK(a == b);
    RationalExpr<K> c{x, x + y};
    CHECK(a != c);
    RationalExpr<K> degenerate{x, Poly<K>::zero(r)};
    CHECK_THROWS_AS((void)(a == degenerate), DomainError);
}

TEST_CASE("pullback of f and the gamma compatibility") {
    auto pf = pullback_rational(geom::psi<K>(), f_expr<K>());
    RingPtr r = geom::ring_p1a();
    Poly<K> x = Poly<K>::var(r, "x"), y = Poly<K>::var(r, "y"), a = Poly<K>::var(r, "a");
    CHECK(pf == RationalExpr<K>{x * y - a * y * y, x * x - x * y});
    CHECK(gamma_check<K>(1));
    CHECK(gamma_check<K>(2));
    CHECK_THROWS_AS(gamma_check<K>(3), DomainError);
}

TEST_CASE("extended pullbacks carry the parameter through") {
    auto eqs = ca_equations<K>(geom::ring_p3a());
    CHECK(curve_containment(psi_extended_pullback<K>(), eqs));
    RingPtr p2a = geom::ring_p2a();
    Poly<K> line = Poly<K>::var(p2a, "z") - Poly<K>::var(p2a, "a") * Poly<K>::var(p2a, "y");
    CHECK(curve_containment(ia_extended_pullback<K>(), {line}));
}

TEST_CASE("pullback validation rejects mixed-degree coordinates") {
    RingPtr r = geom::ring_p1a();
    Poly<K> x = Poly<K>::var(r, "x"), y = Poly<K>::var(r, "y");
    ProjectiveMapSpec<K> bad{"bad", r, geom::ring_p2(), {x, y, x * x}};
    CHECK_THROWS_AS(bad.pullback(), DomainError);
}
