#include <doctest.h>

#include "witt/ratfunc.hpp"
#include "witt/rational.hpp"
#include "witt/unipoly.hpp"

using namespace witt;

TEST_CASE("Rational canonical form") {
    Rational r(Int(6), Int(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(Int(0), Int(7)) == Rational::zero());
    CHECK(Rational(3) / Rational(3) == Rational::one());
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3).inv() == Rational(3, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(-4).str() == "-4");
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), DomainError);
}

TEST_CASE("Rational survives large intermediate values") {
    // 100! / 99! must come back to 100 exactly
    Rational num = Rational::one(), den = Rational::one();
    for (long i = 1; i <= 100; ++i) num *= Rational(i);
    for (long i = 1; i <= 99; ++i) den *= Rational(i);
    CHECK(num / den == Rational(100));
}

TEST_CASE("UniPoly arithmetic and printing") {
    UniPoly a = UniPoly::variable();        // a
    UniPoly f = a * a - UniPoly(1);         // a^2 - 1
    CHECK(f.degree() == 2);
    CHECK(f.eval(Rational(1)).is_zero());
    CHECK(f.str("a") == "a^2 - 1");
    CHECK((a * a - a.scaled(Int(3)) + UniPoly(2)).str("a") == "a^2 - 3*a + 2");
    CHECK(UniPoly().str("a") == "0");
}

TEST_CASE("UniPoly gcd and squarefree part") {
    UniPoly a = UniPoly::variable();
    UniPoly f = (a - UniPoly(1)) * (a - UniPoly(1)) * (a + UniPoly(2));
    UniPoly g = (a - UniPoly(1)) * (a - UniPoly(3));
    CHECK(UniPoly::gcd(f, g) == a - UniPoly(1));
    CHECK(f.squarefree_part() == (a - UniPoly(1)) * (a + UniPoly(2)));
    // gcd is primitive with positive leading coefficient
    CHECK(UniPoly::gcd(f.scaled(Int(-6)), g.scaled(Int(4))).leading() == 1);
}

TEST_CASE("UniPoly rational roots") {
    UniPoly a = UniPoly::variable();
    // (2a - 1)(a + 3)(a^2 + 1): roots 1/2, -3, irreducible cofactor a^2 + 1
    UniPoly f = (a.scaled(Int(2)) - UniPoly(1)) * (a + UniPoly(3)) * (a * a + UniPoly(1));
    auto [roots, cofactor] = f.rational_roots();
    REQUIRE(roots.size() == 2);
    CHECK(std::find(roots.begin(), roots.end(), Rational(1, 2)) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), Rational(-3)) != roots.end());
    CHECK(cofactor == a * a + UniPoly(1));
}

TEST_CASE("RatFunc cancels to canonical form") {
    UniPoly a = UniPoly::variable();
    RatFunc f(a * a - UniPoly(1), a - UniPoly(1)); // (a^2-1)/(a-1) = a+1
    CHECK(f == RatFunc(a + UniPoly(1), UniPoly(1)));
    RatFunc g((a - UniPoly(2)).scaled(Int(6)), (a - UniPoly(2)).scaled(Int(-4)));
    CHECK(g == RatFunc(Rational(-3, 2)));
    // denominator leading coefficient kept positive
    RatFunc h(UniPoly(1), -a);
    CHECK(h.den().leading() > 0);
}

TEST_CASE("RatFunc evaluation and poles") {
    UniPoly a = UniPoly::variable();
    RatFunc f(a + UniPoly(1), a - UniPoly(2));
    CHECK(f.eval(Rational(3)) == Rational(4));
    CHECK_THROWS_AS(f.eval(Rational(2)), PoleError);
    CHECK(RatFunc::param().eval(Rational(5, 7)) == Rational(5, 7));
    CHECK(f.str("a") == "(a + 1)/(a - 2)");
}
