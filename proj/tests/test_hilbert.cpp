#include <doctest.h>

#include "witt/hilbert.hpp"

using namespace witt;

TEST_CASE("RationalSeries parse and expansion") {
    auto geo = RationalSeries::parse("1/(1-t)");
    auto c = series_expand(geo, 5);
    for (const auto& x : c) CHECK(x == 1);
    auto shifted = RationalSeries::parse("t^4/((1-t)^2*(1-t^2))");
    auto d = series_expand(shifted, 8);
    CHECK(d[3] == 0);
    CHECK(d[4] == 1);
    CHECK(d[5] == 2);
    CHECK(d[6] == 4);
    CHECK_THROWS_AS(RationalSeries::parse("1/(1-t"), ParseError);
    CHECK_THROWS_AS(series_expand(RationalSeries::parse("1/t"), 3), SeriesError);
}

TEST_CASE("polynomial ring dimensions as a sanity anchor") {
    auto r = measure("R", 6);
    // k[x,y]: dim R_n = n + 1
    for (int n = 0; n <= 6; ++n) CHECK(r.coeffs[n] == n + 1);
    auto s = measure("S", 5);
    for (int n = 0; n <= 5; ++n) CHECK(s.coeffs[n] == (n + 1) * (n + 2) / 2);
}

TEST_CASE("B and Q match their closed forms at low degree") {
    auto b = measure("B", 8);
    CHECK(compare(b, RationalSeries::parse("(1-t+t^3)/((1-t)^2*(1-t^2))")).match);
    auto q = measure("Q", 8);
    CHECK(compare(q, RationalSeries::parse("1/((1-t)^2*(1-t^2))")).match);
}

TEST_CASE("compare pinpoints the first mismatch") {
    auto b = measure("B", 6);
    auto verdict = compare(b, RationalSeries::parse("1/((1-t)^2*(1-t^2))"));
    CHECK_FALSE(verdict.match);
    CHECK(verdict.first_mismatch == 1); // B_1 = 1 but the Q series says 2
}

TEST_CASE("idealizer dimensions at a = 0") {
    auto a0 = measure("A(0)", 6);
    CHECK(compare(a0, RationalSeries::parse("(1-t+t^2)/(1-t)^2")).match);
}

TEST_CASE("kernel series of phi starts at degree 6") {
    auto k = measure("ker phi", 7);
    for (int n = 0; n <= 5; ++n) CHECK(k.coeffs[n] == 0);
    CHECK(k.coeffs[6] == 1);
    CHECK(k.coeffs[7] == 2);
}

TEST_CASE("unknown labels are rejected") {
    CHECK_THROWS_AS(measure("nope", 3), DomainError);
}
