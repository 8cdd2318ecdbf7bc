#include <doctest.h>

#include "witt/morphism.hpp"
#include "witt/named_elements.hpp"
#include "witt/parser.hpp"

using namespace witt;

TEST_CASE("generator images") {
    auto S = make_S<Rational>();
    EnvMorphism<Rational> phi(MorphName::Phi, S);
    Poly<Rational> u = S.var("x"), v = S.var("y"), w = S.var("z");
    CHECK(phi.gen_image(1) == u);
    CHECK(phi.gen_image(2) == (u - w) * v);
    CHECK(phi.gen_image(3) == (u - w.scaled(Rational(2))) * v * v);

    auto R = make_R<Rational>();
    EnvMorphism<Rational> lam2(MorphName::Lambda, R, Mode::WPlus, Rational(2));
    Poly<Rational> x = R.var("x"), y = R.var("y");
    CHECK(lam2.gen_image(1) == x);
    CHECK(lam2.gen_image(2) == (x - y.scaled(Rational(2))) * y);
}

TEST_CASE("phi and lambda_a are homomorphisms on brackets") {
    auto S = make_S<Rational>();
    EnvMorphism<Rational> phi(MorphName::Phi, S);
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            Poly<Rational> lhs = S.mul(phi.gen_image(n), phi.gen_image(m)) -
                                 S.mul(phi.gen_image(m), phi.gen_image(n));
            CHECK(lhs == phi.gen_image(n + m).scaled(Rational(m - n)));
        }
}

TEST_CASE("named kernel elements map to zero") {
    auto S = make_S<Rational>();
    EnvMorphism<Rational> phi(MorphName::Phi, S);
    CHECK(eval_morphism(phi, g_element<Rational>()).is_zero());

    auto R = make_R<RatFunc>();
    EnvMorphism<RatFunc> lam(MorphName::Lambda, R, Mode::WPlus, RatFunc::param());
    for (int k = 1; k <= 3; ++k)
        CHECK(eval_morphism(lam, h_element<RatFunc>(k, RatFunc::param())).is_zero());
    // and a non-kernel element does not
    CHECK_FALSE(eval_morphism(lam, parse_env<RatFunc>("e1*e3")).is_zero());
}

TEST_CASE("kernel_at_degree finds g at degree 6 for phi") {
    auto S = make_S<Rational>();
    EnvMorphism<Rational> phi(MorphName::Phi, S);
    CHECK(kernel_at_degree(phi, 5).dimension() == 0);
    auto rep = kernel_at_degree(phi, 6);
    REQUIRE(rep.dimension() == 1);
    auto span = env_span(6, rep.basis);
    CHECK(span.contains(g_element<Rational>()));
}

TEST_CASE("generic lambda kernel reports excluded specializations") {
    auto R = make_R<RatFunc>();
    EnvMorphism<RatFunc> lam(MorphName::Lambda, R, Mode::WPlus, RatFunc::param());
    auto rep = kernel_at_degree(lam, 4);
    CHECK(rep.dimension() == 0);
    // the degree-4 elimination divides by a and a - 1
    CHECK(std::find(rep.excluded.begin(), rep.excluded.end(), "a") != rep.excluded.end());
    CHECK(std::find(rep.excluded.begin(), rep.excluded.end(), "a - 1") != rep.excluded.end());
    // at the excluded value a = 0 the kernel jumps
    auto R0 = make_R<Rational>();
    EnvMorphism<Rational> lam0(MorphName::Lambda, R0, Mode::WPlus, Rational::zero());
    auto rep0 = kernel_at_degree(lam0, 4);
    CHECK(rep0.dimension() == 1);
    CHECK(env_span(4, rep0.basis).contains(g4_element<Rational>()));
}

TEST_CASE("ideal_graded_piece of g4 inside ker lambda_0") {
    auto R = make_R<Rational>();
    EnvMorphism<Rational> lam0(MorphName::Lambda, R, Mode::WPlus, Rational::zero());
    for (int n = 4; n <= 7; ++n) {
        auto ideal = ideal_graded_piece<Rational>({g4_element<Rational>()}, n);
        auto ker = env_span(n, kernel_at_degree(lam0, n).basis);
        CHECK(ideal == ker);
    }
}

TEST_CASE("preimage_lift round trips and detects unliftable targets") {
    auto S = make_S<Rational>();
    EnvMorphism<Rational> phi(MorphName::Phi, S);
    Poly<Rational> target = eval_morphism(phi, parse_env<Rational>("e1*e2 - 3*e3"));
    auto lift = preimage_lift(phi, target, 3);
    REQUIRE(lift.has_value());
    CHECK(eval_morphism(phi, *lift) == target);
    // w^2 v is not in the image of phi in degree 3
    Poly<Rational> outside = S.var("z") * S.var("z") * S.var("y");
    CHECK_FALSE(preimage_lift(phi, outside, 3).has_value());
}

TEST_CASE("presentation_from_syzygies rejects non-syzygies") {
    auto R = make_R<Rational>();
    EnvMorphism<Rational> lam0(MorphName::Lambda, R, Mode::WPlus, Rational::zero());
    CHECK_THROWS_AS(
        presentation_from_syzygies<Rational>(lam0, {{R.var("x"), R.var("x")}}),
        InvalidSyzygy);
}

TEST_CASE("conjugation identity lambda_0(e_n) u = u lambda_1(e_n)") {
    auto R = make_R<Rational>();
    for (int n = 1; n <= 6; ++n) CHECK(conj_lambda_check(R, n));
}

TEST_CASE("r_elements match their alternate factorizations") {
    for (int k = 5; k <= 7; ++k) {
        EnvElement<Rational> r = r_element<Rational>(k);
        CHECK(r == r_element_alt<Rational>(k));
        CHECK(r.degree() == k);
    }
}
