#include <doctest.h>

#include "witt/envelope.hpp"
#include "witt/named_elements.hpp"
#include "witt/parser.hpp"
#include "witt/rational.hpp"

using namespace witt;
using K = Rational;

TEST_CASE("straightening a single inversion") {
    // e2 e1 = e1 e2 + (1 - 2) e3
    EnvElement<K> lhs = straighten<K>({2, 1});
    EnvElement<K> rhs = parse_env<K>("e1*e2 - e3");
    CHECK(lhs == rhs);
    // already sorted words pass through
    CHECK(straighten<K>({1, 2}) == parse_env<K>("e1*e2"));
}

TEST_CASE("straightening respects the grading") {
    EnvElement<K> f = straighten<K>({3, 2, 1, 2});
    CHECK(f.is_homogeneous());
    CHECK(f.degree() == 8);
    for (const auto& [m, c] : f.terms())
        CHECK(std::is_sorted(m.begin(), m.end()));
}

TEST_CASE("env_mul is associative and respects the bracket") {
    auto e = [](int n) { return EnvElement<K>::generator(n); };
    EnvElement<K> a = e(1) + e(2), b = e(2), c = e(3) - e(1);
    CHECK(env_mul(env_mul(a, b), c) == env_mul(a, env_mul(b, c)));
    // [e_n, e_m] = (m - n) e_{n+m}
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            CHECK(bracket(e(n), e(m)) == e(n + m).scaled(K::from_int(m - n)));
}

TEST_CASE("ad_power iterates the bracket") {
    auto e = [](int n) { return EnvElement<K>::generator(n); };
    CHECK(ad_power(e(1), 0, e(2)) == e(2));
    CHECK(ad_power(e(1), 1, e(2)) == e(3));
    CHECK(ad_power(e(1), 2, e(2)) == e(4).scaled(K::from_int(2)));
}

TEST_CASE("env_basis counts partitions") {
    // p(n) = 1, 2, 3, 5, 7, 11, 15, 22 for n = 1..8
    std::vector<size_t> p{1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 1; n <= 8; ++n) CHECK(env_basis(n).size() == p[n - 1]);
    CHECK_THROWS_AS(env_basis(0), ModeError);
}

TEST_CASE("W+ mode rejects nonpositive indices, WITT mode allows them") {
    CHECK_THROWS_AS(EnvElement<K>::generator(0), ModeError);
    CHECK_THROWS_AS(straighten<K>({1, -1}), ModeError);
    EnvElement<K> f = straighten<K>({1, -1}, Mode::Witt);
    // e1 e-1 = e-1 e1 + (-1 - 1) e0 ... rewriting moves e-1 left
    CHECK(f == parse_env<K>("e-1*e1 - 2*e0", Mode::Witt));
    // modes do not mix
    CHECK_THROWS_AS(f + parse_env<K>("e1"), ModeError);
}

TEST_CASE("named elements are in the kernel-ready normal form") {
    EnvElement<K> g4 = g4_element<K>();
    CHECK(g4 == parse_env<K>("e1*e3 - e2^2 - e4"));
    EnvElement<K> g = g_element<K>();
    CHECK(g == parse_env<K>("e1*e5 - 4*e2*e4 + 3*e3^2 + 2*e6"));
    CHECK(g.degree() == 6);
}

TEST_CASE("free algebra is genuinely noncommutative") {
    FreeElement<K> t1 = FreeElement<K>::letter(1), t2 = FreeElement<K>::letter(2);
    CHECK(t1 * t2 != t2 * t1);
    CHECK(free_bracket(t1, t2) == t1 * t2 - t2 * t1);
    CHECK((t1 * t2).degree() == 3);
    CHECK(free_word_basis(3).size() == 3); // t1^3, t1 t2, t2 t1
}

TEST_CASE("pi projects the free algebra onto U(W+)") {
    FreeElement<K> t1 = FreeElement<K>::letter(1), t2 = FreeElement<K>::letter(2);
    CHECK(free_reduce_and_project(free_bracket(t1, t2)) == parse_env<K>("e3"));
    // the defining relations die under pi
    CHECK(free_reduce_and_project(q_relation<K>(5)).is_zero());
    CHECK(free_reduce_and_project(q_relation<K>(7)).is_zero());
}

TEST_CASE("env and free printing round trips through the parser") {
    EnvElement<K> f = parse_env<K>("2*e1^2*e3 - 1/3*e2*e4 + e5 - 7");
    CHECK(parse_env<K>(f.str()) == f);
    FreeElement<K> w = parse_free<K>("t1^2*t2 - t2*t1^2 - 2*t2^2");
    CHECK(parse_free<K>(w.str()) == w);
    EnvElement<K> witt = parse_env<K>("e-1*e2 - e0*e1", Mode::Witt);
    CHECK(parse_env<K>(witt.str(), Mode::Witt) == witt);
}
