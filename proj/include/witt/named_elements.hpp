#ifndef WITT_NAMED_ELEMENTS_HPP
#define WITT_NAMED_ELEMENTS_HPP

#include "witt/envelope.hpp"

namespace witt {

// The distinguished elements of U(W+) and the free algebra that the
// verification suite keeps coming back to.

namespace detail {

template <typename K>
EnvElement<K> env_comb(std::initializer_list<std::pair<long, std::vector<int>>> terms) {
    EnvElement<K> f(Mode::WPlus);
    for (const auto& [c, w] : terms) f = f + straighten<K>(w, Mode::WPlus, K::from_int(c));
    return f;
}

} // namespace detail

/// e1 e3 - e2^2 - e4, the degree-4 kernel element of lambda_0 and lambda_1.
template <typename K>
EnvElement<K> g4_element() {
    return detail::env_comb<K>({{1, {1, 3}}, {-1, {2, 2}}, {-1, {4}}});
}

/// g = e1 e5 - 4 e2 e4 + 3 e3^2 + 2 e6, the degree-6 generator of ker phi.
template <typename K>
EnvElement<K> g_element() {
    return detail::env_comb<K>({{1, {1, 5}}, {-4, {2, 4}}, {3, {3, 3}}, {2, {6}}});
}

/// h_1, ..., h_5: the kernel elements of lambda_a (h_2 = g is parameter-free).
template <typename K>
EnvElement<K> h_element(int k, const K& a) {
    K one = K::one();
    auto t = [&](const K& c, std::vector<int> w) { return straighten<K>(w, Mode::WPlus, c); };
    switch (k) {
    case 1: // e1e2^2 - e1^2e3 - 2a e2e3 + (1+2a) e1e4 - (a^2+a) e5
        return t(one, {1, 2, 2}) + t(-one, {1, 1, 3}) + t(-(a + a), {2, 3}) +
               t(one + a + a, {1, 4}) + t(-(a * a + a), {5});
    case 2:
        return g_element<K>();
    case 3: // -4e1^2e2^2 - 4e2^3 + 4e1^3e3 + (20a^2+14a-7)e3^2
            //   - (16a^2+18a+5)e1e5 + (16a^3+36a^2+16a-2)e6
        return t(K::from_int(-4), {1, 1, 2, 2}) + t(K::from_int(-4), {2, 2, 2}) +
               t(K::from_int(4), {1, 1, 1, 3}) +
               t(K::from_int(20) * a * a + K::from_int(14) * a - K::from_int(7), {3, 3}) +
               t(-(K::from_int(16) * a * a + K::from_int(18) * a + K::from_int(5)), {1, 5}) +
               t(K::from_int(16) * a * a * a + K::from_int(36) * a * a + K::from_int(16) * a -
                     K::from_int(2),
                 {6});
    case 4: // 4e2^3 - 4e1e2e3 + (7-4a)e3^2 + (1+4a)e1e5 + (2-4a-4a^2)e6
        return t(K::from_int(4), {2, 2, 2}) + t(K::from_int(-4), {1, 2, 3}) +
               t(K::from_int(7) - K::from_int(4) * a, {3, 3}) +
               t(K::from_int(1) + K::from_int(4) * a, {1, 5}) +
               t(K::from_int(2) - K::from_int(4) * a - K::from_int(4) * a * a, {6});
    case 5: // 4e2^3 + (7-14a)e3^2 - 4e1^2e4 + (5+14a)e1e5 + (2-16a-12a^2)e6
        return t(K::from_int(4), {2, 2, 2}) +
               t(K::from_int(7) - K::from_int(14) * a, {3, 3}) +
               t(K::from_int(-4), {1, 1, 4}) +
               t(K::from_int(5) + K::from_int(14) * a, {1, 5}) +
               t(K::from_int(2) - K::from_int(16) * a - K::from_int(12) * a * a, {6});
    default:
        throw DomainError("h_element: k must be 1..5");
    }
}

/// r_5, r_6, r_7 in the factored-through-e2 form.
template <typename K>
EnvElement<K> r_element(int k) {
    switch (k) {
    case 5: // e2(e1^3 - 6 e2e1 + 12 e1e2)
        return detail::env_comb<K>({{1, {2, 1, 1, 1}}, {-6, {2, 2, 1}}, {12, {2, 1, 2}}});
    case 6: // e2(-48 e4 - 36 e1e3 + e1^4)
        return detail::env_comb<K>({{-48, {2, 4}}, {-36, {2, 1, 3}}, {1, {2, 1, 1, 1, 1}}});
    case 7: // e2(e1^5 - 40(e2^2e1 - 3 e2e1e2 + 3 e1e2^2))
        return detail::env_comb<K>({{1, {2, 1, 1, 1, 1, 1}},
                                    {-40, {2, 2, 2, 1}},
                                    {120, {2, 2, 1, 2}},
                                    {-120, {2, 1, 2, 2}}});
    default:
        throw DomainError("r_element: k must be 5..7");
    }
}

/// The same elements written with e1 on the left (r_6 needs a 12g correction).
template <typename K>
EnvElement<K> r_element_alt(int k) {
    switch (k) {
    case 5: // e1(e1^2e2 - 3 e1e2e1 + 3 e2e1^2 + 6 e2^2)
        return detail::env_comb<K>(
            {{1, {1, 1, 1, 2}}, {-3, {1, 1, 2, 1}}, {3, {1, 2, 1, 1}}, {6, {1, 2, 2}}});
    case 6: // e1(-36 e2e3 - 18 e5 + 2 e4e1 - e3e1^2 + e2e1^3) + 12 g
        return detail::env_comb<K>({{-36, {1, 2, 3}},
                                    {-18, {1, 5}},
                                    {2, {1, 4, 1}},
                                    {-1, {1, 3, 1, 1}},
                                    {1, {1, 2, 1, 1, 1}}}) +
               g_element<K>().scaled(K::from_int(12));
    case 7: // e1(e1^4e2 - 5e1^3e2e1 + 10e1^2e2e1^2 - 10e1e2e1^3 + 5e2e1^4 - 40e2^3)
        return detail::env_comb<K>({{1, {1, 1, 1, 1, 1, 2}},
                                    {-5, {1, 1, 1, 1, 2, 1}},
                                    {10, {1, 1, 1, 2, 1, 1}},
                                    {-10, {1, 1, 2, 1, 1, 1}},
                                    {5, {1, 2, 1, 1, 1, 1}},
                                    {-40, {1, 2, 2, 2}}});
    default:
        throw DomainError("r_element_alt: k must be 5..7");
    }
}

/// The defining relations q_5, q_7 of U(W+) in the free algebra.
template <typename K>
FreeElement<K> q_relation(int k) {
    FreeElement<K> t1 = FreeElement<K>::letter(1);
    FreeElement<K> t2 = FreeElement<K>::letter(2);
    if (k == 5)
        return free_bracket(t1, free_bracket(t1, free_bracket(t1, t2))) +
               free_bracket(t2, free_bracket(t2, t1)).scaled(K::from_int(6));
    if (k == 7)
        return free_bracket(
                   t1, free_bracket(t1, free_bracket(t1, free_bracket(t1, free_bracket(t1, t2))))) +
               free_bracket(t2, free_bracket(t2, free_bracket(t2, t1))).scaled(K::from_int(40));
    throw DomainError("q_relation: k must be 5 or 7");
}

} // namespace witt

#endif
