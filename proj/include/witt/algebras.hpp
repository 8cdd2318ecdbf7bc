#ifndef WITT_ALGEBRAS_HPP
#define WITT_ALGEBRAS_HPP

#include "witt/twisted.hpp"

namespace witt {

// The algebras of interest, realized as Zhang twists of commutative carriers:
//   S = k[x,y,z]^mu with mu: x -> x-y, y -> y, z -> z   (u,v,w = x,y,z)
//   R = k[x,y]^nu   with nu: x -> x-y, y -> y           (u,v = x,y, Jordan plane)
//   Q = subalgebra of S generated by u, v, vw; monomial test z-exp <= y-exp
//   Shat, Rhat: the same with v = y inverted (Laurent in y)

template <typename K>
RingMap<K> shift_map(const RingPtr& ring, const std::vector<std::string>& shifted, int dir) {
    std::vector<Poly<K>> imgs;
    Poly<K> y = Poly<K>::var(ring, "y");
    for (const auto& name : ring->vars) {
        Poly<K> x = Poly<K>::var(ring, name);
        bool sh = false;
        for (const auto& s : shifted) sh = sh || (s == name);
        imgs.push_back(sh ? (dir > 0 ? x - y : x + y) : x);
    }
    return RingMap<K>{ring, ring, imgs};
}

template <typename K>
TwistedAlgebra<K> make_S(bool laurent_v = false) {
    RingPtr ring = PolyRing::make({"x", "y", "z"}, {false, laurent_v, false});
    auto mu = shift_map<K>(ring, {"x"}, +1);
    auto mu_inv = shift_map<K>(ring, {"x"}, -1);
    std::vector<std::pair<std::string, Poly<K>>> gens = {
        {"u", Poly<K>::var(ring, "x")},
        {"v", Poly<K>::var(ring, "y")},
        {"w", Poly<K>::var(ring, "z")}};
    return TwistedAlgebra<K>(laurent_v ? "Shat" : "S", ring, mu, mu_inv, gens);
}

template <typename K>
TwistedAlgebra<K> make_R(bool laurent_v = false) {
    RingPtr ring = PolyRing::make({"x", "y"}, {false, laurent_v});
    auto nu = shift_map<K>(ring, {"x"}, +1);
    auto nu_inv = shift_map<K>(ring, {"x"}, -1);
    std::vector<std::pair<std::string, Poly<K>>> gens = {
        {"u", Poly<K>::var(ring, "x")}, {"v", Poly<K>::var(ring, "y")}};
    return TwistedAlgebra<K>(laurent_v ? "Rhat" : "R", ring, nu, nu_inv, gens);
}

/// Monomial membership test for Q = k[x, y, yz] inside k[x,y,z].
inline bool q_membership(const Monomial& m) { return m[2] <= m[1]; }

/// Q as a restricted twisted algebra sharing S's carrier.
template <typename K>
TwistedAlgebra<K> make_Q(const TwistedAlgebra<K>& S) {
    RingPtr ring = S.carrier();
    auto mu = shift_map<K>(ring, {"x"}, +1);
    auto mu_inv = shift_map<K>(ring, {"x"}, -1);
    Poly<K> y = Poly<K>::var(ring, "y"), z = Poly<K>::var(ring, "z");
    std::vector<std::pair<std::string, Poly<K>>> gens = {
        {"u", Poly<K>::var(ring, "x")}, {"v", y}, {"vw", y * z}};
    return TwistedAlgebra<K>("Q", ring, mu, mu_inv, gens, q_membership);
}

/// Generators of Q as elements of S's carrier.
template <typename K>
std::vector<Poly<K>> q_generators(const TwistedAlgebra<K>& S) {
    Poly<K> y = S.var("y");
    return {S.var("x"), y, y * S.var("z")};
}

/// Generators of B = phi(U(W+)): u and uv - vw.
template <typename K>
std::vector<Poly<K>> b_generators(const TwistedAlgebra<K>& S) {
    Poly<K> x = S.var("x"), y = S.var("y"), z = S.var("z");
    return {x, x * y - y * z};
}

} // namespace witt

#endif
