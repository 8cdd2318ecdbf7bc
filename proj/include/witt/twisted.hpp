#ifndef WITT_TWISTED_HPP
#define WITT_TWISTED_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "witt/poly.hpp"

namespace witt {

/// A commutative graded carrier ring together with a degree-preserving
/// automorphism; multiplication is the Zhang-twisted product
/// f * g = f . twist^deg(f)(g), extended bilinearly over homogeneous parts.
template <typename K>
class TwistedAlgebra {
public:
    TwistedAlgebra(std::string name, RingPtr carrier, RingMap<K> twist, RingMap<K> twist_inv,
                   std::vector<std::pair<std::string, Poly<K>>> generators,
                   std::function<bool(const Monomial&)> restriction = nullptr)
        : name_(std::move(name)),
          carrier_(std::move(carrier)),
          twist_(std::move(twist)),
          twist_inv_(std::move(twist_inv)),
          generators_(std::move(generators)),
          restriction_(std::move(restriction)) {
        // twist must be invertible: check round trips on the variables
        for (size_t i = 0; i < carrier_->nvars(); ++i) {
            Poly<K> x = Poly<K>::var(carrier_, carrier_->vars[i]);
            if (twist_inv_.apply(twist_.apply(x)) != x)
                throw RingMismatch("TwistedAlgebra: twist_inv is not the inverse of twist");
            if (!twist_.apply(x).is_homogeneous() ||
                twist_.apply(x).degree() != mono_degree(*carrier_, x.terms().begin()->first))
                throw RingMismatch("TwistedAlgebra: twist is not degree-preserving");
        }
        if (restriction_) {
            // the twist must map the restricted subring into itself
            for (const auto& [gname, g] : generators_) {
                Poly<K> img = twist_.apply(g);
                for (const auto& [m, c] : img.terms())
                    if (!restriction_(m))
                        throw RingMismatch(
                            "TwistedAlgebra: twist does not preserve the restricted subring");
            }
        }
        pow_cache_[0] = identity_map();
        pow_cache_[1] = twist_;
        pow_cache_[-1] = twist_inv_;
    }

    const std::string& name() const { return name_; }
    const RingPtr& carrier() const { return carrier_; }
    const std::vector<std::pair<std::string, Poly<K>>>& generators() const { return generators_; }
    const std::function<bool(const Monomial&)>& restriction() const { return restriction_; }

    Poly<K> var(const std::string& name) const { return Poly<K>::var(carrier_, name); }
    Poly<K> constant(const K& c) const { return Poly<K>::constant(carrier_, c); }
    Poly<K> one() const { return constant(K::one()); }

    const RingMap<K>& twist_pow(int i) const {
        auto it = pow_cache_.find(i);
        if (it != pow_cache_.end()) return it->second;
        const RingMap<K>& step = (i > 0) ? twist_ : twist_inv_;
        const RingMap<K>& prev = twist_pow(i > 0 ? i - 1 : i + 1);
        return pow_cache_.emplace(i, step.compose_after(prev)).first->second;
    }

    /// Zhang-twisted product.
    Poly<K> mul(const Poly<K>& f, const Poly<K>& g) const {
        check(f);
        check(g);
        Poly<K> r = Poly<K>::zero(carrier_);
        for (const auto& [d, fd] : f.homogeneous_components())
            r = r + fd * twist_pow(d).apply(g);
        return r;
    }

    /// Left-to-right twisted product of homogeneous factors; empty chain is 1.
    Poly<K> product_chain(const std::vector<Poly<K>>& factors) const {
        Poly<K> acc = one();
        int deg = 0;
        for (const auto& f : factors) {
            check(f);
            if (f.is_zero()) return Poly<K>::zero(carrier_);
            if (!f.is_homogeneous())
                throw DomainError("product_chain: factors must be homogeneous");
            acc = acc * twist_pow(deg).apply(f);
            deg += f.degree();
        }
        return acc;
    }

    bool in_restricted_subring(const Poly<K>& f) const {
        if (!restriction_) return true;
        for (const auto& [m, c] : f.terms())
            if (!restriction_(m)) return false;
        return true;
    }

    /// Degree-n monomial basis of the carrier (restricted if applicable).
    const std::vector<Monomial>& degree_basis(int n) const {
        auto it = basis_cache_.find(n);
        if (it != basis_cache_.end()) return it->second;
        for (bool fl : carrier_->laurent)
            if (fl)
                throw DomainError("TwistedAlgebra: graded pieces of a Laurent carrier are "
                                  "infinite-dimensional");
        return basis_cache_.emplace(n, graded_monomials(*carrier_, n, restriction_)).first->second;
    }

    mutable std::map<std::pair<std::string, int>, std::vector<Vec<K>>> span_cache;

private:
    RingMap<K> identity_map() const {
        std::vector<Poly<K>> imgs;
        for (const auto& v : carrier_->vars) imgs.push_back(Poly<K>::var(carrier_, v));
        return RingMap<K>{carrier_, carrier_, imgs};
    }
    void check(const Poly<K>& f) const {
        if (f.ring() != carrier_) throw RingMismatch("TwistedAlgebra: element of another ring");
    }

    std::string name_;
    RingPtr carrier_;
    RingMap<K> twist_;
    RingMap<K> twist_inv_;
    std::vector<std::pair<std::string, Poly<K>>> generators_;
    std::function<bool(const Monomial&)> restriction_;
    mutable std::map<int, RingMap<K>> pow_cache_;
    mutable std::map<int, std::vector<Monomial>> basis_cache_;
};

/// A degree label plus a row-reduced basis of a subspace of the degree-n
/// graded piece, in coordinates over the carrier's degree-n monomial basis.
template <typename K>
struct GradedSpan {
    const TwistedAlgebra<K>* algebra;
    int degree;
    std::vector<Vec<K>> basis;

    size_t dim() const { return basis.size(); }
    std::vector<Poly<K>> elements() const {
        std::vector<Poly<K>> out;
        const auto& monos = algebra->degree_basis(degree);
        for (const auto& v : basis)
            out.push_back(from_coeff_vector(algebra->carrier(), monos, v));
        return out;
    }
    bool contains(const Poly<K>& f) const {
        if (f.is_zero()) return true;
        if (!f.is_homogeneous() || f.degree() != degree)
            throw DomainError("GradedSpan: degree mismatch");
        return in_span(basis, coeff_vector(f, algebra->degree_basis(degree)));
    }
};

template <typename K>
GradedSpan<K> make_span(const TwistedAlgebra<K>& alg, int degree,
                        const std::vector<Poly<K>>& elements) {
    std::vector<Vec<K>> vecs;
    const auto& monos = alg.degree_basis(degree);
    for (const auto& f : elements) {
        if (f.is_zero()) continue;
        if (!f.is_homogeneous() || f.degree() != degree)
            throw DomainError("make_span: inhomogeneous element");
        vecs.push_back(coeff_vector(f, monos));
    }
    return GradedSpan<K>{&alg, degree, row_reduce(vecs)};
}

namespace detail {
template <typename K>
std::string gens_key(const std::vector<Poly<K>>& gens) {
    std::string s;
    for (const auto& g : gens) s += g.str() + "|";
    return s;
}
} // namespace detail

/// Degree-n piece of the unital subalgebra generated by homogeneous elements
/// of positive degree: A_0 = k, A_n = sum_g g * A_{n - deg g}.  Memoized.
template <typename K>
GradedSpan<K> span_generated(const TwistedAlgebra<K>& alg, const std::vector<Poly<K>>& gens,
                             int n) {
    std::string key = detail::gens_key(gens);
    auto compute = [&](auto&& self, int d) -> const std::vector<Vec<K>>& {
        auto ck = std::make_pair(key, d);
        auto it = alg.span_cache.find(ck);
        if (it != alg.span_cache.end()) return it->second;
        std::vector<Vec<K>> vecs;
        const auto& monos = alg.degree_basis(d);
        if (d == 0) {
            vecs.push_back(Vec<K>(monos.size(), K::one())); // span of 1
        } else {
            for (const auto& g : gens) {
                if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1)
                    throw DomainError("span_generated: generators must be homogeneous of "
                                      "positive degree");
                int gd = g.degree();
                if (gd > d) continue;
                const auto& sub = self(self, d - gd);
                const auto& smonos = alg.degree_basis(d - gd);
                for (const auto& bv : sub) {
                    Poly<K> b = from_coeff_vector(alg.carrier(), smonos, bv);
                    Poly<K> prod = alg.mul(g, b);
                    if (!prod.is_zero()) vecs.push_back(coeff_vector(prod, monos));
                }
            }
            vecs = row_reduce(vecs);
        }
        return alg.span_cache.emplace(ck, std::move(vecs)).first->second;
    };
    return GradedSpan<K>{&alg, n, compute(compute, n)};
}

template <typename K>
GradedSpan<K> graded_intersection(const GradedSpan<K>& a, const GradedSpan<K>& b) {
    if (a.algebra != b.algebra || a.degree != b.degree)
        throw DomainError("graded_intersection: algebra/degree mismatch");
    return GradedSpan<K>{a.algebra, a.degree, span_intersection(a.basis, b.basis)};
}

enum class Side { Left, Right, TwoSided };

/// Degree-n piece of the module generated by the given homogeneous elements
/// over the subalgebra spanned by `over` (empty = the full algebra's carrier
/// graded pieces, which for our twisted algebras equal the algebra itself).
template <typename K>
GradedSpan<K> module_piece(const TwistedAlgebra<K>& alg,
                           const std::vector<std::pair<Poly<K>, Side>>& generators,
                           const std::vector<Poly<K>>& over, int n) {
    const auto& monos = alg.degree_basis(n);
    std::vector<Vec<K>> vecs;
    auto coeff_basis = [&](int d) -> std::vector<Poly<K>> {
        if (d < 0) return {};
        if (!over.empty()) return span_generated(alg, over, d).elements();
        std::vector<Poly<K>> out;
        for (const auto& m : alg.degree_basis(d))
            out.push_back(Poly<K>::term(alg.carrier(), m, K::one()));
        return out;
    };
    for (const auto& [g, side] : generators) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw DomainError("module_piece: inhomogeneous generator");
        int gd = g.degree();
        if (gd > n) continue;
        if (side == Side::Right) {
            for (const auto& c : coeff_basis(n - gd)) {
                Poly<K> prod = alg.mul(g, c);
                if (!prod.is_zero()) vecs.push_back(coeff_vector(prod, monos));
            }
        } else if (side == Side::Left) {
            for (const auto& c : coeff_basis(n - gd)) {
                Poly<K> prod = alg.mul(c, g);
                if (!prod.is_zero()) vecs.push_back(coeff_vector(prod, monos));
            }
        } else {
            for (int i = 0; i + gd <= n; ++i) {
                int j = n - gd - i;
                for (const auto& l : coeff_basis(i))
                    for (const auto& r : coeff_basis(j)) {
                        Poly<K> prod = alg.mul(alg.mul(l, g), r);
                        if (!prod.is_zero()) vecs.push_back(coeff_vector(prod, monos));
                    }
            }
        }
    }
    return GradedSpan<K>{&alg, n, row_reduce(vecs)};
}

template <typename K>
struct NormalityResult {
    bool normal = false;
    std::vector<std::pair<std::string, Poly<K>>> companions;
    std::string failed_generator;
};

/// Certify normality: for each algebra generator x, solve x * h = h * c for a
/// homogeneous companion c of the same degree as x.
template <typename K>
NormalityResult<K> is_normal(const TwistedAlgebra<K>& alg, const Poly<K>& h) {
    if (h.is_zero() || !h.is_homogeneous())
        throw DomainError("is_normal: h must be nonzero homogeneous");
    NormalityResult<K> res;
    int hd = h.degree();
    for (const auto& [gname, g] : alg.generators()) {
        int gd = g.degree();
        const auto& target_monos = alg.degree_basis(gd + hd);
        // candidate companions range over the degree-gd piece (restricted if applicable)
        const auto& cand = alg.degree_basis(gd);
        Matrix<K> m(target_monos.size(), cand.size());
        for (size_t j = 0; j < cand.size(); ++j) {
            Poly<K> col =
                alg.mul(h, Poly<K>::term(alg.carrier(), cand[j], K::one()));
            Vec<K> cv = coeff_vector(col, target_monos);
            for (size_t i = 0; i < cv.size(); ++i) m(i, j) = cv[i];
        }
        Vec<K> rhs = coeff_vector(alg.mul(g, h), target_monos);
        auto sol = solve(m, rhs);
        if (!sol) {
            res.normal = false;
            res.failed_generator = gname;
            return res;
        }
        Poly<K> comp = Poly<K>::zero(alg.carrier());
        for (size_t j = 0; j < cand.size(); ++j)
            if (!(*sol)[j].is_zero()) comp.add_term(cand[j], (*sol)[j]);
        res.companions.emplace_back(gname, comp);
    }
    res.normal = true;
    return res;
}

} // namespace witt

#endif
