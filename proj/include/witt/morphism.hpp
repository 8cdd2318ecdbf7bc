#ifndef WITT_MORPHISM_HPP
#define WITT_MORPHISM_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "witt/algebras.hpp"
#include "witt/envelope.hpp"
#include "witt/ratfunc.hpp"
#include "witt/twisted.hpp"

namespace witt {

// The graded algebra maps out of U(W+) (and U(W) after Laurent extension):
//   phi:      e_n -> (u - (n-1)w) v^{n-1}   into S
//   lambda_a: e_n -> (u - (n-1)a v) v^{n-1} into R

enum class MorphName { Lambda, Phi };

template <typename K>
class EnvMorphism {
public:
    EnvMorphism(MorphName name, const TwistedAlgebra<K>& target, Mode mode = Mode::WPlus,
                K parameter = K::zero())
        : name_(name), parameter_(std::move(parameter)), target_(&target), mode_(mode) {
        size_t need = name == MorphName::Phi ? 3 : 2;
        if (target.carrier()->nvars() < need)
            throw RingMismatch("EnvMorphism: target carrier has too few variables");
        if (mode == Mode::Witt && !target.carrier()->laurent[target.carrier()->var_index("y")])
            throw ModeError("EnvMorphism: WITT mode needs a target Laurent in v");
    }

    MorphName name() const { return name_; }
    const K& parameter() const { return parameter_; }
    const TwistedAlgebra<K>& target() const { return *target_; }
    Mode mode() const { return mode_; }

    Poly<K> gen_image(int n) const {
        if (mode_ == Mode::WPlus && n < 1)
            throw ModeError("EnvMorphism: index " + std::to_string(n) + " needs WITT mode");
        Poly<K> x = target_->var("x");
        Poly<K> y = target_->var("y");
        Poly<K> head = Poly<K>::zero(target_->carrier());
        if (name_ == MorphName::Phi)
            head = x - target_->var("z").scaled(K::from_int(n - 1));
        else
            head = x - y.scaled(parameter_ * K::from_int(n - 1));
        return head * y.pow(n - 1);
    }

private:
    MorphName name_;
    K parameter_;
    const TwistedAlgebra<K>* target_;
    Mode mode_;
};

template <typename K>
Poly<K> eval_morphism(const EnvMorphism<K>& m, const EnvElement<K>& f) {
    if (f.mode() != m.mode()) throw ModeError("eval_morphism: mode mismatch");
    Poly<K> out = Poly<K>::zero(m.target().carrier());
    for (const auto& [mono, c] : f.terms()) {
        std::vector<Poly<K>> factors;
        factors.reserve(mono.size());
        for (int n : mono) factors.push_back(m.gen_image(n));
        out = out + m.target().product_chain(factors).scaled(c);
    }
    return out;
}

/// Free-algebra inputs are routed through pi (t_i -> e_i) first.
template <typename K>
Poly<K> eval_morphism(const EnvMorphism<K>& m, const FreeElement<K>& f) {
    return eval_morphism(m, free_reduce_and_project(f));
}

template <typename K>
Vec<K> env_coeff_vector(const EnvElement<K>& f, const std::vector<PBWMonomial>& basis) {
    Vec<K> v(basis.size(), K::zero());
    size_t found = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        auto it = f.terms().find(basis[i]);
        if (it != f.terms().end()) {
            v[i] = it->second;
            ++found;
        }
    }
    if (found != f.terms().size())
        throw DomainError("env_coeff_vector: element not supported on the basis");
    return v;
}

template <typename K>
EnvElement<K> env_from_vector(const Vec<K>& v, const std::vector<PBWMonomial>& basis,
                              Mode mode = Mode::WPlus) {
    EnvElement<K> f(mode);
    for (size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], v[i]);
    return f;
}

inline std::vector<std::string> scalar_exclusion_factors(const Rational&) { return {}; }

/// Nonconstant factors of a pivot's numerator and denominator: linear factors
/// from rational roots plus whatever irrational part remains, as strings.
inline std::vector<std::string> scalar_exclusion_factors(const RatFunc& x) {
    std::vector<std::string> out;
    for (const UniPoly* p : {&x.num(), &x.den()}) {
        if (p->degree() < 1) continue;
        auto [roots, cofactor] = p->squarefree_part().rational_roots();
        for (const auto& r : roots) {
            UniPoly lin = UniPoly::variable().scaled(r.den()) - UniPoly(r.num());
            out.push_back(lin.str("a"));
        }
        if (cofactor.degree() >= 1) out.push_back(cofactor.str("a"));
    }
    return out;
}

template <typename K>
struct KernelReport {
    int degree = 0;
    std::vector<EnvElement<K>> basis;
    std::vector<std::string> excluded; // specializations the elimination divided by
    size_t dimension() const { return basis.size(); }
};

template <typename K>
KernelReport<K> kernel_at_degree(const EnvMorphism<K>& m, int n) {
    if (m.mode() != Mode::WPlus) throw ModeError("kernel_at_degree: WPLUS mode only");
    std::vector<PBWMonomial> ebasis = env_basis(n);
    std::vector<Monomial> monos = graded_monomials(*m.target().carrier(), n);
    Matrix<K> a(monos.size(), ebasis.size());
    for (size_t j = 0; j < ebasis.size(); ++j) {
        EnvElement<K> e(Mode::WPlus);
        e.add_term(ebasis[j], K::one());
        Vec<K> col = coeff_vector(eval_morphism(m, e), monos);
        for (size_t i = 0; i < monos.size(); ++i) a(i, j) = col[i];
    }
    auto ns = nullspace(a);
    KernelReport<K> rep;
    rep.degree = n;
    for (const auto& v : ns.basis) {
        EnvElement<K> f = env_from_vector(v, ebasis);
        if (!eval_morphism(m, f).is_zero())
            throw DomainError("kernel_at_degree: basis element fails re-verification");
        rep.basis.push_back(std::move(f));
    }
    for (const auto& piv : ns.pivots)
        for (auto& s : scalar_exclusion_factors(piv))
            if (std::find(rep.excluded.begin(), rep.excluded.end(), s) == rep.excluded.end())
                rep.excluded.push_back(std::move(s));
    std::sort(rep.excluded.begin(), rep.excluded.end());
    return rep;
}

/// Row-reduced span of U(W+) elements in PBW coordinates at a fixed degree.
template <typename K>
struct EnvSpan {
    int degree = 0;
    std::vector<PBWMonomial> monomials; // env_basis(degree)
    std::vector<Vec<K>> basis;          // canonical reduced echelon form

    size_t dim() const { return basis.size(); }
    bool contains(const EnvElement<K>& f) const {
        if (f.is_zero()) return true;
        return in_span(basis, env_coeff_vector(f, monomials));
    }
    std::vector<EnvElement<K>> elements() const {
        std::vector<EnvElement<K>> out;
        for (const auto& v : basis) out.push_back(env_from_vector(v, monomials));
        return out;
    }
    friend bool operator==(const EnvSpan& a, const EnvSpan& b) {
        return a.degree == b.degree && a.basis == b.basis;
    }
};

template <typename K>
EnvSpan<K> env_span(int degree, const std::vector<EnvElement<K>>& elements) {
    EnvSpan<K> s;
    s.degree = degree;
    s.monomials = env_basis(degree);
    std::vector<Vec<K>> vecs;
    for (const auto& f : elements) {
        if (f.is_zero()) continue;
        if (!f.is_homogeneous() || f.degree() != degree)
            throw DomainError("env_span: element not homogeneous of the span degree");
        vecs.push_back(env_coeff_vector(f, s.monomials));
    }
    s.basis = row_reduce(vecs);
    return s;
}

/// Degree-n piece of the two-sided ideal generated by homogeneous elements.
template <typename K>
EnvSpan<K> ideal_graded_piece(const std::vector<EnvElement<K>>& generators, int n) {
    std::vector<EnvElement<K>> prods;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw DomainError("ideal_graded_piece: inhomogeneous generator");
        if (g.mode() != Mode::WPlus) throw ModeError("ideal_graded_piece: WPLUS mode only");
        int d = g.degree();
        if (d > n) continue;
        for (int i = 0; i + d <= n; ++i) {
            int j = n - d - i;
            std::vector<PBWMonomial> left =
                i == 0 ? std::vector<PBWMonomial>{{}} : env_basis(i);
            std::vector<PBWMonomial> right =
                j == 0 ? std::vector<PBWMonomial>{{}} : env_basis(j);
            for (const auto& lm : left)
                for (const auto& rm : right) {
                    EnvElement<K> l(Mode::WPlus), r(Mode::WPlus);
                    l.add_term(lm, K::one());
                    r.add_term(rm, K::one());
                    prods.push_back(env_mul(env_mul(l, g), r));
                }
        }
    }
    return env_span(n, prods);
}

/// Lift of a homogeneous target element through (morphism o pi) into the free
/// algebra, solving over free_word_basis(n) with free variables set to zero.
template <typename K>
std::optional<FreeElement<K>> preimage_lift(const EnvMorphism<K>& m, const Poly<K>& target,
                                            int n) {
    if (!target.is_zero() && (!target.is_homogeneous() || target.degree() != n))
        throw DomainError("preimage_lift: target not homogeneous of the requested degree");
    std::vector<FreeWord> words = free_word_basis(n);
    std::vector<Monomial> monos = graded_monomials(*m.target().carrier(), n);
    Matrix<K> a(monos.size(), words.size());
    for (size_t j = 0; j < words.size(); ++j) {
        std::vector<Poly<K>> factors;
        for (int letter : words[j]) factors.push_back(m.gen_image(letter));
        Vec<K> col = coeff_vector(m.target().product_chain(factors), monos);
        for (size_t i = 0; i < monos.size(); ++i) a(i, j) = col[i];
    }
    auto x = solve(a, coeff_vector(target, monos));
    if (!x) return std::nullopt;
    FreeElement<K> lift;
    for (size_t j = 0; j < words.size(); ++j) lift.add_term(words[j], (*x)[j]);
    if (eval_morphism(m, lift) != target)
        throw DomainError("preimage_lift: lift fails re-verification");
    return lift;
}

/// Prop-A.1-style presentation step: each syzygy (b1, b2) with
/// g1*b1 + g2*b2 = 0 (g_i the images of t_i, twisted products) yields the
/// relation q = t1*lift(b1) + t2*lift(b2).
template <typename K>
std::vector<FreeElement<K>> presentation_from_syzygies(
    const EnvMorphism<K>& m, const std::vector<std::pair<Poly<K>, Poly<K>>>& syzygies,
    const std::vector<std::pair<FreeElement<K>, FreeElement<K>>>* lifts = nullptr) {
    Poly<K> g1 = m.gen_image(1), g2 = m.gen_image(2);
    std::vector<FreeElement<K>> out;
    for (size_t k = 0; k < syzygies.size(); ++k) {
        const auto& [b1, b2] = syzygies[k];
        if (!(m.target().mul(g1, b1) + m.target().mul(g2, b2)).is_zero())
            throw InvalidSyzygy("presentation_from_syzygies: vector is not a syzygy");
        FreeElement<K> l1, l2;
        if (lifts) {
            l1 = (*lifts)[k].first;
            l2 = (*lifts)[k].second;
            if (eval_morphism(m, l1) != b1 || eval_morphism(m, l2) != b2)
                throw InvalidSyzygy("presentation_from_syzygies: supplied lift is wrong");
        } else {
            auto o1 = preimage_lift(m, b1, b1.is_zero() ? 0 : b1.degree());
            auto o2 = preimage_lift(m, b2, b2.is_zero() ? 0 : b2.degree());
            if (!o1 || !o2)
                throw InvalidSyzygy("presentation_from_syzygies: component not liftable");
            l1 = *o1;
            l2 = *o2;
        }
        out.push_back(FreeElement<K>::letter(1) * l1 + FreeElement<K>::letter(2) * l2);
    }
    return out;
}

template <typename K>
bool membership(const Poly<K>& f, const GradedSpan<K>& span) {
    if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != span.degree))
        throw DomainError("membership: degree mismatch");
    return span.contains(f);
}

/// v^3w - v^2w^2, the normal element p = phi(e1 e3 - e2^2 - e4).
template <typename K>
Poly<K> p_element(const TwistedAlgebra<K>& s_like) {
    Poly<K> y = s_like.var("y"), z = s_like.var("z");
    return y.pow(3) * z - y.pow(2) * z.pow(2);
}

/// lambda_0(e_n) * u = u * lambda_1(e_n) in R (conjugation identity in
/// polynomial form, no inverses needed).
template <typename K>
bool conj_lambda_check(const TwistedAlgebra<K>& r_like, int n) {
    Mode mode = n >= 1 ? Mode::WPlus : Mode::Witt;
    EnvMorphism<K> l0(MorphName::Lambda, r_like, mode, K::zero());
    EnvMorphism<K> l1(MorphName::Lambda, r_like, mode, K::one());
    Poly<K> u = r_like.var("x");
    return r_like.mul(l0.gen_image(n), u) == r_like.mul(u, l1.gen_image(n));
}

/// [phihat(e_n), w^j p] = (j+4) v^n w^j p in Shat.
template <typename K>
bool ad_wjp_check(const TwistedAlgebra<K>& shat, int n, int j) {
    if (j < 0) throw DomainError("ad_wjp_check: j must be >= 0");
    EnvMorphism<K> phihat(MorphName::Phi, shat, Mode::Witt);
    std::vector<Poly<K>> factors(j, shat.var("z"));
    factors.push_back(p_element(shat));
    Poly<K> wjp = shat.product_chain(factors);
    Poly<K> img = phihat.gen_image(n);
    Poly<K> lhs = shat.mul(img, wjp) - shat.mul(wjp, img);
    Poly<K> rhs = (shat.var("y").pow(n) * wjp).scaled(K::from_int(j + 4));
    return lhs == rhs;
}

/// (phihat(e1) - phihat(e2) * v^{-1}) * w^j p = w^{j+1} p in Shat.
template <typename K>
bool shift_wjp_check(const TwistedAlgebra<K>& shat, int j) {
    if (j < 0) throw DomainError("shift_wjp_check: j must be >= 0");
    EnvMorphism<K> phihat(MorphName::Phi, shat, Mode::Witt);
    Poly<K> vinv = shat.var("y").pow(-1);
    Poly<K> op = phihat.gen_image(1) - shat.mul(phihat.gen_image(2), vinv);
    std::vector<Poly<K>> factors(j, shat.var("z"));
    factors.push_back(p_element(shat));
    Poly<K> wjp = shat.product_chain(factors);
    std::vector<Poly<K>> factors1(j + 1, shat.var("z"));
    factors1.push_back(p_element(shat));
    return shat.mul(op, wjp) == shat.product_chain(factors1);
}

template <typename K>
bool laurent_identity_check(const std::string& identity, const TwistedAlgebra<K>& alg, int n,
                            int j = 0) {
    if (identity == "conj_lambda") return conj_lambda_check(alg, n);
    if (identity == "ad_wjp") return ad_wjp_check(alg, n, j);
    if (identity == "shift_wjp") return shift_wjp_check(alg, j);
    throw DomainError("laurent_identity_check: unknown identity " + identity);
}

} // namespace witt

#endif
