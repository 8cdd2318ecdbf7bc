#include <array>

#include "claims_common.hpp"

// Claims about U(W+), the presentation, and the maps lambda_a: kernels,
// images, and the appendix linear algebra (Routine A.1, Claims A.1, A.3).

namespace witt {
namespace {

using K = Rational;
using F = RatFunc;
using claims::apoly;
using claims::yesno;

const std::array<int, 9> PARTITIONS = {1, 1, 2, 3, 5, 7, 11, 15, 22}; // p(0)..p(8)

template <typename KK>
EnvSpan<KK> kernel_span(const EnvMorphism<KK>& m, int n) {
    return env_span(n, kernel_at_degree(m, n).basis);
}

void claim_lemma_1_1(ClaimContext& ctx) {
    auto q5 = q_relation<K>(5);
    auto q7 = q_relation<K>(7);
    ctx.require(!q5.is_zero() && q5.degree() == 5, "q5 nonzero of degree 5", "degree 5",
                q5.is_zero() ? "0" : std::to_string(q5.degree()));
    ctx.require(!q7.is_zero() && q7.degree() == 7, "q7 nonzero of degree 7", "degree 7",
                q7.is_zero() ? "0" : std::to_string(q7.degree()));
    auto p5 = free_reduce_and_project(q5);
    auto p7 = free_reduce_and_project(q7);
    ctx.require(p5.is_zero(), "pi(q5)", "0", p5.str());
    ctx.require(p7.is_zero(), "pi(q7)", "0", p7.str());
}

void claim_lemma_1_4(ClaimContext& ctx) {
    int N = ctx.cutoff(12);
    auto S = make_S<K>();
    EnvMorphism<K> phi(MorphName::Phi, S);
    auto R = make_R<F>();
    EnvMorphism<F> lam(MorphName::Lambda, R, Mode::WPlus, F::param());
    int bad = 0, total = 0;
    for (int n = 1; n < N; ++n)
        for (int m = n + 1; n + m <= N; ++m) {
            ++total;
            Poly<K> ps = S.mul(phi.gen_image(n), phi.gen_image(m)) -
                         S.mul(phi.gen_image(m), phi.gen_image(n));
            if (ps != phi.gen_image(n + m).scaled(K::from_int(m - n))) ++bad;
            Poly<F> pr = R.mul(lam.gen_image(n), lam.gen_image(m)) -
                         R.mul(lam.gen_image(m), lam.gen_image(n));
            if (pr != lam.gen_image(n + m).scaled(F::from_int(m - n))) ++bad;
        }
    ctx.require(bad == 0,
                "[f(e_n), f(e_m)] = (m-n) f(e_{n+m}) for f = phi and f = lambda_a, n+m <= " +
                    std::to_string(N),
                "0 failures of " + std::to_string(2 * total), std::to_string(bad) + " failures");
}

void claim_prop_2_1(ClaimContext& ctx) {
    auto Rq = make_R<K>();
    EnvMorphism<K> l0(MorphName::Lambda, Rq, Mode::WPlus, K::zero());
    EnvMorphism<K> l1(MorphName::Lambda, Rq, Mode::WPlus, K::one());
    Poly<K> x = Rq.var("x"), y = Rq.var("y");
    ctx.require(l0.gen_image(1) == x && l1.gen_image(1) == x, "lambda_0(e1) = lambda_1(e1) = u",
                "x", l0.gen_image(1).str());
    ctx.require(l0.gen_image(2) == Rq.mul(x, y), "lambda_0(e2) = uv", (Rq.mul(x, y)).str(),
                l0.gen_image(2).str());
    ctx.require(l1.gen_image(2) == Rq.mul(y, x), "lambda_1(e2) = (u-v)v = vu", Rq.mul(y, x).str(),
                l1.gen_image(2).str());

    // A(0) = k + uR and A(1) = k + Ru, degree by degree
    int N = ctx.cutoff(8);
    std::vector<Poly<K>> g0 = {l0.gen_image(1), l0.gen_image(2)};
    std::vector<Poly<K>> g1 = {l1.gen_image(1), l1.gen_image(2)};
    bool id0 = true, id1 = true;
    for (int n = 1; n <= N; ++n) {
        std::vector<Poly<K>> uR, Ru;
        for (const auto& m : Rq.degree_basis(n - 1)) {
            Poly<K> f = Poly<K>::term(Rq.carrier(), m, K::one());
            uR.push_back(Rq.mul(x, f));
            Ru.push_back(Rq.mul(f, x));
        }
        id0 = id0 && span_generated(Rq, g0, n).basis == make_span(Rq, n, uR).basis;
        id1 = id1 && span_generated(Rq, g1, n).basis == make_span(Rq, n, Ru).basis;
    }
    ctx.require(id0, "A(0)_n = (uR)_n for 1 <= n <= " + std::to_string(N), "true", yesno(id0));
    ctx.require(id1, "A(1)_n = (Ru)_n for 1 <= n <= " + std::to_string(N), "true", yesno(id1));

    // the five degree-4 images over Q(a), against the displayed factored forms
    auto R = make_R<F>();
    F a = F::param(), one = F::one();
    EnvMorphism<F> lam(MorphName::Lambda, R, Mode::WPlus, a);
    Poly<F> X = R.var("x"), Y = R.var("y");
    auto img = [&](int n) { return lam.gen_image(n); };
    auto lin = [&](const F& c) { return X - Y.scaled(c); };
    std::vector<std::vector<int>> words = {{1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {2, 2}};
    std::vector<Poly<F>> expected = {
        X * lin(one) * lin(apoly({2})) * lin(apoly({3})),
        X * lin(one) * lin(apoly({2, 1})) * Y,
        X * lin(apoly({1, 1})) * Y * lin(apoly({3})),
        lin(a) * Y * lin(apoly({2})) * lin(apoly({3})),
        lin(a) * Y * lin(apoly({2, 1})) * Y};
    std::vector<Vec<F>> rows;
    auto monos = R.degree_basis(4);
    for (size_t i = 0; i < words.size(); ++i) {
        std::vector<Poly<F>> factors;
        for (int l : words[i]) factors.push_back(img(l));
        Poly<F> got = R.product_chain(factors);
        ctx.require(got == expected[i], "lambda_a image of word " + std::to_string(i + 1),
                    expected[i].str(), got.str());
        rows.push_back(coeff_vector(got, monos));
    }
    size_t rk = row_reduce(rows).size();
    ctx.require(rk == 5, "r_1..r_5 independent for generic a", "rank 5",
                "rank " + std::to_string(rk));
    for (long a0 : {0L, 1L}) {
        auto Rs = make_R<K>();
        EnvMorphism<K> ls(MorphName::Lambda, Rs, Mode::WPlus, K::from_int(a0));
        std::vector<Vec<K>> rs;
        for (const auto& w : words) {
            std::vector<Poly<K>> factors;
            for (int l : w) factors.push_back(ls.gen_image(l));
            rs.push_back(coeff_vector(Rs.product_chain(factors), Rs.degree_basis(4)));
        }
        size_t r0 = row_reduce(rs).size();
        ctx.require(r0 < 5, "r_1..r_5 dependent at a = " + std::to_string(a0), "rank < 5",
                    "rank " + std::to_string(r0));
    }
}

void claim_lemma_2_4(ClaimContext& ctx) {
    auto R = make_R<K>();
    EnvMorphism<K> l0(MorphName::Lambda, R, Mode::WPlus, K::zero());
    Poly<K> u = R.var("x"), v = R.var("y");
    Poly<K> u2v = u + v.scaled(K::from_int(2));
    std::vector<std::pair<Poly<K>, Poly<K>>> syz = {
        {R.product_chain({u, u, v}), -R.mul(u, u2v)},
        {R.product_chain({u, u, v, v}), -R.product_chain({u, u2v, v})}};
    auto t1 = FreeElement<K>::letter(1), t2 = FreeElement<K>::letter(2);
    std::vector<std::pair<FreeElement<K>, FreeElement<K>>> lifts = {
        {t1 * t2, -(t1 * t1) - t2.scaled(K::from_int(2))},
        {t1 * t1 * t2 - t1 * t2 * t1, (t2 * t1).scaled(K::from_int(2)) - (t1 * t2).scaled(K::from_int(3))}};
    auto qs = presentation_from_syzygies(l0, syz, &lifts);
    FreeElement<K> q = parse_free<K>("t1^2*t2 - t2*t1^2 - 2*t2^2");
    FreeElement<K> q2 = parse_free<K>("t1^3*t2 - t1^2*t2*t1 + 2*t2^2*t1 - 3*t2*t1*t2");
    ctx.require(qs.size() == 2 && qs[0] == q, "q_1 from the first syzygy", q.str(), qs[0].str());
    ctx.require(qs[1] == q2, "q_2 from the second syzygy", q2.str(), qs[1].str());

    // automatic lifts (free variables zero) also land in ker pi_0
    auto qs_auto = presentation_from_syzygies(l0, syz);
    bool killed = true;
    for (const auto& rel : qs_auto) killed = killed && eval_morphism(l0, rel).is_zero();
    ctx.require(killed, "pi_0 kills the relations from computed lifts", "0", yesno(killed));

    FreeElement<K> qp = parse_free<K>(
        "t1^3*t2 - 3*t1^2*t2*t1 + 3*t1*t2*t1^2 - t2*t1^3 + 6*t2^2*t1 - 12*t2*t1*t2 + 6*t1*t2^2");
    FreeElement<K> lhs = qp - qs[1].scaled(K::from_int(4));
    FreeElement<K> rhs = (t1 * q).scaled(K::from_int(-3)) + q * t1;
    ctx.require(lhs == rhs, "q' - 4 q_2 = -3 t1 q + q t1, hence in (q)", rhs.str(), lhs.str());

    auto piq = free_reduce_and_project(q);
    auto g4 = g4_element<K>().scaled(K::from_int(2));
    ctx.require(piq == g4, "pi(q) = 2(e1e3 - e2^2 - e4)", g4.str(), piq.str());
    auto piqp = free_reduce_and_project(qp);
    ctx.require(piqp.is_zero(), "pi(q')", "0", piqp.str());
}

void claim_lemma_2_6(ClaimContext& ctx) {
    auto R = make_R<K>();
    int N = ctx.cutoff(8);
    bool all = true;
    for (int n = 1; n <= N; ++n) all = all && conj_lambda_check(R, n);
    ctx.require(all, "lambda_0(e_n) u = u lambda_1(e_n) for n <= " + std::to_string(N), "true",
                yesno(all));
}

void claim_prop_2_5(ClaimContext& ctx) {
    auto R = make_R<K>();
    EnvMorphism<K> l0(MorphName::Lambda, R, Mode::WPlus, K::zero());
    EnvMorphism<K> l1(MorphName::Lambda, R, Mode::WPlus, K::one());
    auto g4 = g4_element<K>();
    Poly<K> i0 = eval_morphism(l0, g4), i1 = eval_morphism(l1, g4);
    ctx.require(i0.is_zero(), "lambda_0(e1e3 - e2^2 - e4)", "0", i0.str());
    ctx.require(i1.is_zero(), "lambda_1(e1e3 - e2^2 - e4)", "0", i1.str());
    int N = ctx.cutoff(10);
    for (int n = 4; n <= N; ++n) {
        auto ideal = ideal_graded_piece<K>({g4}, n);
        auto k0 = kernel_span(l0, n);
        auto k1 = kernel_span(l1, n);
        ctx.require(ideal == k0,
                    "(e1e3-e2^2-e4)_" + std::to_string(n) + " = (ker lambda_0)_" + std::to_string(n),
                    "dim " + std::to_string(k0.dim()), "dim " + std::to_string(ideal.dim()));
        ctx.require(k0 == k1, "(ker lambda_0)_" + std::to_string(n) + " = (ker lambda_1)_" +
                                  std::to_string(n),
                    "equal spans", k0 == k1 ? "equal spans" : "different spans");
    }
}

void claim_routine_A1(ClaimContext& ctx) {
    auto R = make_R<F>();
    EnvMorphism<F> lam(MorphName::Lambda, R, Mode::WPlus, F::param());
    std::array<size_t, 8> generic = {0, 0, 0, 0, 1, 4, 7, 13}; // n = 1..8; 7, 13 by rank-nullity
    int N = ctx.cutoff(7);
    for (int n = 1; n <= N; ++n) {
        auto rep = kernel_at_degree(lam, n);
        ctx.require(rep.dimension() == generic[n - 1],
                    "dim (ker lambda_a)_" + std::to_string(n) + " generic",
                    std::to_string(generic[n - 1]), std::to_string(rep.dimension()));
        if (n == 5) {
            bool ok = false;
            for (const auto& f : rep.excluded) ok = ok || f == "a";
            bool ok2 = false;
            for (const auto& f : rep.excluded) ok2 = ok2 || f == "a - 1";
            ctx.require(ok && ok2, "degree-5 elimination divides by a and a - 1",
                        "excluded contains {a, a - 1}", claims::dims_str({rep.excluded.size()}) +
                                                            " factors recorded");
        }
    }
    if (N >= 7) {
        std::vector<Poly<F>> gens = {lam.gen_image(1), lam.gen_image(2)};
        size_t im7 = span_generated(R, gens, 7).dim();
        ctx.require(PARTITIONS[7] - im7 == 7, "rank-nullity at n = 7: p(7) - dim A(a)_7", "7",
                    std::to_string(PARTITIONS[7] - im7));
    }
    // specializations: a = 0, 1 give p(n) - n; a = 2 matches the generic dims
    int NS = ctx.cutoff(8);
    for (long a0 : {0L, 1L, 2L}) {
        auto Rs = make_R<K>();
        EnvMorphism<K> ls(MorphName::Lambda, Rs, Mode::WPlus, K::from_int(a0));
        std::vector<size_t> got, want;
        for (int n = 1; n <= NS; ++n) {
            got.push_back(kernel_at_degree(ls, n).dimension());
            want.push_back(a0 == 2 ? generic[n - 1] : PARTITIONS[n] - n);
        }
        ctx.require(got == want, "kernel dims at a = " + std::to_string(a0), claims::dims_str(want),
                    claims::dims_str(got));
    }
}

void claim_lemma_2_7(ClaimContext& ctx) {
    auto R = make_R<F>();
    F a = F::param(), one = F::one();
    EnvMorphism<F> lam(MorphName::Lambda, R, Mode::WPlus, a);
    Poly<F> u = R.var("x"), v = R.var("y");
    std::vector<Poly<F>> agens = {lam.gen_image(1), lam.gen_image(2)};
    Poly<F> uav_v = R.mul(u - v.scaled(a), v);
    auto J = [&](int n) {
        return graded_intersection(module_piece(R, {{u, Side::Right}}, agens, n),
                                   module_piece(R, {{uav_v, Side::Right}}, agens, n));
    };
    std::vector<size_t> low;
    for (int i = 1; i <= 4; ++i) low.push_back(J(i).dim());
    ctx.require(low == std::vector<size_t>{0, 0, 0, 0}, "J_i = 0 for i <= 4", "0,0,0,0",
                claims::dims_str(low));
    // dim J_5 = 2: the paper gives three spanning elements with one dependency
    // (spec echoes a dim of 1; the honest count is 2, see the design notes)
    ctx.require(J(5).dim() == 2, "dim J_5", "2", std::to_string(J(5).dim()));
    ctx.require(J(6).dim() == 4, "dim J_6", "4", std::to_string(J(6).dim()));
    ctx.require(J(7).dim() == 5, "dim J_7", "5", std::to_string(J(7).dim()));

    Poly<F> r = R.mul(u, R.mul(u, v) + R.mul(v, v).scaled(one - a));
    Poly<F> r_alt = R.mul(R.mul(u, v) - R.mul(v, v).scaled(a), u + v.scaled(F::from_int(2)));
    ctx.require(r == r_alt, "r = u(uv + (1-a)v^2) = (uv - av^2)(u + 2v)", r_alt.str(), r.str());

    int N = ctx.cutoff(9);
    bool LrR = true;
    for (int n = 3; n <= N; ++n) {
        auto L = graded_intersection(module_piece(R, {{u, Side::Right}}, {}, n),
                                     module_piece(R, {{uav_v, Side::Right}}, {}, n));
        auto rR = module_piece(R, {{r, Side::Right}}, {}, n);
        LrR = LrR && L.basis == rR.basis;
    }
    ctx.require(LrR, "L_n = (rR)_n for 3 <= n <= " + std::to_string(N), "true", yesno(LrR));
    bool JL = true;
    for (int n = 6; n <= std::min(N, 8); ++n) {
        auto rR = module_piece(R, {{r, Side::Right}}, {}, n);
        JL = JL && J(n).basis == rR.basis;
    }
    ctx.require(JL, "J_n = L_n for 6 <= n <= " + std::to_string(std::min(N, 8)), "true", yesno(JL));
}

// The Claim A.1 data at a given parameter value: candidate matrix for
// r*(R_3 u) at degree 7 and the vectors p_i = s_i (u-av) v.
template <typename KK>
std::pair<Matrix<KK>, std::vector<Vec<KK>>> a1_system(const KK& a) {
    auto R = make_R<KK>();
    EnvMorphism<KK> lam(MorphName::Lambda, R, Mode::WPlus, a);
    Poly<KK> u = R.var("x"), v = R.var("y");
    auto img = [&](int n) { return lam.gen_image(n); };
    Poly<KK> r1 = R.product_chain({img(2), img(1), img(1), img(1)});
    Poly<KK> r2 = R.product_chain({img(2), img(1), img(2)});
    Poly<KK> r3 = R.product_chain({img(2), img(3)});
    KK one = KK::one(), three = KK::from_int(3), twelve = KK::from_int(12);
    std::vector<Poly<KK>> s = {r1.scaled(three + a) + r2.scaled(twelve),
                               r1.scaled(one + a) - r3.scaled(twelve),
                               r2.scaled(one + a) + r3.scaled(three + a)};
    Poly<KK> r = R.mul(u, R.mul(u, v) + R.mul(v, v).scaled(one - a));
    Poly<KK> tail = R.mul(u - v.scaled(a), v);
    auto monos = R.degree_basis(7);
    auto cand3 = R.degree_basis(3);
    Matrix<KK> A(monos.size(), cand3.size());
    for (size_t j = 0; j < cand3.size(); ++j) {
        Poly<KK> col = R.mul(r, R.mul(Poly<KK>::term(R.carrier(), cand3[j], one), u));
        Vec<KK> cv = coeff_vector(col, monos);
        for (size_t i = 0; i < cv.size(); ++i) A(i, j) = cv[i];
    }
    std::vector<Vec<KK>> p;
    for (const auto& si : s) p.push_back(coeff_vector(R.mul(si, tail), monos));
    return {std::move(A), std::move(p)};
}

template <typename KK>
std::vector<bool> a1_solvable(const KK& a) {
    auto [A, p] = a1_system(a);
    std::vector<bool> out;
    for (const auto& rhs : p) out.push_back(solve(A, rhs).has_value());
    return out;
}

RatFunc det_gauss(Matrix<F> m) {
    F d = F::one();
    size_t n = m.rows();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t i = c; i < n; ++i)
            if (!m(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) return F::zero();
        if (piv != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
            d = -d;
        }
        d *= m(c, c);
        F inv = F::one() / m(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            F f = m(i, c) * inv;
            for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

/// gcd over all maximal minors of the augmented system [A | p]; its roots are
/// the only parameter values where p can enter the column span of A while A
/// keeps full column rank.
UniPoly a1_minor_gcd(const Matrix<F>& A, const Vec<F>& p) {
    size_t rows = A.rows(), k = A.cols() + 1;
    std::vector<size_t> idx(k);
    UniPoly g;
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
        if (depth == k) {
            Matrix<F> m(k, k);
            for (size_t i = 0; i < k; ++i) {
                for (size_t j = 0; j < A.cols(); ++j) m(i, j) = A(idx[i], j);
                m(i, A.cols()) = p[idx[i]];
            }
            F d = det_gauss(m);
            if (!d.is_zero()) g = g.is_zero() ? d.num().primitive_part() : UniPoly::gcd(g, d.num());
            return;
        }
        for (size_t i = start; i + (k - depth) <= rows; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return g;
}

void claim_A1(ClaimContext& ctx) {
    auto R = make_R<F>();
    F a = F::param(), one = F::one();
    EnvMorphism<F> lam(MorphName::Lambda, R, Mode::WPlus, a);
    Poly<F> u = R.var("x"), v = R.var("y");
    auto img = [&](int n) { return lam.gen_image(n); };
    Poly<F> r1 = R.product_chain({img(2), img(1), img(1), img(1)});
    Poly<F> r2 = R.product_chain({img(2), img(1), img(2)});
    Poly<F> r3 = R.product_chain({img(2), img(3)});
    // the paper's expansions are over twisted monomials u^i v^j
    auto term = [&](int i, int j, const F& c) {
        std::vector<Poly<F>> fac(i, u);
        fac.insert(fac.end(), j, v);
        return R.product_chain(fac).scaled(c);
    };
    Poly<F> r1e = term(4, 1, one) + term(3, 2, -apoly({3, 1})) + term(2, 3, apoly({6, 6})) +
                  term(1, 4, -apoly({6, 18})) + term(0, 5, apoly({0, 24}));
    Poly<F> r2e = term(3, 2, one) + term(2, 3, -apoly({2, 2})) + term(1, 4, apoly({2, 5, 1})) +
                  term(0, 5, -apoly({0, 6, 2}));
    Poly<F> r3e = term(2, 3, one) + term(1, 4, -apoly({1, 3})) + term(0, 5, apoly({0, 2, 2}));
    ctx.require(r1 == r1e, "r_1 = lambda_a(e2 e1^3) expansion", r1e.str(), r1.str());
    ctx.require(r2 == r2e, "r_2 = lambda_a(e2 e1 e2) expansion", r2e.str(), r2.str());
    ctx.require(r3 == r3e, "r_3 = lambda_a(e2 e3) expansion", r3e.str(), r3.str());

    Poly<F> s1 = r1.scaled(apoly({3, 1})) + r2.scaled(F::from_int(12));
    Poly<F> s2 = r1.scaled(apoly({1, 1})) - r3.scaled(F::from_int(12));
    Poly<F> s3 = r2.scaled(apoly({1, 1})) + r3.scaled(apoly({3, 1}));

    // J_5 is spanned by s_1, s_2, s_3 (computed as an honest intersection)
    std::vector<Poly<F>> agens = {img(1), img(2)};
    Poly<F> uav_v = R.mul(u - v.scaled(a), v);
    auto J5 = graded_intersection(module_piece(R, {{u, Side::Right}}, agens, 5),
                                  module_piece(R, {{uav_v, Side::Right}}, agens, 5));
    bool contains = J5.contains(s1) && J5.contains(s2) && J5.contains(s3);
    ctx.require(contains, "s_1, s_2, s_3 in J_5", "true", yesno(contains));
    auto sspan = make_span(R, 5, {s1, s2, s3});
    ctx.require(sspan.basis == J5.basis, "span{s_1, s_2, s_3} = J_5 (dim 2)",
                "dim " + std::to_string(J5.dim()), "dim " + std::to_string(sspan.dim()));

    // the displayed quadratic coefficients: s_i = r (c_i1 u^2 + c_i2 uv + c_i3 v^2)
    Poly<F> r = R.mul(u, R.mul(u, v) + R.mul(v, v).scaled(one - a));
    Poly<F> U2 = R.mul(u, u), UV = R.mul(u, v), V2 = R.mul(v, v);
    std::vector<std::array<F, 3>> c = {{apoly({3, 1}), apoly({6, -2}), apoly({0, -4})},
                                       {apoly({1, 1}), apoly({-2, -2}), apoly({-4, 8})},
                                       {F::zero(), apoly({1, 1}), apoly({1, -2, -1})}};
    std::vector<Poly<F>> svec = {s1, s2, s3};
    for (int i = 0; i < 3; ++i) {
        Poly<F> rhs = R.mul(r, U2.scaled(c[i][0]) + UV.scaled(c[i][1]) + V2.scaled(c[i][2]));
        ctx.require(svec[i] == rhs, "s_" + std::to_string(i + 1) + " = r(c_1 u^2 + c_2 uv + c_3 v^2)",
                    rhs.str(), svec[i].str());
    }

    // generic unsolvability of p_i in r R_3 u
    auto generic = a1_solvable<F>(a);
    ctx.require(generic == std::vector<bool>{false, false, false},
                "p_i = s_i (u-av)v in span{r m u} unsolvable for generic a", "false,false,false",
                yesno(generic[0]) + "," + yesno(generic[1]) + "," + yesno(generic[2]));

    // exceptional specializations from the maximal minors of [A | p_i]
    auto [A, p] = a1_system<F>(a);
    std::vector<std::vector<Rational>> expected_roots = {
        {Rational(1), Rational(9)}, {Rational(Int(1), Int(2)), Rational(1)}, {Rational(1)}};
    std::vector<UniPoly> expected_cofactor = {UniPoly(1), UniPoly(1),
                                              UniPoly(std::vector<Int>{-4, -1, 1})}; // a^2 - a - 4
    for (int i = 0; i < 3; ++i) {
        UniPoly g = a1_minor_gcd(A, p[i]);
        auto [roots, cof] = g.squarefree_part().rational_roots();
        std::sort(roots.begin(), roots.end());
        std::string lbl = "problem " + std::to_string(i + 1);
        std::string got_roots, want_roots;
        for (const auto& rr : roots) got_roots += rr.str() + " ";
        for (const auto& rr : expected_roots[i]) want_roots += rr.str() + " ";
        ctx.require(roots == expected_roots[i], lbl + " rational exceptional values", want_roots,
                    got_roots);
        ctx.require(cof.positive_leading() == expected_cofactor[i].positive_leading(),
                    lbl + " irrational exceptional factor", expected_cofactor[i].str("a"),
                    cof.str("a"));
        // direct solvability at each listed rational value
        for (const auto& a0 : roots) {
            auto sv = a1_solvable<K>(a0);
            ctx.require(sv[i], lbl + " solvable at a = " + a0.str(), "true", yesno(sv[i]));
        }
    }
    // controls: a = 3 and a = 5 solve none of the three problems
    for (long a0 : {3L, 5L}) {
        auto sv = a1_solvable<K>(K::from_int(a0));
        bool none = !sv[0] && !sv[1] && !sv[2];
        ctx.require(none, "no problem solvable at a = " + std::to_string(a0), "false,false,false",
                    yesno(sv[0]) + "," + yesno(sv[1]) + "," + yesno(sv[2]));
    }
    // the three exceptional sets meet only at a = 1
    auto at1 = a1_solvable<K>(K::one());
    ctx.require(at1 == std::vector<bool>{true, true, true},
                "all three problems solvable only at the common value a = 1", "true,true,true",
                yesno(at1[0]) + "," + yesno(at1[1]) + "," + yesno(at1[2]));
    auto at9 = a1_solvable<K>(K::from_int(9));
    ctx.require(at9 == std::vector<bool>{true, false, false}, "a = 9 solves only problem 1",
                "true,false,false", yesno(at9[0]) + "," + yesno(at9[1]) + "," + yesno(at9[2]));
}

void claim_prop_2_8(ClaimContext& ctx) {
    auto R = make_R<F>();
    F a = F::param();
    EnvMorphism<F> lam(MorphName::Lambda, R, Mode::WPlus, a);
    std::vector<EnvElement<F>> h;
    for (int k = 1; k <= 5; ++k) h.push_back(h_element<F>(k, a));
    for (int k = 1; k <= 5; ++k) {
        Poly<F> img = eval_morphism(lam, h[k - 1]);
        ctx.require(img.is_zero(), "lambda_a(h_" + std::to_string(k) + ")", "0", img.str());
    }
    auto k5 = kernel_span(lam, 5);
    auto h1span = env_span<F>(5, {h[0]});
    ctx.require(h1span == k5, "(ker lambda_a)_5 = span{h_1}", "dim " + std::to_string(k5.dim()),
                "dim " + std::to_string(h1span.dim()));
    auto k6 = kernel_span(lam, 6);
    auto e1 = EnvElement<F>::generator(1);
    auto span6 = env_span<F>(6, {h[1], h[2], env_mul(e1, h[0]), env_mul(h[0], e1)});
    ctx.require(span6 == k6, "(ker lambda_a)_6 = span{h_2, h_3, e1 h_1, h_1 e1}",
                "dim " + std::to_string(k6.dim()), "dim " + std::to_string(span6.dim()));
    int N = ctx.cutoff(9);
    for (int n = 5; n <= N; ++n) {
        auto ideal = ideal_graded_piece<F>({h[0], h[1], h[2]}, n);
        auto ker = kernel_span(lam, n);
        ctx.require(ideal == ker,
                    "(h_1,h_2,h_3)_" + std::to_string(n) + " = (ker lambda_a)_" + std::to_string(n),
                    "dim " + std::to_string(ker.dim()), "dim " + std::to_string(ideal.dim()));
    }
}

void claim_A3(ClaimContext& ctx) {
    F a = F::param();
    std::vector<EnvElement<F>> h;
    for (int k = 1; k <= 5; ++k) h.push_back(h_element<F>(k, a));
    auto e1 = EnvElement<F>::generator(1);
    auto e1h1 = env_mul(e1, h[0]);
    auto h1e1 = env_mul(h[0], e1);

    // coefficient rows over the paper's ordering of the degree-6 PBW basis
    std::vector<PBWMonomial> basis = {{1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 2}, {1, 1, 2, 2}, {2, 2, 2},
                                      {1, 1, 1, 3},       {1, 2, 3},       {3, 3},       {1, 1, 4},
                                      {2, 4},             {1, 5},          {6}};
    auto Z = F::zero();
    std::vector<std::pair<std::string, const EnvElement<F>*>> elems = {
        {"h_2", &h[1]}, {"h_3", &h[2]}, {"h_4", &h[3]},
        {"h_5", &h[4]}, {"e1 h_1", &e1h1}, {"h_1 e1", &h1e1}};
    std::vector<Vec<F>> expected = {
        {Z, Z, Z, Z, Z, Z, apoly({3}), Z, apoly({-4}), apoly({1}), apoly({2})},
        {Z, Z, apoly({-4}), apoly({-4}), apoly({4}), Z, apoly({-7, 14, 20}), Z, Z,
         apoly({-5, -18, -16}), apoly({-2, 16, 36, 16})},
        {Z, Z, Z, apoly({4}), Z, apoly({-4}), apoly({7, -4}), Z, Z, apoly({1, 4}),
         apoly({2, -4, -4})},
        {Z, Z, Z, apoly({4}), Z, Z, apoly({7, -14}), apoly({-4}), Z, apoly({5, 14}),
         apoly({2, -16, -12})},
        {Z, Z, apoly({1}), Z, apoly({-1}), apoly({0, -2}), Z, apoly({1, 2}), Z, apoly({0, -1, -1}),
         Z},
        {Z, Z, apoly({1}), Z, apoly({-1}), apoly({-2, -2}), apoly({0, 2}), apoly({3, 2}),
         apoly({0, 4}), apoly({-2, -7, -1}), apoly({0, 4, 4})}};
    for (size_t i = 0; i < elems.size(); ++i) {
        Vec<F> row = env_coeff_vector(*elems[i].second, basis);
        bool eq = row == expected[i];
        std::string got;
        for (const auto& x : row) got += x.str() + " ";
        std::string want;
        for (const auto& x : expected[i]) want += x.str() + " ";
        ctx.require(eq, "matrix row of " + elems[i].first, want, got);
    }

    // the two displayed relations, identically in Q(a)
    auto rel4 = h[1].scaled(apoly({0, 2, 4})) - h[2] - e1h1.scaled(apoly({6, 4})) +
                h1e1.scaled(apoly({2, 4}));
    ctx.require(h[3] == rel4, "h_4 = 2a(2a+1)h_2 - h_3 - (6+4a)e1h_1 + (2+4a)h_1e1", rel4.str(),
                h[3].str());
    auto rel5 = h[1].scaled(apoly({0, 0, 4})) - h[2] - e1h1.scaled(apoly({4, 4})) +
                h1e1.scaled(apoly({0, 4}));
    ctx.require(h[4] == rel5, "h_5 = 4a^2 h_2 - h_3 - (4+4a)e1h_1 + 4a h_1e1", rel5.str(),
                h[4].str());

    // independence of {h_2, h_3, e1 h_1, h_1 e1}
    auto span = env_span<F>(6, {h[1], h[2], e1h1, h1e1});
    ctx.require(span.dim() == 4, "h_2, h_3, e1 h_1, h_1 e1 independent", "rank 4",
                "rank " + std::to_string(span.dim()));
}

void claim_thm_4_5(ClaimContext& ctx) {
    auto S = make_S<K>();
    EnvMorphism<K> phi(MorphName::Phi, S);
    auto R = make_R<K>();
    int N = ctx.cutoff(8);
    bool match = true, stable = true;
    for (int n = 1; n <= N; ++n) {
        auto kphi = kernel_span(phi, n);
        std::vector<Vec<K>> inter;
        bool first = true;
        for (long a0 : {2L, 3L, 5L}) {
            EnvMorphism<K> ls(MorphName::Lambda, R, Mode::WPlus, K::from_int(a0));
            auto kb = kernel_span(ls, n).basis;
            inter = first ? kb : span_intersection(inter, kb);
            first = false;
        }
        match = match && inter == kphi.basis;
        EnvMorphism<K> l7(MorphName::Lambda, R, Mode::WPlus, K::from_int(7));
        stable = stable && span_intersection(inter, kernel_span(l7, n).basis) == inter;
    }
    ctx.require(match,
                "(ker phi)_n = (ker lambda_2 ^ ker lambda_3 ^ ker lambda_5)_n for n <= " +
                    std::to_string(N),
                "true", yesno(match));
    ctx.require(stable, "adding a = 7 does not shrink the intersection", "true", yesno(stable));
}

} // namespace

void register_env_claims(std::vector<ClaimSpec>& out) {
    out.push_back({"lemma-1-1-relations",
                   "Lemma 1.1: the defining relations q5, q7 of U(W+) map to zero under pi",
                   false, claim_lemma_1_1});
    out.push_back({"lemma-1-4-homom",
                   "Lemma 1.4: phi and lambda_a respect [e_n, e_m] = (m-n)e_{n+m}", false,
                   claim_lemma_1_4});
    out.push_back({"prop-2-1-images",
                   "Prop. 2.1: \"A(0) = k + uR\", \"A(1) = k + Ru\"; r_1..r_5 independent iff a "
                   "!= 0, 1",
                   false, claim_prop_2_1});
    out.push_back({"lemma-2-4-presentation",
                   "Lemma 2.4: \"the kernel of pi_0 is generated by q and q'\"; q' - 4q_2 = -3t1 "
                   "q + q t1",
                   false, claim_lemma_2_4});
    out.push_back({"lemma-2-6-conj", "Lemma 2.6: lambda_1 = u^{-1} lambda_0(.) u", false,
                   claim_lemma_2_6});
    out.push_back({"prop-2-5-kernel",
                   "Prop. 2.5: \"ker lambda_a = (e1e3 - e2^2 - e4) for a = 0, 1\"", false,
                   claim_prop_2_5});
    out.push_back({"routine-A1",
                   "Routine A.1: kernel dimensions of lambda_a degree by degree, generic and "
                   "specialized",
                   false, claim_routine_A1});
    out.push_back({"lemma-2-7-J",
                   "Lemma 2.7: \"J_i = 0 for i = 0,...,4\", \"dim J_6 = 4\", \"dim J_7 = 5\", "
                   "\"L = rR\"",
                   false, claim_lemma_2_7});
    out.push_back({"claim-A1",
                   "Claim A.1: \"J_5 A(a)_2 not in J_6 A(a)_1\"; membership forces \"a = 9, a = "
                   "1\", \"a = 1, a = 1/2\", \"a = 1, a = RootOf(-2-3_Z+_Z^2)-1\"",
                   false, claim_A1});
    out.push_back({"prop-2-8-h",
                   "Prop. 2.8: ker lambda_a is generated by h_1, h_2, h_3 for a != 0, 1", false,
                   claim_prop_2_8});
    out.push_back({"claim-A3",
                   "Claim A.3: \"h_4 = 2a(2a+1)h_2 - h_3 - (6+4a)e1h1 + (2+4a)h1e1\", \"h_5 = "
                   "4a^2 h_2 - h_3 - (4+4a)e1h1 + 4a h1e1\"; independence",
                   false, claim_A3});
    out.push_back({"thm-4-5-kernels",
                   "Thm. 4.5: finite-degree check that ker phi is the intersection of ker "
                   "lambda_a over several a",
                   false, claim_thm_4_5});
}

} // namespace witt
