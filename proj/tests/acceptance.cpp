// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Criteria 1, 2 and 10 are computed directly here; the rest delegate to the
// registered claims, which perform exactly the required checks.

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "witt/algebras.hpp"
#include "witt/envelope.hpp"
#include "witt/hilbert.hpp"
#include "witt/morphism.hpp"
#include "witt/named_elements.hpp"
#include "witt/parser.hpp"
#include "witt/veritas.hpp"

using namespace witt;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok) {
    std::printf("criterion %2d (%s): %s\n", index, name.c_str(), ok ? "pass" : "FAIL");
    if (!ok) ++failures;
}

bool claims_pass(const std::vector<std::string>& ids) {
    VerifyConfig cfg;
    cfg.only = ids;
    for (const auto& res : run_all(cfg))
        if (res.status != "pass") return false;
    return true;
}

// --- criterion 1: kernel dimensions of lambda_a ----------------------------

bool criterion_kernel_dims() {
    auto Rgen = make_R<RatFunc>();
    EnvMorphism<RatFunc> lam(MorphName::Lambda, Rgen, Mode::WPlus, RatFunc::param());
    const size_t generic[6] = {0, 0, 0, 0, 1, 4};
    for (int n = 1; n <= 6; ++n)
        if (kernel_at_degree(lam, n).dimension() != generic[n - 1]) return false;
    // n = 7 cross-checked by rank-nullity: dim ker + dim image = p(7) = 15
    size_t ker7 = kernel_at_degree(lam, 7).dimension();
    if (ker7 != 7) return false;
    std::vector<Poly<RatFunc>> images;
    for (const auto& m : env_basis(7)) {
        EnvElement<RatFunc> e(Mode::WPlus);
        e.add_term(m, RatFunc::one());
        images.push_back(eval_morphism(lam, e));
    }
    if (make_span(Rgen, 7, images).dim() + ker7 != env_basis(7).size()) return false;

    const size_t p[8] = {1, 2, 3, 5, 7, 11, 15, 22};
    for (long a0 : {0L, 1L}) {
        auto R = make_R<Rational>();
        EnvMorphism<Rational> spec(MorphName::Lambda, R, Mode::WPlus, Rational(a0));
        for (int n = 1; n <= 8; ++n)
            if (kernel_at_degree(spec, n).dimension() != p[n - 1] - n) return false;
    }
    return true;
}

// --- criterion 2: named kernel elements map to zero ------------------------

bool criterion_named_elements() {
    auto Rgen = make_R<RatFunc>();
    EnvMorphism<RatFunc> lam(MorphName::Lambda, Rgen, Mode::WPlus, RatFunc::param());
    for (int k = 1; k <= 3; ++k)
        if (!eval_morphism(lam, h_element<RatFunc>(k, RatFunc::param())).is_zero()) return false;
    auto S = make_S<Rational>();
    EnvMorphism<Rational> phi(MorphName::Phi, S);
    if (!eval_morphism(phi, g_element<Rational>()).is_zero()) return false;
    auto R = make_R<Rational>();
    EnvMorphism<Rational> lam0(MorphName::Lambda, R, Mode::WPlus, Rational::zero());
    return eval_morphism(lam0, g4_element<Rational>()).is_zero();
}

// --- criterion 10: randomized property suites ------------------------------

using K = Rational;

Rational rand_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 10);
    return Rational(Int(num(rng)), Int(den(rng)));
}

Rational rand_nonzero(std::mt19937& rng) {
    for (;;) {
        Rational r = rand_rational(rng);
        if (!r.is_zero()) return r;
    }
}

Poly<K> rand_poly(std::mt19937& rng, const TwistedAlgebra<K>& S) {
    std::uniform_int_distribution<int> nterms(1, 3), expo(0, 2);
    Poly<K> f = Poly<K>::zero(S.carrier());
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(3);
        for (int i = 0; i < 3; ++i) m[i] = expo(rng);
        f.add_term(m, rand_rational(rng));
    }
    return f;
}

bool suite_twisted_associativity(std::mt19937& rng) {
    auto S = make_S<K>();
    for (int i = 0; i < 1000; ++i) {
        Poly<K> f = rand_poly(rng, S), g = rand_poly(rng, S), h = rand_poly(rng, S);
        if (S.mul(S.mul(f, g), h) != S.mul(f, S.mul(g, h))) return false;
    }
    return true;
}

/// Independent straightener rewriting the rightmost inversion; confluence of
/// the PBW rewriting system means it must agree with the library's leftmost
/// strategy on every word.
EnvElement<K> straighten_rightmost(const std::vector<int>& word) {
    EnvElement<K> result(Mode::WPlus);
    std::vector<std::pair<std::vector<int>, K>> work{{word, K::one()}};
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        int k = -1;
        for (int i = static_cast<int>(w.size()) - 2; i >= 0; --i)
            if (w[i] > w[i + 1]) {
                k = i;
                break;
            }
        if (k < 0) {
            result.add_term(w, c);
            continue;
        }
        int j = w[k], i2 = w[k + 1];
        std::vector<int> swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        std::vector<int> contracted(w.begin(), w.begin() + k);
        contracted.push_back(i2 + j);
        contracted.insert(contracted.end(), w.begin() + k + 2, w.end());
        work.emplace_back(std::move(swapped), c);
        work.emplace_back(std::move(contracted), c * K::from_int(i2 - j));
    }
    return result;
}

bool suite_straightening_confluence(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(2, 6), idx(1, 4);
    for (int i = 0; i < 1000; ++i) {
        std::vector<int> w(len(rng));
        for (int& x : w) x = idx(rng);
        if (straighten<K>(w) != straighten_rightmost(w)) return false;
    }
    return true;
}

bool suite_field_axioms(std::mt19937& rng) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    auto rand_rf = [&]() {
        UniPoly n(std::vector<Int>{Int(coeff(rng)), Int(coeff(rng))});
        UniPoly d(std::vector<Int>{Int(coeff(rng)), Int(coeff(rng))});
        if (d.is_zero()) d = UniPoly(1);
        return RatFunc(n, d);
    };
    for (int i = 0; i < 1000; ++i) {
        Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng);
        if ((a + b) + c != a + (b + c)) return false;
        if (a * (b + c) != a * b + a * c) return false;
        if (a * b != b * a) return false;
        Rational nz = rand_nonzero(rng);
        if (nz * nz.inv() != Rational::one()) return false;

        RatFunc f = rand_rf(), g = rand_rf(), h = rand_rf();
        if ((f + g) + h != f + (g + h)) return false;
        if (f * (g + h) != f * g + f * h) return false;
        if (f * g != g * f) return false;
        if (!f.is_zero() && f * f.inv() != RatFunc::one()) return false;
    }
    return true;
}

bool suite_parse_print(std::mt19937& rng) {
    auto S = make_S<K>();
    std::uniform_int_distribution<int> nterms(0, 3), idx(1, 5), wlen(0, 4), letter(1, 2);
    for (int i = 0; i < 1000; ++i) {
        Poly<K> f = rand_poly(rng, S);
        if (parse_poly<K>(f.str(), S.carrier()) != f) return false;

        EnvElement<K> e(Mode::WPlus);
        int k = nterms(rng);
        for (int t = 0; t < k; ++t) {
            PBWMonomial m(wlen(rng));
            for (int& x : m) x = idx(rng);
            std::sort(m.begin(), m.end());
            e.add_term(m, rand_rational(rng));
        }
        if (parse_env<K>(e.str()) != e) return false;

        FreeElement<K> w;
        k = nterms(rng);
        for (int t = 0; t < k; ++t) {
            FreeWord fw(wlen(rng));
            for (int& x : fw) x = letter(rng);
            w.add_term(fw, rand_rational(rng));
        }
        if (parse_free<K>(w.str()) != w) return false;
    }
    return true;
}

} // namespace

int main() {
    report(1, "Routine A.1 kernel dimensions, generic and specialized", criterion_kernel_dims());
    report(2, "named kernel elements map to exact zero", criterion_named_elements());
    report(3, "ideal equalities degree by degree",
           claims_pass({"prop-2-5-kernel", "prop-2-8-h", "thm-5-1-g"}));
    report(4, "Hilbert series closed forms", claims_pass({"lemma-5-4-hilb"}));
    report(5, "non-noetherian witnesses", claims_pass({"thm-3-3-witness"}));
    report(6, "syzygy module and b5/b6/b7 memberships",
           claims_pass({"lemma-5-8-MM", "lemma-5-2-b567"}));
    report(7, "appendix claims A.1, A.3, A.4",
           claims_pass({"claim-A1", "claim-A3", "claim-A4a", "claim-A4b"}));
    report(8, "geometry squares, curves, pullbacks",
           claims_pass({"geom-psi-square", "geom-ia-square", "geom-Ca", "geom-f"}));
    report(9, "Laurent-mode identities", claims_pass({"remark-3-10", "prop-3-7-adjp"}));

    std::mt19937 rng(20240817);
    bool props = suite_twisted_associativity(rng) && suite_straightening_confluence(rng) &&
                 suite_field_axioms(rng) && suite_parse_print(rng);
    report(10, "randomized property suites, 1000 cases each", props);

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
