#ifndef WITT_POLY_HPP
#define WITT_POLY_HPP

#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "witt/errors.hpp"
#include "witt/linalg.hpp"

namespace witt {

/// A commutative polynomial ring: ordered variables, optional Laurent flags,
/// optional grading weights (default 1).  Rings are created once and shared by
/// pointer; two Polys belong to the same ring iff they share the pointer.
struct PolyRing {
    std::vector<std::string> vars;
    std::vector<bool> laurent;
    std::vector<int> weights;

    static std::shared_ptr<const PolyRing> make(std::vector<std::string> names,
                                                std::vector<bool> laurent_flags = {},
                                                std::vector<int> grading = {}) {
        auto r = std::make_shared<PolyRing>();
        r->vars = std::move(names);
        r->laurent = laurent_flags.empty() ? std::vector<bool>(r->vars.size(), false)
                                           : std::move(laurent_flags);
        r->weights =
            grading.empty() ? std::vector<int>(r->vars.size(), 1) : std::move(grading);
        return r;
    }

    size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Exponent vector, one entry per ring variable.
using Monomial = std::vector<int>;

inline int mono_degree(const PolyRing& ring, const Monomial& m) {
    int d = 0;
    for (size_t i = 0; i < m.size(); ++i) d += ring.weights[i] * m[i];
    return d;
}

/// Graded lexicographic, descending: higher degree first, then lex greater
/// (earlier variables dominate) first.  Used for term storage and printing.
struct MonoOrder {
    const PolyRing* ring;
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = mono_degree(*ring, a), db = mono_degree(*ring, b);
        if (da != db) return da > db;
        return a > b;
    }
};

template <typename K>
class Poly {
public:
    using TermMap = std::map<Monomial, K, MonoOrder>;

    explicit Poly(RingPtr ring) : ring_(std::move(ring)), terms_(MonoOrder{ring_.get()}) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const K& c) {
        Poly p(std::move(ring));
        if (!c.is_zero()) p.terms_.emplace(Monomial(p.ring_->nvars(), 0), c);
        return p;
    }
    static Poly var(RingPtr ring, const std::string& name) {
        int i = ring->var_index(name);
        if (i < 0) throw RingMismatch("Poly: unknown variable " + name);
        Poly p(std::move(ring));
        Monomial m(p.ring_->nvars(), 0);
        m[i] = 1;
        p.terms_.emplace(std::move(m), K::one());
        return p;
    }
    static Poly term(RingPtr ring, Monomial m, const K& c) {
        Poly p(std::move(ring));
        p.check_mono(m);
        if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    void add_term(const Monomial& m, const K& c) {
        check_mono(m);
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    Poly operator-() const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma);
                for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly scaled(const K& c) const {
        Poly r(ring_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Integer power; negative exponents only for single Laurent-legal monomials.
    Poly pow(int e) const {
        if (e == 0) return constant(ring_, K::one());
        if (e > 0) {
            Poly r = *this;
            for (int i = 1; i < e; ++i) r = r * *this;
            return r;
        }
        if (terms_.size() != 1)
            throw LaurentViolation("Poly: negative power of a non-monomial");
        const auto& [m, c] = *terms_.begin();
        Monomial inv(m.size());
        for (size_t i = 0; i < m.size(); ++i) {
            inv[i] = m[i] * e;
            if (inv[i] < 0 && !ring_->laurent[i])
                throw LaurentViolation("Poly: negative exponent of non-Laurent variable " +
                                       ring_->vars[i]);
        }
        K ci = K::one() / c;
        K cc = K::one();
        for (int i = 0; i < -e; ++i) cc *= ci;
        return term(ring_, inv, cc);
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = mono_degree(*ring_, terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (mono_degree(*ring_, m) != d) return false;
        return true;
    }

    /// Degree of a nonzero homogeneous polynomial; top degree otherwise.
    int degree() const {
        if (terms_.empty()) throw DomainError("Poly: degree of zero");
        return mono_degree(*ring_, terms_.begin()->first);
    }

    /// Split into (degree, homogeneous component) pairs.
    std::map<int, Poly> homogeneous_components() const {
        std::map<int, Poly> comps;
        for (const auto& [m, c] : terms_) {
            int d = mono_degree(*ring_, m);
            auto it = comps.find(d);
            if (it == comps.end()) it = comps.emplace(d, Poly(ring_)).first;
            it->second.terms_.emplace(m, c);
        }
        return comps;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            std::string cs = c.str();
            bool neg = cs.size() > 0 && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            std::string ms = mono_str(m);
            if (ms.empty()) {
                s += mag;
            } else if (mag == "1") {
                s += ms;
            } else {
                if (mag.find(' ') != std::string::npos)
                    s += "(" + mag + ")";
                else
                    s += mag;
                s += "*" + ms;
            }
        }
        return s;
    }

private:
    std::string mono_str(const Monomial& m) const {
        std::string s;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += ring_->vars[i];
            if (m[i] != 1) s += "^" + std::to_string(m[i]);
        }
        return s;
    }
    void check_ring(const Poly& o) const {
        if (ring_ != o.ring_) throw RingMismatch("Poly: operands in different rings");
    }
    void check_mono(const Monomial& m) const {
        if (m.size() != ring_->nvars()) throw RingMismatch("Poly: bad monomial length");
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] < 0 && !ring_->laurent[i])
                throw LaurentViolation("Poly: negative exponent of non-Laurent variable " +
                                       ring_->vars[i]);
    }

    RingPtr ring_;
    TermMap terms_;
};

/// Ring map given by images of the source generators.
template <typename K>
struct RingMap {
    RingPtr source;
    RingPtr target;
    std::vector<Poly<K>> images; // one per source variable

    Poly<K> apply(const Poly<K>& f) const {
        if (f.ring() != source) throw RingMismatch("RingMap: argument not in source ring");
        Poly<K> r = Poly<K>::zero(target);
        for (const auto& [m, c] : f.terms()) {
            Poly<K> t = Poly<K>::constant(target, c);
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0) t = t * images[i].pow(m[i]);
            r = r + t;
        }
        return r;
    }

    /// this after other: apply(other, then this).
    RingMap compose_after(const RingMap& inner) const {
        if (inner.target != source) throw RingMismatch("RingMap: composition mismatch");
        RingMap r;
        r.source = inner.source;
        r.target = target;
        for (const auto& img : inner.images) r.images.push_back(apply(img));
        return r;
    }
};

template <typename K>
RingMap<K> make_ring_map(RingPtr src, RingPtr dst,
                         const std::vector<Poly<K>>& images) {
    if (images.size() != src->nvars()) throw RingMismatch("RingMap: image count mismatch");
    return RingMap<K>{std::move(src), std::move(dst), images};
}

/// All degree-n monomials of the ring (non-Laurent enumeration), descending
/// graded-lex, optionally filtered by a restriction predicate.
inline std::vector<Monomial> graded_monomials(
    const PolyRing& ring, int n,
    const std::function<bool(const Monomial&)>& restriction = nullptr) {
    std::vector<Monomial> out;
    if (n < 0) return out;
    Monomial cur(ring.nvars(), 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int rem) {
        if (i + 1 == ring.nvars()) {
            int w = ring.weights[i];
            if (w == 0) {
                if (rem == 0) {
                    cur[i] = 0;
                    if (!restriction || restriction(cur)) out.push_back(cur);
                }
                return;
            }
            if (rem % w == 0) {
                cur[i] = rem / w;
                if (!restriction || restriction(cur)) out.push_back(cur);
                cur[i] = 0;
            }
            return;
        }
        int w = ring.weights[i];
        if (w == 0) throw DomainError("graded_monomials: weight-0 variable not enumerable");
        for (int e = rem / w; e >= 0; --e) {
            cur[i] = e;
            rec(i + 1, rem - e * w);
        }
        cur[i] = 0;
    };
    if (ring.nvars() == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    rec(0, n);
    return out;
}

/// Coefficient vector of f over a monomial basis list (must cover f's support).
template <typename K>
Vec<K> coeff_vector(const Poly<K>& f, const std::vector<Monomial>& basis) {
    Vec<K> v(basis.size(), K::zero());
    std::map<Monomial, size_t> idx;
    for (size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
    for (const auto& [m, c] : f.terms()) {
        auto it = idx.find(m);
        if (it == idx.end()) throw DomainError("coeff_vector: monomial outside basis");
        v[it->second] = c;
    }
    return v;
}

template <typename K>
Poly<K> from_coeff_vector(const RingPtr& ring, const std::vector<Monomial>& basis,
                          const Vec<K>& v) {
    Poly<K> p = Poly<K>::zero(ring);
    for (size_t i = 0; i < basis.size(); ++i)
        if (!v[i].is_zero()) p.add_term(basis[i], v[i]);
    return p;
}

/// True iff the map sends every relation to zero; otherwise the first
/// nonzero image is returned as witness.
template <typename K>
std::pair<bool, Poly<K>> check_map_kills(const RingMap<K>& m,
                                         const std::vector<Poly<K>>& relations) {
    for (const auto& r : relations) {
        Poly<K> img = m.apply(r);
        if (!img.is_zero()) return {false, img};
    }
    return {true, Poly<K>::zero(m.target)};
}

} // namespace witt

#endif
