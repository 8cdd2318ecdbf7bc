#ifndef WITT_ENVELOPE_HPP
#define WITT_ENVELOPE_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "witt/errors.hpp"
#include "witt/linalg.hpp"

namespace witt {

// U(W+) and U(W) in PBW normal form.  A PBW monomial e_{i1}...e_{ik} is a
// weakly increasing index sequence; straightening rewrites e_j e_i with j > i
// to e_i e_j + (i-j) e_{i+j}, from the bracket [e_n, e_m] = (m-n) e_{n+m}.

enum class Mode { WPlus, Witt };

using PBWMonomial = std::vector<int>; // weakly increasing

inline int pbw_degree(const PBWMonomial& m) {
    int d = 0;
    for (int i : m) d += i;
    return d;
}

template <typename K>
class EnvElement {
public:
    using TermMap = std::map<PBWMonomial, K>;

    explicit EnvElement(Mode mode = Mode::WPlus) : mode_(mode) {}

    static EnvElement zero(Mode mode = Mode::WPlus) { return EnvElement(mode); }
    static EnvElement one(Mode mode = Mode::WPlus) {
        EnvElement e(mode);
        e.terms_.emplace(PBWMonomial{}, K::one());
        return e;
    }
    static EnvElement generator(int n, Mode mode = Mode::WPlus) {
        if (mode == Mode::WPlus && n < 1)
            throw ModeError("EnvElement: index " + std::to_string(n) + " not allowed in W+ mode");
        EnvElement e(mode);
        e.terms_.emplace(PBWMonomial{n}, K::one());
        return e;
    }

    Mode mode() const { return mode_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PBWMonomial& m, const K& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend EnvElement operator+(const EnvElement& a, const EnvElement& b) {
        a.check(b);
        EnvElement r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend EnvElement operator-(const EnvElement& a, const EnvElement& b) {
        a.check(b);
        EnvElement r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    EnvElement operator-() const {
        EnvElement r(mode_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    EnvElement scaled(const K& k) const {
        EnvElement r(mode_);
        if (k.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
        return r;
    }
    friend bool operator==(const EnvElement& a, const EnvElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const EnvElement& a, const EnvElement& b) { return !(a == b); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = pbw_degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (pbw_degree(m) != d) return false;
        return true;
    }
    int degree() const {
        if (terms_.empty()) throw DomainError("EnvElement: degree of zero");
        return pbw_degree(terms_.begin()->first);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            std::string ms = mono_str(m);
            if (ms.empty())
                s += mag;
            else if (mag == "1")
                s += ms;
            else {
                s += (mag.find(' ') != std::string::npos) ? "(" + mag + ")" : mag;
                s += "*" + ms;
            }
        }
        return s;
    }

private:
    static std::string mono_str(const PBWMonomial& m) {
        std::string s;
        size_t i = 0;
        while (i < m.size()) {
            size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            if (!s.empty()) s += "*";
            s += "e" + std::to_string(m[i]);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s;
    }
    void check(const EnvElement& o) const {
        if (mode_ != o.mode_) throw ModeError("EnvElement: mode mismatch");
    }

    Mode mode_;
    TermMap terms_;
};

/// PBW normal form of an arbitrary word of generator indices.
/// Leftmost-inversion rewriting with an explicit worklist.
template <typename K>
EnvElement<K> straighten(const std::vector<int>& word, Mode mode = Mode::WPlus,
                         const K& coeff = K::one()) {
    if (mode == Mode::WPlus)
        for (int i : word)
            if (i < 1) throw ModeError("straighten: nonpositive index in W+ mode");
    EnvElement<K> result(mode);
    std::vector<std::pair<std::vector<int>, K>> work{{word, coeff}};
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        size_t k = 0;
        bool sorted = true;
        for (; k + 1 < w.size(); ++k)
            if (w[k] > w[k + 1]) {
                sorted = false;
                break;
            }
        if (sorted) {
            result.add_term(w, c);
            continue;
        }
        int j = w[k], i = w[k + 1];
        std::vector<int> swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        std::vector<int> contracted;
        contracted.reserve(w.size() - 1);
        contracted.insert(contracted.end(), w.begin(), w.begin() + k);
        contracted.push_back(i + j);
        contracted.insert(contracted.end(), w.begin() + k + 2, w.end());
        work.emplace_back(std::move(swapped), c);
        work.emplace_back(std::move(contracted), c * K::from_int(i - j));
    }
    return result;
}

template <typename K>
EnvElement<K> env_mul(const EnvElement<K>& a, const EnvElement<K>& b) {
    if (a.mode() != b.mode()) throw ModeError("env_mul: mode mismatch");
    EnvElement<K> r(a.mode());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<int> w = ma;
            w.insert(w.end(), mb.begin(), mb.end());
            r = r + straighten<K>(w, a.mode(), ca * cb);
        }
    return r;
}

template <typename K>
EnvElement<K> bracket(const EnvElement<K>& x, const EnvElement<K>& y) {
    return env_mul(x, y) - env_mul(y, x);
}

/// k-fold iterated commutator ad(x)^k (y).
template <typename K>
EnvElement<K> ad_power(const EnvElement<K>& x, int k, const EnvElement<K>& y) {
    EnvElement<K> r = y;
    for (int i = 0; i < k; ++i) r = bracket(x, r);
    return r;
}

/// All weakly increasing positive sequences summing to n (W+ basis of degree n),
/// in ascending lexicographic order; count = p(n).
inline std::vector<PBWMonomial> env_basis(int n) {
    if (n < 1) throw ModeError("env_basis: degree must be >= 1");
    std::vector<PBWMonomial> out;
    PBWMonomial cur;
    std::function<void(int, int)> rec = [&](int rem, int minv) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int i = minv; i <= rem; ++i) {
            cur.push_back(i);
            rec(rem - i, i);
            cur.pop_back();
        }
    };
    rec(n, 1);
    return out;
}

// ---------------------------------------------------------------------------
// The free algebra k<t1, t2>, graded with deg t_i = i, and the projection pi.

using FreeWord = std::vector<int>; // letters in {1, 2}

inline int free_degree(const FreeWord& w) {
    int d = 0;
    for (int i : w) d += i;
    return d;
}

template <typename K>
class FreeElement {
public:
    using TermMap = std::map<FreeWord, K>;

    FreeElement() = default;
    static FreeElement zero() { return FreeElement(); }
    static FreeElement one() {
        FreeElement e;
        e.terms_.emplace(FreeWord{}, K::one());
        return e;
    }
    static FreeElement letter(int i) {
        if (i != 1 && i != 2) throw DomainError("FreeElement: letters are t1, t2");
        FreeElement e;
        e.terms_.emplace(FreeWord{i}, K::one());
        return e;
    }
    static FreeElement word(FreeWord w, const K& c) {
        FreeElement e;
        if (!c.is_zero()) e.terms_.emplace(std::move(w), c);
        return e;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const FreeWord& w, const K& c) {
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend FreeElement operator+(const FreeElement& a, const FreeElement& b) {
        FreeElement r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend FreeElement operator-(const FreeElement& a, const FreeElement& b) {
        FreeElement r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
        return r;
    }
    FreeElement operator-() const {
        FreeElement r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    friend FreeElement operator*(const FreeElement& a, const FreeElement& b) {
        FreeElement r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                FreeWord w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(w, ca * cb);
            }
        return r;
    }
    FreeElement scaled(const K& k) const {
        FreeElement r;
        if (k.is_zero()) return r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * k);
        return r;
    }
    friend bool operator==(const FreeElement& a, const FreeElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const FreeElement& a, const FreeElement& b) { return !(a == b); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = free_degree(terms_.begin()->first);
        for (const auto& [w, c] : terms_)
            if (free_degree(w) != d) return false;
        return true;
    }
    int degree() const {
        if (terms_.empty()) throw DomainError("FreeElement: degree of zero");
        return free_degree(terms_.begin()->first);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            std::string ws = word_str(w);
            if (ws.empty())
                s += mag;
            else if (mag == "1")
                s += ws;
            else
                s += mag + "*" + ws;
        }
        return s;
    }

private:
    static std::string word_str(const FreeWord& w) {
        std::string s;
        size_t i = 0;
        while (i < w.size()) {
            size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (!s.empty()) s += "*";
            s += "t" + std::to_string(w[i]);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s;
    }
    TermMap terms_;
};

template <typename K>
FreeElement<K> free_bracket(const FreeElement<K>& a, const FreeElement<K>& b) {
    return a * b - b * a;
}

/// All words of weighted degree n, ascending lexicographic (t1 < t2).
inline std::vector<FreeWord> free_word_basis(int n) {
    std::vector<FreeWord> out;
    if (n < 0) return out;
    FreeWord cur;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int i = 1; i <= 2 && i <= rem; ++i) {
            cur.push_back(i);
            rec(rem - i);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

/// pi: k<t1,t2> -> U(W+), t_i -> e_i.
template <typename K>
EnvElement<K> free_reduce_and_project(const FreeElement<K>& f) {
    EnvElement<K> r(Mode::WPlus);
    for (const auto& [w, c] : f.terms()) r = r + straighten<K>(w, Mode::WPlus, c);
    return r;
}

} // namespace witt

#endif
