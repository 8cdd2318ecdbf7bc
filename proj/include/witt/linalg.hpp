#ifndef WITT_LINALG_HPP
#define WITT_LINALG_HPP

#include <optional>
#include <vector>

#include "witt/errors.hpp"

namespace witt {

template <typename K>
using Vec = std::vector<K>;

/// Dense row-major matrix over an exact field.
template <typename K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K()) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    K& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    void append_row(const Vec<K>& row) {
        if (cols_ == 0) cols_ = row.size();
        if (row.size() != cols_) throw DomainError("Matrix: row length mismatch");
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    Vec<K> row(size_t i) const {
        return Vec<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    /// In-place reduced row echelon form.  Within a column, prefers pivots
    /// that are constant in the parameter; a-dependent pivots are recorded so
    /// the caller can report excluded specializations.  Returns pivot columns.
    std::vector<size_t> rref(std::vector<K>* pivot_values = nullptr) {
        std::vector<size_t> pivot_cols;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t best = rows_;
            for (size_t i = r; i < rows_; ++i) {
                if ((*this)(i, c).is_zero()) continue;
                if (best == rows_) best = i;
                if (is_param_constant((*this)(i, c))) {
                    best = i;
                    break;
                }
            }
            if (best == rows_) continue;
            swap_rows(r, best);
            K piv = (*this)(r, c);
            if (pivot_values) pivot_values->push_back(piv);
            K inv = K::one() / piv;
            for (size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c).is_zero()) continue;
                K f = (*this)(i, c);
                for (size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivot_cols.push_back(c);
            ++r;
        }
        return pivot_cols;
    }

    size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

private:
    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    size_t rows_, cols_;
    std::vector<K> data_;
};

template <typename K>
struct NullspaceResult {
    std::vector<Vec<K>> basis; // echelon-normalized, leading entry 1
    std::vector<K> pivots;     // pivot values encountered during elimination
};

/// Row-reduce a list of vectors to a canonical reduced-echelon basis.
template <typename K>
std::vector<Vec<K>> row_reduce(const std::vector<Vec<K>>& vectors) {
    if (vectors.empty()) return {};
    Matrix<K> m;
    for (const auto& v : vectors) m.append_row(v);
    m.rref();
    std::vector<Vec<K>> out;
    for (size_t i = 0; i < m.rows(); ++i) {
        Vec<K> r = m.row(i);
        bool nonzero = false;
        for (const auto& x : r)
            if (!x.is_zero()) {
                nonzero = true;
                break;
            }
        if (nonzero) out.push_back(std::move(r));
    }
    return out;
}

/// Right nullspace of m, reduced-echelon normalized.
template <typename K>
NullspaceResult<K> nullspace(const Matrix<K>& m) {
    NullspaceResult<K> res;
    Matrix<K> a = m;
    std::vector<size_t> pivot_cols = a.rref(&res.pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<Vec<K>> raw;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<K> v(m.cols(), K::zero());
        v[f] = K::one();
        for (size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a(r, f);
        raw.push_back(std::move(v));
    }
    res.basis = row_reduce(raw);
    return res;
}

/// Solve A x = b; returns the particular solution with free variables zero,
/// or nullopt if inconsistent.
template <typename K>
std::optional<Vec<K>> solve(const Matrix<K>& a, const Vec<K>& b) {
    if (a.rows() != b.size()) throw DomainError("solve: shape mismatch");
    Matrix<K> aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<size_t> pivots = aug.rref();
    for (size_t c : pivots)
        if (c == a.cols()) return std::nullopt;
    Vec<K> x(a.cols(), K::zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

/// Intersection of the row spans of two bases (vectors of a common length).
template <typename K>
std::vector<Vec<K>> span_intersection(const std::vector<Vec<K>>& a, const std::vector<Vec<K>>& b) {
    if (a.empty() || b.empty()) return {};
    size_t m = a[0].size();
    Matrix<K> c(m, a.size() + b.size());
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t i = 0; i < m; ++i) c(i, j) = a[j][i];
    for (size_t j = 0; j < b.size(); ++j)
        for (size_t i = 0; i < m; ++i) c(i, a.size() + j) = -b[j][i];
    auto ns = nullspace(c);
    std::vector<Vec<K>> vecs;
    for (const auto& xy : ns.basis) {
        Vec<K> v(m, K::zero());
        for (size_t j = 0; j < a.size(); ++j)
            for (size_t i = 0; i < m; ++i) v[i] += xy[j] * a[j][i];
        vecs.push_back(std::move(v));
    }
    return row_reduce(vecs);
}

template <typename K>
bool in_span(const std::vector<Vec<K>>& basis, const Vec<K>& v) {
    bool vz = true;
    for (const auto& x : v)
        if (!x.is_zero()) {
            vz = false;
            break;
        }
    if (vz) return true;
    if (basis.empty()) return false;
    Matrix<K> m;
    for (const auto& b : basis) m.append_row(b);
    size_t r0 = m.rank();
    m.append_row(v);
    return m.rank() == r0;
}

} // namespace witt

#endif
