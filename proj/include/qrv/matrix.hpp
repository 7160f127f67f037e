#pragma once

#include <optional>
#include <vector>

#include "qrv/error.hpp"
#include "qrv/field.hpp"

namespace qrv {

// Dense row-major matrix over a field object F (qrv::Fp or qrv::Rat).
// Zero-row / zero-column shapes are legal everywhere; they show up constantly
// as h/t matrices of vertices with no incident arrows.
template <class F>
struct Mat {
    using Elem = typename F::Elem;

    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(int r, int c, Elem fill) : rows(r), cols(c), a((size_t)r * c, fill) {}
    static Mat zero(const F& f, int r, int c) { return Mat(r, c, f.zero()); }
    static Mat identity(const F& f, int n) {
        Mat m = zero(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    Elem& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const Elem& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

template <class F>
bool mat_equal(const F& f, const Mat<F>& x, const Mat<F>& y) {
    if (!x.same_shape(y)) return false;
    for (size_t i = 0; i < x.a.size(); ++i)
        if (!f.equal(x.a[i], y.a[i])) return false;
    return true;
}

template <class F>
bool mat_is_zero(const F& f, const Mat<F>& x) {
    for (const auto& e : x.a)
        if (!f.is_zero(e)) return false;
    return true;
}

template <class F>
Mat<F> mat_mul(const F& f, const Mat<F>& x, const Mat<F>& y) {
    require(x.cols == y.rows, "matrix product shape mismatch");
    Mat<F> z = Mat<F>::zero(f, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const auto& xik = x.at(i, k);
            if (f.is_zero(xik)) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = f.add(z.at(i, j), f.mul(xik, y.at(k, j)));
        }
    return z;
}

template <class F>
Mat<F> mat_add(const F& f, const Mat<F>& x, const Mat<F>& y) {
    require(x.same_shape(y), "matrix sum shape mismatch");
    Mat<F> z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = f.add(z.a[i], y.a[i]);
    return z;
}

template <class F>
Mat<F> mat_sub(const F& f, const Mat<F>& x, const Mat<F>& y) {
    require(x.same_shape(y), "matrix difference shape mismatch");
    Mat<F> z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = f.sub(z.a[i], y.a[i]);
    return z;
}

template <class F>
Mat<F> mat_transpose(const Mat<F>& x) {
    Mat<F> t;
    t.rows = x.cols;
    t.cols = x.rows;
    t.a.resize(x.a.size());
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) t.a[(size_t)j * t.cols + i] = x.at(i, j);
    return t;
}

// Side-by-side concatenation; all blocks must share a row count.
template <class F>
Mat<F> mat_hconcat(const F& f, int rows, const std::vector<const Mat<F>*>& blocks) {
    int cols = 0;
    for (const auto* b : blocks) {
        require(b->rows == rows, "hconcat row mismatch");
        cols += b->cols;
    }
    Mat<F> z = Mat<F>::zero(f, rows, cols);
    int off = 0;
    for (const auto* b : blocks) {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < b->cols; ++j) z.at(i, off + j) = b->at(i, j);
        off += b->cols;
    }
    return z;
}

// Stacked concatenation; all blocks must share a column count.
template <class F>
Mat<F> mat_vconcat(const F& f, int cols, const std::vector<const Mat<F>*>& blocks) {
    int rows = 0;
    for (const auto* b : blocks) {
        require(b->cols == cols, "vconcat column mismatch");
        rows += b->rows;
    }
    Mat<F> z = Mat<F>::zero(f, rows, cols);
    int off = 0;
    for (const auto* b : blocks) {
        for (int i = 0; i < b->rows; ++i)
            for (int j = 0; j < cols; ++j) z.at(off + i, j) = b->at(i, j);
        off += b->rows;
    }
    return z;
}

// In-place Gauss-Jordan to reduced row echelon form.  Pivot choice is the
// first row with a nonzero entry, so the result is deterministic and, being
// exact arithmetic, needs no pivot-magnitude strategy.
template <class F>
std::vector<int> rref_inplace(const F& f, Mat<F>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int i = row; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, col))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        const auto piv_inv = f.inv(m.at(row, col));
        for (int j = col; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), piv_inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || f.is_zero(m.at(i, col))) continue;
            const auto factor = m.at(i, col);
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
struct Rref {
    Mat<F> m;
    std::vector<int> pivots;
};

template <class F>
Rref<F> rref(const F& f, Mat<F> m) {
    auto pivots = rref_inplace(f, m);
    return {std::move(m), std::move(pivots)};
}

template <class F>
int mat_rank(const F& f, Mat<F> m) {
    return (int)rref_inplace(f, m).size();
}

// Basis of the right kernel, one column per basis vector, in the canonical
// RREF parametrization (free columns in increasing order).
template <class F>
Mat<F> kernel_basis(const F& f, const Mat<F>& m) {
    auto r = rref(f, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : r.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat<F> k = Mat<F>::zero(f, m.cols, (int)free_cols.size());
    for (int idx = 0; idx < (int)free_cols.size(); ++idx) {
        int fc = free_cols[idx];
        k.at(fc, idx) = f.one();
        for (int pi = 0; pi < (int)r.pivots.size(); ++pi)
            k.at(r.pivots[pi], idx) = f.neg(r.m.at(pi, fc));
    }
    return k;
}

// One solution of A x = b, if consistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const F& f, const Mat<F>& A,
                                                   const std::vector<typename F::Elem>& b) {
    require((int)b.size() == A.rows, "solve: rhs length mismatch");
    Mat<F> aug = Mat<F>::zero(f, A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    auto r = rref(f, std::move(aug));
    for (int c : r.pivots)
        if (c == A.cols) return std::nullopt;  // row [0 ... 0 | 1]
    std::vector<typename F::Elem> x(A.cols, f.zero());
    for (int pi = 0; pi < (int)r.pivots.size(); ++pi) x[r.pivots[pi]] = r.m.at(pi, A.cols);
    return x;
}

template <class F>
typename F::Elem mat_det(const F& f, Mat<F> m) {
    require(m.rows == m.cols, "determinant of non-square matrix");
    typename F::Elem det = f.one();
    int n = m.rows;
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int i = col; i < n; ++i)
            if (!f.is_zero(m.at(i, col))) {
                sel = i;
                break;
            }
        if (sel < 0) return f.zero();
        if (sel != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            det = f.neg(det);
        }
        det = f.mul(det, m.at(col, col));
        const auto piv_inv = f.inv(m.at(col, col));
        for (int i = col + 1; i < n; ++i) {
            if (f.is_zero(m.at(i, col))) continue;
            const auto factor = f.mul(m.at(i, col), piv_inv);
            for (int j = col; j < n; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(col, j)));
        }
    }
    return det;
}

template <class F>
std::optional<Mat<F>> mat_inverse(const F& f, const Mat<F>& m) {
    require(m.rows == m.cols, "inverse of non-square matrix");
    int n = m.rows;
    Mat<F> aug = Mat<F>::zero(f, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = f.one();
    }
    auto r = rref(f, std::move(aug));
    if ((int)r.pivots.size() != n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
    Mat<F> inv = Mat<F>::zero(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
    return inv;
}

}  // namespace qrv
