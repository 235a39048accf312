#ifndef ZARISKI_LINALG_HPP
#define ZARISKI_LINALG_HPP

#include <stdexcept>
#include <vector>

#include "dense_poly.hpp"

namespace zariski {

template <class E>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<E> a;

    Mat() = default;
    Mat(int r, int c, E fill = E{}) : rows(r), cols(c), a(size_t(r) * c, fill) {}
    E& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const E& at(int i, int j) const { return a[size_t(i) * cols + j]; }
};

template <class E>
Mat<E> mat_transpose(const Mat<E>& m) {
    Mat<E> r(m.cols, m.rows);
    for (int i = 0; i < m.rows; i++)
        for (int j = 0; j < m.cols; j++) r.at(j, i) = m.at(i, j);
    return r;
}

// Rank by fraction-free (Bareiss) elimination. Pivot: first row with a
// nonzero entry in the current column, scanning row-major. Exact over any
// field object.
template <class F>
int rank_exact(const F& K, Mat<typename F::Elem> m) {
    int rank = 0;
    typename F::Elem prev = K.one();
    for (int col = 0; col < m.cols && rank < m.rows; col++) {
        int piv = -1;
        for (int i = rank; i < m.rows; i++)
            if (!K.is_zero(m.at(i, col))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols; j++) std::swap(m.at(piv, j), m.at(rank, j));
        for (int i = rank + 1; i < m.rows; i++) {
            for (int j = col + 1; j < m.cols; j++) {
                auto t = K.sub(K.mul(m.at(rank, col), m.at(i, j)),
                               K.mul(m.at(i, col), m.at(rank, j)));
                m.at(i, j) = K.div(t, prev);
            }
            m.at(i, col) = K.zero();
        }
        prev = m.at(rank, col);
        rank++;
    }
    return rank;
}

// Basis of the right kernel (null space), reduced row echelon based.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& K,
                                                        Mat<typename F::Elem> m) {
    using E = typename F::Elem;
    int r = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < m.cols && r < m.rows; col++) {
        int piv = -1;
        for (int i = r; i < m.rows; i++)
            if (!K.is_zero(m.at(i, col))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; j++) std::swap(m.at(piv, j), m.at(r, j));
        E ip = K.div(K.one(), m.at(r, col));
        for (int j = col; j < m.cols; j++) m.at(r, j) = K.mul(m.at(r, j), ip);
        for (int i = 0; i < m.rows; i++) {
            if (i == r || K.is_zero(m.at(i, col))) continue;
            E f = m.at(i, col);
            for (int j = col; j < m.cols; j++)
                m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(r, j)));
        }
        pivot_col.push_back(col);
        r++;
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<E>> basis;
    for (int free = 0; free < m.cols; free++) {
        if (is_pivot[free]) continue;
        std::vector<E> v(m.cols, K.zero());
        v[free] = K.one();
        for (int i = 0; i < r; i++)
            v[pivot_col[i]] = K.neg(m.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
typename F::Elem mat_det(const F& K, Mat<typename F::Elem> m) {
    if (m.rows != m.cols) throw std::invalid_argument("mat_det: not square");
    int n = m.rows;
    auto det = K.one();
    auto prev = K.one();
    int sign = 1;
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int i = col; i < n; i++)
            if (!K.is_zero(m.at(i, col))) { piv = i; break; }
        if (piv < 0) return K.zero();
        if (piv != col) {
            for (int j = 0; j < n; j++) std::swap(m.at(piv, j), m.at(col, j));
            sign = -sign;
        }
        for (int i = col + 1; i < n; i++) {
            for (int j = col + 1; j < n; j++) {
                auto t = K.sub(K.mul(m.at(col, col), m.at(i, j)),
                               K.mul(m.at(i, col), m.at(col, j)));
                m.at(i, j) = K.div(t, prev);
            }
            m.at(i, col) = K.zero();
        }
        prev = m.at(col, col);
    }
    det = m.at(n - 1, n - 1);
    return sign < 0 ? K.neg(det) : det;
}

// Inverse over a field; throws if singular.
template <class F>
Mat<typename F::Elem> mat_inverse(const F& K, Mat<typename F::Elem> m) {
    if (m.rows != m.cols) throw std::invalid_argument("mat_inverse: not square");
    using E = typename F::Elem;
    int n = m.rows;
    Mat<E> inv(n, n, K.zero());
    for (int i = 0; i < n; i++) inv.at(i, i) = K.one();
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int i = col; i < n; i++)
            if (!K.is_zero(m.at(i, col))) { piv = i; break; }
        if (piv < 0) throw std::domain_error("mat_inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < n; j++) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        E ip = K.div(K.one(), m.at(col, col));
        for (int j = 0; j < n; j++) {
            m.at(col, j) = K.mul(m.at(col, j), ip);
            inv.at(col, j) = K.mul(inv.at(col, j), ip);
        }
        for (int i = 0; i < n; i++) {
            if (i == col || K.is_zero(m.at(i, col))) continue;
            E f = m.at(i, col);
            for (int j = 0; j < n; j++) {
                m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(col, j)));
                inv.at(i, j) = K.sub(inv.at(i, j), K.mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

} // namespace zariski

#endif
