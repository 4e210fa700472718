// Dense exact matrices over a field F, with the Gaussian-elimination toolkit
// everything else is built on: RREF, rank, kernel, det, inverse, solve.
// All functions are pure; matrices are value types.

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"

namespace ortholab {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
struct Matrix {
    using Elem = typename F::Elem;

    F field{};
    std::size_t rows = 0, cols = 0;
    std::vector<Elem> a;  // row-major

    Matrix() = default;
    Matrix(F f, std::size_t r, std::size_t c)
        : field(f), rows(r), cols(c), a(r * c, f.zero()) {}

    Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(F f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    static Matrix from_rows(F f, const std::vector<Vec<F>>& rws, std::size_t ncols) {
        Matrix m(f, rws.size(), ncols);
        for (std::size_t i = 0; i < rws.size(); ++i) {
            if (rws[i].size() != ncols) throw std::invalid_argument("from_rows: ragged rows");
            for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = rws[i][j];
        }
        return m;
    }

    Vec<F> row(std::size_t i) const {
        return Vec<F>(a.begin() + static_cast<std::ptrdiff_t>(i * cols),
                      a.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
    }

    Vec<F> col(std::size_t j) const {
        Vec<F> v(rows, field.zero());
        for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }

    bool operator==(const Matrix& o) const {
        if (rows != o.rows || cols != o.cols || field != o.field) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!field.eq(a[i], o.a[i])) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a)
            if (!field.is_zero(x)) return false;
        return true;
    }
};

template <class F>
Matrix<F> transpose(const Matrix<F>& m) {
    Matrix<F> t(m.field, m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

template <class F>
Matrix<F> mul(const Matrix<F>& x, const Matrix<F>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mul: dimension mismatch");
    const F& f = x.field;
    Matrix<F> z(f, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const auto& xik = x.at(i, k);
            if (f.is_zero(xik)) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                z.at(i, j) = f.add(z.at(i, j), f.mul(xik, y.at(k, j)));
        }
    return z;
}

template <class F>
Matrix<F> add(const Matrix<F>& x, const Matrix<F>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("add: dimension mismatch");
    Matrix<F> z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.field.add(z.a[i], y.a[i]);
    return z;
}

template <class F>
Matrix<F> sub(const Matrix<F>& x, const Matrix<F>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("sub: dimension mismatch");
    Matrix<F> z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.field.sub(z.a[i], y.a[i]);
    return z;
}

template <class F>
Matrix<F> scalar_mul(const typename F::Elem& c, const Matrix<F>& x) {
    Matrix<F> z = x;
    for (auto& e : z.a) e = x.field.mul(c, e);
    return z;
}

template <class F>
Matrix<F> neg(const Matrix<F>& x) {
    Matrix<F> z = x;
    for (auto& e : z.a) e = x.field.neg(e);
    return z;
}

template <class F>
Vec<F> mul_vec(const Matrix<F>& m, const Vec<F>& v) {
    if (m.cols != v.size()) throw std::invalid_argument("mul_vec: dimension mismatch");
    const F& f = m.field;
    Vec<F> r(m.rows, f.zero());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            r[i] = f.add(r[i], f.mul(m.at(i, j), v[j]));
    return r;
}

template <class F>
typename F::Elem dot(const F& f, const Vec<F>& x, const Vec<F>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
    auto r = f.zero();
    for (std::size_t i = 0; i < x.size(); ++i) r = f.add(r, f.mul(x[i], y[i]));
    return r;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& x, const Matrix<F>& y) {
    if (x.cols != y.cols) throw std::invalid_argument("vstack: column mismatch");
    Matrix<F> z(x.field, x.rows + y.rows, x.cols);
    std::copy(x.a.begin(), x.a.end(), z.a.begin());
    std::copy(y.a.begin(), y.a.end(), z.a.begin() + static_cast<std::ptrdiff_t>(x.a.size()));
    return z;
}

template <class F>
Matrix<F> hstack(const Matrix<F>& x, const Matrix<F>& y) {
    if (x.rows != y.rows) throw std::invalid_argument("hstack: row mismatch");
    Matrix<F> z(x.field, x.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
        for (std::size_t j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
    }
    return z;
}

/// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref_inplace(Matrix<F>& m) {
    const F& f = m.field;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && f.is_zero(m.at(piv, c))) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        auto s = f.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(s, m.at(r, j));
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            auto t = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
Matrix<F> rref(const Matrix<F>& m) {
    Matrix<F> r = m;
    rref_inplace(r);
    return r;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    Matrix<F> r = m;
    return rref_inplace(r).size();
}

/// Basis of the right null space { v : m v = 0 }, one vector per row.
template <class F>
Matrix<F> nullspace(const Matrix<F>& m) {
    const F& f = m.field;
    Matrix<F> r = m;
    auto pivots = rref_inplace(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix<F> basis(f, free_cols.size(), m.cols);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis.at(k, fc) = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis.at(k, pivots[i]) = f.neg(r.at(i, fc));
    }
    return basis;
}

template <class F>
typename F::Elem det(const Matrix<F>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: square matrix required");
    const F& f = m.field;
    Matrix<F> w = m;
    auto d = f.one();
    for (std::size_t c = 0; c < w.cols; ++c) {
        std::size_t piv = c;
        while (piv < w.rows && f.is_zero(w.at(piv, c))) ++piv;
        if (piv == w.rows) return f.zero();
        if (piv != c) {
            for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(piv, j), w.at(c, j));
            d = f.neg(d);
        }
        d = f.mul(d, w.at(c, c));
        auto s = f.inv(w.at(c, c));
        for (std::size_t i = c + 1; i < w.rows; ++i) {
            if (f.is_zero(w.at(i, c))) continue;
            auto t = f.mul(s, w.at(i, c));
            for (std::size_t j = c; j < w.cols; ++j)
                w.at(i, j) = f.sub(w.at(i, j), f.mul(t, w.at(c, j)));
        }
    }
    return d;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse: square matrix required");
    Matrix<F> aug = hstack(m, Matrix<F>::identity(m.field, m.rows));
    auto pivots = rref_inplace(aug);
    if (pivots.size() != m.rows) return std::nullopt;
    Matrix<F> inv(m.field, m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

/// One solution of m x = b, if any.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
    if (b.size() != m.rows) throw std::invalid_argument("solve: dimension mismatch");
    const F& f = m.field;
    Matrix<F> aug(f, m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto pivots = rref_inplace(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // inconsistent
    Vec<F> x(m.cols, f.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols);
    return x;
}

template <class F>
std::string to_string(const Matrix<F>& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows; ++i) {
        s += i == 0 ? "[" : " ";
        for (std::size_t j = 0; j < m.cols; ++j) {
            s += m.field.str(m.at(i, j));
            if (j + 1 < m.cols) s += " ";
        }
        s += i + 1 < m.rows ? "\n" : "]";
    }
    return s;
}

}  // namespace ortholab
