// Subspaces of F^n in canonical form: the basis is the RREF of any spanning
// set, with zero rows dropped.  RREF is a unique representative, so subspace
// equality is plain matrix equality, and the lexicographic order on RREF
// matrices gives a deterministic total order for enumeration output.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace ortholab {

template <class F>
struct Subspace {
    using Elem = typename F::Elem;

    F field{};
    std::size_t ambient = 0;
    Matrix<F> basis;  // RREF, rows = basis vectors, no zero rows

    Subspace() = default;

    /// Canonicalize a spanning set (rows of m).
    static Subspace span_of(const Matrix<F>& m) {
        Subspace s;
        s.field = m.field;
        s.ambient = m.cols;
        Matrix<F> r = m;
        auto pivots = rref_inplace(r);
        s.basis = Matrix<F>(m.field, pivots.size(), m.cols);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t j = 0; j < m.cols; ++j) s.basis.at(i, j) = r.at(i, j);
        return s;
    }

    static Subspace span_of_vectors(F f, const std::vector<Vec<F>>& vs, std::size_t n) {
        return span_of(Matrix<F>::from_rows(f, vs, n));
    }

    /// A subspace already given by an RREF basis (trusted, used by enumeration).
    static Subspace from_rref(const Matrix<F>& m) {
        Subspace s;
        s.field = m.field;
        s.ambient = m.cols;
        s.basis = m;
        return s;
    }

    static Subspace zero(F f, std::size_t n) {
        Subspace s;
        s.field = f;
        s.ambient = n;
        s.basis = Matrix<F>(f, 0, n);
        return s;
    }

    static Subspace full(F f, std::size_t n) {
        return from_rref(Matrix<F>::identity(f, n));
    }

    std::size_t dim() const { return basis.rows; }

    bool contains(const Vec<F>& v) const {
        // v must reduce to zero against the RREF basis
        Vec<F> w = v;
        const F& f = field;
        for (std::size_t i = 0; i < basis.rows; ++i) {
            std::size_t piv = 0;
            while (piv < ambient && f.is_zero(basis.at(i, piv))) ++piv;
            if (piv == ambient) continue;
            if (!f.is_zero(w[piv])) {
                auto t = w[piv];
                for (std::size_t j = 0; j < ambient; ++j)
                    w[j] = f.sub(w[j], f.mul(t, basis.at(i, j)));
            }
        }
        for (const auto& x : w)
            if (!f.is_zero(x)) return false;
        return true;
    }

    bool contains(const Subspace& o) const {
        for (std::size_t i = 0; i < o.basis.rows; ++i)
            if (!contains(o.basis.row(i))) return false;
        return true;
    }

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && basis == o.basis;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
};

template <class F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& v) {
    if (u.ambient != v.ambient) throw std::invalid_argument("sum: ambient mismatch");
    return Subspace<F>::span_of(vstack(u.basis, v.basis));
}

/// Zassenhaus: RREF of [U|U; V|0]; rows whose left half vanished carry an
/// intersection basis in the right half.
template <class F>
Subspace<F> intersect(const Subspace<F>& u, const Subspace<F>& v) {
    if (u.ambient != v.ambient) throw std::invalid_argument("intersect: ambient mismatch");
    const F& f = u.field;
    std::size_t n = u.ambient;
    Matrix<F> block(f, u.dim() + v.dim(), 2 * n);
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block.at(i, j) = u.basis.at(i, j);
            block.at(i, n + j) = u.basis.at(i, j);
        }
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) block.at(u.dim() + i, j) = v.basis.at(i, j);
    rref_inplace(block);

    std::vector<Vec<F>> rows;
    for (std::size_t i = 0; i < block.rows; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            if (!f.is_zero(block.at(i, j))) left_zero = false;
        if (!left_zero) continue;
        Vec<F> w(n, f.zero());
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            w[j] = block.at(i, n + j);
            if (!f.is_zero(w[j])) nonzero = true;
        }
        if (nonzero) rows.push_back(w);
    }
    return Subspace<F>::span_of_vectors(f, rows, n);
}

/// Right null space of m as a canonical subspace.
template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
    return Subspace<F>::span_of(nullspace(m));
}

/// Pivot columns of an RREF basis.
template <class F>
std::vector<std::size_t> pivot_columns(const Subspace<F>& s) {
    std::vector<std::size_t> ps;
    const F& f = s.field;
    for (std::size_t i = 0; i < s.basis.rows; ++i) {
        std::size_t c = 0;
        while (c < s.ambient && f.is_zero(s.basis.at(i, c))) ++c;
        ps.push_back(c);
    }
    return ps;
}

/// Deterministic total order on subspaces, matching the enumeration order:
/// dimension, then pivot-column pattern, then entries row-major.
template <class F>
bool lex_less(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    auto pa = pivot_columns(a), pb = pivot_columns(b);
    if (pa != pb) return pa < pb;
    const F& f = a.field;
    for (std::size_t i = 0; i < a.basis.a.size(); ++i) {
        int c = f.cmp(a.basis.a[i], b.basis.a[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace ortholab
