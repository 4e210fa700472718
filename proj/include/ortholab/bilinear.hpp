// Bilinear forms: symmetric and alternating Gram calculus over an exact
// field.  Everything a quadratic space needs fiberwise: isotropy tests,
// orthogonal complements, Witt decomposition into hyperbolic planes plus an
// anisotropic part, Darboux bases for symplectic forms, and congruence
// (isometry) testing with an explicit change of basis.
//
// Conventions.  Forms are scalar-valued: a line-bundle-valued form becomes
// scalar after choosing a fiber generator of the value line, and all the
// geometry here is generator-independent up to scaling.  A symmetric form is
// "split" when its Witt index is floor(dim/2), the maximum.  The standard
// symplectic Gram on dim 2n is J = [[0, I], [-I, 0]].
//
// Over F_p (p odd) the isotropic-vector search is complete: a diagonal pair
// is solved by a square-root test, and any ternary diagonal form over F_p is
// isotropic, with a solution found by a one-variable scan.  Over Q the search
// uses the signature (definite => anisotropic) plus a bounded integer scan;
// split inputs are the contract over Q, and a mixed-signature form whose
// isotropic vector escapes the scan is reported as unsupported rather than
// misclassified.

#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "subspace.hpp"

namespace ortholab {

enum class FormKind { symmetric, alternating };

template <class F>
struct BilinearForm {
    using Elem = typename F::Elem;

    F field{};
    FormKind kind = FormKind::symmetric;
    Matrix<F> gram;

    BilinearForm() = default;

    BilinearForm(FormKind k, Matrix<F> g) : field(g.field), kind(k), gram(std::move(g)) {
        if (gram.rows != gram.cols) throw std::invalid_argument("BilinearForm: Gram matrix must be square");
        const F& f = field;
        for (std::size_t i = 0; i < gram.rows; ++i)
            for (std::size_t j = 0; j < gram.cols; ++j) {
                if (kind == FormKind::symmetric) {
                    if (!f.eq(gram.at(i, j), gram.at(j, i)))
                        throw std::invalid_argument("BilinearForm: Gram not symmetric");
                } else {
                    if (!f.eq(gram.at(i, j), f.neg(gram.at(j, i))))
                        throw std::invalid_argument("BilinearForm: Gram not antisymmetric");
                    if (i == j && !f.is_zero(gram.at(i, i)))
                        throw std::invalid_argument("BilinearForm: alternating Gram must have zero diagonal");
                }
            }
    }

    std::size_t dim() const { return gram.rows; }

    Elem eval(const Vec<F>& u, const Vec<F>& v) const {
        return dot(field, u, mul_vec(gram, v));
    }
};

template <class F>
bool is_nondegenerate(const BilinearForm<F>& f) {
    return !f.field.is_zero(det(f.gram));
}

/// Kernel of v -> f(v, .), nonzero exactly when f is degenerate.
template <class F>
Subspace<F> radical(const BilinearForm<F>& f) {
    return kernel(f.gram);
}

template <class F>
BilinearForm<F> orthogonal_direct_sum(const BilinearForm<F>& f1, const BilinearForm<F>& f2) {
    if (f1.kind != f2.kind) throw std::invalid_argument("orthogonal_direct_sum: mixed form kinds");
    if (f1.field != f2.field) throw std::invalid_argument("orthogonal_direct_sum: mixed fields");
    const F& f = f1.field;
    std::size_t n1 = f1.dim(), n2 = f2.dim();
    Matrix<F> g(f, n1 + n2, n1 + n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) g.at(i, j) = f1.gram.at(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) g.at(n1 + i, n1 + j) = f2.gram.at(i, j);
    return BilinearForm<F>(f1.kind, g);
}

/// E^perp = { v : f(v, e) = 0 for all e in E }.
template <class F>
Subspace<F> orthogonal_complement(const BilinearForm<F>& f, const Subspace<F>& s) {
    if (s.ambient != f.dim()) throw std::invalid_argument("orthogonal_complement: ambient mismatch");
    if (!is_nondegenerate(f))
        throw std::domain_error("orthogonal_complement: form is degenerate (nonzero radical)");
    return kernel(mul(s.basis, transpose(f.gram)));
}

/// Gram of f restricted to s, in the RREF basis of s.
template <class F>
Matrix<F> restricted_gram(const BilinearForm<F>& f, const Subspace<F>& s) {
    if (s.ambient != f.dim()) throw std::invalid_argument("restricted_gram: ambient mismatch");
    return mul(mul(s.basis, f.gram), transpose(s.basis));
}

template <class F>
bool is_isotropic(const BilinearForm<F>& f, const Subspace<F>& s) {
    return restricted_gram(f, s).is_zero();
}

template <class F>
bool is_isotropic_vector(const BilinearForm<F>& f, const Vec<F>& v) {
    return f.field.is_zero(f.eval(v, v));
}

/// True when the Grams agree up to one nonzero scalar.
template <class F>
std::optional<typename F::Elem> proportionality(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows != b.rows || a.cols != b.cols) return std::nullopt;
    const F& f = a.field;
    auto c = f.zero();
    bool have_c = false;
    for (std::size_t i = 0; i < a.a.size(); ++i) {
        bool za = f.is_zero(a.a[i]), zb = f.is_zero(b.a[i]);
        if (za != zb) return std::nullopt;
        if (za) continue;
        auto r = f.div(a.a[i], b.a[i]);
        if (!have_c) { c = r; have_c = true; }
        else if (!f.eq(c, r)) return std::nullopt;
    }
    if (!have_c) return std::nullopt;  // both zero: no distinguished scalar
    return c;
}

template <class F>
bool equal_up_to_scalar(const BilinearForm<F>& f1, const BilinearForm<F>& f2) {
    if (f1.kind != f2.kind) return false;
    if (f1.gram.is_zero() && f2.gram.is_zero() && f1.dim() == f2.dim()) return true;
    return proportionality(f1.gram, f2.gram).has_value();
}

// ---------------------------------------------------------------------------
// Diagonalization and isotropic vectors
// ---------------------------------------------------------------------------

/// Congruence-diagonalize a symmetric form: returns (B, d) with B^T G B
/// diagonal with entries d.  Zero entries appear iff G is degenerate.
template <class F>
std::pair<Matrix<F>, Vec<F>> diagonalize(const BilinearForm<F>& form) {
    if (form.kind != FormKind::symmetric)
        throw std::invalid_argument("diagonalize: symmetric form required");
    const F& f = form.field;
    std::size_t n = form.dim();
    // current basis vectors, original coordinates
    std::vector<Vec<F>> work;
    for (std::size_t i = 0; i < n; ++i) {
        Vec<F> e(n, f.zero());
        e[i] = f.one();
        work.push_back(e);
    }
    auto pair_val = [&](const Vec<F>& u, const Vec<F>& v) { return form.eval(u, v); };

    std::vector<Vec<F>> out;
    Vec<F> diag;
    while (!work.empty()) {
        // find a vector of nonzero norm; if all norms vanish, fix up with a sum
        std::size_t pick = work.size();
        for (std::size_t i = 0; i < work.size(); ++i)
            if (!f.is_zero(pair_val(work[i], work[i]))) { pick = i; break; }
        if (pick == work.size()) {
            bool fixed = false;
            for (std::size_t i = 0; i < work.size() && !fixed; ++i)
                for (std::size_t j = i + 1; j < work.size() && !fixed; ++j)
                    if (!f.is_zero(pair_val(work[i], work[j]))) {
                        for (std::size_t t = 0; t < n; ++t)
                            work[i][t] = f.add(work[i][t], work[j][t]);  // norm 2*f(ei,ej) != 0
                        pick = i;
                        fixed = true;
                    }
            if (!fixed) {
                // restriction is the zero form; emit the rest as zero diagonal
                for (auto& v : work) {
                    out.push_back(v);
                    diag.push_back(f.zero());
                }
                break;
            }
        }
        Vec<F> v = work[pick];
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(pick));
        auto nv = pair_val(v, v);
        out.push_back(v);
        diag.push_back(nv);
        for (auto& w : work) {
            auto t = f.div(pair_val(w, v), nv);
            for (std::size_t j = 0; j < n; ++j) w[j] = f.sub(w[j], f.mul(t, v[j]));
        }
    }
    Matrix<F> b(f, n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) b.at(r, c) = out[c][r];
    return {b, diag};
}

namespace detail {

// isotropic vector of the diagonal form diag(d) restricted to indices idx,
// expressed in diagonal coordinates
template <class F>
std::optional<Vec<F>> diagonal_isotropic(const F& f, const Vec<F>& d) {
    std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i)
        if (f.is_zero(d[i])) {
            Vec<F> v(n, f.zero());
            v[i] = f.one();
            return v;
        }
    // pairs: d_i x^2 + d_j = 0
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto q = f.neg(f.div(d[j], d[i]));
            if (auto x = f.sqrt(q)) {
                Vec<F> v(n, f.zero());
                v[i] = *x;
                v[j] = f.one();
                return v;
            }
        }
    if (n < 3) return std::nullopt;
    if constexpr (!F::is_rational_field) {
        // any ternary form over F_p is isotropic; scan with z = 1
        // (a solution with z = 0 would have been found by the pair test)
        for (typename F::Elem y = 0; y < f.p; ++y) {
            auto rhs = f.neg(f.add(d[2], f.mul(d[1], f.mul(y, y))));
            auto q = f.div(rhs, d[0]);
            if (auto x = f.sqrt(q)) {
                Vec<F> v(d.size(), f.zero());
                v[0] = *x;
                v[1] = y;
                v[2] = f.one();
                return v;
            }
        }
        throw std::logic_error("diagonal_isotropic: ternary scan failed over F_p");
    } else {
        bool pos = false, neg = false;
        for (const auto& x : d) (x > 0 ? pos : neg) = true;
        if (!(pos && neg)) return std::nullopt;  // definite, hence anisotropic
        // bounded integer search on ternary subforms with mixed signs
        const long H = 30;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    for (long x = 0; x <= H; ++x)
                        for (long y = -H; y <= H; ++y)
                            for (long z = -H; z <= H; ++z) {
                                if (x == 0 && y == 0 && z == 0) continue;
                                mpq_class s = d[i] * x * x + d[j] * y * y + d[k] * z * z;
                                if (s == 0) {
                                    Vec<F> v(n, f.zero());
                                    v[i] = x;
                                    v[j] = y;
                                    v[k] = z;
                                    return v;
                                }
                            }
                }
        throw std::domain_error(
            "isotropic search over Q inconclusive: indefinite anisotropy detection is unsupported");
    }
}

}  // namespace detail

/// Some isotropic vector of a symmetric form, or nullopt when anisotropic.
template <class F>
std::optional<Vec<F>> isotropic_vector(const BilinearForm<F>& form) {
    if (form.dim() == 0) return std::nullopt;
    auto [b, d] = diagonalize(form);
    auto v = detail::diagonal_isotropic(form.field, d);
    if (!v) return std::nullopt;
    return mul_vec(b, *v);
}

// ---------------------------------------------------------------------------
// Witt decomposition
// ---------------------------------------------------------------------------

template <class F>
struct WittData {
    std::size_t witt_index = 0;
    Matrix<F> hyperbolic_basis;  // columns: v1,u1,...,vk,uk, anisotropic rest
    std::size_t anisotropic_dim = 0;
    Matrix<F> normal_gram;  // B^T G B: k blocks [[0,1],[1,0]], then diagonal
};

/// Split off hyperbolic planes until the rest is anisotropic.
template <class F>
WittData<F> witt_decompose(const BilinearForm<F>& form) {
    if (form.kind != FormKind::symmetric)
        throw std::invalid_argument("witt_decompose: symmetric form required");
    if (!is_nondegenerate(form))
        throw std::domain_error("witt_decompose: form is degenerate (nonzero radical)");
    const F& f = form.field;
    std::size_t n = form.dim();

    std::vector<Vec<F>> rest;
    for (std::size_t i = 0; i < n; ++i) {
        Vec<F> e(n, f.zero());
        e[i] = f.one();
        rest.push_back(e);
    }
    std::vector<Vec<F>> pairs;  // v1,u1,v2,u2,...

    auto two_inv = f.inv(f.from_int(2));
    while (rest.size() >= 2) {
        // isotropic vector of the restriction to span(rest)
        Matrix<F> rg(f, rest.size(), rest.size());
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (std::size_t j = 0; j < rest.size(); ++j) rg.at(i, j) = form.eval(rest[i], rest[j]);
        auto iso = isotropic_vector(BilinearForm<F>(FormKind::symmetric, rg));
        if (!iso) break;
        Vec<F> v(n, f.zero());
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul((*iso)[i], rest[i][j]));

        // hyperbolic partner: f(v,u) = 1, then isotropize u
        std::size_t w = rest.size();
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (!f.is_zero(form.eval(v, rest[i]))) { w = i; break; }
        if (w == rest.size())
            throw std::logic_error("witt_decompose: isotropic vector pairs to zero (degenerate restriction)");
        auto s = f.inv(form.eval(v, rest[w]));
        Vec<F> u(n, f.zero());
        for (std::size_t j = 0; j < n; ++j) u[j] = f.mul(s, rest[w][j]);
        auto t = f.mul(two_inv, form.eval(u, u));
        for (std::size_t j = 0; j < n; ++j) u[j] = f.sub(u[j], f.mul(t, v[j]));

        pairs.push_back(v);
        pairs.push_back(u);

        std::vector<Vec<F>> next;
        for (const auto& x : rest) {
            Vec<F> y = x;
            auto cu = form.eval(x, u), cv = form.eval(x, v);
            for (std::size_t j = 0; j < n; ++j)
                y[j] = f.sub(y[j], f.add(f.mul(cu, v[j]), f.mul(cv, u[j])));
            bool zero = true;
            for (const auto& e : y)
                if (!f.is_zero(e)) { zero = false; break; }
            if (!zero) next.push_back(y);
        }
        // keep an independent complement of the split-off plane
        Matrix<F> nm = Matrix<F>::from_rows(f, next, n);
        Matrix<F> red = nm;
        auto piv = rref_inplace(red);
        std::vector<Vec<F>> indep;
        for (std::size_t i = 0; i < piv.size(); ++i) indep.push_back(red.row(i));
        rest = std::move(indep);
    }

    // diagonalize the anisotropic rest
    std::vector<Vec<F>> aniso = rest;
    if (aniso.size() == 1) {
        // nothing to do
    } else if (aniso.size() >= 2) {
        Matrix<F> rg(f, aniso.size(), aniso.size());
        for (std::size_t i = 0; i < aniso.size(); ++i)
            for (std::size_t j = 0; j < aniso.size(); ++j) rg.at(i, j) = form.eval(aniso[i], aniso[j]);
        auto [db, dd] = diagonalize(BilinearForm<F>(FormKind::symmetric, rg));
        std::vector<Vec<F>> diag_vs;
        for (std::size_t c = 0; c < aniso.size(); ++c) {
            Vec<F> x(n, f.zero());
            for (std::size_t i = 0; i < aniso.size(); ++i)
                for (std::size_t j = 0; j < n; ++j)
                    x[j] = f.add(x[j], f.mul(db.at(i, c), aniso[i][j]));
            diag_vs.push_back(x);
        }
        aniso = std::move(diag_vs);
    }

    WittData<F> wd;
    wd.witt_index = pairs.size() / 2;
    wd.anisotropic_dim = aniso.size();
    wd.hyperbolic_basis = Matrix<F>(f, n, n);
    std::size_t c = 0;
    for (const auto& v : pairs) {
        for (std::size_t r = 0; r < n; ++r) wd.hyperbolic_basis.at(r, c) = v[r];
        ++c;
    }
    for (const auto& v : aniso) {
        for (std::size_t r = 0; r < n; ++r) wd.hyperbolic_basis.at(r, c) = v[r];
        ++c;
    }
    wd.normal_gram = mul(mul(transpose(wd.hyperbolic_basis), form.gram), wd.hyperbolic_basis);
    return wd;
}

template <class F>
bool is_split(const BilinearForm<F>& form) {
    return witt_decompose(form).witt_index == form.dim() / 2;
}

// ---------------------------------------------------------------------------
// Darboux basis for symplectic forms
// ---------------------------------------------------------------------------

/// Change of basis B with B^T G B = [[0, I], [-I, 0]].
template <class F>
Matrix<F> darboux_basis(const BilinearForm<F>& form) {
    if (form.kind != FormKind::alternating)
        throw std::invalid_argument("darboux_basis: alternating form required");
    if (!is_nondegenerate(form))
        throw std::domain_error("darboux_basis: form is degenerate (nonzero radical)");
    const F& f = form.field;
    std::size_t n = form.dim();
    if (n % 2 != 0) throw std::logic_error("darboux_basis: nondegenerate alternating form has even rank");

    std::vector<Vec<F>> rest;
    for (std::size_t i = 0; i < n; ++i) {
        Vec<F> e(n, f.zero());
        e[i] = f.one();
        rest.push_back(e);
    }
    std::vector<Vec<F>> vs, us;
    while (!rest.empty()) {
        Vec<F> v = rest.front();
        std::size_t w = rest.size();
        for (std::size_t i = 1; i < rest.size(); ++i)
            if (!f.is_zero(form.eval(v, rest[i]))) { w = i; break; }
        if (w == rest.size())
            throw std::logic_error("darboux_basis: vector pairs to zero with the whole complement");
        auto s = f.inv(form.eval(v, rest[w]));
        Vec<F> u(n, f.zero());
        for (std::size_t j = 0; j < n; ++j) u[j] = f.mul(s, rest[w][j]);

        vs.push_back(v);
        us.push_back(u);

        std::vector<Vec<F>> next;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            const auto& x = rest[i];
            Vec<F> y = x;
            auto a = f.neg(form.eval(x, u)), b = form.eval(x, v);
            for (std::size_t j = 0; j < n; ++j)
                y[j] = f.add(y[j], f.add(f.mul(a, v[j]), f.mul(b, u[j])));
            bool zero = true;
            for (const auto& e : y)
                if (!f.is_zero(e)) { zero = false; break; }
            if (!zero) next.push_back(y);
        }
        Matrix<F> nm = Matrix<F>::from_rows(f, next, n);
        Matrix<F> red = nm;
        auto piv = rref_inplace(red);
        std::vector<Vec<F>> indep;
        for (std::size_t i = 0; i < piv.size(); ++i) indep.push_back(red.row(i));
        rest = std::move(indep);
    }

    Matrix<F> b(f, n, n);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t r = 0; r < n; ++r) {
            b.at(r, i) = vs[i][r];
            b.at(r, vs.size() + i) = us[i][r];
        }
    return b;
}

/// Standard symplectic Gram [[0, I], [-I, 0]] on dimension 2n.
template <class F>
BilinearForm<F> standard_symplectic(const F& f, std::size_t two_n) {
    if (two_n % 2 != 0) throw std::invalid_argument("standard_symplectic: even dimension required");
    std::size_t n = two_n / 2;
    Matrix<F> j(f, two_n, two_n);
    for (std::size_t i = 0; i < n; ++i) {
        j.at(i, n + i) = f.one();
        j.at(n + i, i) = f.neg(f.one());
    }
    return BilinearForm<F>(FormKind::alternating, j);
}

// ---------------------------------------------------------------------------
// Isometry testing
// ---------------------------------------------------------------------------

namespace detail {

// congruence diag(d) -> diag(e) for anisotropic diagonals, or nullopt
template <class F>
std::optional<Matrix<F>> anisotropic_congruence(const F& f, const Vec<F>& d, const Vec<F>& e) {
    std::size_t n = d.size();
    if (n != e.size()) return std::nullopt;
    if (n == 0) return Matrix<F>(f, 0, 0);
    if (n == 1) {
        auto q = f.div(e[0], d[0]);
        auto s = f.sqrt(q);
        if (!s) return std::nullopt;
        Matrix<F> b(f, 1, 1);
        b.at(0, 0) = *s;
        return b;
    }
    if constexpr (!F::is_rational_field) {
        if (n != 2) throw std::logic_error("anisotropic part over F_p has dimension at most 2");
        // discriminants must agree mod squares
        if (!f.is_square(f.div(f.mul(d[0], d[1]), f.mul(e[0], e[1])))) return std::nullopt;
        // v1 with d-norm e0: an anisotropic binary form over F_p represents
        // every nonzero scalar
        for (typename F::Elem y = 0; y < f.p; ++y) {
            auto rhs = f.sub(e[0], f.mul(d[1], f.mul(y, y)));
            auto q = f.div(rhs, d[0]);
            if (auto x = f.sqrt(q)) {
                // v2 spans v1-perp; its norm is e1 times a square
                Vec<F> v1 = {*x, y};
                Vec<F> v2 = {f.neg(f.mul(d[1], y)), f.mul(d[0], *x)};
                auto norm2 = f.add(f.mul(d[0], f.mul(v2[0], v2[0])), f.mul(d[1], f.mul(v2[1], v2[1])));
                auto c = f.sqrt(f.div(e[1], norm2));
                if (!c) return std::nullopt;
                Matrix<F> b(f, 2, 2);
                b.at(0, 0) = v1[0];
                b.at(1, 0) = v1[1];
                b.at(0, 1) = f.mul(*c, v2[0]);
                b.at(1, 1) = f.mul(*c, v2[1]);
                return b;
            }
        }
        return std::nullopt;
    } else {
        // signature obstruction, then greedy square-ratio matching
        std::size_t dpos = 0, epos = 0;
        for (const auto& x : d)
            if (x > 0) ++dpos;
        for (const auto& x : e)
            if (x > 0) ++epos;
        if (dpos != epos) return std::nullopt;
        std::vector<bool> used(n, false);
        Matrix<F> b(f, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            bool found = false;
            for (std::size_t j = 0; j < n && !found; ++j) {
                if (used[j]) continue;
                auto s = f.sqrt(f.div(e[j], d[i]));
                if (s) {
                    b.at(i, j) = *s;
                    used[j] = true;
                    found = true;
                }
            }
            if (!found)
                throw std::domain_error(
                    "isometry_between: congruence of anisotropic rational forms of rank >= 2 is unsupported");
        }
        return b;
    }
}

}  // namespace detail

/// B with B^T G1 B = G2, or nullopt when the forms are not congruent.
/// The returned matrix is verified against the Grams before returning.
template <class F>
std::optional<Matrix<F>> isometry_between(const BilinearForm<F>& f1, const BilinearForm<F>& f2) {
    if (f1.dim() != f2.dim() || f1.kind != f2.kind || f1.field != f2.field)
        throw std::invalid_argument("isometry_between: forms must share dimension, kind and field");
    const F& f = f1.field;
    std::size_t n = f1.dim();
    if (n == 0) return Matrix<F>(f, 0, 0);

    bool nd1 = is_nondegenerate(f1), nd2 = is_nondegenerate(f2);
    if (nd1 != nd2) return std::nullopt;
    if (!nd1) {
        if (f1.gram.is_zero() && f2.gram.is_zero()) return Matrix<F>::identity(f, n);
        throw std::domain_error("isometry_between: degenerate nonzero forms are unsupported");
    }

    std::optional<Matrix<F>> result;
    if (f1.kind == FormKind::alternating) {
        auto b1 = darboux_basis(f1), b2 = darboux_basis(f2);
        result = mul(b1, *inverse(b2));
    } else {
        auto w1 = witt_decompose(f1), w2 = witt_decompose(f2);
        if (w1.witt_index != w2.witt_index) return std::nullopt;
        std::size_t k = w1.witt_index, m = w1.anisotropic_dim;
        Vec<F> d, e;
        for (std::size_t i = 0; i < m; ++i) {
            d.push_back(w1.normal_gram.at(2 * k + i, 2 * k + i));
            e.push_back(w2.normal_gram.at(2 * k + i, 2 * k + i));
        }
        auto c = detail::anisotropic_congruence(f, d, e);
        if (!c) return std::nullopt;
        Matrix<F> chat = Matrix<F>::identity(f, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) chat.at(2 * k + i, 2 * k + j) = c->at(i, j);
        result = mul(mul(w1.hyperbolic_basis, chat), *inverse(w2.hyperbolic_basis));
    }

    if (mul(mul(transpose(*result), f1.gram), *result) != f2.gram)
        throw std::logic_error("isometry_between: congruence self-check failed");
    return result;
}

}  // namespace ortholab
