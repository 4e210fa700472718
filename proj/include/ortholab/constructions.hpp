// Induced orthogonal structures on small tensor spaces, with all basis
// conventions fixed here once and used everywhere:
//
//   * tensor product of two planes: row-major basis, e_i (x) f_j at index
//     2*(i-1) + j - 1; pairing (a(x)b, c(x)d) -> (a^c)(b^d), value line
//     trivialized by e_1^e_2 and f_1^f_2;
//   * Sym^2 of a plane: basis (e_1^2, e_1 e_2, e_2^2); the pairing keeps its
//     factor 2 exactly as induced from the tensor square;
//   * wedge square of a 4-space: lexicographic bivector basis e_i^e_j, i<j;
//     pairing by the coefficient of e_1^e_2^e_3^e_4 in omega^eta;
//   * wedge square of a 3-space: canonical isomorphism to E*(x)det E by
//     u^v -> (w -> u^v^w), a signed permutation in these bases.
//
// In each case the isotropic locus is the expected classical one (rank-one
// tensors, squares, decomposable bivectors), and the kernel of a symplectic
// contraction inside the rank-6 form produces the rank-5 form.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "bilinear.hpp"

namespace ortholab {

// ---------------------------------------------------------------------------
// Wedge coordinates
// ---------------------------------------------------------------------------

/// Ordered index pairs (i, j), i < j, lexicographic: the bivector basis.
inline std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> ps;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) ps.emplace_back(i, j);
    return ps;
}

inline std::size_t wedge_index(std::size_t i, std::size_t j, std::size_t n) {
    if (i >= j || j >= n) throw std::invalid_argument("wedge_index: need i < j < n");
    // position of (i,j) in lex order
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Coordinates of v ^ w in the lexicographic bivector basis.
template <class F>
Vec<F> wedge_vector(const F& f, const Vec<F>& v, const Vec<F>& w) {
    std::size_t n = v.size();
    if (w.size() != n) throw std::invalid_argument("wedge_vector: dimension mismatch");
    Vec<F> out(n * (n - 1) / 2, f.zero());
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out[t++] = f.sub(f.mul(v[i], w[j]), f.mul(v[j], w[i]));
    return out;
}

/// The antisymmetric matrix of a bivector (inverse of wedge coordinates).
template <class F>
Matrix<F> bivector_matrix(const F& f, const Vec<F>& omega, std::size_t n) {
    if (omega.size() != n * (n - 1) / 2) throw std::invalid_argument("bivector_matrix: bad size");
    Matrix<F> m(f, n, n);
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m.at(i, j) = omega[t];
            m.at(j, i) = f.neg(omega[t]);
            ++t;
        }
    return m;
}

/// Row space of the bivector's matrix: span{v, w} for omega = v ^ w, and the
/// smallest subspace U with omega in wedge^2 U in general.
template <class F>
Subspace<F> bivector_support(const F& f, const Vec<F>& omega, std::size_t n) {
    return Subspace<F>::span_of(bivector_matrix(f, omega, n));
}

/// omega ^ omega = 0, i.e. omega is decomposable (rank <= 2): every 4x4
/// Pfaffian minor of the bivector's matrix vanishes.
template <class F>
bool is_decomposable(const F& f, const Vec<F>& omega, std::size_t n) {
    auto w = [&](std::size_t x, std::size_t y) { return omega[wedge_index(x, y, n)]; };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    auto pf = f.add(f.sub(f.mul(w(a, b), w(c, d)), f.mul(w(a, c), w(b, d))),
                                    f.mul(w(a, d), w(b, c)));
                    if (!f.is_zero(pf)) return false;
                }
    return true;
}

// ---------------------------------------------------------------------------
// The induced forms
// ---------------------------------------------------------------------------

/// Rank-4 orthogonal form on E1 (x) E2 (both planes), row-major basis:
/// (a(x)b, c(x)d) -> (a ^ c)(b ^ d).  Split of Witt index 2.
template <class F>
BilinearForm<F> tensor_form(const F& f) {
    auto eps = [&](std::size_t x, std::size_t y) {
        if (x == y) return f.zero();
        return x < y ? f.one() : f.neg(f.one());
    };
    Matrix<F> g(f, 4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    g.at(2 * i + j, 2 * k + l) = f.mul(eps(i, k), eps(j, l));
    return BilinearForm<F>(FormKind::symmetric, g);
}

/// Rank-3 orthogonal form on Sym^2 E, basis (e1^2, e1 e2, e2^2):
/// (a.b, c.d) -> 2((a ^ c)(b ^ d) + (b ^ c)(a ^ d)).  The factor 2 is kept;
/// rescaling does not change the isometry class in odd characteristic.
template <class F>
BilinearForm<F> sym2_form(const F& f) {
    auto eps = [&](std::size_t x, std::size_t y) {
        if (x == y) return f.zero();
        return x < y ? f.one() : f.neg(f.one());
    };
    // monomial factors for the basis (e1^2, e1 e2, e2^2)
    const std::size_t mono[3][2] = {{0, 0}, {0, 1}, {1, 1}};
    auto two = f.from_int(2);
    Matrix<F> g(f, 3, 3);
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t t = 0; t < 3; ++t) {
            auto a = mono[s][0], b = mono[s][1], c = mono[t][0], d = mono[t][1];
            auto val = f.add(f.mul(eps(a, c), eps(b, d)), f.mul(eps(b, c), eps(a, d)));
            g.at(s, t) = f.mul(two, val);
        }
    return BilinearForm<F>(FormKind::symmetric, g);
}

/// Rank-6 orthogonal form on wedge^2 W for dim W = 4, lexicographic bivector
/// basis: (omega, eta) -> coefficient of e1^e2^e3^e4 in omega ^ eta.
/// Split of Witt index 3.
template <class F>
BilinearForm<F> wedge2_form(const F& f) {
    const std::size_t n = 4;
    auto ps = wedge_pairs(n);
    Matrix<F> g(f, 6, 6);
    for (std::size_t s = 0; s < 6; ++s)
        for (std::size_t t = 0; t < 6; ++t) {
            auto [i, j] = ps[s];
            auto [k, l] = ps[t];
            std::size_t perm[4] = {i, j, k, l};
            bool dup = (i == k || i == l || j == k || j == l);
            if (dup) continue;
            // sign of the permutation (i,j,k,l) of (0,1,2,3)
            int inv = 0;
            for (int x = 0; x < 4; ++x)
                for (int y = x + 1; y < 4; ++y)
                    if (perm[x] > perm[y]) ++inv;
            g.at(s, t) = (inv % 2 == 0) ? f.one() : f.neg(f.one());
        }
    return BilinearForm<F>(FormKind::symmetric, g);
}

/// Squares and rank-one tensors in coordinates.
template <class F>
Vec<F> sym2_of_vector(const F& f, const Vec<F>& v) {
    if (v.size() != 2) throw std::invalid_argument("sym2_of_vector: plane vector required");
    return {f.mul(v[0], v[0]), f.mul(f.from_int(2), f.mul(v[0], v[1])), f.mul(v[1], v[1])};
}

template <class F>
Vec<F> tensor_of_vectors(const F& f, const Vec<F>& a, const Vec<F>& b) {
    if (a.size() != 2 || b.size() != 2) throw std::invalid_argument("tensor_of_vectors: planes required");
    return {f.mul(a[0], b[0]), f.mul(a[0], b[1]), f.mul(a[1], b[0]), f.mul(a[1], b[1])};
}

/// Factor a rank-<=1 element of E1 (x) E2 as a (x) b; nullopt if rank 2.
template <class F>
std::optional<std::pair<Vec<F>, Vec<F>>> rank_one_factor(const F& f, const Vec<F>& t) {
    if (t.size() != 4) throw std::invalid_argument("rank_one_factor: 4 coordinates required");
    auto d = f.sub(f.mul(t[0], t[3]), f.mul(t[1], t[2]));  // det of the 2x2 reshape
    if (!f.is_zero(d)) return std::nullopt;
    // rows of the reshape are multiples of one row vector b
    Vec<F> r0 = {t[0], t[1]}, r1 = {t[2], t[3]};
    bool z0 = f.is_zero(r0[0]) && f.is_zero(r0[1]);
    bool z1 = f.is_zero(r1[0]) && f.is_zero(r1[1]);
    if (z0 && z1) return std::make_pair(Vec<F>{f.zero(), f.zero()}, Vec<F>{f.zero(), f.zero()});
    Vec<F> b = z0 ? r1 : r0;
    std::size_t piv = f.is_zero(b[0]) ? 1 : 0;
    Vec<F> a = {f.div(r0[piv], b[piv]), f.div(r1[piv], b[piv])};
    return std::make_pair(a, b);
}

/// The quadric point of a square: span(v^2) = span(w) for isotropic w != 0.
/// Returns the line in E whose square spans w, or nullopt if w is not a
/// scalar multiple of a square (equivalently not isotropic).
template <class F>
std::optional<Subspace<F>> veronese_witness(const F& f, const Vec<F>& w) {
    if (w.size() != 3) throw std::invalid_argument("veronese_witness: 3 coordinates required");
    bool zero = f.is_zero(w[0]) && f.is_zero(w[1]) && f.is_zero(w[2]);
    if (zero) return std::nullopt;
    // w is proportional to a square iff w2^2 = 4 w1 w3
    auto lhs = f.mul(w[1], w[1]);
    auto rhs = f.mul(f.from_int(4), f.mul(w[0], w[2]));
    if (!f.eq(lhs, rhs)) return std::nullopt;
    Vec<F> v;
    if (!f.is_zero(w[0]))
        v = {w[0], f.div(w[1], f.from_int(2))};  // (w1 v)^2 = w1 * w
    else
        v = {f.zero(), f.one()};  // w = (0, 0, w3) = w3 * e2^2
    return Subspace<F>::span_of_vectors(f, {v}, 2);
}

// ---------------------------------------------------------------------------
// Symplectic kernel: the rank-5 companion inside the rank-6 form
// ---------------------------------------------------------------------------

template <class F>
struct SymplecticKernel {
    Subspace<F> s;                 // 5-dim kernel of the contraction, in wedge coordinates
    BilinearForm<F> restricted;    // rank-6 form restricted to the RREF basis of s
    Subspace<F> complement_line;   // s-perp, 1-dim, never isotropic
};

/// Kernel of the contraction omega -> <alpha, omega> on wedge^2 W, together
/// with the restricted orthogonal form and the perpendicular line.
template <class F>
SymplecticKernel<F> symplectic_kernel(const BilinearForm<F>& alpha) {
    if (alpha.kind != FormKind::alternating || alpha.dim() != 4)
        throw std::invalid_argument("symplectic_kernel: alternating 4x4 form required");
    if (!is_nondegenerate(alpha))
        throw std::domain_error("symplectic_kernel: symplectic form is degenerate");
    const F& f = alpha.field;
    auto ps = wedge_pairs(4);
    Matrix<F> functional(f, 1, 6);
    for (std::size_t t = 0; t < 6; ++t) functional.at(0, t) = alpha.gram.at(ps[t].first, ps[t].second);

    SymplecticKernel<F> out;
    out.s = kernel(functional);
    auto w6 = wedge2_form(f);
    out.restricted = BilinearForm<F>(FormKind::symmetric, restricted_gram(w6, out.s));
    if (!is_nondegenerate(out.restricted))
        throw std::logic_error("symplectic_kernel: restricted form unexpectedly degenerate");
    out.complement_line = orthogonal_complement(w6, out.s);
    if (out.complement_line.dim() != 1 || is_isotropic(w6, out.complement_line))
        throw std::logic_error("symplectic_kernel: complement line check failed");
    return out;
}

// ---------------------------------------------------------------------------
// Bivector spans through a line
// ---------------------------------------------------------------------------

/// span{ v ^ w : v in N, w in H } for a line N inside H; dimension dim H - 1.
template <class F>
Subspace<F> tau_span(const Subspace<F>& line, const Subspace<F>& container) {
    if (line.dim() != 1) throw std::invalid_argument("tau_span: first argument must be a line");
    if (line.ambient != container.ambient) throw std::invalid_argument("tau_span: ambient mismatch");
    if (!container.contains(line)) throw std::domain_error("tau_span: the line is not inside the container");
    const F& f = line.field;
    std::size_t n = line.ambient;
    Vec<F> v = line.basis.row(0);
    std::vector<Vec<F>> rows;
    for (std::size_t i = 0; i < container.dim(); ++i)
        rows.push_back(wedge_vector(f, v, container.basis.row(i)));
    return Subspace<F>::span_of_vectors(f, rows, n * (n - 1) / 2);
}

/// span{ v ^ w : v in N, w in N-perp(alpha) }: a 2-dim isotropic subspace of
/// the symplectic kernel, the pencil of alpha-Lagrangian planes through N.
template <class F>
Subspace<F> lambda_span(const Subspace<F>& line, const BilinearForm<F>& alpha) {
    if (alpha.kind != FormKind::alternating || alpha.dim() != 4)
        throw std::invalid_argument("lambda_span: alternating 4x4 form required");
    if (!is_nondegenerate(alpha)) throw std::domain_error("lambda_span: symplectic form is degenerate");
    return tau_span(line, orthogonal_complement(alpha, line));
}

/// Line spanned by v ^ w for a basis v, w of the plane; basis-independent.
template <class F>
Subspace<F> plucker(const Subspace<F>& plane) {
    if (plane.dim() != 2) throw std::invalid_argument("plucker: 2-dim subspace required");
    const F& f = plane.field;
    std::size_t n = plane.ambient;
    auto omega = wedge_vector(f, plane.basis.row(0), plane.basis.row(1));
    return Subspace<F>::span_of_vectors(f, {omega}, n * (n - 1) / 2);
}

// ---------------------------------------------------------------------------
// The rank-3 dual identifications and the antisymmetrization identity
// ---------------------------------------------------------------------------

/// wedge^2 E -> E* (x) det E for dim E = 3: u^v -> (w -> u^v^w).  Columns are
/// the images of (e1^e2, e1^e3, e2^e3) in the basis (e1*, e2*, e3*) (x) m,
/// m = e1^e2^e3: a signed permutation.
template <class F>
Matrix<F> wedge2_dual_identification(const F& f) {
    Matrix<F> m(f, 3, 3);
    m.at(2, 0) = f.one();         // e1^e2 -> e3*
    m.at(1, 1) = f.neg(f.one());  // e1^e3 -> -e2*
    m.at(0, 2) = f.one();         // e2^e3 -> e1*
    return m;
}

/// The induced identification wedge^2(E hat) -> E (x) det E for
/// E hat = wedge^2 E, obtained by applying the dual identification on each
/// wedge factor and then the analogous identification for E*.
template <class F>
Matrix<F> wedge2_double_dual_identification(const F& f) {
    auto phi = wedge2_dual_identification(f);
    // xi ^ eta in wedge^2 E* -> E, via xi^eta -> (zeta -> xi^eta^zeta) with
    // the dual volume e1*^e2*^e3*; same signed permutation in dual bases.
    auto psi = wedge2_dual_identification(f);
    Matrix<F> chi(f, 3, 3);
    auto ps = wedge_pairs(3);
    for (std::size_t c = 0; c < 3; ++c) {
        auto [i, j] = ps[c];
        auto xi = phi.col(i), eta = phi.col(j);
        auto w = wedge_vector(f, xi, eta);  // coordinates in the wedge^2 E* basis
        auto img = mul_vec(psi, w);
        for (std::size_t r = 0; r < 3; ++r) chi.at(r, c) = img[r];
    }
    return chi;
}

/// Transport of (x -> p ^ x) : E hat -> wedge^2 E hat along the two
/// identifications, as a map E* -> E in the standard bases.
template <class F>
Matrix<F> astar_transport(const F& f, const Vec<F>& p) {
    if (p.size() != 3) throw std::invalid_argument("astar_transport: p must be a bivector of a 3-space");
    Matrix<F> wedge_with_p(f, 3, 3);  // E hat -> wedge^2 E hat
    for (std::size_t c = 0; c < 3; ++c) {
        Vec<F> x(3, f.zero());
        x[c] = f.one();
        auto w = wedge_vector(f, p, x);
        for (std::size_t r = 0; r < 3; ++r) wedge_with_p.at(r, c) = w[r];
    }
    auto phi = wedge2_dual_identification(f);
    auto chi = wedge2_double_dual_identification(f);
    return mul(chi, mul(wedge_with_p, *inverse(phi)));
}

/// The transported map equals -p under the inclusion of bivectors into
/// E (x) E, i.e. the matrix of astar_transport is minus the antisymmetric
/// matrix of p.  Linear in p, so checking generators and samples suffices;
/// we expose the pointwise check.
template <class F>
bool check_antisymmetrization_identity(const F& f, const Vec<F>& p) {
    auto t = astar_transport(f, p);
    auto expect = neg(bivector_matrix(f, p, 3));
    return t == expect;
}

}  // namespace ortholab
