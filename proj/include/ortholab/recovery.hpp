// Inverse constructions: from a split symmetric form of rank 2..6 (plus an
// isotropic witness in even rank), recover lower-rank data whose induced
// form reproduces the input exactly, certified by an explicit isometry.
//
// Certificate convention: the isometry B satisfies  B^T G B = input Gram,
// where G is the Gram of the recovered construction (scaled by `scale` in
// rank 3); x -> Bx maps input coordinates isometrically onto construction
// coordinates, carrying the witness onto the standard one.
//
// The odd ranks route through the even ones, mirroring how the bundles
// decompose: a rank-3 space extends by a line of norm det(G) to a split
// rank-4 space, which factors as a tensor product; the extending line is
// nowhere decomposable and identifies the second factor with the twisted
// dual of the first, leaving the symmetric square.  A rank-5 space extends
// by a line of norm -det(G) to a split rank-6 space recognized as a wedge
// square; the extending line's bivector is invertible and its inverse is
// the recovered symplectic form, whose contraction kernel carries the
// original space.
//
// Every certificate is self-verified before being returned; a failure of
// any internal identity is a logic error, not a domain error.

#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quadric.hpp"

namespace ortholab {

enum class RecoveryKind { Rank2Split, Rank3Sym2, Rank4Tensor, Rank5SympKernel, Rank6Wedge2 };

inline const char* recovery_kind_name(RecoveryKind k) {
    switch (k) {
        case RecoveryKind::Rank2Split: return "rank2-split";
        case RecoveryKind::Rank3Sym2: return "rank3-sym2";
        case RecoveryKind::Rank4Tensor: return "rank4-tensor";
        case RecoveryKind::Rank5SympKernel: return "rank5-symplectic-kernel";
        case RecoveryKind::Rank6Wedge2: return "rank6-wedge2";
    }
    return "?";
}

template <class F>
struct RecoveryCertificate {
    RecoveryKind kind{};
    Matrix<F> isometry;        // B with B^T G B = input Gram
    typename F::Elem scale{};  // multiplier on the construction Gram (1 except rank 3)
    typename F::Elem isometry_det{};

    // recovered data, by kind
    std::optional<std::pair<Subspace<F>, Subspace<F>>> lines;  // rank 2: the two isotropic lines
    std::optional<BilinearForm<F>> alpha;                      // rank 5: symplectic Gram on W
    std::optional<Subspace<F>> witness;                        // rank 4/6: the input witness

    // rank 6: true when the isometry has determinant -1, i.e. it swaps the
    // two families of maximal isotropics relative to the standard wedge
    // orientation (meaningful when the input Gram is the wedge form itself)
    bool correlation_twisted = false;
};

/// Image of a subspace under x -> Bx.
template <class F>
Subspace<F> map_subspace(const Matrix<F>& b, const Subspace<F>& s) {
    return Subspace<F>::span_of(mul(s.basis, transpose(b)));
}

/// Gram of the construction a certificate claims to recover.
template <class F>
Matrix<F> certificate_construction_gram(const RecoveryCertificate<F>& cert, const F& f) {
    switch (cert.kind) {
        case RecoveryKind::Rank2Split: {
            Matrix<F> h(f, 2, 2);
            h.at(0, 1) = h.at(1, 0) = f.one();
            return h;
        }
        case RecoveryKind::Rank3Sym2:
            return scalar_mul(cert.scale, sym2_form(f).gram);
        case RecoveryKind::Rank4Tensor:
            return tensor_form(f).gram;
        case RecoveryKind::Rank5SympKernel:
            if (!cert.alpha) throw std::invalid_argument("certificate: missing symplectic form");
            return symplectic_kernel(*cert.alpha).restricted.gram;
        case RecoveryKind::Rank6Wedge2:
            return wedge2_form(f).gram;
    }
    throw std::logic_error("certificate: unknown kind");
}

/// Recompute the construction from the recovered data and check that the
/// isometry reproduces the input Gram exactly, witness carried correctly.
template <class F>
bool verify_certificate(const RecoveryCertificate<F>& cert, const BilinearForm<F>& input) {
    const F& f = input.field;
    auto g = certificate_construction_gram(cert, f);
    if (mul(mul(transpose(cert.isometry), g), cert.isometry) != input.gram) return false;
    if (!f.eq(det(cert.isometry), cert.isometry_det)) return false;

    if (cert.kind == RecoveryKind::Rank2Split) {
        if (!cert.lines) return false;
        if (!is_isotropic(input, cert.lines->first) || !is_isotropic(input, cert.lines->second))
            return false;
        Matrix<F> e1(f, 1, 2), e2(f, 1, 2);
        e1.at(0, 0) = f.one();
        e2.at(0, 1) = f.one();
        if (map_subspace(cert.isometry, cert.lines->first) != Subspace<F>::span_of(e1)) return false;
        if (map_subspace(cert.isometry, cert.lines->second) != Subspace<F>::span_of(e2)) return false;
    }
    if (cert.kind == RecoveryKind::Rank4Tensor) {
        if (!cert.witness) return false;
        Matrix<F> std_plane(f, 2, 4);
        std_plane.at(0, 0) = f.one();  // e1 (x) f1
        std_plane.at(1, 1) = f.one();  // e1 (x) f2
        if (map_subspace(cert.isometry, *cert.witness) != Subspace<F>::span_of(std_plane))
            return false;
    }
    if (cert.kind == RecoveryKind::Rank6Wedge2) {
        if (!cert.witness) return false;
        Matrix<F> std_space(f, 3, 6);
        std_space.at(0, 0) = f.one();  // e1^e2
        std_space.at(1, 1) = f.one();  // e1^e3
        std_space.at(2, 3) = f.one();  // e2^e3
        if (map_subspace(cert.isometry, *cert.witness) != Subspace<F>::span_of(std_space))
            return false;
    }
    return true;
}

namespace detail {

// q_1..q_k completing an isotropic p_1..p_k to hyperbolic pairs:
// f(p_i, q_j) = delta_ij, f(q_i, q_j) = 0.
template <class F>
std::vector<Vec<F>> complete_hyperbolic(const BilinearForm<F>& form, const std::vector<Vec<F>>& ps) {
    const F& f = form.field;
    std::size_t n = form.dim(), k = ps.size();
    std::vector<Vec<F>> qs;
    auto half = f.inv(f.from_int(2));
    for (std::size_t i = 0; i < k; ++i) {
        Matrix<F> lhs(f, k + qs.size(), n);
        Vec<F> rhs(k + qs.size(), f.zero());
        for (std::size_t j = 0; j < k; ++j) {
            auto row = mul_vec(form.gram, ps[j]);
            for (std::size_t t = 0; t < n; ++t) lhs.at(j, t) = row[t];
            rhs[j] = (i == j) ? f.one() : f.zero();
        }
        for (std::size_t j = 0; j < qs.size(); ++j) {
            auto row = mul_vec(form.gram, qs[j]);
            for (std::size_t t = 0; t < n; ++t) lhs.at(k + j, t) = row[t];
        }
        auto x = solve(lhs, rhs);
        if (!x) throw std::logic_error("complete_hyperbolic: dual system inconsistent");
        // make it isotropic; the correction by p_i preserves all constraints
        auto t = f.mul(half, form.eval(*x, *x));
        for (std::size_t j = 0; j < n; ++j) (*x)[j] = f.sub((*x)[j], f.mul(t, ps[i][j]));
        qs.push_back(*x);
    }
    return qs;
}

// B = M0 P^{-1} from basis columns and their target images
template <class F>
Matrix<F> basis_transport(const F& f, const std::vector<Vec<F>>& basis,
                          const std::vector<Vec<F>>& images) {
    std::size_t n = basis.size();
    Matrix<F> p(f, n, n), m0(f, images[0].size(), n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) p.at(r, c) = basis[c][r];
        for (std::size_t r = 0; r < images[c].size(); ++r) m0.at(r, c) = images[c][r];
    }
    auto pinv = inverse(p);
    if (!pinv) throw std::logic_error("basis_transport: basis is not independent");
    return mul(m0, *pinv);
}

template <class F>
Vec<F> unit_vec(const F& f, std::size_t n, std::size_t i) {
    Vec<F> v(n, f.zero());
    v[i] = f.one();
    return v;
}

}  // namespace detail

/// Rank 2: the two isotropic lines and an isometry onto the hyperbolic Gram.
template <class F>
RecoveryCertificate<F> recover_rank2(const BilinearForm<F>& form) {
    const F& f = form.field;
    auto [l1, l2] = rank2_point_pair(form);  // throws when anisotropic
    Vec<F> v1 = l1.basis.row(0), v2 = l2.basis.row(0);
    auto c = form.eval(v1, v2);
    if (f.is_zero(c)) throw std::logic_error("recover_rank2: isotropic lines pair to zero");

    RecoveryCertificate<F> cert;
    cert.kind = RecoveryKind::Rank2Split;
    cert.scale = f.one();
    cert.lines = std::make_pair(l1, l2);
    Vec<F> e1 = detail::unit_vec(f, 2, 0), e2 = detail::unit_vec(f, 2, 1);
    Vec<F> ce2 = {f.zero(), c};
    cert.isometry = detail::basis_transport(f, {v1, v2}, {e1, ce2});
    cert.isometry_det = det(cert.isometry);
    if (!verify_certificate(cert, form)) throw std::logic_error("recover_rank2: certificate failed");
    return cert;
}

/// Rank 4: an isometry onto the tensor form carrying the witness plane onto
/// e1 (x) E2.
template <class F>
RecoveryCertificate<F> recover_rank4(const BilinearForm<F>& form, const Subspace<F>& plane) {
    const F& f = form.field;
    if (form.kind != FormKind::symmetric || form.dim() != 4)
        throw std::invalid_argument("recover_rank4: symmetric 4x4 form required");
    if (!is_nondegenerate(form))
        throw std::domain_error("recover_rank4: form is degenerate (nonzero radical)");
    if (plane.ambient != 4 || plane.dim() != 2)
        throw std::invalid_argument("recover_rank4: witness must be a plane in dimension 4");
    if (!is_isotropic(form, plane))
        throw std::domain_error("recover_rank4: witness plane is not isotropic");

    std::vector<Vec<F>> ps = {plane.basis.row(0), plane.basis.row(1)};
    auto qs = detail::complete_hyperbolic(form, ps);

    // targets in tensor coordinates (e1f1, e1f2, e2f1, e2f2):
    //  p1 -> e1f1, p2 -> e1f2, q1 -> e2f2, q2 -> -e2f1
    std::vector<Vec<F>> images = {detail::unit_vec(f, 4, 0), detail::unit_vec(f, 4, 1),
                                  detail::unit_vec(f, 4, 3), detail::unit_vec(f, 4, 2)};
    images[3][2] = f.neg(f.one());

    RecoveryCertificate<F> cert;
    cert.kind = RecoveryKind::Rank4Tensor;
    cert.scale = f.one();
    cert.witness = plane;
    cert.isometry = detail::basis_transport(f, {ps[0], ps[1], qs[0], qs[1]}, images);
    cert.isometry_det = det(cert.isometry);
    if (!verify_certificate(cert, form)) throw std::logic_error("recover_rank4: certificate failed");
    return cert;
}

/// Rank 6: an isometry onto the wedge form carrying the witness onto
/// wedge^2(span(e1,e2,e3)).
template <class F>
RecoveryCertificate<F> recover_rank6(const BilinearForm<F>& form, const Subspace<F>& three_space) {
    const F& f = form.field;
    if (form.kind != FormKind::symmetric || form.dim() != 6)
        throw std::invalid_argument("recover_rank6: symmetric 6x6 form required");
    if (!is_nondegenerate(form))
        throw std::domain_error("recover_rank6: form is degenerate (nonzero radical)");
    if (three_space.ambient != 6 || three_space.dim() != 3)
        throw std::invalid_argument("recover_rank6: witness must be 3-dimensional in dimension 6");
    if (!is_isotropic(form, three_space))
        throw std::domain_error("recover_rank6: witness space is not isotropic");

    std::vector<Vec<F>> ps = {three_space.basis.row(0), three_space.basis.row(1),
                              three_space.basis.row(2)};
    auto qs = detail::complete_hyperbolic(form, ps);

    // wedge basis order 12, 13, 14, 23, 24, 34; pairings:
    //  (12,34) = 1, (13,24) = -1, (14,23) = 1
    //  p1 -> e1^e2, p2 -> e1^e3, p3 -> e2^e3,
    //  q1 -> e3^e4, q2 -> -e2^e4, q3 -> e1^e4
    std::vector<Vec<F>> images = {detail::unit_vec(f, 6, 0), detail::unit_vec(f, 6, 1),
                                  detail::unit_vec(f, 6, 3), detail::unit_vec(f, 6, 5),
                                  detail::unit_vec(f, 6, 4), detail::unit_vec(f, 6, 2)};
    images[4][4] = f.neg(f.one());

    RecoveryCertificate<F> cert;
    cert.kind = RecoveryKind::Rank6Wedge2;
    cert.scale = f.one();
    cert.witness = three_space;
    cert.isometry =
        detail::basis_transport(f, {ps[0], ps[1], ps[2], qs[0], qs[1], qs[2]}, images);
    cert.isometry_det = det(cert.isometry);
    cert.correlation_twisted = f.eq(cert.isometry_det, f.neg(f.one()));
    if (!verify_certificate(cert, form)) throw std::logic_error("recover_rank6: certificate failed");
    return cert;
}

/// Rank 3: extend by a line of norm det(G) to a split rank-4 space, factor
/// it as a tensor product, and read off the symmetric square.  The recovered
/// construction is scale * sym2_form.
template <class F>
RecoveryCertificate<F> recover_rank3(const BilinearForm<F>& form) {
    const F& f = form.field;
    if (form.kind != FormKind::symmetric || form.dim() != 3)
        throw std::invalid_argument("recover_rank3: symmetric 3x3 form required");
    if (!is_nondegenerate(form))
        throw std::domain_error("recover_rank3: form is degenerate (nonzero radical)");

    // append <c> with c = det(G): the extension of a split ternary form is
    // then hyperbolic
    auto c = det(form.gram);
    Matrix<F> cg(f, 1, 1);
    cg.at(0, 0) = c;
    auto ext = orthogonal_direct_sum(form, BilinearForm<F>(FormKind::symmetric, cg));
    auto w = witt_decompose(ext);
    if (w.witt_index != 2)
        throw std::domain_error("recover_rank3: form is not split (extended Witt index below 2)");
    auto plane = Subspace<F>::span_of_vectors(
        f, {w.hyperbolic_basis.col(0), w.hyperbolic_basis.col(2)}, 4);
    auto cert4 = recover_rank4(ext, plane);
    const auto& b4 = cert4.isometry;

    // the appended line lands on a nowhere-decomposable tensor t
    Vec<F> t = b4.col(3);
    // T : E1* -> E2, zeta -> sum_i zeta(e_i) t_{i.}; delta : E1 -> E1*,
    // x -> (-x2, x1); iota(x (x) y) = x (x) T(delta(y))
    auto tmap = [&](const Vec<F>& zeta) -> Vec<F> {
        return {f.add(f.mul(zeta[0], t[0]), f.mul(zeta[1], t[2])),
                f.add(f.mul(zeta[0], t[1]), f.mul(zeta[1], t[3]))};
    };
    auto delta = [&](const Vec<F>& x) -> Vec<F> { return {f.neg(x[1]), x[0]}; };
    auto iota = [&](const Vec<F>& x, const Vec<F>& y) {
        return tensor_of_vectors(f, x, tmap(delta(y)));
    };

    Vec<F> e1 = {f.one(), f.zero()}, e2 = {f.zero(), f.one()};
    auto half = f.inv(f.from_int(2));
    auto mid_a = iota(e1, e2), mid_b = iota(e2, e1);
    Vec<F> s_mid(4, f.zero());
    for (std::size_t i = 0; i < 4; ++i) s_mid[i] = f.mul(half, f.add(mid_a[i], mid_b[i]));
    std::vector<Vec<F>> sbasis = {iota(e1, e1), s_mid, iota(e2, e2)};

    // the symmetric part is orthogonal to t and its Gram is a multiple of
    // the sym2 Gram
    auto tform = tensor_form(f);
    for (const auto& s : sbasis)
        if (!f.is_zero(tform.eval(s, t)))
            throw std::logic_error("recover_rank3: symmetric part not orthogonal to the line");
    Matrix<F> ghat(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ghat.at(i, j) = tform.eval(sbasis[i], sbasis[j]);
    auto scale = proportionality(ghat, sym2_form(f).gram);
    if (!scale) throw std::logic_error("recover_rank3: induced Gram is not a multiple of the sym2 Gram");

    // express the image of the original space in the s-basis
    Matrix<F> smat(f, 4, 3);
    for (std::size_t cidx = 0; cidx < 3; ++cidx)
        for (std::size_t r = 0; r < 4; ++r) smat.at(r, cidx) = sbasis[cidx][r];
    Matrix<F> b3(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        Vec<F> xhat(4, f.zero());
        xhat[i] = f.one();
        auto y = mul_vec(b4, xhat);
        auto z = solve(smat, y);
        if (!z) throw std::logic_error("recover_rank3: image leaves the symmetric part");
        for (std::size_t r = 0; r < 3; ++r) b3.at(r, i) = (*z)[r];
    }

    RecoveryCertificate<F> cert;
    cert.kind = RecoveryKind::Rank3Sym2;
    cert.scale = *scale;
    cert.isometry = b3;
    cert.isometry_det = det(b3);
    if (!verify_certificate(cert, form)) throw std::logic_error("recover_rank3: certificate failed");
    return cert;
}

/// Rank 5: extend by a line of norm -det(G) to a split rank-6 space, map it
/// onto the wedge form, invert the extending line's bivector to get the
/// symplectic form, and carry the input onto its contraction kernel.
template <class F>
RecoveryCertificate<F> recover_rank5(const BilinearForm<F>& form) {
    const F& f = form.field;
    if (form.kind != FormKind::symmetric || form.dim() != 5)
        throw std::invalid_argument("recover_rank5: symmetric 5x5 form required");
    if (!is_nondegenerate(form))
        throw std::domain_error("recover_rank5: form is degenerate (nonzero radical)");

    auto c = f.neg(det(form.gram));
    Matrix<F> cg(f, 1, 1);
    cg.at(0, 0) = c;
    auto ext = orthogonal_direct_sum(form, BilinearForm<F>(FormKind::symmetric, cg));
    auto w = witt_decompose(ext);
    if (w.witt_index != 3)
        throw std::domain_error("recover_rank5: form is not split (extended Witt index below 3)");
    auto three = Subspace<F>::span_of_vectors(
        f, {w.hyperbolic_basis.col(0), w.hyperbolic_basis.col(2), w.hyperbolic_basis.col(4)}, 6);
    auto cert6 = recover_rank6(ext, three);
    const auto& b6 = cert6.isometry;

    // the appended line is a non-decomposable bivector; its inverse matrix
    // is the symplectic Gram whose contraction kernel is the image of the
    // original space
    Vec<F> mhat = b6.col(5);
    auto omega = bivector_matrix(f, mhat, 4);
    auto omega_inv = inverse(omega);
    if (!omega_inv)
        throw std::logic_error("recover_rank5: extending bivector is decomposable");
    auto alpha = BilinearForm<F>(FormKind::alternating, *omega_inv);
    auto sk = symplectic_kernel(alpha);

    Matrix<F> b5(f, 5, 5);
    Matrix<F> smat = transpose(sk.s.basis);  // 6 x 5
    for (std::size_t i = 0; i < 5; ++i) {
        Vec<F> xhat(6, f.zero());
        xhat[i] = f.one();
        auto y = mul_vec(b6, xhat);
        auto z = solve(smat, y);
        if (!z) throw std::logic_error("recover_rank5: image leaves the contraction kernel");
        for (std::size_t r = 0; r < 5; ++r) b5.at(r, i) = (*z)[r];
    }

    RecoveryCertificate<F> cert;
    cert.kind = RecoveryKind::Rank5SympKernel;
    cert.scale = f.one();
    cert.alpha = alpha;
    cert.isometry = b5;
    cert.isometry_det = det(b5);
    if (!verify_certificate(cert, form)) throw std::logic_error("recover_rank5: certificate failed");
    return cert;
}

/// Witness-free even-rank entry points: take a maximal isotropic from the
/// Witt decomposition.
template <class F>
RecoveryCertificate<F> recover_rank4(const BilinearForm<F>& form) {
    auto w = witt_decompose(form);
    if (w.witt_index != 2) throw std::domain_error("recover_rank4: form is not split");
    auto plane = Subspace<F>::span_of_vectors(
        form.field, {w.hyperbolic_basis.col(0), w.hyperbolic_basis.col(2)}, 4);
    return recover_rank4(form, plane);
}

template <class F>
RecoveryCertificate<F> recover_rank6(const BilinearForm<F>& form) {
    auto w = witt_decompose(form);
    if (w.witt_index != 3) throw std::domain_error("recover_rank6: form is not split");
    auto three = Subspace<F>::span_of_vectors(
        form.field,
        {w.hyperbolic_basis.col(0), w.hyperbolic_basis.col(2), w.hyperbolic_basis.col(4)}, 6);
    return recover_rank6(form, three);
}

}  // namespace ortholab
