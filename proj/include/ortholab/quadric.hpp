// Brute-force enumeration of isotropic subspaces over F_q and structural
// classification of the maximal ones for each induced form:
//
//   rank 4 tensor form:  isotropic planes are L1 (x) E2 or E1 (x) L2;
//   rank 6 wedge form:   isotropic 3-spaces are wedge^2 F (family I) or
//                        N ^ W (family II); isotropic planes are N ^ H for a
//                        flag N in H of dimensions (1, 3);
//   rank 5 kernel form:  isotropic planes are the pencils N ^ N-perp(alpha);
//   rank 2 split form:   exactly two isotropic points.
//
// Classification extracts its witness by solving linear conditions (supports
// of decomposable bivectors, common factors of rank-one tensors), never by
// enumeration, so the brute-force scan is an independent oracle against it.
// Every classifier re-generates the input subspace from the witness and
// checks bit-exact equality of canonical forms before returning.

#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "enumerate.hpp"

namespace ortholab {

inline void check_brute_force_caps(const PrimeField& f, std::size_t ambient_dim) {
    if (ambient_dim > 6)
        throw std::domain_error("brute force cap exceeded: ambient dimension must be at most 6");
    if (f.p != 3 && f.p != 5)
        throw std::domain_error("brute force cap exceeded: exhaustive scans run over F_3 and F_5 only");
}

/// All k-dim isotropic subspaces of a symmetric nondegenerate form over F_q,
/// in the deterministic enumeration order.
inline std::vector<Subspace<PrimeField>> isotropic_subspaces(const BilinearForm<PrimeField>& form,
                                                             std::size_t k) {
    if (form.kind != FormKind::symmetric)
        throw std::invalid_argument("isotropic_subspaces: symmetric form required");
    if (!is_nondegenerate(form))
        throw std::domain_error("isotropic_subspaces: form is degenerate (nonzero radical)");
    check_brute_force_caps(form.field, form.dim());
    std::vector<Subspace<PrimeField>> out;
    for_each_subspace(form.field, form.dim(), k, [&](const Subspace<PrimeField>& s) {
        if (is_isotropic(form, s)) out.push_back(s);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Classified isotropic subspaces
// ---------------------------------------------------------------------------

enum class IsotropicTag {
    SegreLeft,        // L1 (x) E2, witness the line L1 in E1
    SegreRight,       // E1 (x) L2, witness the line L2 in E2
    PluckerFamilyI,   // wedge^2 F, witness the 3-space F in W
    PluckerFamilyII,  // N ^ W, witness the line N in W
    LGFlag,           // N ^ N-perp(alpha), witnesses N and H = N-perp
    PointPair,        // one of the two isotropic points of a split plane
};

inline const char* tag_name(IsotropicTag t) {
    switch (t) {
        case IsotropicTag::SegreLeft: return "segre-left";
        case IsotropicTag::SegreRight: return "segre-right";
        case IsotropicTag::PluckerFamilyI: return "plucker-family-i";
        case IsotropicTag::PluckerFamilyII: return "plucker-family-ii";
        case IsotropicTag::LGFlag: return "lg-flag";
        case IsotropicTag::PointPair: return "point-pair";
    }
    return "?";
}

template <class F>
struct ClassifiedIsotropic {
    IsotropicTag tag{};
    Subspace<F> subspace;                 // the classified subspace itself
    Subspace<F> witness;                  // L1 / L2 / F / N, depending on the tag
    std::optional<Subspace<F>> flag_top;  // H for LGFlag
    int point_index = -1;                 // 0 or 1 for PointPair
};

/// Decide L1 (x) E2 versus E1 (x) L2 for an isotropic plane of the tensor
/// form, and regenerate the plane from the witness.
template <class F>
ClassifiedIsotropic<F> classify_rank4_plane(const Subspace<F>& plane, const BilinearForm<F>& form) {
    const F& f = plane.field;
    if (form.gram != tensor_form(f).gram)
        throw std::invalid_argument("classify_rank4_plane: the tensor-product form is required");
    if (plane.dim() != 2 || plane.ambient != 4)
        throw std::invalid_argument("classify_rank4_plane: 2-dim subspace of the 4-dim tensor space required");
    if (!is_isotropic(form, plane))
        throw std::domain_error("classify_rank4_plane: subspace is not isotropic");

    auto f0 = rank_one_factor(f, plane.basis.row(0));
    auto f1 = rank_one_factor(f, plane.basis.row(1));
    if (!f0 || !f1) throw std::logic_error("classify_rank4_plane: isotropic vector of tensor rank two");
    auto [a0, b0] = *f0;
    auto [a1, b1] = *f1;

    auto parallel = [&](const Vec<F>& x, const Vec<F>& y) {
        return f.is_zero(f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0])));
    };

    ClassifiedIsotropic<F> out;
    out.subspace = plane;
    Vec<F> e1 = {f.one(), f.zero()}, e2 = {f.zero(), f.one()};
    if (parallel(a0, a1)) {
        out.tag = IsotropicTag::SegreLeft;
        out.witness = Subspace<F>::span_of_vectors(f, {a0}, 2);
        auto lam = out.witness.basis.row(0);
        auto regen = Subspace<F>::span_of_vectors(
            f, {tensor_of_vectors(f, lam, e1), tensor_of_vectors(f, lam, e2)}, 4);
        if (regen != plane) throw std::logic_error("classify_rank4_plane: left witness regeneration failed");
    } else if (parallel(b0, b1)) {
        out.tag = IsotropicTag::SegreRight;
        out.witness = Subspace<F>::span_of_vectors(f, {b0}, 2);
        auto lam = out.witness.basis.row(0);
        auto regen = Subspace<F>::span_of_vectors(
            f, {tensor_of_vectors(f, e1, lam), tensor_of_vectors(f, e2, lam)}, 4);
        if (regen != plane) throw std::logic_error("classify_rank4_plane: right witness regeneration failed");
    } else {
        throw std::logic_error("classify_rank4_plane: basis factors share no side");
    }
    return out;
}

/// Decide wedge^2 F versus N ^ W for a maximal isotropic of the rank-6 form.
template <class F>
ClassifiedIsotropic<F> classify_gr24_3space(const Subspace<F>& space) {
    const F& f = space.field;
    if (space.dim() != 3 || space.ambient != 6)
        throw std::invalid_argument("classify_gr24_3space: 3-dim subspace of the 6-dim wedge space required");
    auto w6 = wedge2_form(f);
    if (!is_isotropic(w6, space))
        throw std::domain_error("classify_gr24_3space: subspace is not isotropic");

    std::vector<Subspace<F>> supports;
    for (std::size_t i = 0; i < 3; ++i)
        supports.push_back(bivector_support(f, space.basis.row(i), 4));
    auto u = sum(sum(supports[0], supports[1]), supports[2]);

    ClassifiedIsotropic<F> out;
    out.subspace = space;
    if (u.dim() == 3) {
        out.tag = IsotropicTag::PluckerFamilyI;
        out.witness = u;
        std::vector<Vec<F>> rows;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                rows.push_back(wedge_vector(f, u.basis.row(i), u.basis.row(j)));
        if (Subspace<F>::span_of_vectors(f, rows, 6) != space)
            throw std::logic_error("classify_gr24_3space: wedge^2 F regeneration failed");
    } else if (u.dim() == 4) {
        out.tag = IsotropicTag::PluckerFamilyII;
        auto n = intersect(intersect(supports[0], supports[1]), supports[2]);
        if (n.dim() != 1) throw std::logic_error("classify_gr24_3space: supports share no line");
        out.witness = n;
        if (tau_span(n, Subspace<F>::full(f, 4)) != space)
            throw std::logic_error("classify_gr24_3space: N ^ W regeneration failed");
    } else {
        throw std::logic_error("classify_gr24_3space: unexpected support span");
    }
    return out;
}

/// Flag N in H of an isotropic plane of the rank-6 form: the plane is the
/// pencil of 2-planes between N and H.
template <class F>
std::pair<Subspace<F>, Subspace<F>> classify_rank6_plane(const Subspace<F>& plane) {
    const F& f = plane.field;
    if (plane.dim() != 2 || plane.ambient != 6)
        throw std::invalid_argument("classify_rank6_plane: 2-dim subspace of the 6-dim wedge space required");
    auto w6 = wedge2_form(f);
    if (!is_isotropic(w6, plane))
        throw std::domain_error("classify_rank6_plane: subspace is not isotropic");
    auto s0 = bivector_support(f, plane.basis.row(0), 4);
    auto s1 = bivector_support(f, plane.basis.row(1), 4);
    auto n = intersect(s0, s1);
    auto h = sum(s0, s1);
    if (n.dim() != 1 || h.dim() != 3)
        throw std::logic_error("classify_rank6_plane: flag extraction failed");
    if (tau_span(n, h) != plane)
        throw std::logic_error("classify_rank6_plane: flag regeneration failed");
    return {n, h};
}

/// Classify an isotropic plane of the restricted form on the symplectic
/// kernel: it is the image of the pencil through a unique line N, and the
/// top of the flag is the alpha-complement of N.
template <class F>
ClassifiedIsotropic<F> classify_lg_line(const Subspace<F>& plane, const BilinearForm<F>& alpha) {
    const F& f = plane.field;
    auto sk = symplectic_kernel(alpha);
    if (plane.dim() != 2 || plane.ambient != 6)
        throw std::invalid_argument("classify_lg_line: 2-dim subspace in wedge coordinates required");
    if (!sk.s.contains(plane))
        throw std::domain_error("classify_lg_line: subspace does not lie in the symplectic kernel");
    auto w6 = wedge2_form(f);
    if (!is_isotropic(w6, plane))
        throw std::domain_error("classify_lg_line: subspace is not isotropic");

    auto [n, h] = classify_rank6_plane(plane);
    auto nperp = orthogonal_complement(alpha, n);
    if (h != nperp)
        throw std::logic_error("classify_lg_line: flag top differs from the alpha-complement");
    if (lambda_span(n, alpha) != plane)
        throw std::logic_error("classify_lg_line: pencil regeneration failed");

    ClassifiedIsotropic<F> out;
    out.tag = IsotropicTag::LGFlag;
    out.subspace = plane;
    out.witness = n;
    out.flag_top = h;
    return out;
}

/// Points of the rank-5 quadric are alpha-Lagrangian planes: the support of
/// an isotropic vector of the kernel form.  Returns that plane.
template <class F>
Subspace<F> classify_lg_point(const Vec<F>& omega, const BilinearForm<F>& alpha) {
    const F& f = alpha.field;
    if (!is_decomposable(f, omega, 4))
        throw std::domain_error("classify_lg_point: vector is not decomposable");
    auto supp = bivector_support(f, omega, 4);
    if (supp.dim() != 2) throw std::domain_error("classify_lg_point: zero vector");
    if (!is_isotropic(alpha, supp))
        throw std::logic_error("classify_lg_point: support is not alpha-isotropic");
    return supp;
}

/// "same" iff dim(a cap b) = dim a (mod 2): the two-component partition of
/// maximal isotropics of an even split form.
enum class FamilyParity { same, opposite };

template <class F>
FamilyParity og_family_parity(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("og_family_parity: subspaces must have equal dimension");
    if (a.ambient != b.ambient) throw std::invalid_argument("og_family_parity: ambient mismatch");
    auto d = intersect(a, b).dim();
    return (a.dim() % 2 == d % 2) ? FamilyParity::same : FamilyParity::opposite;
}

template <class F>
std::pair<Subspace<F>, Subspace<F>> rank2_point_pair(const BilinearForm<F>& form);

/// Tag an isotropic line of a split binary form with its index in the
/// ordered point pair.
template <class F>
ClassifiedIsotropic<F> classify_rank2_point(const Subspace<F>& line, const BilinearForm<F>& form) {
    if (line.dim() != 1 || line.ambient != 2)
        throw std::invalid_argument("classify_rank2_point: a line in the plane is required");
    if (!is_isotropic(form, line))
        throw std::domain_error("classify_rank2_point: line is not isotropic");
    auto [l1, l2] = rank2_point_pair(form);
    ClassifiedIsotropic<F> out;
    out.tag = IsotropicTag::PointPair;
    out.subspace = line;
    out.witness = line;
    if (line == l1) out.point_index = 0;
    else if (line == l2) out.point_index = 1;
    else throw std::logic_error("classify_rank2_point: isotropic line outside the point pair");
    return out;
}

/// The two isotropic lines of a split binary form, in lexicographic order.
template <class F>
std::pair<Subspace<F>, Subspace<F>> rank2_point_pair(const BilinearForm<F>& form) {
    const F& f = form.field;
    if (form.kind != FormKind::symmetric || form.dim() != 2)
        throw std::invalid_argument("rank2_point_pair: symmetric 2x2 form required");
    if (!is_nondegenerate(form))
        throw std::domain_error("rank2_point_pair: form is degenerate (nonzero radical)");
    auto a = form.gram.at(0, 0), b = form.gram.at(0, 1), c = form.gram.at(1, 1);

    Vec<F> v1, v2;
    if (f.is_zero(a)) {
        // y (2bx + cy) = 0 with b != 0 by nondegeneracy
        v1 = {f.one(), f.zero()};
        v2 = {c, f.neg(f.mul(f.from_int(2), b))};
    } else {
        auto disc = f.sub(f.mul(b, b), f.mul(a, c));
        auto s = f.sqrt(disc);
        if (!s)
            throw std::domain_error("rank2_point_pair: no isotropic lines (the form is anisotropic)");
        v1 = {f.sub(*s, b), a};
        v2 = {f.sub(f.neg(*s), b), a};
    }
    auto l1 = Subspace<F>::span_of_vectors(f, {v1}, 2);
    auto l2 = Subspace<F>::span_of_vectors(f, {v2}, 2);
    if (l1 == l2) throw std::logic_error("rank2_point_pair: coincident lines on a nondegenerate form");
    if (lex_less(l2, l1)) std::swap(l1, l2);
    return {l1, l2};
}

}  // namespace ortholab
