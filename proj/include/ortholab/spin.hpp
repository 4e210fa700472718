// The low-rank isogenies onto the special orthogonal groups, through their
// classical models: SL2 acting on the symmetric square (rank 3), SL2 x SL2
// on the tensor product (rank 4), Sp4 on the symplectic contraction kernel
// (rank 5), SL4 on the wedge square (rank 6).  Each map preserves the
// matching construction form, lands in determinant one, and has kernel of
// order two, the center elements acting trivially.
//
// Matrices act on column vectors; g = [[a,b],[c,d]] sends e1 to a e1 + c e2.

#pragma once

#include <stdexcept>
#include <vector>

#include "constructions.hpp"

namespace ortholab {

enum class SpinMap { rho3, rho4, rho5, rho6 };

inline const char* spin_map_name(SpinMap m) {
    switch (m) {
        case SpinMap::rho3: return "rho3";
        case SpinMap::rho4: return "rho4";
        case SpinMap::rho5: return "rho5";
        case SpinMap::rho6: return "rho6";
    }
    return "?";
}

/// A kernel element: one matrix, or a pair for the product group, tagged
/// with the map whose kernel it belongs to.
template <class F>
struct GroupElement {
    SpinMap group{};
    std::vector<Matrix<F>> factors;
};

namespace detail {

template <class F>
void require_det_one(const Matrix<F>& g, const char* who) {
    if (!g.field.eq(det(g), g.field.one()))
        throw std::domain_error(std::string(who) + ": matrix must have determinant one");
}

}  // namespace detail

/// Induced action on the symmetric square, basis (e1^2, e1 e2, e2^2).
template <class F>
Matrix<F> rho3(const Matrix<F>& g) {
    if (g.rows != 2 || g.cols != 2) throw std::invalid_argument("rho3: 2x2 matrix required");
    detail::require_det_one(g, "rho3");
    const F& f = g.field;
    auto a = g.at(0, 0), b = g.at(0, 1), c = g.at(1, 0), d = g.at(1, 1);
    Matrix<F> m(f, 3, 3);
    auto two = f.from_int(2);
    m.at(0, 0) = f.mul(a, a);
    m.at(0, 1) = f.mul(a, b);
    m.at(0, 2) = f.mul(b, b);
    m.at(1, 0) = f.mul(two, f.mul(a, c));
    m.at(1, 1) = f.add(f.mul(a, d), f.mul(b, c));
    m.at(1, 2) = f.mul(two, f.mul(b, d));
    m.at(2, 0) = f.mul(c, c);
    m.at(2, 1) = f.mul(c, d);
    m.at(2, 2) = f.mul(d, d);
    return m;
}

/// Kronecker product action on the tensor square, row-major basis.
template <class F>
Matrix<F> rho4(const Matrix<F>& g1, const Matrix<F>& g2) {
    if (g1.rows != 2 || g1.cols != 2 || g2.rows != 2 || g2.cols != 2)
        throw std::invalid_argument("rho4: two 2x2 matrices required");
    detail::require_det_one(g1, "rho4");
    detail::require_det_one(g2, "rho4");
    const F& f = g1.field;
    Matrix<F> m(f, 4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    m.at(2 * i + j, 2 * k + l) = f.mul(g1.at(i, k), g2.at(j, l));
    return m;
}

/// Second compound matrix: the action on bivectors in the lexicographic
/// basis; entry ((i,j),(k,l)) is the 2x2 minor on rows i,j and columns k,l.
template <class F>
Matrix<F> second_compound(const Matrix<F>& g) {
    if (g.rows != 4 || g.cols != 4) throw std::invalid_argument("second_compound: 4x4 matrix required");
    const F& f = g.field;
    auto ps = wedge_pairs(4);
    Matrix<F> m(f, 6, 6);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) {
            auto [i, j] = ps[r];
            auto [k, l] = ps[c];
            m.at(r, c) = f.sub(f.mul(g.at(i, k), g.at(j, l)), f.mul(g.at(i, l), g.at(j, k)));
        }
    return m;
}

template <class F>
Matrix<F> rho6(const Matrix<F>& g) {
    detail::require_det_one(g, "rho6");
    return second_compound(g);
}

template <class F>
bool is_symplectic(const Matrix<F>& g) {
    if (g.rows != 4 || g.cols != 4) return false;
    auto j = standard_symplectic(g.field, 4).gram;
    return mul(mul(transpose(g), j), g) == j;
}

/// The contraction kernel of the standard symplectic form, in wedge
/// coordinates; the domain of the restricted rank-5 action.
template <class F>
Subspace<F> standard_kernel_space(const F& f) {
    return symplectic_kernel(standard_symplectic(f, 4)).s;
}

/// Restriction of the bivector action to the contraction kernel of the
/// standard symplectic form, in the RREF basis of that kernel.
template <class F>
Matrix<F> rho5(const Matrix<F>& g) {
    const F& f = g.field;
    if (!is_symplectic(g))
        throw std::domain_error("rho5: matrix is not symplectic for the standard form");
    auto c6 = second_compound(g);
    auto s = standard_kernel_space(f);
    Matrix<F> smat = transpose(s.basis);  // 6 x 5
    Matrix<F> m(f, 5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
        auto y = mul_vec(c6, s.basis.row(i));
        auto z = solve(smat, y);
        if (!z) throw std::logic_error("rho5: bivector action does not preserve the kernel");
        for (std::size_t r = 0; r < 5; ++r) m.at(r, i) = (*z)[r];
    }
    return m;
}

/// The construction form preserved by each map.
template <class F>
BilinearForm<F> spin_target_form(SpinMap which, const F& f) {
    switch (which) {
        case SpinMap::rho3: return sym2_form(f);
        case SpinMap::rho4: return tensor_form(f);
        case SpinMap::rho5: return symplectic_kernel(standard_symplectic(f, 4)).restricted;
        case SpinMap::rho6: return wedge2_form(f);
    }
    throw std::logic_error("spin_target_form: unknown map");
}

/// All elements mapping to the identity.  rho3 scans SL2(F_p) exhaustively
/// (p <= 7).  For the others the kernel is found inside the diagonal
/// subgroup: an element of the kernel fixes every standard decomposable
/// bivector (rho6, rho5) or forces scalar blocks (rho4), so it preserves
/// the coordinate planes, hence the coordinate lines, hence is diagonal.
inline std::vector<GroupElement<PrimeField>> kernel_elements(SpinMap which, const PrimeField& f) {
    std::vector<GroupElement<PrimeField>> out;
    const long long p = f.p;

    auto diag4 = [&](long long a, long long b, long long c, long long d) {
        Matrix<PrimeField> m(f, 4, 4);
        m.at(0, 0) = a;
        m.at(1, 1) = b;
        m.at(2, 2) = c;
        m.at(3, 3) = d;
        return m;
    };

    switch (which) {
        case SpinMap::rho3: {
            if (p > 7)
                throw std::domain_error("kernel_elements: exhaustive SL2 scan supported for p <= 7");
            auto id3 = Matrix<PrimeField>::identity(f, 3);
            for (long long a = 0; a < p; ++a)
                for (long long b = 0; b < p; ++b)
                    for (long long c = 0; c < p; ++c)
                        for (long long d = 0; d < p; ++d) {
                            if (f.sub(f.mul(a, d), f.mul(b, c)) != 1) continue;
                            Matrix<PrimeField> g(f, 2, 2);
                            g.at(0, 0) = a;
                            g.at(0, 1) = b;
                            g.at(1, 0) = c;
                            g.at(1, 1) = d;
                            if (rho3(g) == id3) out.push_back({which, {g}});
                        }
            break;
        }
        case SpinMap::rho4: {
            // g1 (x) g2 = I forces the off-diagonal blocks b g2 and c g2 to
            // vanish with g2 invertible, so g1 = s I, g2 = s^{-1} I, s^2 = 1
            auto id4 = Matrix<PrimeField>::identity(f, 4);
            for (long long s = 1; s < p; ++s) {
                if (f.mul(s, s) != 1) continue;
                Matrix<PrimeField> g1 = scalar_mul(s, Matrix<PrimeField>::identity(f, 2));
                Matrix<PrimeField> g2 = scalar_mul(f.inv(s), Matrix<PrimeField>::identity(f, 2));
                if (f.eq(det(g1), f.one()) && f.eq(det(g2), f.one()) && rho4(g1, g2) == id4)
                    out.push_back({which, {g1, g2}});
            }
            break;
        }
        case SpinMap::rho5: {
            auto id5 = Matrix<PrimeField>::identity(f, 5);
            for (long long a = 1; a < p; ++a)
                for (long long b = 1; b < p; ++b)
                    for (long long c = 1; c < p; ++c)
                        for (long long d = 1; d < p; ++d) {
                            auto g = diag4(a, b, c, d);
                            if (!is_symplectic(g)) continue;
                            if (rho5(g) == id5) out.push_back({which, {g}});
                        }
            break;
        }
        case SpinMap::rho6: {
            auto id6 = Matrix<PrimeField>::identity(f, 6);
            for (long long a = 1; a < p; ++a)
                for (long long b = 1; b < p; ++b)
                    for (long long c = 1; c < p; ++c)
                        for (long long d = 1; d < p; ++d) {
                            auto g = diag4(a, b, c, d);
                            if (!f.eq(det(g), f.one())) continue;
                            if (second_compound(g) == id6) out.push_back({which, {g}});
                        }
            break;
        }
    }
    return out;
}

/// The classical rotation parametrization of the plane: an element of
/// SO(2) for each nonzero scalar z.  Needs a square root of -1, so it is
/// provided over F_p with p = 1 (mod 4) only.
template <class F>
Matrix<F> so2_element(const F& f, const typename F::Elem& z) {
    if (f.is_zero(z)) throw std::domain_error("so2_element: z must be invertible");
    auto i = f.sqrt(f.neg(f.one()));
    if (!i)
        throw std::domain_error("so2_element: no square root of -1 in this field (need p = 1 mod 4)");
    auto zinv = f.inv(z);
    auto half = f.inv(f.from_int(2));
    auto half_i = f.div(half, *i);
    Matrix<F> m(f, 2, 2);
    m.at(0, 0) = f.mul(half, f.add(z, zinv));
    m.at(0, 1) = f.mul(half_i, f.sub(zinv, z));
    m.at(1, 0) = f.mul(half_i, f.sub(z, zinv));
    m.at(1, 1) = m.at(0, 0);
    return m;
}

}  // namespace ortholab
