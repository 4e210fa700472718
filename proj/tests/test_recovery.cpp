#include <catch2/catch_amalgamated.hpp>

#include "ortholab/recovery.hpp"
#include "ortholab/sampling.hpp"

using namespace ortholab;

namespace {

template <class F>
BilinearForm<F> diag_form(const F& f, std::initializer_list<long long> d) {
    Matrix<F> g(f, d.size(), d.size());
    std::size_t i = 0;
    for (auto v : d) {
        g.at(i, i) = f.from_int(v);
        ++i;
    }
    return BilinearForm<F>(FormKind::symmetric, g);
}

template <class F>
BilinearForm<F> conjugate(const BilinearForm<F>& form, const Matrix<F>& b) {
    return BilinearForm<F>(form.kind, mul(mul(transpose(b), form.gram), b));
}

template <class F>
Subspace<F> coord_space(const F& f, std::size_t n, std::initializer_list<std::size_t> idx) {
    Matrix<F> m(f, idx.size(), n);
    std::size_t r = 0;
    for (auto i : idx) m.at(r++, i) = f.one();
    return Subspace<F>::span_of(m);
}

// for the conjugated form B^T G B, a G-isotropic subspace pulls back
// through x -> Bx, i.e. by applying B^{-1}
template <class F>
Subspace<F> pull_back(const Matrix<F>& b, const Subspace<F>& s) {
    auto binv = inverse(b);
    REQUIRE(binv.has_value());
    return map_subspace(*binv, s);
}

}  // namespace

TEST_CASE("rank-2 recovery") {
    RationalField q;
    PrimeField f5(5);

    Matrix<RationalField> h(q, 2, 2);
    h.at(0, 1) = h.at(1, 0) = q.one();
    auto hform = BilinearForm<RationalField>(FormKind::symmetric, h);
    auto cert = recover_rank2(hform);
    CHECK(verify_certificate(cert, hform));
    CHECK(cert.isometry == Matrix<RationalField>::identity(q, 2));

    auto cert5 = recover_rank2(diag_form(f5, {1, 1}));
    CHECK(verify_certificate(cert5, diag_form(f5, {1, 1})));

    CHECK_THROWS_AS(recover_rank2(diag_form(q, {1, 1})), std::domain_error);
}

TEST_CASE("rank-4 recovery round trips") {
    PrimeField f(5);
    auto t = tensor_form(f);

    // identity witness: the standard left plane recovers the identity isometry
    auto plane = coord_space(f, 4, {0, 1});
    auto cert = recover_rank4(t, plane);
    CHECK(verify_certificate(cert, t));
    CHECK(cert.isometry == Matrix<PrimeField>::identity(f, 4));

    // conjugated forms with transported witnesses
    SplitMix64 rng(1001);
    for (int i = 0; i < 25; ++i) {
        auto b = random_invertible(f, rng, 4);
        auto form = conjugate(t, b);
        auto w = pull_back(b, plane);  // witness in the conjugated coordinates
        REQUIRE(is_isotropic(form, w));
        auto c = recover_rank4(form, w);
        CHECK(verify_certificate(c, form));
    }

    // any brute-force plane of the doubled hyperbolic form works
    auto hh = diag_form(f, {0, 0, 0, 0});
    hh.gram.at(0, 1) = hh.gram.at(1, 0) = 1;
    hh.gram.at(2, 3) = hh.gram.at(3, 2) = 1;
    PrimeField f3(3);
    auto hh3 = diag_form(f3, {0, 0, 0, 0});
    hh3.gram.at(0, 1) = hh3.gram.at(1, 0) = 1;
    hh3.gram.at(2, 3) = hh3.gram.at(3, 2) = 1;
    for (const auto& p : isotropic_subspaces(hh3, 2)) {
        auto c = recover_rank4(hh3, p);
        CHECK(verify_certificate(c, hh3));
    }

    // non-isotropic witness is rejected
    CHECK_THROWS_AS(recover_rank4(t, coord_space(f, 4, {0, 3})), std::domain_error);
}

TEST_CASE("rank-6 recovery round trips and family twist") {
    PrimeField f(5);
    auto w6 = wedge2_form(f);

    auto fam1 = coord_space(f, 6, {0, 1, 3});  // wedge^2(e1,e2,e3)
    auto cert1 = recover_rank6(w6, fam1);
    CHECK(verify_certificate(cert1, w6));
    CHECK_FALSE(cert1.correlation_twisted);
    CHECK(cert1.isometry == Matrix<PrimeField>::identity(f, 6));

    auto fam2 = coord_space(f, 6, {0, 1, 2});  // e1 ^ W
    auto cert2 = recover_rank6(w6, fam2);
    CHECK(verify_certificate(cert2, w6));
    CHECK(cert2.correlation_twisted);

    // the twist flag matches the classification on every maximal isotropic
    PrimeField f3(3);
    auto w63 = wedge2_form(f3);
    for (const auto& s : isotropic_subspaces(w63, 3)) {
        auto tag = classify_gr24_3space(s).tag;
        auto c = recover_rank6(w63, s);
        CHECK(verify_certificate(c, w63));
        CHECK(c.correlation_twisted == (tag == IsotropicTag::PluckerFamilyII));
    }

    // conjugates
    SplitMix64 rng(1002);
    for (int i = 0; i < 15; ++i) {
        auto b = random_invertible(f, rng, 6);
        auto form = conjugate(w6, b);
        auto w = pull_back(b, fam1);
        auto c = recover_rank6(form, w);
        CHECK(verify_certificate(c, form));
    }
}

TEST_CASE("rank-3 recovery") {
    PrimeField f7(7);
    RationalField q;

    // the construction form itself
    auto s7 = sym2_form(f7);
    auto cert = recover_rank3(s7);
    CHECK(verify_certificate(cert, s7));

    // a split diagonal form whose discriminant class differs from the
    // construction Gram: the scale field carries the difference
    auto d = diag_form(f7, {1, -1, 1});
    auto cert2 = recover_rank3(d);
    CHECK(verify_certificate(cert2, d));

    // random orthogonal conjugates of the construction form
    SplitMix64 rng(1003);
    PrimeField f5(5);
    auto s5 = sym2_form(f5);
    for (int i = 0; i < 25; ++i) {
        auto b = random_orthogonal(f5, s5, rng);
        auto form = conjugate(s5, b);
        REQUIRE(form.gram == s5.gram);  // orthogonal conjugation fixes the Gram
        auto c = recover_rank3(form);
        CHECK(verify_certificate(c, form));
    }
    for (int i = 0; i < 25; ++i) {
        auto b = random_invertible(f5, rng, 3);
        auto form = conjugate(s5, b);
        auto c = recover_rank3(form);
        CHECK(verify_certificate(c, form));
    }

    // structured rational example: hyperbolic plane plus a line
    auto qd = diag_form(q, {1, -1, 2});
    auto cq = recover_rank3(qd);
    CHECK(verify_certificate(cq, qd));

    // definite rational form is not split
    CHECK_THROWS_AS(recover_rank3(diag_form(q, {1, 1, 1})), std::domain_error);
}

TEST_CASE("rank-5 recovery") {
    PrimeField f7(7);
    PrimeField f5(5);

    // the standard kernel form round-trips
    auto sk = symplectic_kernel(standard_symplectic(f5, 4));
    auto cert = recover_rank5(sk.restricted);
    CHECK(verify_certificate(cert, sk.restricted));
    REQUIRE(cert.alpha.has_value());
    // the recovered symplectic form admits a Darboux basis, so it is
    // equivalent to the standard one
    auto db = darboux_basis(*cert.alpha);
    CHECK(mul(mul(transpose(db), cert.alpha->gram), db) == standard_symplectic(f5, 4).gram);

    // random conjugates over F_7
    SplitMix64 rng(1004);
    auto sk7 = symplectic_kernel(standard_symplectic(f7, 4));
    for (int i = 0; i < 20; ++i) {
        auto b = random_orthogonal(f7, sk7.restricted, rng);
        auto form = conjugate(sk7.restricted, b);
        REQUIRE(form.gram == sk7.restricted.gram);
        auto c = recover_rank5(form);
        CHECK(verify_certificate(c, form));
    }
    for (int i = 0; i < 20; ++i) {
        auto b = random_invertible(f7, rng, 5);
        auto form = conjugate(sk7.restricted, b);
        auto c = recover_rank5(form);
        CHECK(verify_certificate(c, form));
    }

    // split diagonal rank-5 form
    auto d = diag_form(f7, {1, -1, 1, -1, 1});
    auto cd = recover_rank5(d);
    CHECK(verify_certificate(cd, d));

    // definite rational form is rejected as not split
    RationalField q;
    CHECK_THROWS_AS(recover_rank5(diag_form(q, {1, 1, 1, 1, 1})), std::domain_error);
}

TEST_CASE("rank-5 recovery transports the pencil structure") {
    // recover from the standard kernel Gram and push a known pencil plane
    // through the isometry: it must classify as a pencil for the recovered
    // symplectic form
    PrimeField f(5);
    auto alpha = standard_symplectic(f, 4);
    auto sk = symplectic_kernel(alpha);
    auto cert = recover_rank5(sk.restricted);
    REQUIRE(verify_certificate(cert, sk.restricted));
    auto sk2 = symplectic_kernel(*cert.alpha);

    auto n = coord_space(f, 4, {0});
    auto pencil = lambda_span(n, alpha);  // in wedge coordinates of the input presentation
    // express in the kernel basis of the input presentation
    Matrix<PrimeField> in_coords(f, 2, 5);
    Matrix<PrimeField> smat = transpose(sk.s.basis);
    for (std::size_t i = 0; i < 2; ++i) {
        auto z = solve(smat, pencil.basis.row(i));
        REQUIRE(z.has_value());
        for (std::size_t j = 0; j < 5; ++j) in_coords.at(i, j) = (*z)[j];
    }
    // push through the certificate isometry, lift to the recovered wedge coords
    auto image = mul(in_coords, transpose(cert.isometry));
    auto lifted = Subspace<PrimeField>::span_of(mul(image, sk2.s.basis));
    auto cl = classify_lg_line(lifted, *cert.alpha);
    CHECK(cl.tag == IsotropicTag::LGFlag);
    CHECK(*cl.flag_top == orthogonal_complement(*cert.alpha, cl.witness));
}

TEST_CASE("recovery totality over small fields") {
    // Exhaustive over F_3: every nondegenerate ternary form is split and
    // recovers; a binary form recovers exactly when its discriminant-style
    // invariant b^2 - ac is a nonzero square; a quaternary form recovers
    // exactly when it is split, which happens exactly when det is a square.
    PrimeField f(3);

    long long ternary_ok = 0;
    for (long long code = 0; code < 729; ++code) {
        long long c = code;
        long long v[6];
        for (auto& x : v) {
            x = c % 3;
            c /= 3;
        }
        Matrix<PrimeField> g(f, 3, 3);
        g.at(0, 0) = v[0];
        g.at(1, 1) = v[1];
        g.at(2, 2) = v[2];
        g.at(0, 1) = g.at(1, 0) = v[3];
        g.at(0, 2) = g.at(2, 0) = v[4];
        g.at(1, 2) = g.at(2, 1) = v[5];
        if (f.is_zero(det(g))) continue;
        auto form = BilinearForm<PrimeField>(FormKind::symmetric, g);
        CHECK(witt_decompose(form).witt_index == 1);
        auto cert = recover_rank3(form);
        CHECK(verify_certificate(cert, form));
        ++ternary_ok;
    }
    CHECK(ternary_ok > 0);

    PrimeField f5(5);
    for (long long code = 0; code < 125; ++code) {
        long long c = code;
        long long a = c % 5, b = (c / 5) % 5, d = (c / 25) % 5;
        Matrix<PrimeField> g(f5, 2, 2);
        g.at(0, 0) = a;
        g.at(1, 1) = d;
        g.at(0, 1) = g.at(1, 0) = b;
        if (f5.is_zero(det(g))) continue;
        auto form = BilinearForm<PrimeField>(FormKind::symmetric, g);
        bool split = f5.is_square(f5.sub(f5.mul(b, b), f5.mul(a, d)));
        if (split) {
            auto cert = recover_rank2(form);
            CHECK(verify_certificate(cert, form));
        } else {
            CHECK_THROWS_AS(recover_rank2(form), std::domain_error);
        }
    }

    long long quaternary_split = 0, quaternary_aniso_kernel = 0;
    for (long long code = 0; code < 59049; ++code) {
        long long c = code;
        long long v[10];
        for (auto& x : v) {
            x = c % 3;
            c /= 3;
        }
        Matrix<PrimeField> g(f, 4, 4);
        std::size_t t = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i; j < 4; ++j) {
                g.at(i, j) = g.at(j, i) = v[t++];
            }
        auto d = det(g);
        if (f.is_zero(d)) continue;
        bool split = f.is_square(d);  // dim 4: split iff disc = det is a square
        auto form = BilinearForm<PrimeField>(FormKind::symmetric, g);
        CHECK((witt_decompose(form).witt_index == 2) == split);
        if (split) {
            auto cert = recover_rank4(form);
            CHECK(verify_certificate(cert, form));
            ++quaternary_split;
        } else {
            CHECK_THROWS_AS(recover_rank4(form), std::domain_error);
            ++quaternary_aniso_kernel;
        }
    }
    CHECK(quaternary_split > 0);
    CHECK(quaternary_aniso_kernel > 0);

    // sampled higher ranks over F_5: every nondegenerate 5x5 form is split;
    // a 6x6 form is split exactly when -det is a square
    SplitMix64 rng(2025);
    for (int i = 0; i < 100; ++i) {
        auto m = random_matrix(f5, rng, 5, 5);
        auto g = add(m, transpose(m));
        if (f5.is_zero(det(g))) continue;
        auto form = BilinearForm<PrimeField>(FormKind::symmetric, g);
        auto cert = recover_rank5(form);
        CHECK(verify_certificate(cert, form));
    }
    for (int i = 0; i < 100; ++i) {
        auto m = random_matrix(f5, rng, 6, 6);
        auto g = add(m, transpose(m));
        auto d = det(g);
        if (f5.is_zero(d)) continue;
        auto form = BilinearForm<PrimeField>(FormKind::symmetric, g);
        bool split = f5.is_square(f5.neg(d));
        CHECK((witt_decompose(form).witt_index == 3) == split);
        if (split) {
            auto cert = recover_rank6(form);
            CHECK(verify_certificate(cert, form));
        } else {
            CHECK_THROWS_AS(recover_rank6(form), std::domain_error);
        }
    }
}

TEST_CASE("witness-free even recoveries") {
    PrimeField f(5);
    auto c4 = recover_rank4(tensor_form(f));
    CHECK(verify_certificate(c4, tensor_form(f)));
    auto c6 = recover_rank6(wedge2_form(f));
    CHECK(verify_certificate(c6, wedge2_form(f)));

    // anisotropic-over-Q rank-4 input is not split
    RationalField q;
    CHECK_THROWS_AS(recover_rank4(diag_form(q, {1, 1, 1, 1})), std::domain_error);
}
