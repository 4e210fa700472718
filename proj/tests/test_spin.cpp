#include <catch2/catch_amalgamated.hpp>

#include "ortholab/sampling.hpp"
#include "ortholab/spin.hpp"

using namespace ortholab;

namespace {

template <class F>
Matrix<F> mat2(const F& f, long long a, long long b, long long c, long long d) {
    Matrix<F> m(f, 2, 2);
    m.at(0, 0) = f.from_int(a);
    m.at(0, 1) = f.from_int(b);
    m.at(1, 0) = f.from_int(c);
    m.at(1, 1) = f.from_int(d);
    return m;
}

}  // namespace

TEST_CASE("rho3 values") {
    PrimeField f7(7);
    auto id2 = Matrix<PrimeField>::identity(f7, 2);
    CHECK(rho3(id2) == Matrix<PrimeField>::identity(f7, 3));
    CHECK(rho3(scalar_mul(f7.from_int(-1), id2)) == Matrix<PrimeField>::identity(f7, 3));

    // diag(2, 1/2) acts as diag(4, 1, 2) on (e1^2, e1 e2, e2^2) over F_7
    auto g = mat2(f7, 2, 0, 0, 4);
    auto m = rho3(g);
    Matrix<PrimeField> expect(f7, 3, 3);
    expect.at(0, 0) = 4;
    expect.at(1, 1) = 1;
    expect.at(2, 2) = 2;
    CHECK(m == expect);

    CHECK_THROWS_AS(rho3(mat2(f7, 2, 0, 0, 1)), std::domain_error);
}

TEST_CASE("rho4 values") {
    PrimeField f5(5);
    auto id2 = Matrix<PrimeField>::identity(f5, 2);
    auto neg = scalar_mul(f5.from_int(-1), id2);
    CHECK(rho4(id2, id2) == Matrix<PrimeField>::identity(f5, 4));
    CHECK(rho4(neg, neg) == Matrix<PrimeField>::identity(f5, 4));
    // a central element of one factor maps to -I, still form-preserving
    auto m = rho4(neg, id2);
    CHECK(m == scalar_mul(f5.from_int(-1), Matrix<PrimeField>::identity(f5, 4)));
    auto t = tensor_form(f5);
    CHECK(mul(mul(transpose(m), t.gram), m) == t.gram);
}

TEST_CASE("rho6 values") {
    PrimeField f5(5);
    auto id4 = Matrix<PrimeField>::identity(f5, 4);
    CHECK(rho6(id4) == Matrix<PrimeField>::identity(f5, 6));
    CHECK(rho6(scalar_mul(f5.from_int(-1), id4)) == Matrix<PrimeField>::identity(f5, 6));

    // diag(a,b,c,d) acts as diag(ab, ac, ad, bc, bd, cd)
    Matrix<PrimeField> g(f5, 4, 4);
    g.at(0, 0) = 1;
    g.at(1, 1) = 2;
    g.at(2, 2) = 3;
    g.at(3, 3) = f5.inv(f5.from_int(6));  // makes det 1
    auto m = rho6(g);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c)
            if (r != c) CHECK(m.at(r, c) == 0);
    auto ps = wedge_pairs(4);
    for (std::size_t r = 0; r < 6; ++r)
        CHECK(m.at(r, r) == f5.mul(g.at(ps[r].first, ps[r].first), g.at(ps[r].second, ps[r].second)));
}

TEST_CASE("rho5 restriction") {
    PrimeField f5(5);
    auto id4 = Matrix<PrimeField>::identity(f5, 4);
    CHECK(rho5(id4) == Matrix<PrimeField>::identity(f5, 5));
    CHECK(rho5(scalar_mul(f5.from_int(-1), id4)) == Matrix<PrimeField>::identity(f5, 5));

    // the symplectic transvection v -> v + a(v, e1) e1 restricts to an
    // explicit 5x5 matrix preserving the kernel form
    auto alpha = standard_symplectic(f5, 4);
    auto tv = Matrix<PrimeField>::identity(f5, 4);
    auto ae1 = mul_vec(alpha.gram, Vec<PrimeField>{1, 0, 0, 0});  // v -> a(v, e1) is <v, A e1>
    for (std::size_t j = 0; j < 4; ++j) tv.at(0, j) = f5.add(tv.at(0, j), ae1[j]);
    REQUIRE(is_symplectic(tv));
    auto mtv = rho5(tv);
    auto tgt = spin_target_form(SpinMap::rho5, f5);
    CHECK(mul(mul(transpose(mtv), tgt.gram), mtv) == tgt.gram);
    CHECK(f5.eq(det(mtv), f5.one()));

    SplitMix64 rng(7);
    auto g = random_symplectic(f5, rng, 4, 3);
    REQUIRE(is_symplectic(g));
    auto m = rho5(g);
    auto target = spin_target_form(SpinMap::rho5, f5);
    CHECK(mul(mul(transpose(m), target.gram), m) == target.gram);
    CHECK(f5.eq(det(m), f5.one()));

    // non-symplectic input is rejected
    Matrix<PrimeField> bad = Matrix<PrimeField>::identity(f5, 4);
    bad.at(0, 0) = 2;
    CHECK_THROWS_AS(rho5(bad), std::domain_error);
}

TEST_CASE("homomorphism, form preservation, determinant one") {
    for (long long p : {5LL, 7LL}) {
        PrimeField f(p);
        SplitMix64 rng(9000 + p);
        auto s3 = spin_target_form(SpinMap::rho3, f);
        auto s4 = spin_target_form(SpinMap::rho4, f);
        auto s5 = spin_target_form(SpinMap::rho5, f);
        auto s6 = spin_target_form(SpinMap::rho6, f);
        for (int i = 0; i < 100; ++i) {
            auto g = random_sl(f, rng, 2), h = random_sl(f, rng, 2);
            CHECK(rho3(mul(g, h)) == mul(rho3(g), rho3(h)));
            auto m = rho3(g);
            CHECK(mul(mul(transpose(m), s3.gram), m) == s3.gram);
            CHECK(f.eq(det(m), f.one()));

            auto g2 = random_sl(f, rng, 2), h2 = random_sl(f, rng, 2);
            CHECK(rho4(mul(g, g2), mul(h, h2)) == mul(rho4(g, h), rho4(g2, h2)));
            auto m4 = rho4(g, h);
            CHECK(mul(mul(transpose(m4), s4.gram), m4) == s4.gram);
            CHECK(f.eq(det(m4), f.one()));

            auto a = random_symplectic(f, rng, 4), b = random_symplectic(f, rng, 4);
            CHECK(rho5(mul(a, b)) == mul(rho5(a), rho5(b)));
            auto m5 = rho5(a);
            CHECK(mul(mul(transpose(m5), s5.gram), m5) == s5.gram);
            CHECK(f.eq(det(m5), f.one()));

            auto c = random_sl(f, rng, 4), d = random_sl(f, rng, 4);
            CHECK(rho6(mul(c, d)) == mul(rho6(c), rho6(d)));
            auto m6 = rho6(c);
            CHECK(mul(mul(transpose(m6), s6.gram), m6) == s6.gram);
            CHECK(f.eq(det(m6), f.one()));
        }
    }
}

TEST_CASE("kernels have exactly two elements") {
    for (long long p : {5LL, 7LL}) {
        PrimeField f(p);
        for (auto which : {SpinMap::rho3, SpinMap::rho4, SpinMap::rho5, SpinMap::rho6}) {
            auto ker = kernel_elements(which, f);
            INFO(spin_map_name(which) << " over F_" << p);
            CHECK(ker.size() == 2);
        }
        // the two rho3 kernel elements are plus and minus the identity
        auto ker3 = kernel_elements(SpinMap::rho3, f);
        auto id2 = Matrix<PrimeField>::identity(f, 2);
        bool has_id = false, has_neg = false;
        for (const auto& k : ker3) {
            if (k.factors[0] == id2) has_id = true;
            if (k.factors[0] == scalar_mul(f.from_int(-1), id2)) has_neg = true;
        }
        CHECK(has_id);
        CHECK(has_neg);
    }
}

TEST_CASE("plane rotation parametrization") {
    PrimeField f5(5);  // 5 = 1 mod 4
    auto m = so2_element(f5, f5.from_int(2));
    // in SO(2): orthogonal for the identity form, determinant one
    CHECK(mul(transpose(m), m) == Matrix<PrimeField>::identity(f5, 2));
    CHECK(f5.eq(det(m), f5.one()));
    // multiplicative in z
    auto m3 = so2_element(f5, f5.from_int(3));
    CHECK(mul(m, m3) == so2_element(f5, f5.from_int(6)));

    PrimeField f7(7);  // 7 = 3 mod 4: no sqrt(-1)
    CHECK_THROWS_AS(so2_element(f7, f7.from_int(2)), std::domain_error);
}
