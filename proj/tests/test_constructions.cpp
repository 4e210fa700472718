#include <catch2/catch_amalgamated.hpp>

#include "ortholab/constructions.hpp"
#include "ortholab/sampling.hpp"

using namespace ortholab;

namespace {

template <class F>
Subspace<F> coord_line(const F& f, std::size_t n, std::size_t i) {
    Matrix<F> m(f, 1, n);
    m.at(0, i) = f.one();
    return Subspace<F>::span_of(m);
}

template <class F>
Subspace<F> coord_space(const F& f, std::size_t n, std::initializer_list<std::size_t> idx) {
    Matrix<F> m(f, idx.size(), n);
    std::size_t r = 0;
    for (auto i : idx) m.at(r++, i) = f.one();
    return Subspace<F>::span_of(m);
}

}  // namespace

TEST_CASE("tensor form gram") {
    PrimeField f(5);
    auto t = tensor_form(f);
    // basis order e1f1, e1f2, e2f1, e2f2
    CHECK(t.gram.at(0, 3) == f.one());
    CHECK(t.gram.at(1, 2) == f.from_int(-1));
    CHECK(t.gram.at(0, 0) == 0);
    CHECK(t.gram.at(0, 1) == 0);
    CHECK(is_nondegenerate(t));
    CHECK(witt_decompose(t).witt_index == 2);

    SplitMix64 rng(11);
    for (int i = 0; i < 30; ++i) {
        auto v = random_vector(f, rng, 2), w = random_vector(f, rng, 2);
        auto x = tensor_of_vectors(f, v, w);
        CHECK(f.is_zero(t.eval(x, x)));
    }
}

TEST_CASE("rank one factorization matches isotropy") {
    // exhaustive over F_q^4 for q in {3, 5}: the isotropic vectors are
    // exactly the rank-one tensors
    for (long long q : {3LL, 5LL}) {
        PrimeField f(q);
        auto t = tensor_form(f);
        for (long long a = 0; a < q; ++a)
            for (long long b = 0; b < q; ++b)
                for (long long c = 0; c < q; ++c)
                    for (long long d = 0; d < q; ++d) {
                        Vec<PrimeField> x = {a, b, c, d};
                        bool iso = f.is_zero(t.eval(x, x));
                        auto fac = rank_one_factor(f, x);
                        CHECK(iso == fac.has_value());
                        if (fac) CHECK(tensor_of_vectors(f, fac->first, fac->second) == x);
                    }
    }
}

TEST_CASE("sym2 form gram") {
    PrimeField f(7);
    auto s = sym2_form(f);
    CHECK(s.gram.at(0, 2) == f.from_int(4));
    CHECK(s.gram.at(1, 1) == f.from_int(-2));
    CHECK(s.gram.at(0, 0) == 0);
    CHECK(s.gram.at(0, 1) == 0);
    CHECK(is_nondegenerate(s));
    CHECK(witt_decompose(s).witt_index == 1);

    SplitMix64 rng(22);
    for (int i = 0; i < 30; ++i) {
        auto v = random_vector(f, rng, 2);
        auto x = sym2_of_vector(f, v);
        CHECK(f.is_zero(s.eval(x, x)));
    }

    RationalField q;
    auto sq = sym2_form(q);
    auto vq = Vec<RationalField>{parse_rational("2/3"), parse_rational("-5")};
    auto xq = sym2_of_vector(q, vq);
    CHECK(q.is_zero(sq.eval(xq, xq)));
}

TEST_CASE("squares are exactly the isotropic lines of the sym2 form") {
    for (long long q : {3LL, 5LL}) {
    PrimeField f(q);
    auto s = sym2_form(f);
    for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b)
            for (long long c = 0; c < q; ++c) {
                Vec<PrimeField> w = {a, b, c};
                if (a == 0 && b == 0 && c == 0) continue;
                bool iso = f.is_zero(s.eval(w, w));
                auto wit = veronese_witness(f, w);
                CHECK(iso == wit.has_value());
                if (wit) {
                    auto v = wit->basis.row(0);
                    auto sq = sym2_of_vector(f, v);
                    // span(v^2) = span(w)
                    CHECK(Subspace<PrimeField>::span_of_vectors(f, {sq}, 3) ==
                          Subspace<PrimeField>::span_of_vectors(f, {w}, 3));
                }
            }
    }
}

TEST_CASE("wedge form gram") {
    PrimeField f(5);
    auto w = wedge2_form(f);
    // lex basis 12, 13, 14, 23, 24, 34
    CHECK(w.gram.at(0, 5) == f.one());
    CHECK(w.gram.at(1, 4) == f.from_int(-1));
    CHECK(w.gram.at(2, 3) == f.one());
    for (std::size_t i = 0; i < 6; ++i) CHECK(w.gram.at(i, i) == 0);
    CHECK(is_nondegenerate(w));
    CHECK(witt_decompose(w).witt_index == 3);

    SplitMix64 rng(33);
    for (int i = 0; i < 30; ++i) {
        auto v = random_vector(f, rng, 4), u = random_vector(f, rng, 4);
        auto x = wedge_vector(f, v, u);
        CHECK(f.is_zero(w.eval(x, x)));
        CHECK(is_decomposable(f, x, 4));
    }
}

TEST_CASE("decomposable bivectors are exactly the isotropic vectors") {
    PrimeField f(3);
    auto w = wedge2_form(f);
    // exhaustive over F_3^6
    Vec<PrimeField> x(6, 0);
    long long total = 729;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (auto& e : x) {
            e = c % 3;
            c /= 3;
        }
        bool iso = f.is_zero(w.eval(x, x));
        CHECK(iso == is_decomposable(f, x, 4));
        bool zero = true;
        for (auto& e : x)
            if (e != 0) zero = false;
        if (iso && !zero) {
            auto supp = bivector_support(f, x, 4);
            CHECK(supp.dim() == 2);
            auto regen = wedge_vector(f, supp.basis.row(0), supp.basis.row(1));
            CHECK(Subspace<PrimeField>::span_of_vectors(f, {regen}, 6) ==
                  Subspace<PrimeField>::span_of_vectors(f, {x}, 6));
        }
    }
}

TEST_CASE("symplectic kernel of the standard form") {
    PrimeField f(5);
    auto alpha = standard_symplectic(f, 4);
    auto sk = symplectic_kernel(alpha);

    CHECK(sk.s.dim() == 5);
    // expected kernel: 12, 14, 23, 34 and 13 - 24
    Matrix<PrimeField> expect(f, 5, 6);
    expect.at(0, 0) = 1;
    expect.at(1, 1) = 1;
    expect.at(1, 4) = f.from_int(-1);
    expect.at(2, 2) = 1;
    expect.at(3, 3) = 1;
    expect.at(4, 5) = 1;
    CHECK(sk.s == Subspace<PrimeField>::span_of(expect));

    CHECK(is_nondegenerate(sk.restricted));
    CHECK(witt_decompose(sk.restricted).witt_index == 2);

    CHECK(sk.complement_line.dim() == 1);
    Vec<PrimeField> compl_vec = {0, 1, 0, 0, 1, 0};  // e1^e3 + e2^e4
    CHECK(sk.complement_line ==
          Subspace<PrimeField>::span_of_vectors(f, {compl_vec}, 6));
    auto w6 = wedge2_form(f);
    CHECK_FALSE(is_isotropic(w6, sk.complement_line));

    // restricted form plus the complement line form is congruent to the full form
    auto compl_gram = restricted_gram(w6, sk.complement_line);
    auto compl_form = BilinearForm<PrimeField>(FormKind::symmetric, compl_gram);
    auto together = orthogonal_direct_sum(sk.restricted, compl_form);
    CHECK(isometry_between(together, w6).has_value());

    // degenerate alpha rejected
    Matrix<PrimeField> deg(f, 4, 4);
    deg.at(0, 1) = 1;
    deg.at(1, 0) = f.from_int(-1);
    CHECK_THROWS_AS(symplectic_kernel(BilinearForm<PrimeField>(FormKind::alternating, deg)),
                    std::domain_error);
}

TEST_CASE("symplectic kernel is scale invariant as a subspace") {
    PrimeField f(7);
    auto alpha = standard_symplectic(f, 4);
    auto scaled = BilinearForm<PrimeField>(FormKind::alternating, scalar_mul(f.from_int(3), alpha.gram));
    CHECK(symplectic_kernel(alpha).s == symplectic_kernel(scaled).s);
    auto n = coord_line(f, 4, 0);
    CHECK(lambda_span(n, alpha) == lambda_span(n, scaled));
}

TEST_CASE("tau span") {
    PrimeField f(5);
    auto n = coord_line(f, 4, 0);
    auto full = Subspace<PrimeField>::full(f, 4);
    auto t = tau_span(n, full);
    CHECK(t == coord_space(f, 6, {0, 1, 2}));  // e1^e2, e1^e3, e1^e4

    auto h2 = coord_space(f, 4, {0, 1});
    CHECK(tau_span(n, h2) == coord_space(f, 6, {0}));

    auto w6 = wedge2_form(f);
    CHECK(is_isotropic(w6, t));

    // line outside the container is rejected
    CHECK_THROWS_AS(tau_span(coord_line(f, 4, 2), h2), std::domain_error);

    // the span has dimension dim(H) - 1 for every flag
    SplitMix64 rng(77);
    for (int i = 0; i < 20; ++i) {
        auto v = random_vector(f, rng, 4);
        bool nz = false;
        for (auto& e : v)
            if (e != 0) nz = true;
        if (!nz) continue;
        auto line = Subspace<PrimeField>::span_of_vectors(f, {v}, 4);
        auto h = sum(line, Subspace<PrimeField>::span_of(random_matrix(f, rng, 2, 4)));
        CHECK(tau_span(line, h).dim() == h.dim() - 1);
    }
}

TEST_CASE("lambda span") {
    PrimeField f(5);
    auto alpha = standard_symplectic(f, 4);
    auto n = coord_line(f, 4, 0);
    // alpha-complement of e1 is span(e1, e2, e4)
    CHECK(orthogonal_complement(alpha, n) == coord_space(f, 4, {0, 1, 3}));
    auto l = lambda_span(n, alpha);
    CHECK(l == coord_space(f, 6, {0, 2}));  // e1^e2 and e1^e4
    CHECK(l.dim() == 2);

    auto sk = symplectic_kernel(alpha);
    CHECK(sk.s.contains(l));
    CHECK(is_isotropic(wedge2_form(f), l));

    // the containment holds for every line
    SplitMix64 rng(44);
    for (int t = 0; t < 20; ++t) {
        auto v = random_vector(f, rng, 4);
        bool nz = false;
        for (auto& e : v)
            if (e != 0) nz = true;
        if (!nz) continue;
        auto line = Subspace<PrimeField>::span_of_vectors(f, {v}, 4);
        CHECK(sk.s.contains(lambda_span(line, alpha)));
    }
}

TEST_CASE("plucker map") {
    PrimeField f(5);
    auto p = plucker(coord_space(f, 4, {0, 1}));
    CHECK(p == coord_space(f, 6, {0}));

    Matrix<PrimeField> m(f, 2, 4);
    m.at(0, 0) = 1;
    m.at(0, 2) = 1;  // e1 + e3
    m.at(1, 1) = 1;
    m.at(1, 3) = 1;  // e2 + e4
    auto p2 = plucker(Subspace<PrimeField>::span_of(m));
    Vec<PrimeField> expect = {1, 0, 1, f.from_int(-1), 0, 1};
    CHECK(p2 == Subspace<PrimeField>::span_of_vectors(f, {expect}, 6));

    auto w6 = wedge2_form(f);
    CHECK(is_isotropic(w6, p2));

    // basis independence
    SplitMix64 rng(55);
    for (int t = 0; t < 20; ++t) {
        auto plane = Subspace<PrimeField>::span_of(random_matrix(f, rng, 2, 4));
        if (plane.dim() != 2) continue;
        auto b = random_invertible(f, rng, 2);
        auto other = Subspace<PrimeField>::span_of(mul(b, plane.basis));
        CHECK(plucker(plane) == plucker(other));
    }
}

TEST_CASE("dual identification of the wedge square of a 3-space") {
    PrimeField f(5);
    auto phi = wedge2_dual_identification(f);
    // e1^e2 -> e3*, e1^e3 -> -e2*, e2^e3 -> e1*
    CHECK(phi.at(2, 0) == 1);
    CHECK(phi.at(1, 1) == f.from_int(-1));
    CHECK(phi.at(0, 2) == 1);
    CHECK(inverse(phi).has_value());
}

TEST_CASE("antisymmetrization transport identity") {
    PrimeField f7(7);
    RationalField q;

    // the worked generator case p = e1 ^ e2
    Vec<PrimeField> p0 = {1, 0, 0};
    CHECK(check_antisymmetrization_identity(f7, p0));

    // p = 0
    Vec<PrimeField> z = {0, 0, 0};
    CHECK(check_antisymmetrization_identity(f7, z));

    SplitMix64 rng(66);
    for (int t = 0; t < 100; ++t) {
        auto p = random_vector(f7, rng, 3);
        CHECK(check_antisymmetrization_identity(f7, p));
    }
    for (int t = 0; t < 100; ++t) {
        auto p = random_vector(q, rng, 3);
        CHECK(check_antisymmetrization_identity(q, p));
    }
}
