// Deterministic sampling for randomized batteries.  A fixed-seed SplitMix64
// stream drives everything, so every test log is reproducible; no wall-clock
// entropy anywhere.

#pragma once

#include <cstdint>

#include "bilinear.hpp"

namespace ortholab {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

template <class F>
typename F::Elem random_elem(const F& f, SplitMix64& rng) {
    if constexpr (F::is_rational_field) {
        // small numerators and denominators keep structured Q tests readable
        long long num = static_cast<long long>(rng.below(9)) - 4;
        long long den = 1 + static_cast<long long>(rng.below(4));
        return f.div(f.from_int(num), f.from_int(den));
    } else {
        return static_cast<typename F::Elem>(rng.below(static_cast<std::uint64_t>(f.p)));
    }
}

template <class F>
Vec<F> random_vector(const F& f, SplitMix64& rng, std::size_t n) {
    Vec<F> v(n, f.zero());
    for (auto& x : v) x = random_elem(f, rng);
    return v;
}

template <class F>
Matrix<F> random_matrix(const F& f, SplitMix64& rng, std::size_t r, std::size_t c) {
    Matrix<F> m(f, r, c);
    for (auto& x : m.a) x = random_elem(f, rng);
    return m;
}

template <class F>
Matrix<F> random_invertible(const F& f, SplitMix64& rng, std::size_t n) {
    while (true) {
        auto m = random_matrix(f, rng, n, n);
        if (!f.is_zero(det(m))) return m;
    }
}

/// Random matrix of determinant one: an invertible sample with one column
/// divided by its determinant.
template <class F>
Matrix<F> random_sl(const F& f, SplitMix64& rng, std::size_t n) {
    auto m = random_invertible(f, rng, n);
    auto d = det(m);
    auto s = f.inv(d);
    for (std::size_t i = 0; i < n; ++i) m.at(i, 0) = f.mul(s, m.at(i, 0));
    return m;
}

/// Random symplectic matrix for the standard form, as a word in symplectic
/// transvections x -> x + c a(x, v) v.
template <class F>
Matrix<F> random_symplectic(const F& f, SplitMix64& rng, std::size_t two_n, std::size_t words = 8) {
    auto alpha = standard_symplectic(f, two_n);
    auto g = Matrix<F>::identity(f, two_n);
    for (std::size_t w = 0; w < words; ++w) {
        Vec<F> v(two_n, f.zero());
        bool nonzero = false;
        while (!nonzero) {
            v = random_vector(f, rng, two_n);
            for (const auto& x : v)
                if (!f.is_zero(x)) nonzero = true;
        }
        auto c = random_elem(f, rng);
        Matrix<F> t = Matrix<F>::identity(f, two_n);
        auto av = mul_vec(alpha.gram, v);  // x -> a(x, v) is x -> <x, Av>
        for (std::size_t i = 0; i < two_n; ++i)
            for (std::size_t j = 0; j < two_n; ++j)
                t.at(i, j) = f.add(t.at(i, j), f.mul(c, f.mul(v[i], av[j])));
        g = mul(t, g);
    }
    return g;
}

/// Random isometry of a symmetric form, as a word in reflections in
/// non-isotropic vectors (always lands in the full orthogonal group).
template <class F>
Matrix<F> random_orthogonal(const F& f, const BilinearForm<F>& form, SplitMix64& rng,
                            std::size_t words = 6) {
    std::size_t n = form.dim();
    auto g = Matrix<F>::identity(f, n);
    auto two = f.from_int(2);
    std::size_t produced = 0;
    while (produced < words) {
        auto v = random_vector(f, rng, n);
        auto q = form.eval(v, v);
        if (f.is_zero(q)) continue;
        // reflection x -> x - 2 f(x,v)/f(v,v) v
        Matrix<F> t = Matrix<F>::identity(f, n);
        auto gv = mul_vec(form.gram, v);
        auto s = f.div(two, q);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                t.at(i, j) = f.sub(t.at(i, j), f.mul(s, f.mul(v[i], gv[j])));
        g = mul(t, g);
        ++produced;
    }
    return g;
}

}  // namespace ortholab
