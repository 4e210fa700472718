// Exhaustive enumeration of k-dimensional subspaces of F_p^n, one RREF matrix
// each, in a fixed order: pivot-column patterns lexicographically, then the
// free entries row-major as little-endian counters over 0..p-1.  The number
// of subspaces visited equals the Gaussian binomial, which doubles as a
// completeness check in the tests.

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "subspace.hpp"

namespace ortholab {

/// Gaussian binomial: number of k-dim subspaces of an n-dim space over F_q.
inline mpz_class gaussian_count(unsigned n, unsigned k, unsigned long q) {
    if (k > n) throw std::domain_error("gaussian_count: k > n");
    mpz_class num = 1, den = 1, qz(static_cast<unsigned long>(q));
    for (unsigned i = 0; i < k; ++i) {
        mpz_class qn, qk;
        mpz_pow_ui(qn.get_mpz_t(), qz.get_mpz_t(), n - i);
        mpz_pow_ui(qk.get_mpz_t(), qz.get_mpz_t(), k - i);
        num *= qn - 1;
        den *= qk - 1;
    }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

/// Visit every k-dim subspace of F_p^n exactly once.  The callback may return
/// false to stop early; for_each_subspace returns false in that case.
inline bool for_each_subspace(const PrimeField& f, std::size_t n, std::size_t k,
                              const std::function<bool(const Subspace<PrimeField>&)>& fn) {
    if (k > n) throw std::domain_error("for_each_subspace: k > n");
    if (k == 0) return fn(Subspace<PrimeField>::zero(f, n));

    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;

    while (true) {
        std::vector<bool> is_piv(n, false);
        for (auto c : piv) is_piv[c] = true;

        // free slots: (row i, col j) with j > piv[i] and j not a pivot column
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = piv[i] + 1; j < n; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);

        Matrix<PrimeField> m(f, k, n);
        for (std::size_t i = 0; i < k; ++i) m.at(i, piv[i]) = 1;

        std::vector<long long> vals(free_pos.size(), 0);
        while (true) {
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                m.at(free_pos[t].first, free_pos[t].second) = vals[t];
            if (!fn(Subspace<PrimeField>::from_rref(m))) return false;

            // little-endian increment, last slot fastest
            std::size_t t = free_pos.size();
            while (t > 0) {
                --t;
                if (++vals[t] < f.p) break;
                vals[t] = 0;
                if (t == 0) { t = free_pos.size() + 1; break; }
            }
            if (free_pos.empty() || t == free_pos.size() + 1) break;
        }

        // next pivot pattern in lex order
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (piv[i] + (k - i) < n) {
                ++piv[i];
                for (std::size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
    }
}

inline std::vector<Subspace<PrimeField>> all_subspaces(const PrimeField& f, std::size_t n,
                                                       std::size_t k) {
    std::vector<Subspace<PrimeField>> out;
    for_each_subspace(f, n, k, [&](const Subspace<PrimeField>& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace ortholab
