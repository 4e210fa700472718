// Closed-form counts of maximal-degree isotropic subbundles of general
// low-rank orthogonal bundles over a curve of genus g, with the expected
// dimension bookkeeping that pins down the maximal degrees, exact Gaussian
// rational evaluation of the rank-6 line-count sum, parity rules for
// half-rank isotropic degrees, and the dimension cross-checks tying the
// isotropic counts to ordinary Quot-scheme counts of the recovered
// lower-rank data.
//
// Counts are exact integers (arbitrary precision: 12^g overflows machine
// words quickly); degrees are exact rationals, with every integrality
// claim checked against the congruence hypotheses before a row is emitted.
// Infinite counts are first-class values, never zero and never an error.
// Conjectural inputs are flagged and never presented as theorems.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ortholab::counts {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline Rat rat(long long v) { return Rat(static_cast<long>(v)); }

// ---------------------------------------------------------------------------
// Expected dimensions
// ---------------------------------------------------------------------------

/// Expected dimension of the space of rank-n isotropic subbundles of degree
/// e in an orthogonal bundle of rank r = 2n or 2n+1 valued in a line bundle
/// of degree ell, over a curve of genus g.
inline long long expected_dim_iq(int r, int n, long long ell, long long e, long long g) {
    if (g < 2) throw std::domain_error("expected_dim_iq: genus must be at least 2");
    if (r != 2 * n && r != 2 * n + 1)
        throw std::domain_error("expected_dim_iq: rank must be 2n or 2n+1");
    if (r == 2 * n) return -(n - 1) * e - (static_cast<long long>(n) * (n - 1) / 2) * (g - 1 - ell);
    if (ell % 2 != 0)
        throw std::domain_error("expected_dim_iq: odd rank requires an even value-line degree");
    return -n * (e + ell / 2) - (static_cast<long long>(n) * (n + 1) / 2) * (g - 1 - ell);
}

/// The degree at which the half-rank isotropic count has expected dimension
/// zero, when the parity hypotheses hold; the value-line degree is
/// restricted to 0 for odd rank and {0, r/2} for even rank.
inline std::optional<Rat> zero_dim_degree(int r, long long ell, long long g) {
    if (g < 2) throw std::domain_error("zero_dim_degree: genus must be at least 2");
    if (r < 3 || r > 6) throw std::domain_error("zero_dim_degree: rank must be 3..6");
    if (r % 2 == 0) {
        if (ell != 0 && ell != r / 2)
            throw std::domain_error("zero_dim_degree: even rank requires value-line degree 0 or r/2");
    } else if (ell != 0) {
        throw std::domain_error("zero_dim_degree: odd rank requires value-line degree 0");
    }
    switch (r) {
        case 3: return rat(1 - g);
        case 4: return rat(ell - g + 1);
        case 5:
            if (g % 2 == 0) return std::nullopt;  // needs odd genus
            return rat(-3 * (g - 1)) / 2;
        case 6:
            if ((ell - g) % 2 == 0) return std::nullopt;  // needs ell - g odd
            return rat(3 * (ell - g + 1)) / 2;
    }
    return std::nullopt;
}

/// Maximal line subbundles of a general stable bundle of rank r and degree
/// deg_w with deg_w = 1 - g (mod r): there are r^g of them, of the stated
/// degree.
inline std::pair<Int, Rat> max_line_count(int r, long long g, long long deg_w) {
    if (g < 2) throw std::domain_error("max_line_count: genus must be at least 2");
    long long rem = (deg_w - (1 - g)) % r;
    if (rem < 0) rem += r;
    if (rem != 0)
        throw std::domain_error("max_line_count: degree congruence deg = 1 - g (mod r) fails");
    Int count = int_pow(static_cast<unsigned long>(r), static_cast<unsigned long>(g));
    Rat degree = rat(deg_w - static_cast<long long>(r - 1) * (g - 1)) / r;
    return {count, degree};
}

/// Riemann-Roch expected dimension of the space of rank-k degree-d
/// subbundles of a bundle of rank r and degree big_d.
inline long long quot_expected_dim(int r, long long big_d, int k, long long d, long long g) {
    return k * big_d - r * d - static_cast<long long>(k) * (r - k) * (g - 1);
}

// ---------------------------------------------------------------------------
// Count results
// ---------------------------------------------------------------------------

struct CountResult {
    enum class Kind { finite, infinite, empty };

    Kind kind = Kind::finite;
    Int count = 0;            // meaningful for finite
    Rat max_degree = 0;
    std::string provenance;   // which closed form produced the row
    bool conjectural = false;

    int rank = 0;       // ambient orthogonal rank
    int sub_rank = 0;   // rank of the counted isotropic subbundles
    long long ell = 0;  // value-line degree of the normalized presentation

    static CountResult finite(Int c, Rat deg, std::string prov, int r, int m, long long ell_,
                              bool conj = false) {
        CountResult out;
        out.kind = Kind::finite;
        out.count = std::move(c);
        out.max_degree = std::move(deg);
        out.provenance = std::move(prov);
        out.rank = r;
        out.sub_rank = m;
        out.ell = ell_;
        out.conjectural = conj;
        return out;
    }

    static CountResult infinite(Rat deg, std::string prov, int r, int m, long long ell_) {
        CountResult out;
        out.kind = Kind::infinite;
        out.max_degree = std::move(deg);
        out.provenance = std::move(prov);
        out.rank = r;
        out.sub_rank = m;
        out.ell = ell_;
        return out;
    }

    std::string count_str() const {
        switch (kind) {
            case Kind::finite: return count.get_str();
            case Kind::infinite: return "infinite";
            case Kind::empty: return "empty";
        }
        return "?";
    }
};

namespace detail {

inline void require_genus(long long g) {
    if (g < 2) throw std::domain_error("genus must be at least 2");
}

inline void require_integral(const Rat& x, const char* who) {
    if (x.get_den() != 1) throw std::logic_error(std::string(who) + ": degree is not integral");
}

}  // namespace detail

/// Rank-4 trivial-determinant table: maximal rank-two isotropic subbundles,
/// keyed on genus parity and the topological class w2.
inline std::optional<CountResult> count_rank4_planes(long long g, int w2) {
    detail::require_genus(g);
    bool finite = (g % 2 == 1 && w2 == 0) || (g % 2 == 0 && w2 == 1);
    if (finite) {
        Int c = 2 * int_pow(2, static_cast<unsigned long>(g));
        return CountResult::finite(c, rat(1 - g), "rank4.planes", 4, 2, 0);
    }
    return CountResult::infinite(rat(-g), "rank4.planes", 4, 2, 0);
}

/// Rank-4 twisted case (value line of degree one): always 2^g of degree 2-g.
inline std::optional<CountResult> count_rank4_planes_twisted(long long g) {
    detail::require_genus(g);
    return CountResult::finite(int_pow(2, static_cast<unsigned long>(g)), rat(2 - g),
                               "rank4.planes.twisted", 4, 2, 1);
}

/// Rank-4 maximal isotropic line subbundles: 4^g of degree 1-g for odd
/// genus at least 3; no closed form otherwise.
inline std::optional<CountResult> count_rank4_lines(long long g) {
    detail::require_genus(g);
    if (g < 3 || g % 2 == 0) return std::nullopt;
    return CountResult::finite(int_pow(4, static_cast<unsigned long>(g)), rat(1 - g),
                               "rank4.lines", 4, 1, 0);
}

/// Rank-3 maximal isotropic lines: 2^g of degree 1-g when the genus parity
/// matches the component (even genus on w2 = 1, odd genus on w2 = 0).
inline std::optional<CountResult> count_rank3_lines(long long g, int w2) {
    detail::require_genus(g);
    bool applies = (g % 2 == 0 && w2 == 1) || (g % 2 == 1 && w2 == 0);
    if (!applies) return std::nullopt;
    return CountResult::finite(int_pow(2, static_cast<unsigned long>(g)), rat(1 - g),
                               "rank3.lines", 3, 1, 0);
}

enum class Rank6Variant { rank3_w0, rank3_w1, rank2_w0, lines_w0, rank3_odd_det };

/// Exact Gaussian-rational evaluation of the rank-6 line count:
/// 2^(4g-3) * sum over z in {-1, i, -i} of (z (1-z)^2)^(1-g).
/// The imaginary part must vanish exactly and the value must be an integer;
/// it equals 2^(3g-1) + (-1)^(g-1) 2^(2g-1).
inline Int holla_sum(long long g) {
    detail::require_genus(g);
    struct GQ {
        Rat re, im;
        GQ operator*(const GQ& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
        GQ operator+(const GQ& o) const { return {re + o.re, im + o.im}; }
        GQ operator-(const GQ& o) const { return {re - o.re, im - o.im}; }
        GQ inv() const {
            Rat n = re * re + im * im;
            return {re / n, -im / n};
        }
    };
    auto pow = [](GQ base, long long e) {
        if (e < 0) {
            base = base.inv();
            e = -e;
        }
        GQ r{1, 0};
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    };
    const GQ one{1, 0};
    GQ total{0, 0};
    for (GQ z : {GQ{-1, 0}, GQ{0, 1}, GQ{0, -1}}) {
        GQ base = z * (one - z) * (one - z);
        total = total + pow(base, 1 - g);
    }
    Rat scaled = Rat(int_pow(2, static_cast<unsigned long>(4 * g - 3))) * total.re;
    if (total.im != 0) throw std::logic_error("holla_sum: imaginary part did not cancel");
    if (scaled.get_den() != 1) throw std::logic_error("holla_sum: value is not an integer");
    return scaled.get_num();
}

/// Rank-6 trivial-determinant tables plus the odd-determinant twisted case.
inline std::optional<CountResult> count_rank6(long long g, Rank6Variant v) {
    detail::require_genus(g);
    switch (v) {
        case Rank6Variant::rank3_w0: {
            if (g % 4 != 1) return std::nullopt;
            Int c = 2 * int_pow(4, static_cast<unsigned long>(g));
            Rat deg = rat(-3 * (g - 1)) / 2;
            detail::require_integral(deg, "count_rank6");
            return CountResult::finite(c, deg, "rank6.rank3", 6, 3, 0);
        }
        case Rank6Variant::rank3_w1: {
            if (g % 4 != 3) return std::nullopt;
            Int c = 2 * int_pow(4, static_cast<unsigned long>(g));
            Rat deg = rat(-3 * (g - 1)) / 2;
            detail::require_integral(deg, "count_rank6");
            return CountResult::finite(c, deg, "rank6.rank3", 6, 3, 0);
        }
        case Rank6Variant::rank2_w0: {
            if (g % 12 != 1) return std::nullopt;
            Rat deg = rat(-5 * (g - 1)) / 3;
            detail::require_integral(deg, "count_rank6");
            return CountResult::finite(int_pow(12, static_cast<unsigned long>(g)), deg,
                                       "rank6.rank2", 6, 2, 0);
        }
        case Rank6Variant::lines_w0: {
            Int c = holla_sum(g);
            return CountResult::finite(c, rat(1 - g), "rank6.lines", 6, 1, 0);
        }
        case Rank6Variant::rank3_odd_det: {
            if (g % 2 != 0) return std::nullopt;
            Rat deg = rat(6 - 3 * g) / 2;
            detail::require_integral(deg, "count_rank6");
            return CountResult::finite(int_pow(4, static_cast<unsigned long>(g)), deg,
                                       "rank6.rank3.odd-det", 6, 3, 1);
        }
    }
    return std::nullopt;
}

/// Rank-5 isotropic line subbundles, always of degree 1-g; the count is
/// 2^(g-1) (3^g -+ 1) keyed on genus parity and w2.
inline CountResult count_rank5_lines(long long g, int w2) {
    detail::require_genus(g);
    Int three = int_pow(3, static_cast<unsigned long>(g));
    bool minus = ((g % 2 == 0) == (w2 == 0));
    Int offset = three;
    if (minus) offset -= 1; else offset += 1;
    Int c = int_pow(2, static_cast<unsigned long>(g - 1)) * offset;
    return CountResult::finite(c, rat(1 - g), "rank5.lines", 5, 1, 0);
}

/// Conjectural rank-5 maximal isotropic plane count: 4^g of degree
/// -3(g-1)/2 on the component the congruence allows.  Always flagged.
inline std::optional<CountResult> count_rank5_planes_conjectural(long long g, int w2) {
    detail::require_genus(g);
    bool applies = (g % 4 == 1 && w2 == 0) || (g % 4 == 3 && w2 == 1);
    if (!applies) return std::nullopt;
    Rat deg = rat(-3 * (g - 1)) / 2;
    detail::require_integral(deg, "count_rank5_planes");
    return CountResult::finite(int_pow(4, static_cast<unsigned long>(g)), deg,
                               "rank5.planes.conjecture", 5, 2, 0, /*conj=*/true);
}

/// Lower bound on rank-two subbundle degrees of any rank-6 degree-zero
/// bundle; strictly above the isotropic maximum -5(g-1)/3.
inline Rat hirschowitz_rank2_bound(long long g) {
    detail::require_genus(g);
    return rat(-4 * (g - 1)) / 3;
}

inline Rat rank6_isotropic_rank2_max(long long g) { return rat(-5 * (g - 1)) / 3; }

// ---------------------------------------------------------------------------
// Parity rules
// ---------------------------------------------------------------------------

struct ParityReport {
    bool single_parity = false;   // all half-rank isotropic degrees share parity
    int w2 = -1;                  // that parity, when single
    bool both_parities = false;   // odd value-line degree: both parities occur
    bool rank4_rule = false;      // parity equals deg E_i mod 2
    long long rank4_plane_degree = 0;
};

/// Parity of half-rank isotropic subbundle degrees.  For an even value-line
/// degree all of them share the parity w2; for an odd one both parities
/// occur.  In rank four the shared parity is deg(E_i) mod 2, realized by
/// planes of degree deg(E_i) + 2 deg(N).
inline ParityReport parity_rules(int r, long long ell, long long deg_e) {
    ParityReport rep;
    if (ell % 2 == 0) {
        rep.single_parity = true;
        rep.w2 = static_cast<int>(((deg_e % 2) + 2) % 2);
    } else {
        rep.both_parities = true;
    }
    if (r == 4) {
        rep.rank4_rule = true;
        rep.rank4_plane_degree = deg_e;  // + 2 deg(N), same parity for all N
    }
    return rep;
}

/// Rank-3 lines satisfy e = d - m (mod 2) where d = deg(E), m = deg(M).
inline bool rank3_line_parity_ok(long long e, long long d, long long m) {
    return ((e - (d - m)) % 2) == 0;
}

// ---------------------------------------------------------------------------
// Dimension cross-checks
// ---------------------------------------------------------------------------

/// Rank 4: the two line-subbundle components have expected dimension
/// ell - e - (g-1), matching the isotropic side.
inline bool crosscheck_rank4(long long g, long long ell, long long e, long long d1) {
    long long d2 = ell - d1;
    long long lhs = ell - e - (g - 1);
    if ((e - d2) % 2 == 0 &&
        quot_expected_dim(2, d1, 1, (e - d2) / 2, g) != lhs)
        return false;
    if ((e - d1) % 2 == 0 &&
        quot_expected_dim(2, d2, 1, (e - d1) / 2, g) != lhs)
        return false;
    return lhs == expected_dim_iq(4, 2, ell, e, g);
}

/// Rank 3: line subbundles of the recovered plane bundle have expected
/// dimension m - e - (g-1) with m = ell/2, matching the isotropic side.
inline bool crosscheck_rank3(long long g, long long m, long long e, long long d) {
    long long lhs = m - e - (g - 1);
    if ((e + d - m) % 2 == 0 &&
        quot_expected_dim(2, d, 1, (e + d - m) / 2, g) != lhs)
        return false;
    return lhs == expected_dim_iq(3, 1, 2 * m, e, g);
}

/// Rank 6: both families (3-spaces of W and lines of W) match the isotropic
/// expected dimension at degrees 2d and 2d - eps.
inline bool crosscheck_rank6(long long g, long long ell, long long d) {
    long long eps = ((ell % 2) + 2) % 2;
    if (quot_expected_dim(4, ell, 3, d, g) != expected_dim_iq(6, 3, ell, 2 * d, g)) return false;
    if ((ell + eps) % 2 != 0) return false;
    return quot_expected_dim(4, ell, 1, d - (ell + eps) / 2, g) ==
           expected_dim_iq(6, 3, ell, 2 * d - eps, g);
}

/// The rank-6 rank-2 maximal degree decomposes over the flag:
/// -5(g-1)/3 = -3(g-1)/4 - 11(g-1)/12.
inline bool rank6_rank2_degree_decomposition(long long g) {
    return rank6_isotropic_rank2_max(g) == rat(-3 * (g - 1)) / 4 + rat(-11 * (g - 1)) / 12;
}

// ---------------------------------------------------------------------------
// The N^0 comparison across neighboring ranks
// ---------------------------------------------------------------------------

struct N0Value {
    Int value;
    bool conjectural = false;
};

/// The finite count of maximal half-rank isotropic subbundles on the
/// trivial component, defined when n(g-1) = 0 (mod 4) for r = 2n or 2n-1.
/// Rank 5 is known only conjecturally.
inline std::optional<N0Value> n0_value(long long g, int r) {
    detail::require_genus(g);
    switch (r) {
        case 3:
            if (g % 2 == 0) return std::nullopt;
            return N0Value{count_rank3_lines(g, 0)->count, false};
        case 4:
            if (g % 2 == 0) return std::nullopt;
            return N0Value{count_rank4_planes(g, 0)->count, false};
        case 5: {
            auto c = count_rank5_planes_conjectural(g, 0);
            if (!c) return std::nullopt;
            return N0Value{c->count, true};
        }
        case 6: {
            auto c = count_rank6(g, Rank6Variant::rank3_w0);
            if (!c) return std::nullopt;
            return N0Value{c->count, false};
        }
    }
    throw std::domain_error("n0_value: rank must be 3..6");
}

struct ConjectureReport {
    bool pair43_applicable = false;
    bool pair43_holds = false;
    bool pair65_applicable = false;
    bool pair65_holds = false;
    bool pair65_conjectural = true;  // the rank-5 input is a conjecture
};

// ---------------------------------------------------------------------------
// Query dispatch
// ---------------------------------------------------------------------------

/// A table lookup: rank, genus, value-line degree (0, or 1 for the twisted
/// presentations), topological class, and the rank of the counted isotropic
/// subbundles.  Combinations outside the tables are rejected; combinations
/// whose congruence hypotheses fail return no value.
struct CountQuery {
    int rank = 0;        // 2..6
    long long genus = 2;
    long long ell = 0;   // 0, or 1 for the twisted rank-4/rank-6 cases
    int w2 = 0;
    int sub_rank = 0;
};

inline std::optional<CountResult> count_query(const CountQuery& q) {
    detail::require_genus(q.genus);
    if (q.w2 != 0 && q.w2 != 1) throw std::domain_error("count_query: w2 must be 0 or 1");
    if (q.rank == 3 && q.sub_rank == 1 && q.ell == 0) return count_rank3_lines(q.genus, q.w2);
    if (q.rank == 4 && q.sub_rank == 2 && q.ell == 0) return count_rank4_planes(q.genus, q.w2);
    if (q.rank == 4 && q.sub_rank == 2 && q.ell == 1) return count_rank4_planes_twisted(q.genus);
    if (q.rank == 4 && q.sub_rank == 1 && q.ell == 0 && q.w2 == 0)
        return count_rank4_lines(q.genus);
    if (q.rank == 5 && q.sub_rank == 1 && q.ell == 0) return count_rank5_lines(q.genus, q.w2);
    if (q.rank == 5 && q.sub_rank == 2 && q.ell == 0)
        return count_rank5_planes_conjectural(q.genus, q.w2);
    if (q.rank == 6 && q.sub_rank == 3 && q.ell == 0)
        return count_rank6(q.genus, q.w2 == 0 ? Rank6Variant::rank3_w0 : Rank6Variant::rank3_w1);
    if (q.rank == 6 && q.sub_rank == 3 && q.ell == 1 && q.w2 == 0)
        return count_rank6(q.genus, Rank6Variant::rank3_odd_det);
    if (q.rank == 6 && q.sub_rank == 2 && q.ell == 0 && q.w2 == 0)
        return count_rank6(q.genus, Rank6Variant::rank2_w0);
    if (q.rank == 6 && q.sub_rank == 1 && q.ell == 0 && q.w2 == 0)
        return count_rank6(q.genus, Rank6Variant::lines_w0);
    throw std::domain_error("count_query: no table covers this parameter combination");
}

/// The doubling N0(g, 2n) = 2 N0(g, 2n-1) checked from the tables; the
/// rank-6/rank-5 instance consumes the conjectural rank-5 value and says so.
inline ConjectureReport conjecture_checks(long long g) {
    ConjectureReport rep;
    auto n3 = n0_value(g, 3), n4 = n0_value(g, 4);
    if (n3 && n4) {
        rep.pair43_applicable = true;
        rep.pair43_holds = (n4->value == 2 * n3->value);
    }
    auto n5 = n0_value(g, 5), n6 = n0_value(g, 6);
    if (n5 && n6) {
        rep.pair65_applicable = true;
        rep.pair65_holds = (n6->value == 2 * n5->value);
        rep.pair65_conjectural = n5->conjectural;
    }
    return rep;
}

}  // namespace ortholab::counts
