// Exact coefficient fields: Q (arbitrary-precision rationals via GMP) and
// F_p for an odd prime p.  Both satisfy the same duck-typed interface, so all
// linear algebra in this library is templated over the field type.
//
// F_p elements are stored reduced to [0, p).  Rational elements are kept in
// lowest terms with positive denominator (GMP canonical form).  p = 2 is
// rejected at construction: several constructions downstream divide by 2.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ortholab {

/// Arithmetic over F_p, p an odd prime.  The field object carries p; elements
/// are plain integers, which keeps the brute-force enumeration loops cheap.
struct PrimeField {
    using Elem = long long;

    long long p = 0;

    PrimeField() = default;

    explicit PrimeField(long long prime) : p(prime) {
        if (p < 3) throw std::domain_error("PrimeField: p must be an odd prime >= 3");
        if (p % 2 == 0) throw std::domain_error("PrimeField: p = 2 is not supported (odd characteristic required)");
        if (p >= (1LL << 31)) throw std::domain_error("PrimeField: p too large");
        for (long long d = 3; d * d <= p; d += 2)
            if (p % d == 0) throw std::domain_error("PrimeField: p is not prime");
    }

    static constexpr bool is_rational_field = false;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem from_int(long long v) const {
        Elem r = v % p;
        return r < 0 ? r + p : r;
    }

    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { Elem r = (a - b) % p; return r < 0 ? r + p : r; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        // extended Euclid
        long long t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        return t < 0 ? t + p : t;
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem pow(Elem a, long long e) const {
        if (e < 0) return pow(inv(a), -e);
        Elem r = 1, base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    bool is_square(Elem a) const {
        if (a == 0) return true;
        return pow(a, (p - 1) / 2) == 1;  // Euler criterion
    }

    /// Square root by direct scan; p is small in every use here.
    std::optional<Elem> sqrt(Elem a) const {
        if (a == 0) return Elem{0};
        if (!is_square(a)) return std::nullopt;
        for (Elem x = 1; x <= (p - 1) / 2; ++x)
            if (mul(x, x) == a) return x;
        return std::nullopt;  // unreachable for prime p
    }

    std::string str(Elem a) const { return std::to_string(a); }

    /// Total order on elements, used only to make outputs deterministic.
    int cmp(Elem a, Elem b) const { return a < b ? -1 : (a == b ? 0 : 1); }

    bool operator==(const PrimeField& o) const { return p == o.p; }
    bool operator!=(const PrimeField& o) const { return p != o.p; }

    std::string name() const { return "F" + std::to_string(p); }
};

/// Arithmetic over Q.  Elements are GMP rationals, always canonical.
struct RationalField {
    using Elem = mpq_class;

    static constexpr bool is_rational_field = true;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }

    Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }

    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("RationalField: inverse of zero");
        return Elem(1) / a;
    }

    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw std::domain_error("RationalField: division by zero");
        return a / b;
    }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem pow(const Elem& a, long long e) const {
        if (e < 0) return pow(inv(a), -e);
        Elem r(1), base = a;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    bool is_square(const Elem& a) const {
        if (a < 0) return false;
        if (a == 0) return true;
        return mpz_perfect_square_p(a.get_num().get_mpz_t()) &&
               mpz_perfect_square_p(a.get_den().get_mpz_t());
    }

    std::optional<Elem> sqrt(const Elem& a) const {
        if (!is_square(a)) return std::nullopt;
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), a.get_num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), a.get_den().get_mpz_t());
        return Elem(n) / Elem(d);
    }

    std::string str(const Elem& a) const { return a.get_str(); }

    int cmp(const Elem& a, const Elem& b) const { return ::cmp(a, b) < 0 ? -1 : (a == b ? 0 : 1); }

    bool operator==(const RationalField&) const { return true; }
    bool operator!=(const RationalField&) const { return false; }

    std::string name() const { return "Q"; }
};

/// Parse a rational from "a" or "a/b" text; result is canonical.
inline mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

}  // namespace ortholab
