#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gqv {

/// Arbitrary-precision integer used for every count and order in the library.
using Int = mpz_class;

inline Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int ipow(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Floor of the square root.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Floor of the k-th root.
inline Int iroot(const Int& n, unsigned long k) {
    if (n < 0) throw std::domain_error("iroot of negative value");
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

/// Exact quotient; throws if d does not divide n.
inline Int exact_div(const Int& n, const Int& d) {
    if (d == 0 || !divides(d, n)) throw std::domain_error("exact_div: not divisible");
    Int q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Int igcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Number of bits in |n|; bit_length(0) == 0.
inline unsigned long bit_length(const Int& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

/// Deterministic trial division. All parameters in this project are tiny.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

struct PrimePower {
    std::uint64_t p = 0;
    unsigned long f = 0;
};

/// Decomposes n as p^f with p prime, if possible.
inline std::optional<PrimePower> as_prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    std::uint64_t p = 0;
    if (n % 2 == 0) {
        p = 2;
    } else {
        for (std::uint64_t d = 3; d * d <= n; d += 2) {
            if (n % d == 0) { p = d; break; }
        }
        if (p == 0) p = n;  // n itself is prime
    }
    unsigned long f = 0;
    std::uint64_t m = n;
    while (m % p == 0) { m /= p; ++f; }
    if (m != 1) return std::nullopt;
    return PrimePower{p, f};
}

/// floor(log_base(n)) for n >= 1, base >= 2.
inline unsigned long floor_log(const Int& n, unsigned long base) {
    if (n < 1) throw std::domain_error("floor_log of non-positive value");
    if (base == 2) return bit_length(n) - 1;
    unsigned long e = 0;
    Int pw = base;
    while (pw <= n) { pw *= base; ++e; }
    return e;
}

/// Prime factorization by trial division; pairs (prime, exponent).
inline std::vector<std::pair<Int, unsigned long>> factor_small(Int n) {
    if (n < 1) throw std::domain_error("factor_small of non-positive value");
    std::vector<std::pair<Int, unsigned long>> out;
    for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (divides(d, n)) {
            unsigned long e = 0;
            while (divides(d, n)) { n = exact_div(n, d); ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace gqv
