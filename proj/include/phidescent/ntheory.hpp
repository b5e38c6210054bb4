#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>

#include "phidescent/errors.hpp"

namespace phidescent::ntheory {

/// Floor remainder in [0, m) for m > 0.
inline mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Deterministic primality test. Uses a strong-probable-prime battery over
/// the first 13 primes, which is known to be exact for all n < 3.317e24;
/// inputs here stay far below that.
inline bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    static constexpr std::array<unsigned long, 13> bases = {
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long b : bases) {
        if (mpz_cmp_ui(n.get_mpz_t(), b) == 0) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
    }
    const mpz_class nm1 = n - 1;
    const unsigned long r = mpz_scan1(nm1.get_mpz_t(), 0);
    const mpz_class d = nm1 >> r;
    for (unsigned long b : bases) {
        mpz_class x;
        const mpz_class base(b);
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool witness = true;
        for (unsigned long i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == nm1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/// Jacobi symbol (a/n) for odd positive n; (a/1) = 1 by convention.
inline int jacobi(const mpz_class& a, const mpz_class& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw InvalidArgument("jacobi: n must be odd and positive, got " +
                              n.get_str());
    if (n == 1) return 1;
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

/// Square root of d modulo an odd prime q via Tonelli-Shanks.
/// Returns min(r, q - r); empty when d is a non-residue.
inline std::optional<mpz_class> sqrt_mod_prime(const mpz_class& d,
                                               const mpz_class& q) {
    if (q == 2 || !is_prime(q))
        throw InvalidArgument("sqrt_mod_prime: q must be an odd prime, got " +
                              q.get_str());
    const mpz_class d0 = mod_floor(d, q);
    if (d0 == 0) return mpz_class(0);
    if (mpz_jacobi(d0.get_mpz_t(), q.get_mpz_t()) == -1) return std::nullopt;

    mpz_class r;
    if (mod_floor(q, 4) == 3) {
        const mpz_class e = (q + 1) / 4;
        mpz_powm(r.get_mpz_t(), d0.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
    } else {
        const mpz_class qm1 = q - 1;
        const unsigned long s = mpz_scan1(qm1.get_mpz_t(), 0);
        const mpz_class odd_part = qm1 >> s;
        mpz_class z = 2;
        while (mpz_jacobi(z.get_mpz_t(), q.get_mpz_t()) != -1) ++z;
        mpz_class c, t;
        mpz_powm(c.get_mpz_t(), z.get_mpz_t(), odd_part.get_mpz_t(),
                 q.get_mpz_t());
        mpz_powm(t.get_mpz_t(), d0.get_mpz_t(), odd_part.get_mpz_t(),
                 q.get_mpz_t());
        const mpz_class e = (odd_part + 1) / 2;
        mpz_powm(r.get_mpz_t(), d0.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
        unsigned long m = s;
        while (t != 1) {
            mpz_class tt = t;
            unsigned long i = 0;
            while (tt != 1) {
                tt = tt * tt % q;
                ++i;
            }
            mpz_class b = c;
            for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % q;
            m = i;
            c = b * b % q;
            t = t * c % q;
            r = r * b % q;
        }
    }
    const mpz_class other = q - r;
    return r <= other ? r : other;
}

/// Exact integer l-th root: returns y with y^l = n when one exists.
inline std::optional<mpz_class> is_perfect_lth_power(const mpz_class& n,
                                                     long l) {
    if (n < 1)
        throw InvalidArgument("is_perfect_lth_power: n must be >= 1, got " +
                              n.get_str());
    if (l < 1)
        throw InvalidArgument("is_perfect_lth_power: l must be >= 1, got " +
                              std::to_string(l));
    if (l == 1) return n;
    mpz_class root;
    const int exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(),
                               static_cast<unsigned long>(l));
    if (exact != 0) return root;
    return std::nullopt;
}

/// Phi_p(x) = (x^p - 1)/(x - 1) for odd prime p; strictly positive on Z.
inline mpz_class eval_phi(long p, const mpz_class& x) {
    if (p < 3 || p % 2 == 0)
        throw InvalidArgument("eval_phi: p must be an odd prime, got " +
                              std::to_string(p));
    if (x == 1) return mpz_class(p);
    mpz_class num;
    mpz_pow_ui(num.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
    num -= 1;
    const mpz_class den = x - 1;
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

/// A problem instance (p, c, l) for the equation c*y^l = Phi_p(x).
/// p and c are distinct odd primes, p >= 5, and l >= 2; delta = (-1)^((p-1)/2)
/// is derived, never stored.
struct Triple {
    long p;
    long c;
    long l;

    Triple(long p_, long c_, long l_) : p(p_), c(c_), l(l_) { validate(); }

    int delta() const { return p % 4 == 1 ? 1 : -1; }

    /// Fundamental discriminant delta*p of Q(sqrt(delta p)).
    long disc() const { return delta() * p; }

    void validate() const {
        if (p < 5 || !is_prime(mpz_class(p)))
            throw InvalidTriple("p must be a prime >= 5, got " +
                                std::to_string(p));
        if (c < 3 || c % 2 == 0 || !is_prime(mpz_class(c)))
            throw InvalidTriple("c must be an odd prime >= 3, got " +
                                std::to_string(c));
        if (c == p)
            throw InvalidTriple("p and c must be distinct, both are " +
                                std::to_string(p));
        if (l < 2)
            throw InvalidTriple("l must be >= 2, got " + std::to_string(l));
    }

    friend bool operator==(const Triple&, const Triple&) = default;
};

} // namespace phidescent::ntheory
