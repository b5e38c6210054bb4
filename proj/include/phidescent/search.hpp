#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "phidescent/errors.hpp"
#include "phidescent/ntheory.hpp"

namespace phidescent::search {

using ntheory::Triple;

/// An exact solution c*y^l = Phi_p(x) found by scanning.
struct SolutionRecord {
    Triple triple;
    mpz_class x;
    mpz_class y; // positive; for even l the positive root is canonical

    friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

/// Scans x in [-x_bound, x_bound] and returns every solution, sorted by x.
inline std::vector<SolutionRecord> search_solutions(const Triple& t,
                                                    long x_bound) {
    if (x_bound < 1)
        throw InvalidArgument("search_solutions: x_bound must be >= 1");
    std::vector<SolutionRecord> out;
    const mpz_class c(t.c);
    for (long x = -x_bound; x <= x_bound; ++x) {
        const mpz_class phi = ntheory::eval_phi(t.p, mpz_class(x));
        if (!mpz_divisible_p(phi.get_mpz_t(), c.get_mpz_t())) continue;
        const mpz_class quotient = phi / c;
        if (auto y = ntheory::is_perfect_lth_power(quotient, t.l))
            out.push_back(SolutionRecord{t, mpz_class(x), *y});
    }
    return out;
}

namespace detail {

inline long powmod_long(long base, long exp, long mod) {
    unsigned long long acc = 1;
    unsigned long long b =
        static_cast<unsigned long long>(((base % mod) + mod) % mod);
    while (exp > 0) {
        if (exp & 1) acc = acc * b % static_cast<unsigned long long>(mod);
        b = b * b % static_cast<unsigned long long>(mod);
        exp >>= 1;
    }
    return static_cast<long>(acc);
}

/// q coprime to c and p (q = 2 included): residues mod q, not all zero.
/// A nondegenerate conic mod an odd q always has points, so this returns
/// true away from the coefficient primes.
inline bool proper_solutions_generic(const Triple& t, int alpha, long q) {
    const long dp = ((t.disc() % q) + q) % q;
    const long a2c = ((static_cast<long>(alpha) * alpha % q) * (t.c % q)) % q;
    std::vector<std::uint8_t> lhs_any(static_cast<std::size_t>(q), 0);
    std::vector<std::uint8_t> lhs_pair(static_cast<std::size_t>(q), 0);
    for (long x = 0; x < q; ++x) {
        const long x2 = x * x % q;
        for (long z = 0; z < q; ++z) {
            const long v = ((x2 - dp * (z * z % q)) % q + q) % q;
            lhs_any[static_cast<std::size_t>(v)] = 1;
            if (x != 0 || z != 0) lhs_pair[static_cast<std::size_t>(v)] = 1;
        }
    }
    std::vector<std::uint8_t> rhs_any(static_cast<std::size_t>(q), 0);
    std::vector<std::uint8_t> rhs_unit(static_cast<std::size_t>(q), 0);
    for (long y = 0; y < q; ++y) {
        const long v = a2c * powmod_long(y, t.l, q) % q;
        rhs_any[static_cast<std::size_t>(v)] = 1;
        if (y != 0) rhs_unit[static_cast<std::size_t>(v)] = 1;
    }
    for (long v = 0; v < q; ++v) {
        const auto i = static_cast<std::size_t>(v);
        if (lhs_pair[i] && rhs_any[i]) return true;
        if (lhs_any[i] && rhs_unit[i]) return true;
    }
    return false;
}

/// q = c: residues are checked at level q^2, which is where the valuation of
/// the coefficient c bites. Lifting structure mod q^2 (q odd):
///   - x with x != 0 mod q: x^2 covers the whole congruence class of
///     x0^2 mod q (the cross term 2*x0*t*q sweeps all of qZ/q^2Z);
///   - x = 0 mod q: x^2 = 0 mod q^2; likewise for delta*p*z^2 (unit scale);
///   - y a unit: alpha^2*c*y^l = c * (y0^l mod q) + q^2 Z, a single value
///     with q-valuation exactly 1; q | y makes it 0 mod q^2 (l >= 2).
/// Hence a primitive solution exists iff some (x0, z0) with x0, z0 != 0
/// matches x0^2 = delta*p*z0^2 (mod q); the x = z = 0 branch would force
/// q^2 | c*y0^l with y0 a unit, impossible.
inline bool proper_solutions_at_c(const Triple& t) {
    const long q = t.c;
    const long dp = ((t.disc() % q) + q) % q;
    std::vector<std::uint8_t> squares(static_cast<std::size_t>(q), 0);
    for (long x = 1; x < q; ++x) squares[static_cast<std::size_t>(x * x % q)] = 1;
    for (long z = 1; z < q; ++z)
        if (squares[static_cast<std::size_t>(dp * (z * z % q) % q)]) return true;
    return false;
}

/// q = p: level q^2 again. delta*p*z^2 has q-valuation >= 1 and is constant
/// on each residue class of z, so it vanishes mod q; for x a unit, x^2 covers
/// the full class of x0^2, absorbing the z and lift terms. A primitive
/// solution therefore exists iff x0^2 = alpha^2*c*y0^l (mod q) for some
/// units x0, y0. The x = 0 mod q branches die on valuations: the equation
/// would need q^2 | delta*p*z0^2 + alpha^2*c*y0^l whose q-valuation is
/// exactly 1 (z0 unit) or 0 (y0 unit).
inline bool proper_solutions_at_p(const Triple& t, int alpha) {
    const long q = t.p;
    const long a2c = ((static_cast<long>(alpha) * alpha % q) * (t.c % q)) % q;
    std::vector<std::uint8_t> squares(static_cast<std::size_t>(q), 0);
    for (long x = 1; x < q; ++x) squares[static_cast<std::size_t>(x * x % q)] = 1;
    for (long y = 1; y < q; ++y) {
        const long v = a2c * powmod_long(y, t.l, q) % q;
        if (squares[static_cast<std::size_t>(v)]) return true;
    }
    return false;
}

} // namespace detail

/// Finite shadow of local solvability at q: do proper residue solutions of
/// x^2 - delta*p*z^2 = alpha^2*c*y^l exist mod q (mod q^2 when q divides
/// c*p, where valuations decide)? "Proper" means x, y, z not all divisible
/// by q. Exhaustive over residues; full Hensel lifting is intentionally not
/// performed.
inline bool mod_q_proper_solutions(const Triple& t, int alpha, long q) {
    if (alpha != 1 && alpha != 2)
        throw InvalidArgument("mod_q_proper_solutions: alpha must be 1 or 2");
    if (q > 10'000)
        throw BoundExceeded("mod_q_proper_solutions: q = " + std::to_string(q) +
                            " exceeds the bound 10^4");
    if (q < 2 || !ntheory::is_prime(mpz_class(q)))
        throw InvalidArgument("mod_q_proper_solutions: q must be prime, got " +
                              std::to_string(q));
    if (q == t.c) return detail::proper_solutions_at_c(t);
    if (q == t.p) return detail::proper_solutions_at_p(t, alpha);
    return detail::proper_solutions_generic(t, alpha, q);
}

} // namespace phidescent::search
