#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "phidescent/errors.hpp"
#include "phidescent/ntheory.hpp"
#include "phidescent/series.hpp"

namespace phidescent::gauss {

using series::IntPoly;
using series::RatPoly;

/// The integer pair of the Gauss identity
///   4*Phi_p(x) = A(x)^2 - delta*p*B(x)^2,  delta = (-1)^((p-1)/2),
/// normalized so that A(0) = 2, B(0) = 0 and B has x-coefficient +1.
struct GaussPair {
    long p;
    int delta;
    IntPoly A; // degree (p-1)/2
    IntPoly B; // degree (p-3)/2
};

/// A witness tuple for alpha^2 * c * y^l = x^2 - delta*p*z^2 with
/// gcd(x, z) = 1 and y odd.
struct EquationInstance {
    long p;
    long c;
    long l;
    int alpha; // 1 or 2
    mpz_class x;
    mpz_class y;
    mpz_class z;

    int delta() const { return p % 4 == 1 ? 1 : -1; }

    bool verify() const {
        if (alpha != 1 && alpha != 2) return false;
        if (y < 1 || mpz_even_p(y.get_mpz_t())) return false;
        mpz_class yl;
        mpz_pow_ui(yl.get_mpz_t(), y.get_mpz_t(),
                   static_cast<unsigned long>(l));
        const mpz_class lhs = mpz_class(alpha * alpha) * c * yl;
        const mpz_class rhs = x * x - mpz_class(delta()) * p * z * z;
        if (lhs != rhs) return false;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), z.get_mpz_t());
        return g == 1;
    }
};

/// Phi_p as an integer polynomial: 1 + x + ... + x^(p-1).
inline IntPoly cyclotomic_prime_poly(long p) {
    if (p < 3 || p % 2 == 0 || !ntheory::is_prime(mpz_class(p)))
        throw InvalidArgument("cyclotomic_prime_poly: p must be an odd prime");
    return IntPoly(std::vector<mpz_class>(static_cast<std::size_t>(p - 1) + 1,
                                          mpz_class(1)));
}

/// The character series sum_{j=1}^{N} (j/p) x^j / j with exact rational
/// coefficients; the coefficient vanishes at every multiple of p.
inline RatPoly f_series(long p, long n) {
    if (p < 3 || p % 2 == 0 || !ntheory::is_prime(mpz_class(p)))
        throw InvalidArgument("f_series: p must be an odd prime");
    if (n < 1) throw InvalidArgument("f_series: order must be >= 1");
    std::vector<mpq_class> coeffs(static_cast<std::size_t>(n + 1));
    const mpz_class pz(p);
    for (long j = 1; j <= n; ++j) {
        const int s = ntheory::jacobi(mpz_class(j), pz);
        if (s != 0) coeffs[static_cast<std::size_t>(j)] = mpq_class(s, j);
    }
    return RatPoly(std::move(coeffs), n);
}

/// Exact verification of 4*Phi_p = A^2 - delta*p*B^2.
inline bool verify_identity(const GaussPair& gp) {
    using namespace series;
    const IntPoly lhs = poly_scale_exact(cyclotomic_prime_poly(gp.p), 4);
    const IntPoly rhs = poly_sub_exact(
        poly_mul_exact(gp.A, gp.A),
        poly_scale_exact(poly_mul_exact(gp.B, gp.B),
                         mpz_class(gp.delta) * gp.p));
    return lhs == rhs;
}

/// Computes the Gauss pair for a prime p >= 5 from the series closed forms.
///
/// With t = f_series(p, N) and R = sqrt(Phi_p) as series, the unified sums
///   C = sum_k (delta*p/4)^k t^(2k) / (2k)!
///   S = sum_k (delta*p/4)^k t^(2k+1) / (2k+1)!
/// absorb the cosh/cos and sinh/sin branches of the classical formulas into
/// one code path with no irrational intermediaries; then A = 2*R*C and
/// B = R*S. The truncation order N = (p-1)/2 + 4 leaves four guard
/// coefficients past deg A that must vanish exactly.
inline GaussPair gauss_pair(long p) {
    if (p == 3)
        throw InvalidArgument(
            "gauss_pair: p = 3 is out of scope (A(0) = 2 normalization "
            "requires p > 3)");
    if (p < 5 || !ntheory::is_prime(mpz_class(p)))
        throw InvalidArgument("gauss_pair: p must be a prime >= 5, got " +
                              std::to_string(p));

    using namespace series;
    const long half = (p - 1) / 2;
    const long n = half + 4;
    const int delta = (p % 4 == 1) ? 1 : -1;
    mpq_class dp4(delta * p, 4);
    dp4.canonicalize();

    const RatPoly t = f_series(p, n);
    const RatPoly t2 = series_mul(t, t, n);
    const RatPoly r = series_sqrt(to_rational_poly(cyclotomic_prime_poly(p), n), n);

    RatPoly cosh_like = RatPoly::one(n);
    RatPoly sinh_like = t;
    RatPoly term = RatPoly::one(n); // (delta*p/4)^k t^(2k) / (2k)!
    for (long k = 1; 2 * k <= n; ++k) {
        mpq_class step = dp4 / mpq_class((2 * k - 1) * (2 * k));
        term = poly_scale(series_mul(term, t2, n), step);
        cosh_like = poly_add(cosh_like, term);
        if (2 * k + 1 <= n)
            sinh_like = poly_add(
                sinh_like,
                poly_scale(series_mul(term, t, n), mpq_class(1, 2 * k + 1)));
    }

    const RatPoly a_full = poly_scale(series_mul(r, cosh_like, n), 2);
    const RatPoly b_full = series_mul(r, sinh_like, n);

    for (long k = half + 1; k <= n; ++k)
        if (a_full.coeff(k) != 0)
            throw GuardTermNonzero("gauss_pair(p=" + std::to_string(p) +
                                   "): A guard coefficient at degree " +
                                   std::to_string(k) + " is nonzero");
    for (long k = half; k <= n; ++k)
        if (b_full.coeff(k) != 0)
            throw GuardTermNonzero("gauss_pair(p=" + std::to_string(p) +
                                   "): B guard coefficient at degree " +
                                   std::to_string(k) + " is nonzero");

    GaussPair gp{p, delta, to_integer_poly(a_full), to_integer_poly(b_full)};

    if (gp.A.degree() != half || gp.B.degree() != half - 1 ||
        gp.A.coeff(0) != 2 || gp.B.coeff(0) != 0 || gp.B.coeff(1) != 1)
        throw IdentityFailure("gauss_pair(p=" + std::to_string(p) +
                              "): normalization check failed");
    if (!verify_identity(gp))
        throw IdentityFailure("gauss_pair(p=" + std::to_string(p) +
                              "): 4*Phi_p != A^2 - delta*p*B^2");
    return gp;
}

/// Cached variant; transparent (same value as recomputation). Safe under
/// concurrent use: first inserted value wins, duplicates discarded.
inline const GaussPair& gauss_pair_cached(long p) {
    static std::mutex mutex;
    static std::map<long, GaussPair> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(p);
        if (it != cache.end()) return it->second;
    }
    GaussPair gp = gauss_pair(p);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(p, std::move(gp)).first->second;
}

/// (A_p(a), B_p(a)) by exact Horner evaluation.
inline std::pair<mpz_class, mpz_class> eval_pair(const GaussPair& gp,
                                                 const mpz_class& a) {
    return {series::poly_eval(gp.A, a), series::poly_eval(gp.B, a)};
}

/// d = gcd(A_p(a), B_p(a)); always 1 or 2, and 2 whenever p = +-1 mod 8.
inline int pair_gcd(long p, const mpz_class& a) {
    const GaussPair& gp = gauss_pair_cached(p);
    const auto [av, bv] = eval_pair(gp, a);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
    if (g != 1 && g != 2)
        throw LemmaViolation("pair_gcd(p=" + std::to_string(p) +
                             ", a=" + a.get_str() + ") = " + g.get_str() +
                             ", expected 1 or 2");
    const long pm8 = p % 8;
    if ((pm8 == 1 || pm8 == 7) && g != 2)
        throw LemmaViolation("pair_gcd(p=" + std::to_string(p) +
                             ", a=" + a.get_str() +
                             ") = 1 although p = +-1 mod 8");
    return static_cast<int>(g.get_si());
}

/// Turns a solution c*b^l = Phi_p(a) into a proper solution of the auxiliary
/// equation alpha^2*c*y^l = x^2 - delta*p*z^2 by evaluating the Gauss pair
/// and dividing out d = gcd(A_p(a), B_p(a)).
inline EquationInstance descend(const ntheory::Triple& t, const mpz_class& a,
                                const mpz_class& b) {
    if (b < 1) throw InvalidArgument("descend: b must be a positive integer");
    mpz_class bl;
    mpz_pow_ui(bl.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(t.l));
    if (mpz_class(t.c) * bl != ntheory::eval_phi(t.p, a))
        throw NotASolution("descend: c*b^l != Phi_p(a) for a = " + a.get_str() +
                           ", b = " + b.get_str());

    const GaussPair& gp = gauss_pair_cached(t.p);
    const auto [av, bv] = eval_pair(gp, a);
    const int d = pair_gcd(t.p, a);

    EquationInstance inst{t.p, t.c, t.l, 0, 0, b, 0};
    if (d == 1) {
        inst.alpha = 2;
        inst.x = av;
        inst.z = bv;
    } else {
        inst.alpha = 1;
        inst.x = av / 2;
        inst.z = bv / 2;
    }
    if (!inst.verify())
        throw InternalError("descend: constructed instance failed validation");
    return inst;
}

} // namespace phidescent::gauss
