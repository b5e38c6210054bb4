#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "phidescent/errors.hpp"
#include "phidescent/ntheory.hpp"

namespace phidescent::quadforms {

using ntheory::mod_floor;

/// Binary quadratic form a*x^2 + b*x*y + c*y^2 of discriminant b^2 - 4ac.
/// Discriminants in this library are odd, fundamental and of the shape
/// delta*p; positive definite forms keep a > 0.
struct QuadForm {
    mpz_class a;
    mpz_class b;
    mpz_class c;

    mpz_class disc() const { return b * b - 4 * a * c; }

    friend bool operator==(const QuadForm& f, const QuadForm& g) {
        return f.a == g.a && f.b == g.b && f.c == g.c;
    }
};

/// Plain lexicographic order on (a, b, c).
inline bool lex_less(const QuadForm& f, const QuadForm& g) {
    return std::tie(f.a, f.b, f.c) < std::tie(g.a, g.b, g.c);
}

/// Presentation order for class listings: by a, then |b| with the positive
/// sign first, then c.
inline bool presentation_less(const QuadForm& f, const QuadForm& g) {
    if (f.a != g.a) return f.a < g.a;
    const mpz_class fb = abs(f.b);
    const mpz_class gb = abs(g.b);
    if (fb != gb) return fb < gb;
    if (f.b != g.b) return f.b > g.b;
    return f.c < g.c;
}

/// Fundamental discriminant delta*p of Q(sqrt(delta p)); always = 1 mod 4.
inline mpz_class discriminant(long p) {
    if (p < 3 || p % 2 == 0 || !ntheory::is_prime(mpz_class(p)))
        throw InvalidArgument("discriminant: p must be an odd prime, got " +
                              std::to_string(p));
    return p % 4 == 1 ? mpz_class(p) : mpz_class(-p);
}

/// Shape invariants every form in this library satisfies.
inline void validate_form(const QuadForm& f) {
    const mpz_class d = f.disc();
    if (d == 0 || mod_floor(d, 4) != 1)
        throw InvalidArgument("form (" + f.a.get_str() + "," + f.b.get_str() +
                              "," + f.c.get_str() +
                              "): discriminant must be odd, = 1 mod 4");
    if (d > 0 && mpz_perfect_square_p(d.get_mpz_t()))
        throw InvalidArgument("form: discriminant must not be a square");
    if (d < 0 && f.a <= 0)
        throw InvalidArgument(
            "form: positive definite representative requires a > 0");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), f.a.get_mpz_t(), f.b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.c.get_mpz_t());
    if (g != 1) throw InvalidArgument("form: not primitive, content " + g.get_str());
}

inline QuadForm principal_form(const mpz_class& d) {
    return QuadForm{1, 1, (1 - d) / 4};
}

/// Class inverse representative (b -> -b).
inline QuadForm conjugate(const QuadForm& f) { return QuadForm{f.a, -f.b, f.c}; }

namespace detail {

inline mpz_class isqrt(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Bring b into (-a, a] keeping the discriminant fixed (a > 0).
inline void normalize_definite(QuadForm& f, const mpz_class& d) {
    const mpz_class two_a = 2 * f.a;
    f.b = f.a - mod_floor(f.a - f.b, two_a);
    const mpz_class num = f.b * f.b - d;
    const mpz_class den = 4 * f.a;
    mpz_divexact(f.c.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
}

inline bool is_reduced_definite(const QuadForm& f) {
    const mpz_class ab = abs(f.b);
    if (ab > f.a || f.a > f.c) return false;
    if (f.b < 0 && (ab == f.a || f.a == f.c)) return false;
    return true;
}

/// Reduced indefinite form: 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.
inline bool is_reduced_indefinite(const QuadForm& f, const mpz_class& d) {
    if (f.b <= 0) return false;
    if (f.b * f.b >= d) return false;
    const mpz_class two_a = 2 * abs(f.a);
    if ((two_a + f.b) * (two_a + f.b) <= d) return false;
    if (two_a > f.b && (two_a - f.b) * (two_a - f.b) >= d) return false;
    return true;
}

/// One rho step (a, b, c) -> (c, b', c') with b' = -b mod 2|c| chosen in the
/// standard window; iterating reduces any indefinite form and then walks its
/// cycle of reduced forms.
inline QuadForm rho_indefinite(const QuadForm& f, const mpz_class& d,
                               const mpz_class& s) {
    const mpz_class ac = abs(f.c);
    const mpz_class m = 2 * ac;
    const mpz_class base = mod_floor(-f.b, m); // in [0, m)
    mpz_class b2;
    if (ac > s) {
        b2 = base > ac ? base - m : base; // window (-|c|, |c|]
    } else {
        b2 = s - mod_floor(s - base, m); // window (s - 2|c|, s]
    }
    QuadForm out;
    out.a = f.c;
    out.b = b2;
    const mpz_class num = b2 * b2 - d;
    const mpz_class den = 4 * f.c;
    mpz_divexact(out.c.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

} // namespace detail

/// Equivalent reduced form. Definite: the unique reduced representative.
/// Indefinite: some member of the class's rho-cycle. Idempotent on reduced
/// forms.
inline QuadForm reduce(QuadForm f) {
    validate_form(f);
    const mpz_class d = f.disc();
    if (d < 0) {
        detail::normalize_definite(f, d);
        while (f.a > f.c) {
            f = QuadForm{f.c, -f.b, f.a};
            detail::normalize_definite(f, d);
        }
        if (f.a == f.c && f.b < 0) f.b = -f.b;
        return f;
    }
    const mpz_class s = detail::isqrt(d);
    long guard = 96 + 4 * static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2) +
                                            mpz_sizeinbase(f.a.get_mpz_t(), 2));
    while (!detail::is_reduced_indefinite(f, d)) {
        f = detail::rho_indefinite(f, d, s);
        if (--guard < 0)
            throw InternalError("reduce: rho iteration did not terminate");
    }
    return f;
}

/// The full rho-cycle of reduced forms through reduce(f) (indefinite only).
inline std::vector<QuadForm> rho_cycle(const QuadForm& f) {
    const mpz_class d = f.disc();
    if (d < 0) throw InvalidArgument("rho_cycle: discriminant must be positive");
    const mpz_class s = detail::isqrt(d);
    const QuadForm start = reduce(f);
    std::vector<QuadForm> cycle{start};
    QuadForm g = detail::rho_indefinite(start, d, s);
    while (!(g == start)) {
        cycle.push_back(g);
        g = detail::rho_indefinite(g, d, s);
        if (cycle.size() > 2'000'000)
            throw InternalError("rho_cycle: cycle did not close");
    }
    return cycle;
}

/// Canonical class representative: the reduced form itself (definite) or the
/// lexicographically least member of the rho-cycle (indefinite).
inline QuadForm canonical(const QuadForm& f) {
    if (f.disc() < 0) return reduce(f);
    const auto cycle = rho_cycle(f);
    return *std::min_element(cycle.begin(), cycle.end(), lex_less);
}

/// Same proper equivalence class?
inline bool is_equivalent(const QuadForm& f, const QuadForm& g) {
    if (f.disc() != g.disc())
        throw IncompatibleDiscriminants("is_equivalent: discriminants differ");
    if (f.disc() < 0) return reduce(f) == reduce(g);
    const QuadForm rf = reduce(f);
    for (const auto& h : rho_cycle(g))
        if (h == rf) return true;
    return false;
}

namespace detail {

/// Smallest nonnegative solution of x = r1 (mod m1), x = r2 (mod m2)
/// together with the combined modulus; moduli need not be coprime.
inline bool crt_pair(const mpz_class& r1, const mpz_class& m1,
                     const mpz_class& r2, const mpz_class& m2, mpz_class& x,
                     mpz_class& l) {
    mpz_class g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), m1.get_mpz_t(),
               m2.get_mpz_t());
    mpz_class diff = r2 - r1;
    if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) return false;
    l = m1 / g * m2;
    // x = r1 + m1 * ((diff/g * u) mod (m2/g))
    mpz_class t = diff / g * u;
    t = mod_floor(t, m2 / g);
    x = mod_floor(r1 + m1 * t, l);
    return true;
}

} // namespace detail

/// Dirichlet composition: with e = gcd(a1, a2, (b1+b2)/2) and A = a1*a2/e^2,
/// B is the smallest nonnegative solution of
///   B = b1 (mod 2*a1/e),  B = b2 (mod 2*a2/e),  B^2 = D (mod 4A),
/// and the result (A, B, (B^2-D)/(4A)) is reduced.
inline QuadForm compose(const QuadForm& f, const QuadForm& g) {
    const mpz_class d = f.disc();
    if (d != g.disc())
        throw IncompatibleDiscriminants("compose: discriminants differ: " +
                                        d.get_str() + " vs " +
                                        g.disc().get_str());
    const mpz_class s = (f.b + g.b) / 2;
    mpz_class e;
    mpz_gcd(e.get_mpz_t(), f.a.get_mpz_t(), g.a.get_mpz_t());
    mpz_gcd(e.get_mpz_t(), e.get_mpz_t(), s.get_mpz_t());
    const mpz_class big_a = f.a * g.a / (e * e);
    const mpz_class m1 = abs(2 * f.a / e);
    const mpz_class m2 = abs(2 * g.a / e);

    mpz_class b0, step;
    if (!detail::crt_pair(f.b, m1, g.b, m2, b0, step))
        throw InternalError("compose: congruence system has no solution");

    const mpz_class m4a = abs(4 * big_a);
    mpz_class gcd_lm;
    mpz_gcd(gcd_lm.get_mpz_t(), step.get_mpz_t(), m4a.get_mpz_t());
    const mpz_class span = m4a / gcd_lm; // candidates cover all residues mod 4A
    mpz_class big_b = b0;
    bool found = false;
    for (mpz_class k = 0; k <= span; ++k) {
        if (mod_floor(big_b * big_b - d, m4a) == 0) {
            found = true;
            break;
        }
        big_b += step;
    }
    if (!found) throw InternalError("compose: no admissible middle coefficient");

    QuadForm out;
    out.a = big_a;
    out.b = big_b;
    const mpz_class num = big_b * big_b - d;
    const mpz_class den = 4 * big_a;
    mpz_divexact(out.c.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return reduce(out);
}

/// Class power by square-and-multiply on reduced representatives; e >= 0.
inline QuadForm pow_class(const QuadForm& f, long e) {
    if (e < 0) throw InvalidArgument("pow_class: exponent must be >= 0");
    QuadForm acc = reduce(principal_form(f.disc()));
    QuadForm base = reduce(f);
    while (e > 0) {
        if (e & 1) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

/// Whether x^2 - p*y^2 = -1 is solvable, decided by the parity of the
/// continued fraction period of sqrt(p). For prime p = 1 mod 4 this is
/// classically always true; it is asserted at class group construction so
/// the form class group below can stand in for the ideal class group.
inline bool negative_pell_solvable(long p) {
    if (p < 5 || p % 4 != 1 || !ntheory::is_prime(mpz_class(p)))
        throw InvalidArgument(
            "negative_pell_solvable: p must be a prime = 1 mod 4, got " +
            std::to_string(p));
    const mpz_class pz(p);
    const mpz_class a0 = detail::isqrt(pz);
    mpz_class m = 0, d = 1, a = a0;
    long len = 0;
    do {
        m = d * a - m;
        d = (pz - m * m) / d;
        a = (a0 + m) / d;
        ++len;
    } while (d != 1);
    return len % 2 == 1;
}

/// The class group of forms of discriminant D = delta*p: all reduced forms,
/// grouped into rho-cycles when D > 0, one canonical representative per
/// class, in presentation order.
struct ClassGroup {
    mpz_class D;
    std::vector<QuadForm> classes;
    std::size_t identity_index = 0;

    long h() const { return static_cast<long>(classes.size()); }
    const QuadForm& principal() const { return classes[identity_index]; }
};

inline ClassGroup class_group(const mpz_class& d,
                              const mpz_class& disc_bound = 1'000'000) {
    if (abs(d) > disc_bound)
        throw BoundExceeded("class_group: |D| = " + mpz_class(abs(d)).get_str() +
                            " exceeds the bound " + disc_bound.get_str());
    if (mod_floor(d, 4) != 1 || !ntheory::is_prime(abs(d)))
        throw InvalidArgument("class_group: D must be +-(odd prime), = 1 mod 4");

    std::vector<QuadForm> reps;
    if (d < 0) {
        // All reduced forms: |b| <= a <= c, b odd, with sign conventions.
        const mpz_class abs_d = -d;
        for (mpz_class a = 1; 3 * a * a <= abs_d; ++a) {
            const mpz_class four_a = 4 * a;
            for (mpz_class b = -a + 1; b <= a; ++b) {
                if (mpz_even_p(b.get_mpz_t())) continue;
                mpz_class num = b * b - d;
                if (!mpz_divisible_p(num.get_mpz_t(), four_a.get_mpz_t()))
                    continue;
                const mpz_class c = num / four_a;
                if (c < a) continue;
                if (a == c && b < 0) continue;
                QuadForm f{a, b, c};
                validate_form(f);
                reps.push_back(f);
            }
        }
    } else {
        // Enumerate all reduced indefinite forms, then merge rho-cycles.
        const mpz_class s = detail::isqrt(d);
        std::vector<QuadForm> reduced;
        for (mpz_class b = 1; b <= s; b += 2) {
            const mpz_class t = (d - b * b) / 4; // a*c = -t, t > 0
            for (mpz_class u = 1; u * u <= t; ++u) {
                if (!mpz_divisible_p(t.get_mpz_t(), u.get_mpz_t())) continue;
                const mpz_class v = t / u;
                const std::array<std::pair<mpz_class, mpz_class>, 4> signed_pairs{
                    {{u, mpz_class(-v)},
                     {mpz_class(-u), v},
                     {v, mpz_class(-u)},
                     {mpz_class(-v), u}}};
                for (const auto& [aa, cc] : signed_pairs) {
                    QuadForm f{aa, b, cc};
                    if (!detail::is_reduced_indefinite(f, d)) continue;
                    validate_form(f);
                    reduced.push_back(f);
                }
            }
        }
        std::sort(reduced.begin(), reduced.end(), lex_less);
        reduced.erase(std::unique(reduced.begin(), reduced.end()),
                      reduced.end());

        std::set<std::size_t> seen;
        auto index_of = [&](const QuadForm& f) {
            const auto it = std::lower_bound(reduced.begin(), reduced.end(), f,
                                             lex_less);
            if (it == reduced.end() || !(*it == f))
                throw InternalError("class_group: rho left the reduced set");
            return static_cast<std::size_t>(it - reduced.begin());
        };
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if (seen.count(i)) continue;
            QuadForm least = reduced[i];
            for (const auto& g : rho_cycle(reduced[i])) {
                seen.insert(index_of(g));
                if (lex_less(g, least)) least = g;
            }
            reps.push_back(least);
        }

        if (!mpz_fits_slong_p(d.get_mpz_t()))
            throw BoundExceeded(
                "class_group: discriminant too large for the continued "
                "fraction unit check");
        if (!negative_pell_solvable(d.get_si()))
            throw InternalError(
                "class_group: negative Pell equation unsolvable for prime "
                "discriminant " +
                d.get_str() + "; narrow and wide class groups would differ");
    }

    std::sort(reps.begin(), reps.end(), presentation_less);
    ClassGroup group;
    group.D = d;
    group.classes = std::move(reps);
    const QuadForm id = d < 0 ? reduce(principal_form(d))
                              : canonical(principal_form(d));
    for (std::size_t i = 0; i < group.classes.size(); ++i)
        if (group.classes[i] == id) group.identity_index = i;
    if (group.classes.empty() || !(group.classes[group.identity_index] == id))
        throw InternalError("class_group: principal class missing");
    return group;
}

/// The class of a prime ideal above a split odd prime q: the reduced form
/// (q, b, (b^2-D)/(4q)) with b^2 = D (mod 4q), b odd.
inline QuadForm prime_form(const mpz_class& d, long q) {
    if (q == 2 || q < 2 || !ntheory::is_prime(mpz_class(q)))
        throw InvalidArgument("prime_form: q must be an odd prime, got " +
                              std::to_string(q));
    const mpz_class qz(q);
    if (mpz_divisible_p(d.get_mpz_t(), qz.get_mpz_t()))
        throw Ramified("prime_form: q = " + std::to_string(q) +
                       " divides the discriminant");
    if (ntheory::jacobi(d, qz) != 1)
        throw NotSplit("prime_form: (D/q) != 1 for q = " + std::to_string(q));
    mpz_class b = *ntheory::sqrt_mod_prime(d, qz);
    if (mpz_even_p(b.get_mpz_t())) b += qz; // D odd: exactly one parity works
    QuadForm f;
    f.a = qz;
    f.b = b;
    const mpz_class num = b * b - d;
    const mpz_class den = 4 * qz;
    mpz_divexact(f.c.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return reduce(f);
}

/// Canonical representatives of the subgroup {g^l : g in G}, sorted.
inline std::vector<QuadForm> lth_power_classes(const ClassGroup& group,
                                               long l) {
    if (l < 1) throw InvalidArgument("lth_power_classes: l must be >= 1");
    std::vector<QuadForm> out;
    for (const auto& g : group.classes) {
        QuadForm p = pow_class(g, l);
        out.push_back(group.D < 0 ? p : canonical(p));
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Is the class of f an l-th power in the class group? Exhaustive over the
/// subgroup of l-th powers.
inline bool is_lth_power_class(const ClassGroup& group, const QuadForm& f,
                               long l) {
    if (f.disc() != group.D)
        throw IncompatibleDiscriminants(
            "is_lth_power_class: discriminants differ");
    const auto powers = lth_power_classes(group, l);
    const QuadForm target = canonical(f);
    return std::binary_search(powers.begin(), powers.end(), target, lex_less);
}

} // namespace phidescent::quadforms
