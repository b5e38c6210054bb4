#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "phidescent/criteria.hpp"
#include "phidescent/errors.hpp"
#include "phidescent/gauss.hpp"
#include "phidescent/ntheory.hpp"
#include "phidescent/quadforms.hpp"
#include "phidescent/search.hpp"

// End-to-end checks with pinned expectations, runnable both from the CLI
// (`phidescent selftest`) and from the acceptance test binary. Every check
// is exact: there are no tolerances anywhere in this library.

namespace phidescent::selftest {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail; // first failure, or a short success summary
};

namespace detail {

inline std::vector<long> primes_in(long lo, long hi) {
    std::vector<long> out;
    for (long n = lo; n <= hi; ++n)
        if (ntheory::is_prime(mpz_class(n))) out.push_back(n);
    return out;
}

struct Check {
    CheckResult result;
    long failures = 0;
    long checks = 0;

    explicit Check(std::string name) : result{std::move(name), true, ""} {}

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            result.passed = false;
            if (result.detail.empty()) result.detail = what;
        }
    }

    CheckResult finish() {
        if (result.passed)
            result.detail = std::to_string(checks) + " checks";
        else
            result.detail += " (" + std::to_string(failures) + "/" +
                             std::to_string(checks) + " failed)";
        return result;
    }
};

template <typename Fn>
CheckResult guarded(const std::string& name, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return CheckResult{name, false, std::string("exception: ") + e.what()};
    }
}

/// Sweep shared by the oracle-consistency and descent checks.
struct SolvedTriple {
    ntheory::Triple triple;
    search::SolutionRecord record;
};

} // namespace detail

/// 1. For every prime 5 <= p <= 199 the Gauss pair exists, its degrees and
///    normalization are as required and 4*Phi_p = A^2 - delta*p*B^2 exactly.
inline CheckResult check_gauss_identity_sweep() {
    const std::string name = "gauss identity sweep (5 <= p <= 199)";
    return detail::guarded(name, [&] {
        detail::Check check(name);
        for (long p : detail::primes_in(5, 199)) {
            const auto gp = gauss::gauss_pair(p);
            const std::string tag = "p=" + std::to_string(p);
            check.expect(gp.A.degree() == (p - 1) / 2, tag + ": deg A");
            check.expect(gp.B.degree() == (p - 3) / 2, tag + ": deg B");
            check.expect(gp.A.coeff(0) == 2, tag + ": A(0) != 2");
            check.expect(gp.B.coeff(0) == 0, tag + ": B(0) != 0");
            check.expect(gauss::verify_identity(gp), tag + ": identity");
        }
        return check.finish();
    });
}

/// 2. 13*y^l = Phi_137(x) is insoluble for even l via criterion II with
///    evidence jacobi(13,137) = -1.
inline CheckResult check_example_137() {
    const std::string name = "example: 13*y^l = Phi_137(x), l in {2,4,6}";
    return detail::guarded(name, [&] {
        detail::Check check(name);
        for (long l : {2L, 4L, 6L}) {
            const auto v = criteria::verdict(ntheory::Triple(137, 13, l));
            const std::string tag = "l=" + std::to_string(l);
            check.expect(v.status == criteria::Status::NoSolutions,
                         tag + ": status");
            check.expect(v.criterion == criteria::Criterion::II,
                         tag + ": criterion");
            const auto* ev = std::get_if<criteria::SymbolEvidence>(&v.evidence);
            check.expect(ev != nullptr &&
                             ev->symbol == "jacobi(13,137)" && ev->value == -1,
                         tag + ": evidence");
        }
        return check.finish();
    });
}

/// 3. Q(sqrt(-47)) has class number 5; the class of the prime above 3 is
///    (3,1,4), generates the group, and is not a 5th power; hence
///    3*y^(5k) = Phi_47(x) is insoluble via criterion III.
inline CheckResult check_example_47() {
    const std::string name = "example: 3*y^(5k) = Phi_47(x) via class group";
    return detail::guarded(name, [&] {
        detail::Check check(name);
        const mpz_class d(-47);
        const auto group = quadforms::class_group(d);
        check.expect(group.h() == 5, "h(-47) != 5");
        const auto pf = quadforms::prime_form(d, 3);
        check.expect(pf == quadforms::QuadForm{3, 1, 4},
                     "prime form above 3 is not (3,1,4)");
        check.expect(!quadforms::is_lth_power_class(group, pf, 5),
                     "(3,1,4) must not be a 5th power");
        for (long l : {5L, 10L, 15L}) {
            const auto v = criteria::verdict(ntheory::Triple(47, 3, l));
            const std::string tag = "l=" + std::to_string(l);
            check.expect(v.status == criteria::Status::NoSolutions,
                         tag + ": status");
            check.expect(v.criterion == criteria::Criterion::III,
                         tag + ": criterion");
            const auto* ev = std::get_if<criteria::ClassEvidence>(&v.evidence);
            check.expect(ev != nullptr && ev->h == 5, tag + ": evidence h");
        }
        return check.finish();
    });
}

/// 4 (+ harvest for 6). NoSolutions verdicts never contradict the brute-force
///    scan; every found solution is Inconclusive.
inline CheckResult check_oracle_consistency(
    std::vector<detail::SolvedTriple>& harvested) {
    const std::string name =
        "oracle consistency (p, c <= 50, l in 2..6, |x| <= 200)";
    return detail::guarded(name, [&] {
        detail::Check check(name);
        for (long p : detail::primes_in(5, 50)) {
            for (long c : detail::primes_in(3, 50)) {
                if (c == p) continue;
                for (long l = 2; l <= 6; ++l) {
                    const ntheory::Triple t(p, c, l);
                    const auto v = criteria::verdict(t);
                    const auto sols = search::search_solutions(t, 200);
                    const std::string tag = "(" + std::to_string(p) + "," +
                                            std::to_string(c) + "," +
                                            std::to_string(l) + ")";
                    if (v.status == criteria::Status::NoSolutions)
                        check.expect(sols.empty(),
                                     tag + ": NoSolutions but scan found one");
                    if (!sols.empty())
                        check.expect(v.status == criteria::Status::Inconclusive,
                                     tag + ": solution exists but not Inconclusive");
                    for (const auto& s : sols)
                        harvested.push_back({t, s});
                }
            }
        }
        // Named instances just outside / inside the sweep.
        {
            const ntheory::Triple t(5, 61, 2);
            const auto sols = search::search_solutions(t, 200);
            bool found = false;
            for (const auto& s : sols)
                if (s.x == 9 && s.y == 11) found = true;
            check.expect(found, "(5,61,2): solution x=9, y=11 missing");
            check.expect(criteria::verdict(t).status ==
                             criteria::Status::Inconclusive,
                         "(5,61,2): must be Inconclusive");
            for (const auto& s : sols) harvested.push_back({t, s});
        }
        for (long l = 2; l <= 6; ++l) {
            const ntheory::Triple t(5, 11, l);
            const auto sols = search::search_solutions(t, 200);
            bool found = false;
            for (const auto& s : sols)
                if (s.x == -2 && s.y == 1) found = true;
            check.expect(found, "(5,11," + std::to_string(l) +
                                    "): solution x=-2, y=1 missing");
            check.expect(criteria::verdict(t).status ==
                             criteria::Status::Inconclusive,
                         "(5,11," + std::to_string(l) + "): must be Inconclusive");
        }
        return check.finish();
    });
}

/// 5. Phi_p(a) is odd; gcd(A_p(a), B_p(a)) in {1,2}, equal to 2 whenever
///    p = +-1 mod 8; and Phi_p(1 + lambda*p) = p mod p^2.
inline CheckResult check_lemma_suite() {
    const std::string name = "lemma suite (5 <= p <= 59, |a| <= 30)";
    return detail::guarded(name, [&] {
        detail::Check check(name);
        for (long p : detail::primes_in(5, 59)) {
            const mpz_class p2 = mpz_class(p) * p;
            for (long a = -30; a <= 30; ++a) {
                const std::string tag =
                    "p=" + std::to_string(p) + ", a=" + std::to_string(a);
                const mpz_class phi = ntheory::eval_phi(p, mpz_class(a));
                check.expect(mpz_odd_p(phi.get_mpz_t()) != 0,
                             tag + ": Phi_p(a) even");
                int d = 0;
                bool in_range = true;
                try {
                    d = gauss::pair_gcd(p, mpz_class(a));
                } catch (const LemmaViolation&) {
                    in_range = false;
                }
                check.expect(in_range && (d == 1 || d == 2),
                             tag + ": pair gcd outside {1,2}");
                if (p % 8 == 1 || p % 8 == 7)
                    check.expect(d == 2, tag + ": d != 2 though p = +-1 mod 8");
            }
            for (long lambda = -10; lambda <= 10; ++lambda) {
                const mpz_class a = 1 + mpz_class(lambda) * p;
                const mpz_class phi = ntheory::eval_phi(p, a);
                check.expect(ntheory::mod_floor(phi - p, p2) == 0,
                             "p=" + std::to_string(p) + ", lambda=" +
                                 std::to_string(lambda) +
                                 ": Phi_p(1+lambda*p) != p mod p^2");
            }
        }
        return check.finish();
    });
}

/// 6. descend((5,61,2), 9, 11) = (alpha=2, x=173, y=11, z=9) exactly, and
///    every harvested solution descends to a valid instance.
inline CheckResult check_descent(
    const std::vector<detail::SolvedTriple>& harvested) {
    const std::string name = "descent validation";
    return detail::guarded(name, [&] {
        detail::Check check(name);
        const auto inst =
            gauss::descend(ntheory::Triple(5, 61, 2), mpz_class(9), mpz_class(11));
        check.expect(inst.alpha == 2 && inst.x == 173 && inst.y == 11 &&
                         inst.z == 9,
                     "(5,61,2) descent instance mismatch");
        check.expect(inst.x * inst.x - mpz_class(5) * inst.z * inst.z == 29524,
                     "173^2 - 5*81 != 29524");
        check.expect(mpz_class(4) * 61 * 121 == 29524, "4*61*11^2 != 29524");
        check.expect(inst.verify(), "(5,61,2) instance failed validation");
        for (const auto& st : harvested) {
            const auto i2 = gauss::descend(st.triple, st.record.x, st.record.y);
            check.expect(i2.verify(),
                         "descent of x=" + st.record.x.get_str() + " for (" +
                             std::to_string(st.triple.p) + "," +
                             std::to_string(st.triple.c) + "," +
                             std::to_string(st.triple.l) + ") invalid");
        }
        return check.finish();
    });
}

/// 7. The residue-enumeration shadow of local solvability obstructs exactly
///    at the places the symbol conditions name, for a deterministic sample
///    of 30 triples and all primes q <= 100.
inline CheckResult check_local_solvability_iff() {
    const std::string name = "local solvability iff (30 triples, q <= 100)";
    return detail::guarded(name, [&] {
        detail::Check check(name);
        // Deterministic stride sample over the (p, c <= 50, l <= 6) domain.
        std::vector<ntheory::Triple> sample;
        {
            std::vector<ntheory::Triple> all;
            for (long p : detail::primes_in(5, 50))
                for (long c : detail::primes_in(3, 50))
                    for (long l = 2; l <= 6; ++l)
                        if (c != p) all.emplace_back(p, c, l);
            const std::size_t stride = all.size() / 30;
            for (std::size_t i = 0; i < all.size() && sample.size() < 30;
                 i += stride)
                sample.push_back(all[i]);
        }
        const auto qs = detail::primes_in(2, 100);
        for (const auto& t : sample) {
            const int sym_c = ntheory::jacobi(mpz_class(t.disc()), mpz_class(t.c));
            const int sym_p = ntheory::jacobi(mpz_class(t.c), mpz_class(t.p));
            const auto report = criteria::local_solvability(t, 1);
            bool any_obstructed = false;
            for (long q : qs) {
                bool expected = true;
                if (q == t.c && sym_c != 1) expected = false;
                if (q == t.p && t.l % 2 == 0 && sym_p != 1) expected = false;
                if (!expected) any_obstructed = true;
                const bool got = search::mod_q_proper_solutions(t, 1, q);
                check.expect(got == expected,
                             "(" + std::to_string(t.p) + "," +
                                 std::to_string(t.c) + "," +
                                 std::to_string(t.l) + ") at q=" +
                                 std::to_string(q) + ": enumeration says " +
                                 (got ? "solvable" : "obstructed") +
                                 ", symbols say the opposite");
            }
            check.expect(report.everywhere_solvable == !any_obstructed,
                         "(" + std::to_string(t.p) + "," + std::to_string(t.c) +
                             "," + std::to_string(t.l) +
                             "): report disagrees with enumeration");
            for (const auto& ob : report.obstructions)
                check.expect(!search::mod_q_proper_solutions(t, 1, ob.place),
                             "reported obstruction at " +
                                 std::to_string(ob.place) +
                                 " not confirmed by enumeration");
        }
        return check.finish();
    });
}

/// 8. Group laws hold in every class group with D = delta*p, p <= 101;
///    h(-23) = 3 and h(5) = 1; the negative Pell equation is solvable for
///    every prime p = 1 mod 4 up to 1000.
inline CheckResult check_class_group_algebra() {
    const std::string name = "class group algebra (p <= 101)";
    return detail::guarded(name, [&] {
        detail::Check check(name);
        for (long p : detail::primes_in(5, 101)) {
            const mpz_class d = quadforms::discriminant(p);
            const auto group = quadforms::class_group(d);
            const std::string tag = "D=" + d.get_str();
            const auto& e = group.principal();
            auto canon = [&](const quadforms::QuadForm& f) {
                return quadforms::canonical(f);
            };
            for (const auto& g : group.classes) {
                check.expect(canon(quadforms::compose(e, g)) == canon(g),
                             tag + ": identity law");
                check.expect(canon(quadforms::compose(g, quadforms::conjugate(g))) ==
                                 canon(e),
                             tag + ": inverse law");
            }
            for (const auto& f : group.classes)
                for (const auto& g : group.classes)
                    for (const auto& h : group.classes) {
                        const auto left =
                            quadforms::compose(quadforms::compose(f, g), h);
                        const auto right =
                            quadforms::compose(f, quadforms::compose(g, h));
                        check.expect(canon(left) == canon(right),
                                     tag + ": associativity");
                    }
        }
        check.expect(quadforms::class_group(mpz_class(-23)).h() == 3,
                     "h(-23) != 3");
        check.expect(quadforms::class_group(mpz_class(5)).h() == 1,
                     "h(5) != 1");
        for (long p : detail::primes_in(5, 1000))
            if (p % 4 == 1)
                check.expect(quadforms::negative_pell_solvable(p),
                             "negative Pell unsolvable for p = " +
                                 std::to_string(p));
        return check.finish();
    });
}

inline std::vector<CheckResult> run_all() {
    std::vector<CheckResult> results;
    results.push_back(check_gauss_identity_sweep());
    results.push_back(check_example_137());
    results.push_back(check_example_47());
    std::vector<detail::SolvedTriple> harvested;
    results.push_back(check_oracle_consistency(harvested));
    results.push_back(check_lemma_suite());
    results.push_back(check_descent(harvested));
    results.push_back(check_local_solvability_iff());
    results.push_back(check_class_group_algebra());
    return results;
}

} // namespace phidescent::selftest
