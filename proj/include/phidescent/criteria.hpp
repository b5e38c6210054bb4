#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "phidescent/errors.hpp"
#include "phidescent/ntheory.hpp"
#include "phidescent/quadforms.hpp"

namespace phidescent::criteria {

using ntheory::Triple;

enum class Status { NoSolutions, Inconclusive };
enum class Criterion { I, II, III, None };

/// A Jacobi symbol value that decides criterion I or II.
struct SymbolEvidence {
    std::string symbol; // e.g. "jacobi(13,137)"
    int value;

    friend bool operator==(const SymbolEvidence&, const SymbolEvidence&) = default;
};

/// The class group data that decides criterion III.
struct ClassEvidence {
    mpz_class D;
    long h;
    quadforms::QuadForm prime_class;  // class of the prime ideal above c
    long lth_power_subgroup_size;

    friend bool operator==(const ClassEvidence&, const ClassEvidence&) = default;
};

using Evidence = std::variant<std::monostate, SymbolEvidence, ClassEvidence>;

/// The decision for one triple, carrying every number used to reach it.
struct Verdict {
    Triple triple;
    Status status;
    Criterion criterion;
    Evidence evidence;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct LocalObstruction {
    long place; // the prime at which proper local solutions fail
    std::string condition;

    friend bool operator==(const LocalObstruction&, const LocalObstruction&) = default;
};

struct LocalReport {
    Triple triple;
    int alpha;
    bool everywhere_solvable;
    std::vector<LocalObstruction> obstructions;

    friend bool operator==(const LocalReport&, const LocalReport&) = default;
};

/// Criterion I: (delta*p / c) = -1, i.e. c is inert in Q(sqrt(delta p)).
inline bool criterion_i(const Triple& t) {
    return ntheory::jacobi(mpz_class(t.disc()), mpz_class(t.c)) == -1;
}

/// Criterion II: (c/p) = -1 and l even.
inline bool criterion_ii(const Triple& t) {
    if (t.l % 2 != 0) return false;
    return ntheory::jacobi(mpz_class(t.c), mpz_class(t.p)) == -1;
}

/// Criterion III: the class of the prime ideal above c is not an l-th power
/// in the class group of Q(sqrt(delta p)). Only meaningful in the split case
/// (delta*p / c) = +1; the inert case belongs to criterion I. The alpha = 2
/// branch contributes nothing: it is admissible only for p = +-3 mod 8,
/// where delta*p = 5 mod 8 makes (2) prime and principal, so the c-part
/// alone decides.
inline bool criterion_iii(const Triple& t,
                          const mpz_class& disc_bound = 1'000'000) {
    const mpz_class d(t.disc());
    if (ntheory::jacobi(d, mpz_class(t.c)) != 1)
        throw InvalidArgument(
            "criterion_iii: requires the split case (delta*p/c) = +1");
    const auto group = quadforms::class_group(d, disc_bound);
    const auto pf = quadforms::prime_form(d, t.c);
    return !quadforms::is_lth_power_class(group, pf, t.l);
}

/// Proper local solutions of alpha^2*c*y^l = x^2 - delta*p*z^2 exist at every
/// prime iff (delta*p/c) = 1 and, when l is even, (c/p) = 1. Each failing
/// condition is reported as an obstruction at the prime it lives at.
inline LocalReport local_solvability(const Triple& t, int alpha) {
    if (alpha != 1 && alpha != 2)
        throw InvalidArgument("local_solvability: alpha must be 1 or 2");
    LocalReport report{t, alpha, true, {}};
    const int sym_c = ntheory::jacobi(mpz_class(t.disc()), mpz_class(t.c));
    if (sym_c != 1)
        report.obstructions.push_back(
            {t.c, "jacobi(" + std::to_string(t.disc()) + "," +
                      std::to_string(t.c) + ") = " + std::to_string(sym_c)});
    if (t.l % 2 == 0) {
        const int sym_p = ntheory::jacobi(mpz_class(t.c), mpz_class(t.p));
        if (sym_p != 1)
            report.obstructions.push_back(
                {t.p, "l even and jacobi(" + std::to_string(t.c) + "," +
                          std::to_string(t.p) + ") = " + std::to_string(sym_p)});
    }
    report.everywhere_solvable = report.obstructions.empty();
    return report;
}

/// Evaluates the criteria and returns the first that fires, with evidence;
/// Inconclusive otherwise. The two symbol criteria are checked before the
/// class-group criterion; between those two, II is reported first so the
/// even-exponent family is labelled by its defining symbol (c/p).
inline Verdict verdict(const Triple& t,
                       const mpz_class& disc_bound = 1'000'000) {
    t.validate();
    if (criterion_ii(t)) {
        SymbolEvidence ev{"jacobi(" + std::to_string(t.c) + "," +
                              std::to_string(t.p) + ")",
                          -1};
        return Verdict{t, Status::NoSolutions, Criterion::II, ev};
    }
    if (criterion_i(t)) {
        SymbolEvidence ev{"jacobi(" + std::to_string(t.disc()) + "," +
                              std::to_string(t.c) + ")",
                          -1};
        return Verdict{t, Status::NoSolutions, Criterion::I, ev};
    }
    // (delta*p/c) = +1 here, so the split-case precondition of III holds.
    const mpz_class d(t.disc());
    const auto group = quadforms::class_group(d, disc_bound);
    const auto pf = quadforms::prime_form(d, t.c);
    const auto powers = quadforms::lth_power_classes(group, t.l);
    const auto target = quadforms::canonical(pf);
    const bool member = std::binary_search(powers.begin(), powers.end(),
                                           target, quadforms::lex_less);
    if (!member) {
        ClassEvidence ev{d, group.h(), pf, static_cast<long>(powers.size())};
        return Verdict{t, Status::NoSolutions, Criterion::III, ev};
    }
    return Verdict{t, Status::Inconclusive, Criterion::None, std::monostate{}};
}

} // namespace phidescent::criteria
