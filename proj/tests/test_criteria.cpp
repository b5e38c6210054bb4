#include "doctest.h"

#include "phidescent/criteria.hpp"

using namespace phidescent;
using namespace phidescent::criteria;
using ntheory::Triple;

TEST_SUITE("criteria") {

TEST_CASE("criterion_i") {
    CHECK(criterion_i(Triple(7, 3, 2)));        // jacobi(-7,3) = -1
    CHECK_FALSE(criterion_i(Triple(47, 3, 2))); // jacobi(-47,3) = 1
    CHECK_FALSE(criterion_i(Triple(5, 11, 2))); // jacobi(5,11) = 1
}

TEST_CASE("criterion_ii") {
    CHECK(criterion_ii(Triple(137, 13, 4)));
    CHECK_FALSE(criterion_ii(Triple(137, 13, 3))); // odd l gates it off
    CHECK_FALSE(criterion_ii(Triple(47, 3, 2)));   // jacobi(3,47) = +1
}

TEST_CASE("criterion_iii") {
    CHECK(criterion_iii(Triple(47, 3, 5)));
    // Cl(-47) is cyclic of order 5; 10th powers are the identity alone.
    CHECK(criterion_iii(Triple(47, 3, 10)));
    CHECK_FALSE(criterion_iii(Triple(5, 61, 2))); // h(5) = 1
    // Split-case precondition: (delta*p/c) must be +1.
    CHECK_THROWS_AS(criterion_iii(Triple(7, 3, 2)), InvalidArgument);
}

TEST_CASE("local_solvability") {
    const LocalReport r1 = local_solvability(Triple(47, 3, 5), 1);
    CHECK(r1.everywhere_solvable);
    CHECK(r1.obstructions.empty());

    // Both symbols fail for (137, 13, 4): jacobi(137,13) = jacobi(13,137) = -1,
    // so the obstruction at p = 137 comes with one at c = 13.
    const LocalReport r2 = local_solvability(Triple(137, 13, 4), 1);
    CHECK_FALSE(r2.everywhere_solvable);
    REQUIRE(r2.obstructions.size() == 2);
    CHECK(r2.obstructions[0].place == 13);
    CHECK(r2.obstructions[1].place == 137);

    const LocalReport r3 = local_solvability(Triple(7, 3, 2), 1);
    CHECK_FALSE(r3.everywhere_solvable);
    REQUIRE(!r3.obstructions.empty());
    CHECK(r3.obstructions[0].place == 3);

    CHECK_THROWS_AS(local_solvability(Triple(7, 3, 2), 3), InvalidArgument);
}

TEST_CASE("criterion_i implies a local obstruction") {
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L})
        for (long c : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L}) {
            if (p == c) continue;
            const Triple t(p, c, 2);
            if (criterion_i(t))
                CHECK_FALSE(local_solvability(t, 1).everywhere_solvable);
        }
}

TEST_CASE("verdict on the pinned instances") {
    const Verdict v1 = verdict(Triple(137, 13, 2));
    CHECK(v1.status == Status::NoSolutions);
    CHECK(v1.criterion == Criterion::II);
    const auto* ev1 = std::get_if<SymbolEvidence>(&v1.evidence);
    REQUIRE(ev1 != nullptr);
    CHECK(ev1->symbol == "jacobi(13,137)");
    CHECK(ev1->value == -1);

    const Verdict v2 = verdict(Triple(47, 3, 5));
    CHECK(v2.status == Status::NoSolutions);
    CHECK(v2.criterion == Criterion::III);
    const auto* ev2 = std::get_if<ClassEvidence>(&v2.evidence);
    REQUIRE(ev2 != nullptr);
    CHECK(ev2->h == 5);
    CHECK(ev2->D == -47);
    CHECK(ev2->prime_class == quadforms::QuadForm{3, 1, 4});
    CHECK(ev2->lth_power_subgroup_size == 1);

    CHECK(verdict(Triple(5, 61, 2)).status == Status::Inconclusive);
    CHECK(verdict(Triple(5, 61, 2)).criterion == Criterion::None);
    CHECK(verdict(Triple(5, 11, 3)).status == Status::Inconclusive);
}

TEST_CASE("verdict reports the inert obstruction when no even-l symbol fires") {
    // (11, 7, 3): jacobi(-11,7) = -1 but l odd keeps II silent.
    const Verdict v = verdict(Triple(11, 7, 3));
    CHECK(v.status == Status::NoSolutions);
    CHECK(v.criterion == Criterion::I);
    const auto* ev = std::get_if<SymbolEvidence>(&v.evidence);
    REQUIRE(ev != nullptr);
    CHECK(ev->symbol == "jacobi(-11,7)");
    CHECK(ev->value == -1);
}

TEST_CASE("verdict prefers the even-exponent symbol when both fire") {
    // For (7,3,2) both symbol criteria hold; the even-l family label wins.
    const Verdict v = verdict(Triple(7, 3, 2));
    CHECK(v.status == Status::NoSolutions);
    CHECK(v.criterion == Criterion::II);
}

TEST_CASE("verdict is deterministic") {
    const Verdict a = verdict(Triple(47, 3, 5));
    const Verdict b = verdict(Triple(47, 3, 5));
    CHECK(a == b);
}

TEST_CASE("invalid triples are rejected before any computation") {
    CHECK_THROWS_AS(Triple(9, 3, 2), InvalidTriple);
    CHECK_THROWS_AS(Triple(5, 5, 2), InvalidTriple);
    CHECK_THROWS_AS(Triple(5, 3, 0), InvalidTriple);
}

} // TEST_SUITE
