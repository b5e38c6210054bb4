#include "doctest.h"

#include <numeric>
#include <random>

#include "phidescent/quadforms.hpp"

using namespace phidescent;
using namespace phidescent::quadforms;

namespace {

// Independent recount of reduced definite forms by a dumb triple loop.
long count_reduced_forms_naive(long d) {
    REQUIRE(d < 0);
    long count = 0;
    for (long a = 1; a * a <= -d; ++a)
        for (long b = -a; b <= a; ++b)
            for (long c = a; c <= (1 - d) / 4 + 1; ++c) {
                if (b * b - 4 * a * c != d) continue;
                if (b < 0 && (b == -a || a == c)) continue;
                long g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
                if (g != 1) continue;
                ++count;
            }
    return count;
}

QuadForm qf(long a, long b, long c) {
    return QuadForm{mpz_class(a), mpz_class(b), mpz_class(c)};
}

} // namespace

TEST_SUITE("quadforms") {

TEST_CASE("discriminant") {
    CHECK(discriminant(47) == -47);
    CHECK(discriminant(5) == 5);
    CHECK(discriminant(7) == -7);
    CHECK_THROWS_AS(discriminant(15), InvalidArgument);
    CHECK_THROWS_AS(discriminant(2), InvalidArgument);
}

TEST_CASE("reduce of definite forms") {
    CHECK(reduce(qf(12, -1, 1)) == qf(1, 1, 12));
    CHECK(reduce(qf(1, 1, 12)) == qf(1, 1, 12)); // idempotent
    CHECK(reduce(qf(6, 1, 2)).disc() == -47);
    CHECK(reduce(qf(6, 1, 2)) == qf(2, -1, 6));
}

TEST_CASE("reduce of indefinite forms lands in the reduced window") {
    const QuadForm r = reduce(qf(1, 1, -1));
    CHECK(r.disc() == 5);
    CHECK(r.b > 0);
    CHECK(r.b * r.b < 5);
    CHECK(is_equivalent(r, qf(1, 1, -1)));
}

TEST_CASE("compose obeys the example table for D = -47") {
    const auto group = class_group(mpz_class(-47));
    const QuadForm e = group.principal();
    for (const auto& g : group.classes)
        CHECK(is_equivalent(compose(e, g), g));
    CHECK(is_equivalent(compose(qf(2, 1, 6), qf(2, -1, 6)), qf(1, 1, 12)));
    const QuadForm sq = compose(qf(2, 1, 6), qf(2, 1, 6));
    CHECK(sq == qf(3, -1, 4));
    CHECK_FALSE(is_equivalent(sq, qf(1, 1, 12)));
}

TEST_CASE("compose rejects mixed discriminants") {
    CHECK_THROWS_AS(compose(qf(1, 1, 12), qf(1, 1, 6)),
                    IncompatibleDiscriminants);
}

TEST_CASE("class_group(-47) matches the pinned table") {
    const auto group = class_group(mpz_class(-47));
    CHECK(group.h() == 5);
    REQUIRE(group.classes.size() == 5);
    CHECK(group.classes[0] == qf(1, 1, 12));
    CHECK(group.classes[1] == qf(2, 1, 6));
    CHECK(group.classes[2] == qf(2, -1, 6));
    CHECK(group.classes[3] == qf(3, 1, 4));
    CHECK(group.classes[4] == qf(3, -1, 4));
    CHECK(group.identity_index == 0);
}

TEST_CASE("class_group(-23) and class_group(5)") {
    const auto g23 = class_group(mpz_class(-23));
    CHECK(g23.h() == 3);
    CHECK(g23.classes[0] == qf(1, 1, 6));
    CHECK(g23.classes[1] == qf(2, 1, 3));
    CHECK(g23.classes[2] == qf(2, -1, 3));

    CHECK(class_group(mpz_class(5)).h() == 1);
    CHECK(class_group(mpz_class(13)).h() == 1);
}

TEST_CASE("indefinite class numbers match the SL2-orbit oracle") {
    // Values cross-checked by breadth-first search over the S/T
    // transformation graph, independent of the rho-cycle machinery.
    CHECK(class_group(mpz_class(229)).h() == 3);
    CHECK(class_group(mpz_class(257)).h() == 3);
    CHECK(class_group(mpz_class(401)).h() == 5);
    CHECK(class_group(mpz_class(577)).h() == 7);
    // Lagrange: every class to the h-th power is principal.
    for (long d : {229L, 401L}) {
        const auto group = class_group(mpz_class(d));
        for (const auto& g : group.classes)
            CHECK(is_equivalent(pow_class(g, group.h()), group.principal()));
        CHECK(lth_power_classes(group, group.h()).size() == 1);
    }
}

TEST_CASE("definite class numbers match the naive recount") {
    for (long p : {7L, 11L, 19L, 23L, 31L, 43L, 47L, 59L, 67L, 71L, 79L, 83L}) {
        CAPTURE(p);
        const auto group = class_group(mpz_class(-p));
        CHECK(group.h() == count_reduced_forms_naive(-p));
    }
    // Textbook values as an extra anchor.
    CHECK(class_group(mpz_class(-7)).h() == 1);
    CHECK(class_group(mpz_class(-31)).h() == 3);
    CHECK(class_group(mpz_class(-71)).h() == 7);
    CHECK(class_group(mpz_class(-163)).h() == 1);
    // Larger values pinned from the Dirichlet class number formula
    // h = |sum a*(a/p)| / p.
    CHECK(class_group(mpz_class(-10007)).h() == 77);
}

TEST_CASE("class_group validates its discriminant") {
    CHECK_THROWS_AS(class_group(mpz_class(-21)), InvalidArgument); // composite
    CHECK_THROWS_AS(class_group(mpz_class(-4)), InvalidArgument);  // even
    CHECK_THROWS_AS(class_group(mpz_class(-47), mpz_class(10)), BoundExceeded);
}

TEST_CASE("is_equivalent") {
    CHECK(is_equivalent(qf(2, 1, 6), qf(2, 1, 6)));
    CHECK_FALSE(is_equivalent(qf(2, 1, 6), qf(2, -1, 6)));
    CHECK(is_equivalent(qf(12, -1, 1), qf(1, 1, 12)));
    CHECK_THROWS_AS(is_equivalent(qf(1, 1, 12), qf(1, 1, 6)),
                    IncompatibleDiscriminants);
}

TEST_CASE("reduce preserves the class under unimodular transforms") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coin(0, 1);
    for (long p : {23L, 47L, 71L, 5L, 13L, 29L}) {
        const mpz_class d = discriminant(p);
        const auto group = class_group(d);
        for (const auto& f : group.classes) {
            QuadForm g = f;
            for (int step = 0; step < 6; ++step) {
                if (coin(rng)) {
                    g = QuadForm{g.a, g.b + 2 * g.a, g.a + g.b + g.c};
                } else {
                    g = QuadForm{g.c, -g.b, g.a};
                }
            }
            REQUIRE(g.disc() == d);
            CHECK(is_equivalent(g, f));
        }
    }
}

TEST_CASE("prime_form pinned values and errors") {
    CHECK(prime_form(mpz_class(-47), 3) == qf(3, 1, 4));
    CHECK_THROWS_AS(prime_form(mpz_class(-47), 2), InvalidArgument);
    CHECK_THROWS_AS(prime_form(mpz_class(-7), 3), NotSplit);
    CHECK_THROWS_AS(prime_form(mpz_class(-47), 47), Ramified);
    CHECK_THROWS_AS(prime_form(mpz_class(-47), 15), InvalidArgument);
}

TEST_CASE("prime form composed with its conjugate is principal") {
    for (long p : {47L, 23L, 5L, 13L}) {
        const mpz_class d = discriminant(p);
        const auto group = class_group(d);
        for (long q = 3; q <= 30; q += 2) {
            if (!ntheory::is_prime(mpz_class(q))) continue;
            if (mpz_divisible_p(d.get_mpz_t(), mpz_class(q).get_mpz_t()))
                continue;
            if (ntheory::jacobi(d, mpz_class(q)) != 1) continue;
            const QuadForm pf = prime_form(d, q);
            CHECK(is_equivalent(compose(pf, conjugate(pf)), group.principal()));
        }
    }
}

TEST_CASE("is_lth_power_class on the D = -47 group") {
    const auto group = class_group(mpz_class(-47));
    const QuadForm pf = prime_form(mpz_class(-47), 3);
    CHECK_FALSE(is_lth_power_class(group, pf, 5));
    for (long l : {2L, 3L, 4L, 5L, 7L})
        CHECK(is_lth_power_class(group, qf(1, 1, 12), l));
    // h = 5 is odd, squaring is a bijection.
    CHECK(is_lth_power_class(group, pf, 2));
    // Every class to the 5th power is principal in a group of order 5.
    for (const auto& g : group.classes)
        CHECK(is_equivalent(pow_class(g, 5), group.principal()));
}

TEST_CASE("negative Pell witnesses and the prime = 1 mod 4 theorem") {
    CHECK(negative_pell_solvable(5));   // 2^2 - 5 = -1
    CHECK(negative_pell_solvable(13));  // 18^2 - 13*25 = -1
    CHECK(negative_pell_solvable(17));  // 4^2 - 17 = -1
    CHECK(mpz_class(18) * 18 - 13 * 25 == -1);
    CHECK_THROWS_AS(negative_pell_solvable(7), InvalidArgument);
    CHECK_THROWS_AS(negative_pell_solvable(21), InvalidArgument);
    for (long p = 5; p <= 300; ++p)
        if (p % 4 == 1 && ntheory::is_prime(mpz_class(p)))
            CHECK(negative_pell_solvable(p));
}

TEST_CASE("indefinite cycles consist of reduced forms") {
    for (long p : {5L, 13L, 29L, 53L, 61L}) {
        const mpz_class d = discriminant(p);
        const auto group = class_group(d);
        for (const auto& f : group.classes) {
            const auto cycle = rho_cycle(f);
            CHECK(!cycle.empty());
            for (const auto& g : cycle) CHECK(g.disc() == d);
            CHECK(canonical(f) ==
                  *std::min_element(cycle.begin(), cycle.end(), lex_less));
        }
    }
}

} // TEST_SUITE
