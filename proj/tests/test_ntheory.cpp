#include "doctest.h"

#include "phidescent/ntheory.hpp"

using namespace phidescent;
using namespace phidescent::ntheory;

namespace {

// Trial-division oracle, independent of the probable-prime battery.
bool is_prime_naive(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Exhaustive square root search mod q.
std::optional<long> sqrt_mod_naive(long d, long q) {
    const long d0 = ((d % q) + q) % q;
    for (long r = 0; r <= q / 2; ++r)
        if (r * r % q == d0) return r;
    return std::nullopt;
}

} // namespace

TEST_SUITE("ntheory") {

TEST_CASE("is_prime on pinned values") {
    CHECK(is_prime(mpz_class(137)));
    CHECK_FALSE(is_prime(mpz_class(1)));
    CHECK_FALSE(is_prime(mpz_class(7381))); // 61 * 121
    CHECK(is_prime(mpz_class(2)));
    CHECK_FALSE(is_prime(mpz_class(0)));
    CHECK_FALSE(is_prime(mpz_class(-7)));
}

TEST_CASE("is_prime agrees with trial division up to 20000") {
    for (long n = 0; n <= 20000; ++n)
        CHECK(is_prime(mpz_class(n)) == is_prime_naive(n));
}

TEST_CASE("jacobi pinned values") {
    CHECK(jacobi(mpz_class(13), mpz_class(137)) == -1);
    CHECK(jacobi(mpz_class(1), mpz_class(3)) == 1);
    CHECK(jacobi(mpz_class(2), mpz_class(15)) == 1);
    CHECK(jacobi(mpz_class(33), mpz_class(9999)) == 0);
    CHECK(jacobi(mpz_class(5), mpz_class(1)) == 1); // empty product
}

TEST_CASE("jacobi rejects bad moduli") {
    CHECK_THROWS_AS(jacobi(mpz_class(3), mpz_class(10)), InvalidArgument);
    CHECK_THROWS_AS(jacobi(mpz_class(3), mpz_class(0)), InvalidArgument);
    CHECK_THROWS_AS(jacobi(mpz_class(3), mpz_class(-7)), InvalidArgument);
}

TEST_CASE("jacobi is multiplicative in the numerator") {
    for (long n = 1; n <= 99; n += 2)
        for (long a = -50; a <= 50; ++a)
            for (long b = -50; b <= 50; ++b) {
                const int lhs = jacobi(mpz_class(a) * b, mpz_class(n));
                const int rhs =
                    jacobi(mpz_class(a), mpz_class(n)) * jacobi(mpz_class(b), mpz_class(n));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("jacobi matches the Euler criterion at odd primes") {
    for (long q = 3; q <= 97; ++q) {
        if (!is_prime_naive(q)) continue;
        for (long a = -2 * q; a <= 2 * q; ++a) {
            mpz_class e;
            const mpz_class base(a), mod(q), exp((q - 1) / 2);
            mpz_powm(e.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
                     mod.get_mpz_t());
            const int sym = jacobi(base, mod);
            const mpz_class expected = sym == -1 ? mpz_class(q - 1) : mpz_class(sym);
            CHECK(e == expected);
        }
    }
}

TEST_CASE("sqrt_mod_prime pinned values") {
    CHECK(*sqrt_mod_prime(mpz_class(-47), mpz_class(3)) == 1);
    CHECK(*sqrt_mod_prime(mpz_class(0), mpz_class(7)) == 0);
    CHECK_FALSE(sqrt_mod_prime(mpz_class(5), mpz_class(7)).has_value());
}

TEST_CASE("sqrt_mod_prime rejects composite moduli") {
    CHECK_THROWS_AS(sqrt_mod_prime(mpz_class(4), mpz_class(15)), InvalidArgument);
    CHECK_THROWS_AS(sqrt_mod_prime(mpz_class(4), mpz_class(2)), InvalidArgument);
}

TEST_CASE("sqrt_mod_prime agrees with exhaustive search") {
    for (long q : {3L, 5L, 7L, 11L, 13L, 17L, 41L, 73L, 97L, 113L}) {
        for (long d = -q; d < q * q; d += 3) {
            const auto got = sqrt_mod_prime(mpz_class(d), mpz_class(q));
            const auto want = sqrt_mod_naive(d, q);
            REQUIRE(got.has_value() == want.has_value());
            if (got) CHECK(*got == *want);
        }
    }
}

TEST_CASE("is_perfect_lth_power pinned values") {
    CHECK(*is_perfect_lth_power(mpz_class(121), 2) == 11);
    CHECK(*is_perfect_lth_power(mpz_class(343), 3) == 7);
    CHECK(*is_perfect_lth_power(mpz_class(400), 2) == 20);
    CHECK(*is_perfect_lth_power(mpz_class(12345), 1) == 12345);
    CHECK_FALSE(is_perfect_lth_power(mpz_class(122), 2).has_value());
    CHECK_FALSE(is_perfect_lth_power(mpz_class(7381), 3).has_value());
}

TEST_CASE("is_perfect_lth_power round-trips") {
    for (long y = 1; y <= 30; ++y)
        for (long l = 1; l <= 7; ++l) {
            mpz_class n;
            mpz_pow_ui(n.get_mpz_t(), mpz_class(y).get_mpz_t(),
                       static_cast<unsigned long>(l));
            CHECK(*is_perfect_lth_power(n, l) == y);
        }
}

TEST_CASE("eval_phi pinned values") {
    CHECK(eval_phi(5, mpz_class(3)) == 121);
    CHECK(eval_phi(5, mpz_class(9)) == 7381); // 6561+729+81+9+1
    CHECK(eval_phi(5, mpz_class(1)) == 5);
    CHECK(eval_phi(31, mpz_class(1)) == 31);
    CHECK(eval_phi(5, mpz_class(0)) == 1);
    CHECK(eval_phi(5, mpz_class(-1)) == 1);
    CHECK(eval_phi(5, mpz_class(-2)) == 11); // 16-8+4-2+1
}

TEST_CASE("eval_phi = 1 mod x and odd") {
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
        for (long x = -50; x <= 50; ++x) {
            const mpz_class phi = eval_phi(p, mpz_class(x));
            CHECK(phi >= 1);
            CHECK(mpz_odd_p(phi.get_mpz_t()) != 0);
            if (x != 0) CHECK(mod_floor(phi - 1, mpz_class(x < 0 ? -x : x)) == 0);
        }
    }
}

TEST_CASE("eval_phi congruence at a = 1 mod p") {
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L}) {
        const mpz_class p2 = mpz_class(p) * p;
        for (long lambda = -10; lambda <= 10; ++lambda) {
            const mpz_class a = 1 + mpz_class(lambda) * p;
            CHECK(mod_floor(eval_phi(p, a) - p, p2) == 0);
        }
    }
}

TEST_CASE("Triple validation") {
    const Triple t(137, 13, 2);
    CHECK(t.delta() == 1);
    CHECK(t.disc() == 137);
    CHECK(Triple(7, 3, 2).delta() == -1);
    CHECK(Triple(7, 3, 2).disc() == -7);

    CHECK_THROWS_AS(Triple(3, 5, 2), InvalidTriple);  // p = 3 out of scope
    CHECK_THROWS_AS(Triple(9, 3, 2), InvalidTriple);  // composite p
    CHECK_THROWS_AS(Triple(5, 2, 2), InvalidTriple);  // c = 2
    CHECK_THROWS_AS(Triple(5, 9, 2), InvalidTriple);  // composite c
    CHECK_THROWS_AS(Triple(5, 5, 2), InvalidTriple);  // p = c
    CHECK_THROWS_AS(Triple(5, 3, 1), InvalidTriple);  // l < 2
}

} // TEST_SUITE
