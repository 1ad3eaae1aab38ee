#include <doctest.h>

#include "fermat/arith.hpp"
#include "fermat/errors.hpp"
#include "test_support.hpp"

using namespace fermat;

TEST_CASE("primality agrees with a sieve below 100000")
{
    const auto primes = primes_up_to(100000);
    std::vector<bool> sieve(100001, false);
    for (auto p : primes)
        sieve[p] = true;
    for (std::uint64_t n = 0; n <= 100000; ++n)
        REQUIRE(is_prime(n) == sieve[n]);
    CHECK(primes.size() == 9592);
}

TEST_CASE("primality of large known values")
{
    CHECK(is_prime(std::uint64_t{18446744073709551557ull})); // largest 64-bit prime
    CHECK_FALSE(is_prime(std::uint64_t{3215031751ull}));    // strong pseudoprime to 2,3,5,7
    CHECK(is_prime(Integer("170141183460469231731687303715884105727")));
    CHECK_FALSE(is_prime(Integer("170141183460469231731687303715884105729")));
    CHECK(next_prime(44482) == 44483);
}

TEST_CASE("factorization multiplies back")
{
    test::Gen g;
    for (int i = 0; i < 300; ++i) {
        Integer n = Integer(g.integer(1, 1000000)) * Integer(g.integer(1, 1000000)) *
                    Integer(g.integer(1, 1000000));
        Integer prod = 1;
        for (const auto& [p, e] : factorize(n)) {
            REQUIRE(is_prime(p));
            for (unsigned k = 0; k < e; ++k)
                prod *= p;
        }
        REQUIRE(prod == n);
    }
}

TEST_CASE("factorization beyond trial division")
{
    const Integer p("1000000007"), q("998244353");
    const auto f = factorize(p * q * 44483);
    CHECK(f.size() == 3);
    CHECK(f.at(p) == 1);
    CHECK(f.at(q) == 1);
    CHECK(max_prime(f) == p);
    CHECK(format_factorization(factorize(5184)) == "2^6 * 3^4");
    CHECK(format_factorization(factorize(1)) == "1");
    CHECK(factorize(0).empty());
}

TEST_CASE("kronecker symbol")
{
    CHECK(kronecker(-4, 3) == -1);
    CHECK(kronecker(-4, 5) == 1);
    CHECK(kronecker(-7, 2) == 1);
    CHECK(kronecker(-19, 2) == -1);
    CHECK(kronecker(-8, 3) == 1);
    CHECK(kronecker(-44, 3) == 1);
}

TEST_CASE("integer and rational parsing")
{
    CHECK(parse_integer("-17") == -17);
    CHECK(parse_integer("+5") == 5);
    CHECK_THROWS_AS(parse_integer("1.5"), DataError);
    CHECK_THROWS_AS(parse_integer(""), DataError);
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), DataError);
    CHECK_THROWS_AS(parse_rational("a/2"), DataError);
}

TEST_CASE("integer square root")
{
    for (std::uint64_t n = 0; n < 5000; ++n) {
        const std::uint64_t r = isqrt(n);
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
    CHECK(isqrt(std::uint64_t{1} << 62) == std::uint64_t{1} << 31);
}
