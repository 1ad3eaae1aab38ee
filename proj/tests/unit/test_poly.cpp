#include <doctest.h>

#include <algorithm>

#include "fermat/errors.hpp"
#include "fermat/fp_poly.hpp"
#include "fermat/poly.hpp"
#include "test_support.hpp"

using namespace fermat;

namespace {

// ---- independent resultant oracle: Euclid over F_p, then CRT ----

using Vec = std::vector<std::uint64_t>; // low to high, trimmed

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    for (a %= p; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1)
            r = mulmod(r, a, p);
    return r;
}

void trim(Vec& v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

Vec reduce(const Polynomial& f, std::uint64_t p)
{
    Vec v;
    for (const Integer& c : f.coeffs()) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
        v.push_back(r.get_ui());
    }
    trim(v);
    return v;
}

Vec rem(Vec a, const Vec& b, std::uint64_t p)
{
    const std::uint64_t inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        const std::uint64_t q = mulmod(a.back(), inv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = (a[i + shift] + p - mulmod(q, b[i], p)) % p;
        trim(a);
    }
    return a;
}

std::uint64_t res_mod(Vec a, Vec b, std::uint64_t p)
{
    std::uint64_t acc = 1;
    for (;;) {
        const std::uint64_t m = a.size() - 1, n = b.size() - 1;
        if (n == 0)
            return mulmod(acc, powmod(b[0], m, p), p);
        if (m == 0)
            return mulmod(acc, powmod(a[0], n, p), p);
        Vec r = rem(a, b, p);
        if (r.empty())
            return 0;
        const std::uint64_t k = r.size() - 1;
        if ((m * n) % 2 == 1)
            acc = (p - acc) % p;
        acc = mulmod(acc, powmod(b.back(), m - k, p), p);
        a = std::move(b);
        b = std::move(r);
    }
}

Integer resultant_oracle(const Polynomial& f, const Polynomial& g)
{
    // Hadamard bound on the Sylvester determinant.
    Integer bound = 1;
    auto row_norm = [](const Polynomial& h) {
        Integer s = 0;
        for (const Integer& c : h.coeffs())
            s += c * c;
        return s;
    };
    Integer h2 = 1;
    for (int i = 0; i < g.degree(); ++i)
        h2 *= row_norm(f);
    for (int i = 0; i < f.degree(); ++i)
        h2 *= row_norm(g);
    mpz_sqrt(bound.get_mpz_t(), h2.get_mpz_t());
    bound = 2 * (bound + 1);

    Integer modulus = 1, value = 0;
    for (std::uint64_t p = 1000003; modulus <= bound; p = next_prime(p)) {
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p) ||
            mpz_divisible_ui_p(g.leading().get_mpz_t(), p))
            continue;
        const std::uint64_t r = res_mod(reduce(f, p), reduce(g, p), p);
        // CRT: value = value + modulus * t with value + modulus*t = r (mod p).
        Integer vm;
        mpz_fdiv_r_ui(vm.get_mpz_t(), value.get_mpz_t(), p);
        Integer mm;
        mpz_fdiv_r_ui(mm.get_mpz_t(), modulus.get_mpz_t(), p);
        const std::uint64_t t =
            mulmod((r + p - vm.get_ui()) % p, powmod(mm.get_ui(), p - 2, p), p);
        value += modulus * Integer(static_cast<unsigned long>(t));
        modulus *= static_cast<unsigned long>(p);
    }
    if (value > modulus / 2)
        value -= modulus;
    return value;
}

} // namespace

TEST_CASE("polynomial basics")
{
    const Polynomial f{2, 0, -4, 0, 1};
    CHECK(f.degree() == 4);
    CHECK(f.is_monic());
    CHECK(f.str() == "x^4 - 4*x^2 + 2");
    CHECK(f.coeff_str() == "2,0,-4,0,1");
    CHECK(Polynomial::parse_coefficients("2;0;-4;0;1", ';') == f);
    CHECK(Polynomial::parse_coefficients("1,2,0,0") == Polynomial{1, 2});
    CHECK_THROWS_AS(Polynomial::parse_coefficients("1,,2"), DataError);
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial{0, 0}.is_zero());
    CHECK(f.eval(2) == 2);
    CHECK(f.derivative() == Polynomial{0, -8, 0, 4});
    CHECK((Polynomial{-1, 1} * Polynomial{1, 1}) == Polynomial{-1, 0, 1});
    CHECK(Polynomial{6, 4}.content() == 2);
    CHECK(Polynomial{1, 1}.pow(3) == Polynomial{1, 3, 3, 1});
    CHECK(Polynomial{-9, 1}.str() == "x - 9");
    CHECK(Polynomial{0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}.str() == "x^12 - x");
}

TEST_CASE("resultant examples")
{
    const Polynomial x4m9{-9, 0, 0, 0, 1};
    CHECK(resultant(x4m9, Polynomial{9, 0, 1}) == 5184);
    CHECK(resultant(x4m9, Polynomial{9, -1, 1}) == 5499);
    const Polynomial p{3, -1, 2};
    CHECK(resultant(p, p) == 0);
    CHECK(resultant(Polynomial{5}, Polynomial{1, 2, 3}) == 25);
    CHECK_THROWS_AS(resultant(Polynomial(), p), DomainError);
    // Res(x - a, g) = g(a).
    const Polynomial g{7, -3, 0, 2};
    CHECK(resultant(Polynomial{-4, 1}, g) == g.eval(4));
}

TEST_CASE("Sylvester resultant agrees with the modular oracle on 200 random pairs")
{
    test::Gen gen;
    for (int i = 0; i < 200; ++i) {
        const Polynomial f = gen.polynomial(static_cast<int>(gen.integer(1, 6)), 20);
        const Polynomial g = gen.polynomial(static_cast<int>(gen.integer(1, 6)), 20);
        INFO("f = " << f.str() << ", g = " << g.str());
        REQUIRE(resultant(f, g) == resultant_oracle(f, g));
    }
}

TEST_CASE("resultant symmetry and multiplicativity")
{
    test::Gen gen(7);
    for (int i = 0; i < 50; ++i) {
        const Polynomial f = gen.polynomial(static_cast<int>(gen.integer(1, 4)), 9);
        const Polynomial g = gen.polynomial(static_cast<int>(gen.integer(1, 4)), 9);
        const Polynomial h = gen.polynomial(static_cast<int>(gen.integer(1, 3)), 9);
        const int sign = (f.degree() * g.degree()) % 2 ? -1 : 1;
        REQUIRE(resultant(f, g) == sign * resultant(g, f));
        REQUIRE(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    }
}

TEST_CASE("determinant")
{
    CHECK(determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(determinant({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}) == 24);
    CHECK(determinant({{1, 2}, {2, 4}}) == 0);
    CHECK(determinant({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
}

TEST_CASE("discriminant")
{
    CHECK(discriminant(Polynomial{1, 1, 1}) == -3);
    CHECK(discriminant(Polynomial{-2, 0, 0, 1}) == -108);
    CHECK(discriminant(Polynomial{2, 0, -4, 0, 1}) == 2048);
    CHECK(discriminant(Polynomial{1, 2, 1}) == 0);
}

TEST_CASE("exact division and small factors")
{
    const Polynomial a{1, 1}, b{-2, 0, 1};
    CHECK(divide_exact(a * b, a) == b);
    CHECK_FALSE(divide_exact(b, Polynomial{0, 2}).has_value());
    CHECK_FALSE(divide_exact(Polynomial{1, 1}, Polynomial{0, 2}).has_value());

    CHECK(is_irreducible_small(Polynomial{-2, 0, 1}) == true);
    CHECK(is_irreducible_small(Polynomial{-1, 0, 1}) == false);
    CHECK(is_irreducible_small(Polynomial{1, 0, 0, 0, 1}) == true);
    CHECK(is_irreducible_small(Polynomial{4, 0, 0, 0, 1}) == false); // (x^2+2x+2)(x^2-2x+2)
    CHECK_FALSE(is_irreducible_small(Polynomial{1, 0, 0, 0, 0, 1}).has_value());

    test::Gen gen(11);
    for (int i = 0; i < 40; ++i) {
        const Polynomial f = gen.monic(2, 9), g = gen.monic(2, 9);
        const auto h = find_small_factor(f * g, 2);
        REQUIRE(h.has_value());
        REQUIRE(divide_exact(f * g, *h).has_value());
    }
}

TEST_CASE("polynomials over F_p")
{
    const std::uint64_t p = 7;
    const FpPoly f = FpPoly::reduce(Polynomial{-1, 0, 0, 0, 0, 0, 0, 1}, p); // x^7 - 1 = (x-1)^7
    const auto sq = squarefree_decomposition(f);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].second == 7);
    CHECK(sq[0].first == FpPoly(p, {6, 1}));

    // x^4 + 1 over F_3 splits into two quadratics.
    CHECK(factor_shape(FpPoly::reduce(Polynomial{1, 0, 0, 0, 1}, 3)) ==
          std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 1}});
    // x^2 + 1 over F_3 is irreducible.
    CHECK(factor_shape(FpPoly::reduce(Polynomial{1, 0, 1}, 3)) ==
          std::vector<std::pair<unsigned, unsigned>>{{2, 1}});
    // x^3 (x+1)^2 over F_2.
    CHECK(factor_shape(FpPoly::reduce(Polynomial{0, 0, 0, 1, 2, 1}, 2)) ==
          std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}});
    CHECK(gcd(FpPoly::reduce(Polynomial{-1, 0, 1}, 5), FpPoly::reduce(Polynomial{1, 1}, 5)) ==
          FpPoly(5, {1, 1}));
}

TEST_CASE("factor shapes agree with brute-force root and irreducible counts")
{
    test::Gen gen(13);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
        for (int i = 0; i < 60; ++i) {
            const Polynomial f = gen.monic(static_cast<int>(gen.integer(1, 7)), 20);
            const FpPoly fp = FpPoly::reduce(f, p);
            const auto shape = factor_shape(fp);
            unsigned total = 0, linear_distinct = 0;
            for (const auto& [deg, mult] : shape) {
                total += deg * mult;
                linear_distinct += deg == 1;
            }
            REQUIRE(total == static_cast<unsigned>(f.degree()));
            unsigned roots = 0;
            for (std::uint64_t r = 0; r < p; ++r) {
                Integer v = f.eval(Integer(static_cast<unsigned long>(r)));
                roots += mpz_divisible_ui_p(v.get_mpz_t(), p) != 0;
            }
            REQUIRE(roots == linear_distinct);
        }
    }
}
