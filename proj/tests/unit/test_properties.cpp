// Property tests over seeded random inputs.

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fermat/bounds.hpp"
#include "fermat/eliminate.hpp"
#include "fermat/frey.hpp"
#include "fermat/screen.hpp"
#include "test_support.hpp"

using namespace fermat;

TEST_CASE("norm is multiplicative and valuations add")
{
    test::Gen g;
    for (const QuadraticField& f : QuadraticField::all_supported()) {
        const auto primes = primes_up_to_norm(f, 30);
        for (int i = 0; i < 1000; ++i) {
            const RingElement z = g.nonzero_element(f, 1000), w = g.nonzero_element(f, 1000);
            REQUIRE(norm(z * w) == norm(z) * norm(w));
            REQUIRE(val_lambda(z * w) == val_lambda(z) + val_lambda(w));
            if (i % 10 == 0)
                for (const PrimeIdeal& q : primes)
                    REQUIRE(valuation(z * w, q) == valuation(z, q) + valuation(w, q));
        }
    }
}

TEST_CASE("unit groups of O_K / 3^m")
{
    for (const QuadraticField& f : QuadraticField::all_supported()) {
        for (int m = 1; m <= 4; ++m) {
            const ResidueRing r(f, m);
            std::uint64_t expected = 8;
            for (int i = 1; i < m; ++i)
                expected *= 9;
            const auto us = r.units();
            CHECK(us.size() == expected);
            if (m <= 3) {
                // Brute force: a class is a unit iff some class inverts it.
                const auto all = r.elements();
                std::uint64_t invertible = 0;
                for (Residue a : all)
                    invertible += std::any_of(all.begin(), all.end(),
                                              [&](Residue b) { return r.mul(a, b) == r.one(); });
                CHECK(invertible == expected);
            }
        }
    }
}

TEST_CASE("c4^3 - c6^2 = 1728 delta on random triples")
{
    test::Gen g;
    const unsigned long exps[] = {3, 5, 7, 11, 13};
    for (const QuadraticField& f : QuadraticField::all_supported()) {
        for (int i = 0; i < 500; ++i) {
            const RingElement a = g.element(f, 50), b = g.element(f, 50), c = g.element(f, 50);
            const unsigned long p = exps[i % 5];
            const FreyInvariants inv = frey_invariants(a, b, c, p);
            REQUIRE(inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6 ==
                    RingElement::from_integer(f, 1728) * inv.delta);
        }
    }
}

TEST_CASE("Hasse trace sets match interval filtering")
{
    for (std::uint64_t n = 2; n <= 100; ++n) {
        bool prime_power = false;
        for (std::uint64_t p = 2; p <= n && !prime_power; ++p) {
            std::uint64_t v = p;
            while (v < n)
                v *= p;
            prime_power = v == n && is_prime(p);
        }
        if (!prime_power)
            continue;
        std::vector<long> brute;
        for (long a = -25; a <= 25; ++a)
            if (static_cast<double>(a) * a <= 4.0 * n && (static_cast<long>(n) + 1 - a) % 3 == 0)
                brute.push_back(a);
        REQUIRE(hasse_trace_set(n) == brute);
    }
    for (const QuadraticField& f : QuadraticField::all_supported())
        for (const PrimeIdeal& q : elimination_primes(f, 101))
            REQUIRE(set_aq(q) == hasse_trace_set(q.norm()));
}

TEST_CASE("C_f over a prime set divides C_f over any subset")
{
    test::Gen g;
    for (const QuadraticField& f : QuadraticField::all_supported()) {
        const auto primes = elimination_primes(f, 50);
        for (int trial = 0; trial < 20; ++trial) {
            EigenformRecord r{f, 3, "random", Polynomial::x(), {}};
            for (const PrimeIdeal& q : primes) {
                const long bound = static_cast<long>(2 * std::sqrt(static_cast<double>(q.norm())));
                r.eigenvalues.emplace_back(q, QfElement::from_integer(Polynomial::x(), g.integer(-bound, bound)));
            }
            const Integer full = c_f(r, primes);
            std::vector<PrimeIdeal> subset;
            for (const PrimeIdeal& q : primes)
                if (g.integer(0, 1))
                    subset.push_back(q);
            if (subset.empty())
                subset.push_back(primes.front());
            const Integer part = c_f(r, subset);
            REQUIRE(mpz_divisible_p(part.get_mpz_t(), full.get_mpz_t()) != 0);

            // Raising B_K never creates survivors.
            if (full != 0) {
                const auto low = verdict(r, Integer(47), primes);
                const auto high = verdict(r, Integer(44483), primes);
                REQUIRE(high.survivors.size() <= low.survivors.size());
            }
        }
    }
}

TEST_CASE("screening is independent of record order")
{
    std::istringstream in(test::slurp(test::data_path("fields/sample_corpus.csv")));
    std::vector<FieldRecord> recs = parse_field_records(in).records;
    const ScreeningResult base3 = screen_pp3(recs, 20);
    const ScreeningResult base2 = screen_pp2(recs);
    auto same = [](const ScreeningResult& a, const ScreeningResult& b) {
        if (a.verdicts.size() != b.verdicts.size() || a.summary.size() != b.summary.size())
            return false;
        for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
            const auto &x = a.verdicts[i], &y = b.verdicts[i];
            if (x.label != y.label || x.zeta3.str() != y.zeta3.str() || x.passes_pp3 != y.passes_pp3 ||
                x.passes_pp2 != y.passes_pp2 || x.primes_above_3 != y.primes_above_3)
                return false;
        }
        for (std::size_t i = 0; i < a.summary.size(); ++i) {
            const auto &x = a.summary[i], &y = b.summary[i];
            if (x.degree != y.degree || x.records != y.records || x.f != y.f || x.g != y.g ||
                x.k != y.k || x.undecided != y.undecided)
                return false;
        }
        return true;
    };
    test::Gen g;
    for (int i = 0; i < 5; ++i) {
        std::shuffle(recs.begin(), recs.end(), g.engine());
        REQUIRE(same(screen_pp3(recs, 20), base3));
        REQUIRE(same(screen_pp2(recs), base2));
    }
}

TEST_CASE("certified Dedekind shapes account for the full degree")
{
    test::Gen g;
    for (int i = 0; i < 300; ++i) {
        const Polynomial f = g.monic(static_cast<int>(g.integer(2, 8)), 20);
        for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
            if (discriminant(f) == 0)
                continue;
            const DedekindResult d = dedekind_split(f, p);
            if (!d.certified)
                continue;
            unsigned total = 0;
            for (const PrimeShape& s : d.shapes)
                total += s.residue_degree * s.ramification;
            REQUIRE(total == static_cast<unsigned>(f.degree()));
        }
    }
}

TEST_CASE("odd degree is never YesProbable")
{
    test::Gen g;
    for (int i = 0; i < 200; ++i) {
        const int deg = 2 * static_cast<int>(g.integer(1, 4)) + 1;
        const Polynomial f = g.monic(deg, 30);
        REQUIRE(contains_zeta3(f, 10).kind != Zeta3Verdict::Kind::YesProbable);
    }
}

TEST_CASE("tower polynomials are Eisenstein at 2")
{
    for (int n = 1; n <= 10; ++n) {
        const Polynomial f = tower_poly(n);
        REQUIRE(f.degree() == (1 << n));
        REQUIRE(f.is_monic());
        for (int i = 0; i < f.degree(); ++i)
            REQUIRE(mpz_even_p(f.coeff(i).get_mpz_t()));
        Integer c0 = f.coeff(0);
        REQUIRE(mpz_fdiv_ui(c0.get_mpz_t(), 4) == 2);
        const DedekindResult d = dedekind_split(f, 2);
        REQUIRE(d.certified);
        REQUIRE(d.shapes == std::vector<PrimeShape>{{1, static_cast<unsigned>(f.degree())}});
    }
}
