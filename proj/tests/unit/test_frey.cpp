#include <doctest.h>

#include "fermat/errors.hpp"
#include "fermat/frey.hpp"
#include "test_support.hpp"

using namespace fermat;

namespace {

RingElement el(const QuadraticField& f, long x, long y) { return {f, Integer(x), Integer(y)}; }
RingElement k(const QuadraticField& f, long v) { return RingElement::from_integer(f, v); }

} // namespace

TEST_CASE("invariants of the trivial solution (1, -1, 0)")
{
    const auto f = QuadraticField::supported(1);
    const FreyInvariants inv = frey_invariants(k(f, 1), k(f, -1), k(f, 0), 5);
    CHECK(inv.fermat_relation);
    CHECK_FALSE(inv.degenerate);
    CHECK(inv.c4 == k(f, 0));
    CHECK(inv.c6 == k(f, -216));
    CHECK(inv.delta == k(f, -27));
    CHECK(inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6 == k(f, -46656));
    CHECK(inv.a1 == k(f, 0));
    CHECK(inv.a3 == k(f, -1));
}

TEST_CASE("degenerate and invalid inputs")
{
    const auto f = QuadraticField::supported(7);
    const FreyInvariants inv = frey_invariants(k(f, 1), k(f, 0), k(f, 1), 7);
    CHECK(inv.degenerate);
    CHECK(inv.delta.is_zero());
    CHECK_THROWS_AS(frey_invariants(k(f, 1), k(f, 1), k(f, 1), 4), DomainError);
    CHECK_THROWS_AS(frey_invariants(k(f, 1), k(f, 1), k(f, 1), 2), DomainError);
    CHECK_THROWS_AS(
        frey_invariants(k(f, 1), RingElement::one(QuadraticField::supported(1)), k(f, 1), 5),
        DomainError);
    CHECK_THROWS_AS(classify_away_from_lambda(inv, primes_up_to_norm(f, 2)[0]), DomainError);
}

TEST_CASE("j-invariant is kept as c4^3 / delta")
{
    const auto f = QuadraticField::supported(19);
    const FreyInvariants inv = frey_invariants(el(f, 2, 1), el(f, -1, 3), el(f, 4, 0), 3);
    CHECK(inv.j_num * inv.delta == inv.j_den * inv.c4 * inv.c4 * inv.c4);
    CHECK(inv.j_num - inv.c6 * inv.c6 == k(f, 1728) * inv.delta);
}

TEST_CASE("relation-satisfying families match the closed forms")
{
    test::Gen g;
    for (const QuadraticField& f : QuadraticField::all_supported()) {
        for (int i = 0; i < 10; ++i) {
            const RingElement t = g.nonzero_element(f, 6);
            const RingElement t3 = t * t * t;
            // 2^5 + 2^5 = 4^3 and 4^7 + 4^7 = 32^3, scaled by (t^3, t^3, t^p).
            const auto five = frey_invariants(k(f, 2) * t3, k(f, 2) * t3, k(f, 4) * t.pow(5), 5);
            const auto seven = frey_invariants(k(f, 4) * t3, k(f, 4) * t3, k(f, 32) * t.pow(7), 7);
            const auto trivial = frey_invariants(t, -t, RingElement::zero(f), 11);
            for (const auto* inv : {&five, &seven, &trivial}) {
                REQUIRE(inv->fermat_relation);
                REQUIRE_FALSE(inv->degenerate);
            }
            // Closed forms evaluated here, independently of the library's own check.
            const RingElement a = k(f, 2) * t3, b = a, c = k(f, 4) * t.pow(5);
            REQUIRE(five.c4 == k(f, 9) * c * (k(f, 9) * a.pow(5) + b.pow(5)));
            REQUIRE(five.delta == k(f, 27) * (a * b * b * b).pow(5));
        }
    }
}

TEST_CASE("reduction away from lambda")
{
    const auto f = QuadraticField::supported(1);
    const RingElement q5 = el(f, 2, 1);
    const PrimeIdeal q = PrimeIdeal::from_generator(q5);
    // b = 1 and c = 1 + q^5 make c^3 - b^p divisible by q exactly 5 times
    // while c4 stays a q-unit.
    const RingElement c = k(f, 1) + q5.pow(5);
    const FreyInvariants inv = frey_invariants(el(f, 2, 1), k(f, 1), c, 5);
    CHECK_FALSE(inv.fermat_relation);
    const LocalClassification lc = classify_away_from_lambda(inv, q);
    CHECK(lc.reduction == Reduction::Multiplicative);
    CHECK(lc.conductor_exponent == ExponentRange{1, 1});
    CHECK(lc.delta_valuation == Valuation(5));
    CHECK(lc.p_divides_delta_valuation == true);
    CHECK(lc.pot_mult == true);
    CHECK(lc.p_divides_inertia_image_order == false);

    // A prime that does not divide delta.
    const PrimeIdeal other = PrimeIdeal::from_generator(el(f, 1, 1));
    if (valuation(inv.delta, other) == Valuation(0)) {
        const auto good = classify_away_from_lambda(inv, other);
        CHECK(good.reduction == Reduction::Good);
        CHECK(good.conductor_exponent == ExponentRange{0, 0});
    }

    // q | delta and q | c4: a = b = c = q gives both divisible.
    const FreyInvariants bad = frey_invariants(q5, q5, q5, 5);
    CHECK_THROWS_AS(classify_away_from_lambda(bad, q), NotSemistable);
    CHECK_THROWS_AS(classify_away_from_lambda(inv, lambda(f)), DomainError);
}

TEST_CASE("semistability away from lambda on genuine solutions")
{
    // (2, 2, 4) solves the p = 5 equation but is not primitive: the primes
    // above 2 divide both delta and c4. Every other prime has good reduction.
    for (const QuadraticField& f : QuadraticField::all_supported()) {
        const RingElement a = k(f, 2), b = k(f, 2), c = k(f, 4);
        const FreyInvariants inv = frey_invariants(a, b, c, 5);
        REQUIRE(inv.fermat_relation);
        for (const PrimeIdeal& q : primes_up_to_norm(f, 50)) {
            if (q.residue_char() == 3)
                continue;
            if (q.residue_char() == 2)
                CHECK_THROWS_AS(classify_away_from_lambda(inv, q), NotSemistable);
            else
                CHECK(classify_away_from_lambda(inv, q).reduction == Reduction::Good);
        }
    }
}

TEST_CASE("conductor exponent at lambda")
{
    const auto f = QuadraticField::supported(1);
    const RingElement three = k(f, 3);
    // v(b) = 1, v(a) = 0, p = 5: 3 + 15 - 12 = 6.
    const auto mult = lambda_exponent(k(f, 1), three, k(f, 2), 5);
    CHECK(mult.reduction == Reduction::Multiplicative);
    CHECK(mult.conductor_exponent == ExponentRange{1, 1});
    CHECK(mult.delta_valuation == Valuation(6));
    CHECK(mult.pot_mult == true);

    const auto add = lambda_exponent(k(f, 1), k(f, 2), k(f, 4), 5);
    CHECK(add.reduction == Reduction::Additive);
    CHECK(add.conductor_exponent == ExponentRange{2, 3});
    CHECK_FALSE(add.conductor_exponent.exact());
    CHECK(add.delta_valuation == Valuation(3));

    // v(a) = 1, b a unit, p = 5: 3 + 5 - 12 = -4 cannot occur.
    CHECK_THROWS_AS(lambda_exponent(three, k(f, 1), k(f, 2), 5), ConsistencyError);
    // v(a) = 1, p = 11: 3 + 11 - 12 = 2, multiplicative.
    CHECK(lambda_exponent(three, k(f, 1), k(f, 2), 11).delta_valuation == Valuation(2));
    // lambda dividing two of a, b, c is not primitive.
    CHECK_THROWS_AS(lambda_exponent(three, three, k(f, 1), 5), ConsistencyError);
    // v(a) = 3, p = 3: 3 + 9 - 12 = 0.
    const auto good = lambda_exponent(three.pow(3), k(f, 1), k(f, 2), 3);
    CHECK(good.reduction == Reduction::Good);
    CHECK(good.conductor_exponent == ExponentRange{0, 0});
}

TEST_CASE("j-valuation at lambda")
{
    const auto f = QuadraticField::supported(43);
    const RingElement three = k(f, 3);
    auto j = j_valuation_at_lambda(three, 7);
    CHECK(j.valuation == -18);
    CHECK(j.pot_mult);
    CHECK(j.p_in_inertia);
    j = j_valuation_at_lambda(three, 5);
    CHECK(j.valuation == -12);
    CHECK(j.p_in_inertia);
    CHECK(j_valuation_at_lambda(k(f, 9), 5).valuation == -27);
    CHECK_THROWS_AS(j_valuation_at_lambda(k(f, 2), 5), DomainError);
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul})
        for (int kk = 1; kk <= 4; ++kk) {
            const long v = j_valuation_at_lambda(three.pow(kk), p).valuation;
            CHECK(((v - 3) % static_cast<long>(3 * p) + 3 * static_cast<long>(p)) % static_cast<long>(3 * p) == 0);
        }
}

TEST_CASE("cubic solvability modulo lambda^2")
{
    const auto f = QuadraticField::supported(1);
    for (unsigned long p : {3ul, 5ul, 7ul, 101ul})
        CHECK(cubic_test(k(f, 1), k(f, 1), p)); // y = 2: 8 + 48 + 16 = 72
    CHECK_THROWS_AS(cubic_test(k(f, 1), k(f, 0), 5), DomainError);
    CHECK_THROWS_AS(cubic_test(k(f, 3), k(f, 1), 5), DomainError);

    // Brute-force invariance: (b, c) -> (u b, u^-p c) leaves the linear
    // coefficient unchanged and multiplies the constant by u^2p = +-1, which
    // y -> -y absorbs.
    test::Gen g;
    for (const QuadraticField& fld : QuadraticField::all_supported()) {
        for (int i = 0; i < 20; ++i) {
            const RingElement b = g.lambda_unit(fld, 30), c = g.lambda_unit(fld, 30);
            for (unsigned long p : {5ul, 7ul}) {
                const bool base = cubic_test(b, c, p);
                for (const RingElement& u : units(fld))
                    REQUIRE(cubic_test(u * b, u.conj().pow(p) * c, p) == base);
            }
        }
    }
}

TEST_CASE("cubic test against a direct search in integers mod 9")
{
    // For b, c rational integers the residues of y^3 + 24 b^p c y + 16 b^2p
    // can be searched over x + y w with plain modular arithmetic.
    for (const QuadraticField& f : QuadraticField::all_supported()) {
        const long t = f.omega_trace(), n = f.omega_norm();
        for (long b = 1; b <= 8; ++b) {
            for (long c = 1; c <= 8; ++c) {
                if (b % 3 == 0 || c % 3 == 0)
                    continue;
                const unsigned long p = 5;
                long bp = 1;
                for (unsigned long i = 0; i < p; ++i)
                    bp = bp * b % 9;
                const long lin = 24 * bp % 9 * c % 9, con = 16 * bp % 9 * bp % 9;
                bool found = false;
                for (long x = 0; x < 9 && !found; ++x)
                    for (long y = 0; y < 9 && !found; ++y) {
                        auto mul = [&](long x1, long y1, long x2, long y2) {
                            const long yy = y1 * y2;
                            return std::pair<long, long>{((x1 * x2 - n * yy) % 9 + 9) % 9,
                                                         ((x1 * y2 + x2 * y1 + t * yy) % 9 + 9) % 9};
                        };
                        auto [sx, sy] = mul(x, y, x, y);
                        auto [cx, cy] = mul(sx, sy, x, y);
                        const long vx = (cx + lin * x + con) % 9, vy = (cy + lin * y) % 9;
                        found = vx == 0 && vy == 0;
                    }
                REQUIRE(cubic_test(k(f, b), k(f, c), p) == found);
            }
        }
    }
}
