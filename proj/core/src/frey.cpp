#include "fermat/frey.hpp"

#include "fermat/errors.hpp"

namespace fermat {

namespace {

void require_odd_prime(unsigned long p)
{
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
        throw DomainError("exponent must be an odd prime, got " + std::to_string(p));
}

void require_same_field(const RingElement& a, const RingElement& b, const RingElement& c)
{
    if (!(a.field() == b.field()) || !(a.field() == c.field()))
        throw DomainError("a, b, c must belong to the same field");
}

RingElement k(const QuadraticField& f, long v) { return RingElement::from_integer(f, v); }

} // namespace

std::string to_string(Reduction r)
{
    switch (r) {
    case Reduction::Good:
        return "Good";
    case Reduction::Multiplicative:
        return "Multiplicative";
    case Reduction::Additive:
        return "Additive";
    }
    return "?";
}

WeierstrassInvariants weierstrass_invariants(const RingElement& a1, const RingElement& a2,
                                             const RingElement& a3, const RingElement& a4,
                                             const RingElement& a6)
{
    const QuadraticField& f = a1.field();
    RingElement b2 = a1 * a1 + k(f, 4) * a2;
    RingElement b4 = k(f, 2) * a4 + a1 * a3;
    RingElement b6 = a3 * a3 + k(f, 4) * a6;
    RingElement b8 = a1 * a1 * a6 + k(f, 4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    RingElement c4 = b2 * b2 - k(f, 24) * b4;
    RingElement c6 = -(b2 * b2 * b2) + k(f, 36) * b2 * b4 - k(f, 216) * b6;
    RingElement delta = -(b2 * b2 * b8) - k(f, 8) * b4 * b4 * b4 - k(f, 27) * b6 * b6 +
                        k(f, 9) * b2 * b4 * b6;
    return {b2, b4, b6, b8, c4, c6, delta};
}

FreyInvariants frey_invariants(const RingElement& a, const RingElement& b, const RingElement& c,
                               unsigned long p)
{
    require_same_field(a, b, c);
    require_odd_prime(p);
    const QuadraticField& f = a.field();
    const RingElement zero = RingElement::zero(f);

    const RingElement bp = b.pow(p);
    const RingElement a1 = k(f, 3) * c;
    const WeierstrassInvariants w = weierstrass_invariants(a1, zero, bp, zero, zero);

    const RingElement ap = a.pow(p);
    const RingElement c3 = c * c * c;
    const bool relation = ap + bp == c3;

    if (relation) {
        const RingElement c4_closed = k(f, 9) * c * (k(f, 9) * ap + bp);
        const RingElement c6_closed =
            k(f, -27) * (k(f, 27) * c3 * c3 - k(f, 36) * c3 * bp + k(f, 8) * bp * bp);
        const RingElement delta_closed = k(f, 27) * (a * b * b * b).pow(p);
        if (!(c4_closed == w.c4))
            throw ConsistencyError("closed-form c4 disagrees with the Weierstrass model");
        if (!(c6_closed == w.c6))
            throw ConsistencyError("closed-form c6 disagrees with the Weierstrass model");
        if (!(delta_closed == w.delta))
            throw ConsistencyError("closed-form discriminant disagrees with the Weierstrass model");
    }

    return FreyInvariants{
        .a1 = a1,
        .a3 = bp,
        .c4 = w.c4,
        .c6 = w.c6,
        .delta = w.delta,
        .j_num = w.c4 * w.c4 * w.c4,
        .j_den = w.delta,
        .exponent_p = p,
        .fermat_relation = relation,
        .degenerate = w.delta.is_zero(),
    };
}

LocalClassification classify_away_from_lambda(const FreyInvariants& inv, const PrimeIdeal& q)
{
    if (q.residue_char() == 3)
        throw DomainError("classify_away_from_lambda called at a prime above 3");
    if (inv.degenerate)
        throw DomainError("degenerate Frey curve (zero discriminant)");

    const Valuation vd = valuation(inv.delta, q);
    if (vd == Valuation(0)) {
        return LocalClassification{
            .prime = q,
            .reduction = Reduction::Good,
            .conductor_exponent = {0, 0},
            .delta_valuation = vd,
            .p_divides_delta_valuation = true,
            .pot_mult = false,
            .p_divides_inertia_image_order = false,
        };
    }
    const Valuation vc4 = valuation(inv.c4, q);
    if (vc4 > Valuation(0))
        throw NotSemistable("q = " + q.str() + " divides both the discriminant and c4; "
                            "the input is not a primitive solution");
    const bool p_divides = vd.value() % static_cast<long>(inv.exponent_p) == 0;
    // v_q(j) = 3 v_q(c4) - v_q(delta) = -v_q(delta) < 0
    return LocalClassification{
        .prime = q,
        .reduction = Reduction::Multiplicative,
        .conductor_exponent = {1, 1},
        .delta_valuation = vd,
        .p_divides_delta_valuation = p_divides,
        .pot_mult = true,
        .p_divides_inertia_image_order = !p_divides,
    };
}

LocalClassification lambda_exponent(const RingElement& a, const RingElement& b,
                                    const RingElement& c, unsigned long p)
{
    require_same_field(a, b, c);
    require_odd_prime(p);
    const PrimeIdeal lam = lambda(a.field());
    const Valuation va = val_lambda(a);
    const Valuation vb = val_lambda(b);
    const Valuation vc = val_lambda(c);
    if (va.is_infinite() || vb.is_infinite())
        throw DomainError("degenerate triple: a or b is zero");

    const int divisible = (va > Valuation(0)) + (vb > Valuation(0)) + (vc > Valuation(0));
    if (divisible >= 2)
        throw ConsistencyError("lambda divides two of a, b, c; the triple is not primitive at 3");

    const long vab3 = va.value() + 3 * vb.value();
    if (va.value() + vb.value() > 0) {
        const long vmin = 3 + static_cast<long>(p) * vab3 - 12;
        if (vmin < 0)
            throw ConsistencyError("v_lambda(delta) = " + std::to_string(vmin) +
                                   " after minimalization; valuation pattern cannot occur on a "
                                   "primitive solution");
        const bool good = vmin == 0;
        return LocalClassification{
            .prime = lam,
            .reduction = good ? Reduction::Good : Reduction::Multiplicative,
            .conductor_exponent = good ? ExponentRange{0, 0} : ExponentRange{1, 1},
            .delta_valuation = Valuation(vmin),
            .p_divides_delta_valuation = std::nullopt,
            .pot_mult = !good,
            .p_divides_inertia_image_order = std::nullopt,
        };
    }
    return LocalClassification{
        .prime = lam,
        .reduction = Reduction::Additive,
        .conductor_exponent = {2, 3},
        .delta_valuation = Valuation(3 + static_cast<long>(p) * vab3),
        .p_divides_delta_valuation = std::nullopt,
        .pot_mult = std::nullopt,
        .p_divides_inertia_image_order = std::nullopt,
    };
}

JValuation j_valuation_at_lambda(const RingElement& b, unsigned long p)
{
    require_odd_prime(p);
    const Valuation vb = val_lambda(b);
    if (vb.is_infinite())
        throw DomainError("b = 0 has no finite valuation");
    if (vb.value() == 0)
        throw DomainError("lambda does not divide b; use cubic_test for the additive case");
    const long v = 3 - 3 * static_cast<long>(p) * vb.value();
    return {v, v < 0, v < 0 && v % static_cast<long>(p) != 0};
}

bool cubic_test(const RingElement& b, const RingElement& c, unsigned long p)
{
    if (!(b.field() == c.field()))
        throw DomainError("b and c must belong to the same field");
    if (val_lambda(b * c) != Valuation(0))
        throw DomainError("cubic_test requires lambda to divide neither b nor c");
    const ResidueRing ring(b.field(), 2);
    const Residue bp = ring.pow(ring.reduce(b), Integer(p));
    const Residue lin = ring.mul(ring.make(24, 0), ring.mul(bp, ring.reduce(c)));
    const Residue con = ring.mul(ring.make(16, 0), ring.mul(bp, bp));
    for (Residue y : ring.elements()) {
        Residue v = ring.add(ring.add(ring.mul(ring.mul(y, y), y), ring.mul(lin, y)), con);
        if (v == Residue{0, 0})
            return true;
    }
    return false;
}

} // namespace fermat
