#pragma once

// The Frey curve E : Y^2 + 3c XY + b^p Y = X^3 attached to a triple (a, b, c)
// with a^p + b^p = c^3, its invariants, and its local behaviour at lambda and
// at the primes away from 3.

#include <optional>
#include <string>

#include "fermat/ring.hpp"

namespace fermat {

/// Standard invariants of a general Weierstrass model
/// Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6.
struct WeierstrassInvariants
{
    RingElement b2, b4, b6, b8;
    RingElement c4, c6, delta;
};

WeierstrassInvariants weierstrass_invariants(const RingElement& a1, const RingElement& a2,
                                             const RingElement& a3, const RingElement& a4,
                                             const RingElement& a6);

struct FreyInvariants
{
    RingElement a1; ///< 3c
    RingElement a3; ///< b^p
    RingElement c4;
    RingElement c6;
    RingElement delta;
    /// j = j_num / j_den, kept as the unreduced fraction c4^3 / delta.
    RingElement j_num;
    RingElement j_den;
    unsigned long exponent_p;

    /// a^p + b^p = c^3 held for the input triple; the closed forms were
    /// checked against the Weierstrass-side values when it did.
    bool fermat_relation;
    /// delta = 0 (e.g. b = 0 or a = 0 on a solution).
    bool degenerate;
};

enum class Reduction
{
    Good,
    Multiplicative,
    Additive
};

std::string to_string(Reduction r);

/// Inclusive range of possible conductor exponents; lo == hi when exact.
struct ExponentRange
{
    int lo;
    int hi;

    bool exact() const { return lo == hi; }
    friend bool operator==(const ExponentRange&, const ExponentRange&) = default;
};

struct LocalClassification
{
    PrimeIdeal prime;
    Reduction reduction;
    ExponentRange conductor_exponent;
    /// v_q(delta) for the model the classification was read from (the
    /// minimalized model at lambda when lambda | ab).
    Valuation delta_valuation;
    /// p | v_q(delta); only meaningful away from lambda.
    std::optional<bool> p_divides_delta_valuation;
    std::optional<bool> pot_mult;
    std::optional<bool> p_divides_inertia_image_order;
};

/// Invariants via the b-invariant formulas for (a1, a2, a3, a4, a6) =
/// (3c, 0, b^p, 0, 0). When a^p + b^p = c^3 the closed forms
///   c4 = 9c(9a^p + b^p), c6 = -27(27c^6 - 36c^3 b^p + 8b^{2p}),
///   delta = 27(ab^3)^p
/// are evaluated too and must agree (ConsistencyError otherwise).
/// DomainError if the elements live in different fields or p is not an odd
/// prime.
FreyInvariants frey_invariants(const RingElement& a, const RingElement& b, const RingElement& c,
                               unsigned long p);

/// Reduction type at q away from 3. Good if q does not divide delta,
/// multiplicative (exponent 1) if q | delta and q does not divide c4.
/// NotSemistable if q divides both; DomainError if q lies over 3 or the
/// curve is degenerate.
LocalClassification classify_away_from_lambda(const FreyInvariants& inv, const PrimeIdeal& q);

/// Thrown when q divides both delta and c4, which cannot happen for a
/// primitive solution.
class NotSemistable : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Conductor exponent at lambda. If lambda | ab the model is minimalized by
/// X = 9x, Y = 27y and v(delta_min) = 3 + p v(ab^3) - 12 decides between good
/// (0) and multiplicative (1) reduction; a negative value raises
/// ConsistencyError. If lambda does not divide ab the reduction is additive
/// with exponent in {2, 3}.
LocalClassification lambda_exponent(const RingElement& a, const RingElement& b,
                                    const RingElement& c, unsigned long p);

struct JValuation
{
    long valuation;
    bool pot_mult;
    bool p_in_inertia;
};

/// v_lambda(j) = 3 - 3pk for k = v_lambda(b) >= 1; DomainError when k = 0.
JValuation j_valuation_at_lambda(const RingElement& b, unsigned long p);

/// Whether y^3 + 24 b^p c y + 16 b^{2p} has a root in O_K / 9, by exhaustive
/// search of all 81 residues. DomainError unless lambda divides neither b nor c.
bool cubic_test(const RingElement& b, const RingElement& c, unsigned long p);

} // namespace fermat
