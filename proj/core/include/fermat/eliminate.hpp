#pragma once

// Newform elimination. Each Bianchi newform f of level lambda^e is confronted
// with the Frey curve at the small primes q != lambda through
//
//   B_{f,q} = Norm(q) ((Norm(q) + 1)^2 - f(T_q)^2) prod_{a in A(q)} (a - f(T_q)),
//
// an element of the coefficient field Q_f. Any exponent p for which the
// Frey curve can correspond to f divides C_f = gcd_q |N_{Q_f/Q}(B_{f,q})|.

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "fermat/qf_element.hpp"
#include "fermat/ring.hpp"

namespace fermat {

struct EigenformRecord
{
    QuadraticField field;
    int level_exponent; ///< level lambda^e, e in {1, 2, 3}
    std::string form_id;
    Polynomial qf_poly; ///< defining polynomial of Q_f; x for Q_f = Q
    /// Eigenvalues keyed by the canonical generator of q, in file order.
    std::vector<std::pair<PrimeIdeal, QfElement>> eigenvalues;

    /// nullptr if q has no recorded eigenvalue.
    const QfElement* eigenvalue(const PrimeIdeal& q) const;
};

/// The prime set S: all q != lambda of norm strictly below norm_bound.
std::vector<PrimeIdeal> elimination_primes(const QuadraticField& field, std::uint64_t norm_bound);

/// B_{f,q}; DomainError for q = lambda, DataError if f(T_q) is missing.
QfElement b_fq(const EigenformRecord& form, const PrimeIdeal& q);

struct PrimeContribution
{
    PrimeIdeal q;
    QfElement b;
    Integer norm_b; ///< |numerator of N(B_{f,q})|
};

/// Per-prime contributions over the given primes (in order).
std::vector<PrimeContribution> contributions(const EigenformRecord& form,
                                             const std::vector<PrimeIdeal>& primes);

/// gcd over q of |numerator of N(B_{f,q})|; zeros are ignored, so the result
/// is 0 only when every norm vanishes. DomainError on an empty prime list.
Integer c_f(const EigenformRecord& form, const std::vector<PrimeIdeal>& primes);

enum class VerdictKind
{
    EliminatedBelow,
    CMCandidate,
    Survivors
};

std::string to_string(VerdictKind v);

struct EliminationReport
{
    std::string form_id;
    long d;
    int level_exponent;
    std::vector<PrimeContribution> per_prime;
    Integer c_f;
    std::vector<Integer> prime_divisors; ///< ascending; empty when c_f is 0 or 1
    Integer bound;                       ///< B_K the verdict was issued against
    VerdictKind verdict;
    std::vector<Integer> survivors;      ///< prime divisors > bound
    std::string note;
};

EliminationReport verdict(const EigenformRecord& form, const Integer& bk,
                          const std::vector<PrimeIdeal>& primes);

/// Coefficients (a1, a2, a3, a4, a6) of a Weierstrass model over O_K.
using CurveCoefficients = std::array<RingElement, 5>;

/// #E(O_K / q), including the point at infinity, by exhaustive search over
/// the residue field. DomainError if E has bad reduction at q.
std::uint64_t count_points(const CurveCoefficients& curve, const PrimeIdeal& q);

/// Rational eigenform record with f(T_q) = Norm(q) + 1 - #E(F_q) at every
/// given prime. DomainError naming q if E has bad reduction at some q.
EigenformRecord fixture_from_curve(const CurveCoefficients& curve,
                                   const std::vector<PrimeIdeal>& primes, std::string form_id,
                                   int level_exponent = 3);

// --- ingestion ------------------------------------------------------------

/// A "field ... level ..." block; present even when it declares no forms.
struct LevelBlock
{
    long d;
    int level_exponent;
    friend bool operator==(const LevelBlock&, const LevelBlock&) = default;
};

struct ParsedForms
{
    std::vector<EigenformRecord> records;
    std::vector<LevelBlock> blocks;
    std::vector<std::string> warnings;
};

/// Line-oriented eigenform format:
///   field d=<d> level lambda^<e>
///   form <id> qf <c0,c1,...,cn>
///   ap <x>,<y> = <r0,r1,...>
/// '#' starts a comment. Throws DataError (with line number) on syntax
/// errors, duplicate forms, reducible qf polynomials of degree <= 4, and
/// eigenvalues violating the Hasse bound.
ParsedForms parse_forms(std::istream& in);

/// Serializes records back into the ingestion format.
std::string format_forms(const std::vector<EigenformRecord>& records);

// --- qualitative expectations -----------------------------------------------

struct FormExpectation
{
    enum class Kind
    {
        CM,          ///< C_f = 0
        One,         ///< C_f = 1
        DivisibleBy, ///< C_f != 0 and every listed prime divides it
        PowerOfTwo   ///< C_f = 2^k, k >= 0
    };
    Kind kind;
    std::vector<Integer> primes;

    std::string str() const;
};

struct LevelExpectation
{
    long d;
    int level_exponent;
    std::vector<FormExpectation> forms; ///< empty: no newforms at this level
};

/// Lines "expect d=<d> level=<e> forms: sig sig ..." where each sig is
/// cm | one | pow2 | div(p1,p2,...), or the single word none.
std::vector<LevelExpectation> parse_expectations(std::istream& in);

struct ExpectationOutcome
{
    enum class Status
    {
        Skipped,
        Passed,
        Failed
    };
    LevelExpectation expectation;
    Status status;
    std::string detail;
};

std::string to_string(ExpectationOutcome::Status s);

/// Checks every expectation whose (d, level) block was supplied; others are
/// Skipped. Passing requires a one-to-one matching of forms to signatures.
std::vector<ExpectationOutcome> check_expectations(const std::vector<LevelExpectation>& expectations,
                                                   const std::vector<LevelBlock>& supplied,
                                                   const std::vector<EliminationReport>& reports);

} // namespace fermat
