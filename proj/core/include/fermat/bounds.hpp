#pragma once

// Explicit constants for the irreducibility and lifting steps: candidate
// Frobenius polynomials at lambda, their resultants against x^4 - 9 and
// x^12 - 9, ray class groups of modulus lambda^m, the Hasse trace sets A(q)
// and the final bound B_K.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "fermat/poly.hpp"
#include "fermat/ring.hpp"

namespace fermat {

/// x^2 - a x + N
struct CharPolyCandidate
{
    long trace;
    Polynomial poly;
};

/// Every x^2 - a x + N with |a| <= floor(2 sqrt(N)), ordered 0, -1, 1, -2, 2, ...
/// DomainError for N < 1.
std::vector<CharPolyCandidate> hasse_charpolys(long N);

enum class CkCase
{
    Quartic,  ///< resultants against x^4 - 9
    Duodecic  ///< resultants against x^12 - 9
};

struct CkRow
{
    long trace;
    Polynomial poly;
    Integer resultant;
    std::map<Integer, unsigned> factorization;
};

struct CkResult
{
    CkCase which;
    Polynomial target; ///< x^4 - 9 or x^12 - 9
    Integer ck;        ///< largest prime dividing any resultant in the table
    std::vector<CkRow> table;
};

CkResult compute_ck(CkCase which);

struct RayClassGroup
{
    QuadraticField field;
    int modulus_exponent;
    /// Invariant factors d1 | d2 | ... (all > 1); empty for the trivial group.
    std::vector<std::uint64_t> abelian_invariants;

    std::uint64_t order() const;
};

/// Ray class group of modulus lambda^m, 0 <= m <= 3. Class number one makes
/// it (O_K / 3^m)^x modulo the image of the global units.
RayClassGroup ray_class_group(const QuadraticField& field, int m);

/// Invariant factors of a finite abelian group described by its order and
/// a counting oracle: count(k) = #{g : g^k = 1}. Exposed for testing.
std::vector<std::uint64_t> invariants_from_counts(
    std::uint64_t order, const std::function<std::uint64_t(std::uint64_t)>& count);

/// {a in Z : |a| <= 2 sqrt(N), N + 1 - a = 0 (mod 3)}, ascending.
std::vector<long> hasse_trace_set(std::uint64_t norm);

/// hasse_trace_set(Norm(q)); DomainError for q = lambda.
std::vector<long> set_aq(const PrimeIdeal& q);

struct TorsionRow
{
    long d;
    std::vector<int> level_exponents;     ///< val_lambda(N_E)
    std::vector<std::uint64_t> torsion_primes;
    std::uint64_t ell_k;                  ///< largest torsion prime
};

/// Primes l with nontrivial l-torsion in Gamma_0(N_E)^ab, one row per field.
/// Ingested data; not computed here.
const std::vector<TorsionRow>& torsion_table();
const TorsionRow& torsion_row(long d);

struct BoundsReport
{
    QuadraticField field;
    std::uint64_t ell_k;
    std::uint64_t ck;
    bool cubic_solvable;
    std::optional<Integer> mk;
    Integer bk_case_one;
    std::optional<Integer> bk_case_two;
};

/// C_K = 47 when the cubic is solvable mod lambda^2, 44483 otherwise;
/// case I bound max(l_K, C_K), case II bound max(l_K, C_K, M_K) when M_K is
/// supplied.
BoundsReport assemble_bk(const QuadraticField& field, const std::optional<Integer>& mk,
                         bool cubic_solvable);

} // namespace fermat
