#pragma once

// Screening of number fields against the hypotheses of the asymptotic
// results: for signature (p,p,3) the field must contain Q(zeta_3), have a
// single prime above 3 and narrow class number one; for signature (p,p,2)
// 2 must be totally ramified and the narrow class number must be one.
// Narrow class numbers are ingested with the records, never computed.

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "fermat/poly.hpp"

namespace fermat {

struct FieldRecord
{
    std::string label;
    int degree;
    Integer disc;
    Polynomial poly; ///< monic defining polynomial
    std::optional<long> h;
    std::optional<long> h_plus;
};

/// Empty if the record is usable, else the reason it is not: poly must be
/// monic of the declared degree >= 2 and squarefree over Q.
std::optional<std::string> validate(const FieldRecord& r);

struct ParsedCorpus
{
    std::vector<FieldRecord> records;
    std::size_t skipped = 0;
    std::vector<std::string> warnings;
};

/// CSV with header "label,degree,disc,poly,h,h_plus"; poly coefficients are
/// low-to-high separated by ';'; h and h_plus may be empty. Malformed rows
/// are skipped and counted. '#' lines are comments.
ParsedCorpus parse_field_records(std::istream& in);

struct PrimeShape
{
    unsigned residue_degree;
    unsigned ramification;
    friend auto operator<=>(const PrimeShape&, const PrimeShape&) = default;
};

struct DedekindResult
{
    /// One entry per prime above p, sorted. Read off the factorization of
    /// the polynomial mod p; only trustworthy when certified.
    std::vector<PrimeShape> shapes;
    /// Dedekind's criterion shows p does not divide [O_K : Z[theta]].
    bool certified;
};

DedekindResult dedekind_split(const Polynomial& poly, std::uint64_t p);

struct Zeta3Verdict
{
    enum class Kind
    {
        YesProbable, ///< every tested prime 2 mod 3 had only even-degree factors
        NoCertified, ///< exact: witness prime has an odd-degree factor, or odd degree
        Unknown      ///< polynomial not squarefree
    };
    Kind kind;
    std::optional<std::uint64_t> witness;
    unsigned primes_tested = 0;

    std::string str() const;
};

/// Chebotarev-style test over unramified primes p = 2 (mod 3) not dividing
/// disc(poly). DomainError if budget is 0.
Zeta3Verdict contains_zeta3(const Polynomial& poly, unsigned budget);

struct ScreeningVerdict
{
    std::string label;
    int degree;
    Zeta3Verdict zeta3;
    std::optional<unsigned> primes_above_3;
    std::optional<bool> h_plus_one;
    std::optional<bool> passes_pp3;
    std::optional<bool> ramified2;
    std::optional<bool> h_plus_odd;
    std::optional<bool> passes_pp2;
};

/// Per-degree counts. For (p,p,3): f = records, k = passing. For (p,p,2):
/// f = 2 totally ramified, g = f with odd h+, k = g with h+ = 1.
struct DegreeSummary
{
    int degree;
    unsigned records = 0;
    unsigned f = 0;
    std::optional<unsigned> g;
    unsigned k = 0;
    unsigned undecided = 0;
};

struct ScreeningResult
{
    std::vector<ScreeningVerdict> verdicts; ///< sorted by label
    std::vector<DegreeSummary> summary;     ///< sorted by degree
    std::size_t skipped = 0;
    std::vector<std::string> warnings;
};

ScreeningResult screen_pp3(const std::vector<FieldRecord>& records, unsigned budget = 50);
ScreeningResult screen_pp2(const std::vector<FieldRecord>& records);

/// f_1 = x^2 - 2, f_n = f_{n-1}^2 - 2; DomainError unless 1 <= n <= 10.
Polynomial tower_poly(int n);

std::string to_string(const std::optional<bool>& v);

} // namespace fermat
