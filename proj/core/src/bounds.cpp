#include "fermat/bounds.hpp"

#include <algorithm>
#include <set>

#include "fermat/errors.hpp"

namespace fermat {

std::vector<CharPolyCandidate> hasse_charpolys(long N)
{
    if (N < 1)
        throw DomainError("hasse_charpolys needs N >= 1");
    const long amax = static_cast<long>(isqrt(static_cast<std::uint64_t>(4 * N)));
    std::vector<CharPolyCandidate> out;
    auto add = [&](long a) { out.push_back({a, Polynomial{N, -a, 1}}); };
    add(0);
    for (long a = 1; a <= amax; ++a) {
        add(-a);
        add(a);
    }
    return out;
}

CkResult compute_ck(CkCase which)
{
    const unsigned n = which == CkCase::Quartic ? 4 : 12;
    CkResult result{which, Polynomial::monomial(1, n) - Polynomial::constant(9), 0, {}};
    for (const CharPolyCandidate& cand : hasse_charpolys(9)) {
        Integer r = resultant(result.target, cand.poly);
        auto fac = factorize(r);
        result.ck = std::max(result.ck, max_prime(fac));
        result.table.push_back({cand.trace, cand.poly, r, std::move(fac)});
    }
    return result;
}

std::uint64_t RayClassGroup::order() const
{
    std::uint64_t o = 1;
    for (auto d : abelian_invariants)
        o *= d;
    return o;
}

std::vector<std::uint64_t> invariants_from_counts(
    std::uint64_t order, const std::function<std::uint64_t(std::uint64_t)>& count)
{
    // For each prime l with l^a || order, count(l^i) = l^(sum_j min(i, e_j))
    // where l^e_j are the elementary divisors.
    std::vector<std::vector<std::uint64_t>> per_prime; // descending prime powers
    for (const auto& [lz, a] : factorize(Integer(static_cast<unsigned long>(order)))) {
        const std::uint64_t l = lz.get_ui();
        std::vector<unsigned> at_least; // at_least[i-1] = #{j : e_j >= i}
        unsigned prev_log = 0;
        std::uint64_t li = 1;
        for (unsigned i = 1; i <= a; ++i) {
            li *= l;
            std::uint64_t c = count(li);
            unsigned lg = 0;
            while (c > 1) {
                if (c % l)
                    throw ConsistencyError("element count is not a power of the prime");
                c /= l;
                ++lg;
            }
            at_least.push_back(lg - prev_log);
            prev_log = lg;
        }
        std::vector<std::uint64_t> powers;
        const unsigned parts = at_least.empty() ? 0 : at_least[0];
        for (unsigned j = 0; j < parts; ++j) {
            std::uint64_t q = 1;
            for (unsigned i = 0; i < at_least.size() && at_least[i] > j; ++i)
                q *= l;
            powers.push_back(q);
        }
        per_prime.push_back(std::move(powers));
    }
    std::size_t rank = 0;
    for (const auto& v : per_prime)
        rank = std::max(rank, v.size());
    // Largest invariant factor collects the largest power of every prime.
    std::vector<std::uint64_t> inv(rank, 1);
    for (const auto& v : per_prime)
        for (std::size_t j = 0; j < v.size(); ++j)
            inv[rank - 1 - j] *= v[j];
    return inv;
}

RayClassGroup ray_class_group(const QuadraticField& field, int m)
{
    if (m < 0 || m > 3)
        throw DomainError("ray class modulus exponent must be in [0, 3], got " + std::to_string(m));
    if (m == 0)
        return {field, 0, {}};

    const ResidueRing ring(field, m);
    const std::vector<Residue> units = ring.units();
    const std::vector<Residue> image = unit_image_mod(field, m);
    std::vector<bool> in_image(ring.cardinality(), false);
    for (Residue h : image)
        in_image[ring.index(h)] = true;

    const std::uint64_t order = units.size() / image.size();
    auto count = [&](std::uint64_t k) {
        std::uint64_t n = 0;
        for (Residue u : units)
            n += in_image[ring.index(ring.pow(u, Integer(static_cast<unsigned long>(k))))];
        return n / image.size();
    };
    return {field, m, invariants_from_counts(order, count)};
}

std::vector<long> hasse_trace_set(std::uint64_t norm)
{
    const long amax = static_cast<long>(isqrt(4 * norm));
    const long target = static_cast<long>((norm + 1) % 3);
    std::vector<long> out;
    for (long a = -amax; a <= amax; ++a)
        if (((a % 3) + 3) % 3 == target)
            out.push_back(a);
    return out;
}

std::vector<long> set_aq(const PrimeIdeal& q)
{
    if (q.residue_char() == 3)
        throw DomainError("A(q) is undefined at lambda");
    return hasse_trace_set(q.norm());
}

const std::vector<TorsionRow>& torsion_table()
{
    // Torsion primes of Gamma_0(N_E)^ab for N_E = lambda, lambda^2, lambda^3,
    // obtained externally from the abelianization algorithm for Bianchi
    // groups. Ingested verbatim; nothing here is derived.
    static const std::vector<TorsionRow> table = {
        {1, {1, 2, 3}, {2, 3}, 3},
        {7, {1, 2, 3}, {2, 3}, 3},
        {19, {1, 2, 3}, {2, 3, 5}, 5},
        {43, {1, 2, 3}, {2, 3, 5, 59, 67, 199}, 199},
        {67, {1, 2, 3}, {2, 3, 5, 17, 19, 37, 47, 67}, 67},
    };
    return table;
}

const TorsionRow& torsion_row(long d)
{
    for (const TorsionRow& row : torsion_table())
        if (row.d == d)
            return row;
    throw DomainError("no torsion data for d=" + std::to_string(d));
}

BoundsReport assemble_bk(const QuadraticField& field, const std::optional<Integer>& mk,
                         bool cubic_solvable)
{
    static const Integer ck_quartic = compute_ck(CkCase::Quartic).ck;
    static const Integer ck_duodecic = compute_ck(CkCase::Duodecic).ck;

    const TorsionRow& row = torsion_row(field.d());
    const Integer ck = cubic_solvable ? ck_quartic : ck_duodecic;
    const Integer ell(static_cast<unsigned long>(row.ell_k));
    BoundsReport report{field, row.ell_k, ck.get_ui(), cubic_solvable, mk, std::max(ell, ck), {}};
    if (mk)
        report.bk_case_two = std::max(report.bk_case_one, *mk);
    return report;
}

} // namespace fermat
