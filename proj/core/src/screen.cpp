#include "fermat/screen.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fermat/errors.hpp"
#include "fermat/fp_poly.hpp"

namespace fermat {

std::optional<std::string> validate(const FieldRecord& r)
{
    if (r.degree < 2)
        return "degree must be at least 2";
    if (r.poly.degree() != r.degree)
        return "polynomial degree " + std::to_string(r.poly.degree()) +
               " does not match declared degree " + std::to_string(r.degree);
    if (!r.poly.is_monic())
        return "polynomial is not monic";
    if (discriminant(r.poly) == 0)
        return "polynomial is not squarefree";
    return std::nullopt;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(cur);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::optional<long> optional_long(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    return parse_integer(s).get_si();
}

} // namespace

ParsedCorpus parse_field_records(std::istream& in)
{
    static const std::vector<std::string> header{"label", "degree", "disc", "poly", "h", "h_plus"};
    ParsedCorpus out;
    std::string raw;
    bool seen_header = false;
    for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> cells = split(line, ',');
        for (std::string& c : cells)
            c = trim(c);
        if (!seen_header) {
            if (cells != header)
                throw DataError("expected header 'label,degree,disc,poly,h,h_plus'", lineno);
            seen_header = true;
            continue;
        }
        auto skip = [&](const std::string& why) {
            ++out.skipped;
            out.warnings.push_back("line " + std::to_string(lineno) + ": " + why);
        };
        if (cells.size() != header.size()) {
            skip("expected 6 fields, found " + std::to_string(cells.size()));
            continue;
        }
        if (cells[0].empty()) {
            skip("empty label");
            continue;
        }
        FieldRecord r;
        try {
            r.label = cells[0];
            r.degree = static_cast<int>(parse_integer(cells[1]).get_si());
            r.disc = parse_integer(cells[2]);
            r.poly = Polynomial::parse_coefficients(cells[3], ';');
            r.h = optional_long(cells[4]);
            r.h_plus = optional_long(cells[5]);
        } catch (const DataError& e) {
            skip(e.what());
            continue;
        }
        if (auto why = validate(r)) {
            skip(r.label + ": " + *why);
            continue;
        }
        out.records.push_back(std::move(r));
    }
    if (!seen_header)
        throw DataError("missing header 'label,degree,disc,poly,h,h_plus'");
    return out;
}

DedekindResult dedekind_split(const Polynomial& poly, std::uint64_t p)
{
    if (!poly.is_monic())
        throw DomainError("Dedekind's criterion needs a monic polynomial");
    if (!is_prime(p))
        throw DomainError(std::to_string(p) + " is not prime");
    const FpPoly fbar = FpPoly::reduce(poly, p);
    const auto parts = squarefree_decomposition(fbar);

    FpPoly g = FpPoly::constant(p, 1);
    FpPoly h = FpPoly::constant(p, 1);
    DedekindResult out{{}, true};
    for (const auto& [s, mult] : parts) {
        g = g * s;
        for (unsigned i = 1; i < mult; ++i)
            h = h * s;
        for (const auto& [deg, prod] : distinct_degree_factorization(s))
            for (int k = 0; k < prod.degree() / static_cast<int>(deg); ++k)
                out.shapes.push_back({deg, mult});
    }
    std::sort(out.shapes.begin(), out.shapes.end());

    if (!h.is_one()) {
        const Polynomial diff = g.lift() * h.lift() - poly;
        std::vector<Integer> coeffs = diff.coeffs();
        const Integer pz(static_cast<unsigned long>(p));
        for (Integer& c : coeffs)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
        const FpPoly F = FpPoly::reduce(Polynomial(std::move(coeffs)), p);
        out.certified = gcd(gcd(F, g), h).is_one();
    }
    return out;
}

std::string Zeta3Verdict::str() const
{
    switch (kind) {
    case Kind::YesProbable:
        return "YesProbable(" + std::to_string(primes_tested) + " primes)";
    case Kind::NoCertified:
        return witness ? "NoCertified(" + std::to_string(*witness) + ")" : "NoCertified(odd degree)";
    case Kind::Unknown:
        return "Unknown";
    }
    return "?";
}

Zeta3Verdict contains_zeta3(const Polynomial& poly, unsigned budget)
{
    if (budget == 0)
        throw DomainError("prime budget must be positive");
    if (poly.degree() % 2 != 0)
        return {Zeta3Verdict::Kind::NoCertified, std::nullopt, 0};
    const Integer disc = discriminant(poly);
    if (disc == 0)
        return {Zeta3Verdict::Kind::Unknown, std::nullopt, 0};

    Zeta3Verdict v{Zeta3Verdict::Kind::YesProbable, std::nullopt, 0};
    // An unramified p = 2 (mod 3) has odd residue degree in Q(zeta_3), so in
    // any field containing zeta_3 every prime above p has even residue degree.
    for (std::uint64_t p = 2; v.primes_tested < budget; p = next_prime(p)) {
        if (p % 3 != 2 || mpz_divisible_ui_p(disc.get_mpz_t(), p))
            continue;
        ++v.primes_tested;
        for (const auto& [deg, mult] : factor_shape(FpPoly::reduce(poly, p))) {
            if (deg % 2 != 0)
                return {Zeta3Verdict::Kind::NoCertified, p, v.primes_tested};
        }
    }
    return v;
}

std::string to_string(const std::optional<bool>& v)
{
    return v ? (*v ? "yes" : "no") : "unknown";
}

namespace {

std::vector<const FieldRecord*> sorted_by_label(const std::vector<FieldRecord>& records)
{
    std::vector<const FieldRecord*> out;
    for (const FieldRecord& r : records)
        out.push_back(&r);
    std::stable_sort(out.begin(), out.end(), [](const FieldRecord* a, const FieldRecord* b) {
        return std::tie(a->label, a->degree) < std::tie(b->label, b->degree);
    });
    return out;
}

std::optional<bool> h_plus_is(const FieldRecord& r, long v)
{
    if (!r.h_plus)
        return std::nullopt;
    return *r.h_plus == v;
}

// Kleene conjunction.
std::optional<bool> all_of(std::initializer_list<std::optional<bool>> xs)
{
    bool unknown = false;
    for (const auto& x : xs) {
        if (x && !*x)
            return false;
        unknown |= !x;
    }
    return unknown ? std::nullopt : std::optional<bool>(true);
}

ScreeningResult finish(std::vector<ScreeningVerdict> verdicts, bool pp2)
{
    ScreeningResult out;
    std::map<int, DegreeSummary> by_degree;
    for (const ScreeningVerdict& v : verdicts) {
        DegreeSummary& s = by_degree.try_emplace(v.degree, DegreeSummary{v.degree, 0, 0, std::nullopt, 0, 0}).first->second;
        ++s.records;
        if (pp2) {
            if (!s.g)
                s.g = 0;
            if (v.ramified2.value_or(false)) {
                ++s.f;
                if (v.h_plus_odd.value_or(false))
                    ++*s.g;
            }
            if (v.passes_pp2.value_or(false))
                ++s.k;
            else if (!v.passes_pp2)
                ++s.undecided;
        } else {
            ++s.f;
            if (v.passes_pp3.value_or(false))
                ++s.k;
            else if (!v.passes_pp3)
                ++s.undecided;
        }
    }
    for (auto& [deg, s] : by_degree)
        out.summary.push_back(s);
    out.verdicts = std::move(verdicts);
    return out;
}

} // namespace

ScreeningResult screen_pp3(const std::vector<FieldRecord>& records, unsigned budget)
{
    std::vector<ScreeningVerdict> verdicts;
    for (const FieldRecord* r : sorted_by_label(records)) {
        if (auto why = validate(*r))
            throw DomainError(r->label + ": " + *why);
        ScreeningVerdict v{r->label, r->degree, contains_zeta3(r->poly, budget), {}, {}, {}, {}, {}, {}};
        const DedekindResult at3 = dedekind_split(r->poly, 3);
        if (at3.certified)
            v.primes_above_3 = static_cast<unsigned>(at3.shapes.size());
        v.h_plus_one = h_plus_is(*r, 1);

        std::optional<bool> zeta;
        if (v.zeta3.kind == Zeta3Verdict::Kind::NoCertified)
            zeta = false;
        else if (v.zeta3.kind == Zeta3Verdict::Kind::YesProbable)
            zeta = true;
        std::optional<bool> one_above_3;
        if (v.primes_above_3)
            one_above_3 = *v.primes_above_3 == 1;
        v.passes_pp3 = all_of({zeta, one_above_3, v.h_plus_one});
        verdicts.push_back(std::move(v));
    }
    return finish(std::move(verdicts), false);
}

ScreeningResult screen_pp2(const std::vector<FieldRecord>& records)
{
    std::vector<ScreeningVerdict> verdicts;
    for (const FieldRecord* r : sorted_by_label(records)) {
        if (auto why = validate(*r))
            throw DomainError(r->label + ": " + *why);
        ScreeningVerdict v{r->label, r->degree, {Zeta3Verdict::Kind::Unknown, std::nullopt, 0},
                           {}, {}, {}, {}, {}, {}};
        const DedekindResult at2 = dedekind_split(r->poly, 2);
        const std::vector<PrimeShape> total{{1, static_cast<unsigned>(r->degree)}};
        if (at2.certified)
            v.ramified2 = at2.shapes == total;
        v.h_plus_one = h_plus_is(*r, 1);
        if (r->h_plus)
            v.h_plus_odd = *r->h_plus % 2 != 0;
        v.passes_pp2 = all_of({v.ramified2, v.h_plus_one});
        verdicts.push_back(std::move(v));
    }
    return finish(std::move(verdicts), true);
}

Polynomial tower_poly(int n)
{
    if (n < 1 || n > 10)
        throw DomainError("tower index must be between 1 and 10, got " + std::to_string(n));
    Polynomial f{-2, 0, 1};
    for (int i = 2; i <= n; ++i)
        f = f * f - Polynomial{2};
    return f;
}

} // namespace fermat
