#include "fermat/eliminate.hpp"

#include <algorithm>

#include "fermat/bounds.hpp"
#include "fermat/errors.hpp"
#include "fermat/frey.hpp"

namespace fermat {

const QfElement* EigenformRecord::eigenvalue(const PrimeIdeal& q) const
{
    for (const auto& [prime, value] : eigenvalues)
        if (prime == q)
            return &value;
    return nullptr;
}

std::vector<PrimeIdeal> elimination_primes(const QuadraticField& field, std::uint64_t norm_bound)
{
    std::vector<PrimeIdeal> out;
    if (norm_bound < 3)
        return out;
    for (PrimeIdeal& q : primes_up_to_norm(field, norm_bound - 1))
        if (q.residue_char() != 3)
            out.push_back(std::move(q));
    return out;
}

QfElement b_fq(const EigenformRecord& form, const PrimeIdeal& q)
{
    if (q.residue_char() == 3)
        throw DomainError("B_{f,q} is undefined at lambda");
    const QfElement* t = form.eigenvalue(q);
    if (!t)
        throw DataError("form " + form.form_id + " has no eigenvalue at q = " + q.str());
    const Polynomial& g = form.qf_poly;
    const Integer n(static_cast<unsigned long>(q.norm()));
    auto constant = [&](const Integer& v) { return QfElement::from_integer(g, v); };

    QfElement b = constant(n) * (constant((n + 1) * (n + 1)) - *t * *t);
    for (long a : hasse_trace_set(q.norm()))
        b = b * (constant(a) - *t);
    return b;
}

std::vector<PrimeContribution> contributions(const EigenformRecord& form,
                                             const std::vector<PrimeIdeal>& primes)
{
    std::vector<PrimeContribution> out;
    for (const PrimeIdeal& q : primes) {
        QfElement b = b_fq(form, q);
        Integer nb = abs(norm_qf(b).get_num());
        out.push_back({q, std::move(b), std::move(nb)});
    }
    return out;
}

namespace {

Integer gcd_of(const std::vector<PrimeContribution>& contrib)
{
    Integer g = 0;
    for (const PrimeContribution& c : contrib)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.norm_b.get_mpz_t());
    return g;
}

} // namespace

Integer c_f(const EigenformRecord& form, const std::vector<PrimeIdeal>& primes)
{
    if (primes.empty())
        throw DomainError("C_f needs a nonempty prime set");
    return gcd_of(contributions(form, primes));
}

std::string to_string(VerdictKind v)
{
    switch (v) {
    case VerdictKind::EliminatedBelow:
        return "EliminatedBelow";
    case VerdictKind::CMCandidate:
        return "CMCandidate";
    case VerdictKind::Survivors:
        return "Survivors";
    }
    return "?";
}

EliminationReport verdict(const EigenformRecord& form, const Integer& bk,
                          const std::vector<PrimeIdeal>& primes)
{
    if (primes.empty())
        throw DomainError("verdict needs a nonempty prime set");
    EliminationReport r;
    r.form_id = form.form_id;
    r.d = form.field.d();
    r.level_exponent = form.level_exponent;
    r.per_prime = contributions(form, primes);
    r.c_f = gcd_of(r.per_prime);
    r.bound = bk;
    if (r.c_f == 0) {
        r.verdict = VerdictKind::CMCandidate;
        r.note = "C_f = 0: a matching Frey curve would have CM, so its j-invariant is integral; "
                 "that forces a and b to be units, and the equation has no solution in units";
        return r;
    }
    for (const auto& [p, e] : factorize(r.c_f)) {
        r.prime_divisors.push_back(p);
        if (p > bk)
            r.survivors.push_back(p);
    }
    if (r.survivors.empty()) {
        r.verdict = VerdictKind::EliminatedBelow;
        r.note = "every prime divisor of C_f is at most " + bk.get_str();
    } else {
        r.verdict = VerdictKind::Survivors;
        r.note = "prime divisors of C_f above " + bk.get_str() + " are not eliminated";
    }
    return r;
}

// --- point counting -------------------------------------------------------

namespace {

// O_K / q as F_p (deg 1) or F_p[w]/(w^2 - t w + n) (deg 2, q = (p) inert).
class ResidueField
{
  public:
    explicit ResidueField(const PrimeIdeal& q)
        : p_(q.residue_char()), quadratic_(q.split_type() == SplitType::Inert)
    {
        const QuadraticField& f = q.field();
        t_ = f.omega_trace();
        n_ = f.omega_norm();
        if (!quadratic_) {
            for (std::uint64_t r = 0; r < p_; ++r) {
                RingElement w = RingElement::omega(f) - RingElement::from_integer(f, Integer(static_cast<unsigned long>(r)));
                if (w.divisible_by(q.generator())) {
                    root_ = r;
                    return;
                }
            }
            throw ConsistencyError("no image of w in the residue field of " + q.str());
        }
    }

    using Elt = std::pair<std::uint64_t, std::uint64_t>;

    std::uint64_t size() const { return quadratic_ ? p_ * p_ : p_; }

    Elt element(std::uint64_t i) const { return quadratic_ ? Elt{i / p_, i % p_} : Elt{i, 0}; }

    Elt reduce(const RingElement& z) const
    {
        auto m = [&](const Integer& v) {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
            return r.get_ui();
        };
        if (quadratic_)
            return {m(z.x()), m(z.y())};
        return {(m(z.x()) + m(z.y()) * root_) % p_, 0};
    }

    Elt add(Elt a, Elt b) const { return {(a.first + b.first) % p_, (a.second + b.second) % p_}; }

    Elt mul(Elt a, Elt b) const
    {
        const std::uint64_t yy = a.second * b.second % p_;
        const std::uint64_t tm = static_cast<std::uint64_t>(((t_ % (long)p_) + (long)p_) % (long)p_);
        const std::uint64_t nm = static_cast<std::uint64_t>(((n_ % (long)p_) + (long)p_) % (long)p_);
        return {(a.first * b.first + (p_ - nm) * yy) % p_,
                (a.first * b.second + a.second * b.first + tm * yy) % p_};
    }

  private:
    std::uint64_t p_;
    bool quadratic_;
    long t_ = 0;
    long n_ = 0;
    std::uint64_t root_ = 0;
};

} // namespace

std::uint64_t count_points(const CurveCoefficients& curve, const PrimeIdeal& q)
{
    const auto w = weierstrass_invariants(curve[0], curve[1], curve[2], curve[3], curve[4]);
    if (w.delta.is_zero() || valuation(w.delta, q) > Valuation(0))
        throw DomainError("curve has bad reduction at q = " + q.str());
    const ResidueField F(q);
    std::array<ResidueField::Elt, 5> a;
    for (int i = 0; i < 5; ++i)
        a[i] = F.reduce(curve[i]);
    const auto [a1, a2, a3, a4, a6] = a;

    std::uint64_t count = 1; // point at infinity
    for (std::uint64_t i = 0; i < F.size(); ++i) {
        const auto X = F.element(i);
        const auto X2 = F.mul(X, X);
        // rhs = X^3 + a2 X^2 + a4 X + a6
        const auto rhs = F.add(F.add(F.mul(X2, X), F.mul(a2, X2)), F.add(F.mul(a4, X), a6));
        // lhs = Y^2 + (a1 X + a3) Y
        const auto lin = F.add(F.mul(a1, X), a3);
        for (std::uint64_t j = 0; j < F.size(); ++j) {
            const auto Y = F.element(j);
            const auto lhs = F.add(F.mul(Y, Y), F.mul(lin, Y));
            count += lhs == rhs;
        }
    }
    return count;
}

EigenformRecord fixture_from_curve(const CurveCoefficients& curve,
                                   const std::vector<PrimeIdeal>& primes, std::string form_id,
                                   int level_exponent)
{
    const QuadraticField field = curve[0].field();
    for (const RingElement& c : curve)
        if (!(c.field() == field))
            throw DomainError("curve coefficients must lie in one field");
    const Polynomial x = Polynomial::x();
    EigenformRecord rec{field, level_exponent, std::move(form_id), x, {}};
    for (const PrimeIdeal& q : primes) {
        const std::uint64_t n = count_points(curve, q);
        const Integer aq = Integer(static_cast<unsigned long>(q.norm() + 1)) -
                           Integer(static_cast<unsigned long>(n));
        rec.eigenvalues.emplace_back(q, QfElement::from_integer(x, aq));
    }
    return rec;
}

// --- expectations -----------------------------------------------------------

std::string FormExpectation::str() const
{
    switch (kind) {
    case Kind::CM:
        return "cm";
    case Kind::One:
        return "one";
    case Kind::PowerOfTwo:
        return "pow2";
    case Kind::DivisibleBy: {
        std::string s = "div(";
        for (std::size_t i = 0; i < primes.size(); ++i)
            s += (i ? "," : "") + primes[i].get_str();
        return s + ")";
    }
    }
    return "?";
}

std::string to_string(ExpectationOutcome::Status s)
{
    switch (s) {
    case ExpectationOutcome::Status::Skipped:
        return "skipped";
    case ExpectationOutcome::Status::Passed:
        return "passed";
    case ExpectationOutcome::Status::Failed:
        return "failed";
    }
    return "?";
}

namespace {

bool matches(const FormExpectation& e, const Integer& cf)
{
    switch (e.kind) {
    case FormExpectation::Kind::CM:
        return cf == 0;
    case FormExpectation::Kind::One:
        return cf == 1;
    case FormExpectation::Kind::PowerOfTwo:
        return cf > 0 && mpz_popcount(cf.get_mpz_t()) == 1;
    case FormExpectation::Kind::DivisibleBy:
        if (cf == 0)
            return false;
        return std::all_of(e.primes.begin(), e.primes.end(), [&](const Integer& p) {
            return mpz_divisible_p(cf.get_mpz_t(), p.get_mpz_t()) != 0;
        });
    }
    return false;
}

} // namespace

std::vector<ExpectationOutcome> check_expectations(const std::vector<LevelExpectation>& expectations,
                                                   const std::vector<LevelBlock>& supplied,
                                                   const std::vector<EliminationReport>& reports)
{
    std::vector<ExpectationOutcome> out;
    for (const LevelExpectation& e : expectations) {
        const LevelBlock key{e.d, e.level_exponent};
        if (std::find(supplied.begin(), supplied.end(), key) == supplied.end()) {
            out.push_back({e, ExpectationOutcome::Status::Skipped, "no data supplied"});
            continue;
        }
        std::vector<const EliminationReport*> at_level;
        for (const EliminationReport& r : reports)
            if (r.d == e.d && r.level_exponent == e.level_exponent)
                at_level.push_back(&r);
        if (at_level.size() != e.forms.size()) {
            out.push_back({e, ExpectationOutcome::Status::Failed,
                           "expected " + std::to_string(e.forms.size()) + " forms, found " +
                               std::to_string(at_level.size())});
            continue;
        }
        std::vector<std::size_t> perm(at_level.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            perm[i] = i;
        bool ok = false;
        do {
            ok = true;
            for (std::size_t i = 0; i < perm.size() && ok; ++i)
                ok = matches(e.forms[i], at_level[perm[i]]->c_f);
        } while (!ok && std::next_permutation(perm.begin(), perm.end()));
        std::string detail = "C_f values:";
        for (const EliminationReport* r : at_level)
            detail += " " + r->form_id + "=" + r->c_f.get_str();
        out.push_back({e, ok ? ExpectationOutcome::Status::Passed : ExpectationOutcome::Status::Failed,
                       at_level.empty() ? std::string("no forms, as expected") : detail});
    }
    return out;
}

} // namespace fermat
