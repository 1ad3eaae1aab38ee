#include "fermat/ring.hpp"

#include <algorithm>
#include <set>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

constexpr std::array<long, 5> kSupported = {1, 7, 19, 43, 67};

bool squarefree(long d)
{
    for (long f = 2; f * f <= d; ++f) {
        if (d % (f * f) == 0)
            return false;
    }
    return true;
}

bool inert_at_3(const QuadraticField& field)
{
    return kronecker(Integer(field.disc()), Integer(3)) == -1;
}

// Number of times the prime generated by pi divides z; pi has norm np.
// z is divisible by pi iff every coordinate of z * conj(pi) is divisible by
// np. Gallops through pi^(2^k) so that large valuations cost O(log v)
// multiplications.
long valuation_by_generator(RingElement z, const RingElement& pi)
{
    const Integer np = pi.norm();
    auto divides = [&](const RingElement& g, const Integer& ng, const RingElement& w) {
        RingElement t = w * g.conj();
        return mpz_divisible_p(t.x().get_mpz_t(), ng.get_mpz_t()) &&
               mpz_divisible_p(t.y().get_mpz_t(), ng.get_mpz_t());
    };
    if (!divides(pi, np, z))
        return 0;

    long v = 0;
    std::vector<RingElement> ladder{pi};
    std::vector<Integer> ladder_norms{np};
    while (divides(ladder.back(), ladder_norms.back(), z)) {
        z = *z.divide_exact(ladder.back());
        v += 1L << (ladder.size() - 1);
        RingElement sq = ladder.back() * ladder.back();
        Integer nsq = ladder_norms.back() * ladder_norms.back();
        ladder.push_back(std::move(sq));
        ladder_norms.push_back(std::move(nsq));
    }
    while (!ladder.empty()) {
        if (divides(ladder.back(), ladder_norms.back(), z)) {
            z = *z.divide_exact(ladder.back());
            v += 1L << (ladder.size() - 1);
        }
        ladder.pop_back();
        ladder_norms.pop_back();
    }
    return v;
}

// Elements of norm p, one per ideal; found by scanning y and solving the
// norm form for x exactly.
std::vector<RingElement> elements_of_norm(const QuadraticField& field, std::int64_t p)
{
    const std::int64_t t = field.omega_trace();
    const std::int64_t n = field.omega_norm();
    std::vector<RingElement> found;
    // x^2 + t x y + n y^2 = p  <=>  (2x + t y)^2 + (4n - t^2) y^2 = 4p
    const std::int64_t k = 4 * n - t * t;
    for (std::int64_t y = -p; y <= p; ++y) {
        std::int64_t rest = 4 * p - k * y * y;
        if (rest < 0)
            continue;
        auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(rest)));
        if (s * s != rest)
            continue;
        for (std::int64_t sign : {1, -1}) {
            std::int64_t u = sign * s - t * y;
            if (u % 2 != 0)
                continue;
            std::int64_t x = u / 2;
            if (x < -p || x > p)
                continue;
            found.emplace_back(field, Integer(static_cast<long>(x)), Integer(static_cast<long>(y)));
            if (s == 0)
                break;
        }
    }
    return found;
}

std::uint32_t mod3m(const Integer& v, std::uint32_t m)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
    return static_cast<std::uint32_t>(r.get_ui());
}

} // namespace

std::string to_string(OmegaConvention c)
{
    return c == OmegaConvention::Gaussian ? "Gaussian" : "HalfTrace";
}

std::string to_string(SplitType s)
{
    switch (s) {
    case SplitType::Split:
        return "Split";
    case SplitType::Inert:
        return "Inert";
    case SplitType::Ramified:
        return "Ramified";
    }
    return "?";
}

// --- QuadraticField -------------------------------------------------------

QuadraticField QuadraticField::supported(long d)
{
    if (std::find(kSupported.begin(), kSupported.end(), d) == kSupported.end())
        throw DomainError("unsupported field d=" + std::to_string(d) +
                          " (expected one of 1, 7, 19, 43, 67)");
    return QuadraticField(d);
}

QuadraticField QuadraticField::adhoc(long d)
{
    if (d <= 0 || !squarefree(d))
        throw DomainError("d must be a squarefree positive integer, got " + std::to_string(d));
    return QuadraticField(d);
}

const std::array<long, 5>& QuadraticField::supported_ds() { return kSupported; }

std::vector<QuadraticField> QuadraticField::all_supported()
{
    std::vector<QuadraticField> out;
    for (long d : kSupported)
        out.push_back(QuadraticField(d));
    return out;
}

long QuadraticField::disc() const { return d_ % 4 == 3 ? -d_ : -4 * d_; }

OmegaConvention QuadraticField::omega_convention() const
{
    return d_ % 4 == 3 ? OmegaConvention::HalfTrace : OmegaConvention::Gaussian;
}

int QuadraticField::unit_count() const
{
    if (d_ == 1)
        return 4;
    if (d_ == 3)
        return 6;
    return 2;
}

bool QuadraticField::is_supported() const
{
    return std::find(kSupported.begin(), kSupported.end(), d_) != kSupported.end();
}

long QuadraticField::omega_trace() const
{
    return omega_convention() == OmegaConvention::HalfTrace ? 1 : 0;
}

long QuadraticField::omega_norm() const
{
    return omega_convention() == OmegaConvention::HalfTrace ? (1 + d_) / 4 : d_;
}

std::string QuadraticField::name() const
{
    return d_ == 1 ? "Q(i)" : "Q(sqrt(-" + std::to_string(d_) + "))";
}

// --- RingElement ----------------------------------------------------------

RingElement::RingElement(const QuadraticField& field, Integer x, Integer y)
    : field_(field), x_(std::move(x)), y_(std::move(y))
{
}

RingElement RingElement::zero(const QuadraticField& field) { return {field, 0, 0}; }
RingElement RingElement::one(const QuadraticField& field) { return {field, 1, 0}; }
RingElement RingElement::omega(const QuadraticField& field) { return {field, 0, 1}; }

RingElement RingElement::from_integer(const QuadraticField& field, const Integer& n)
{
    return {field, n, 0};
}

RingElement RingElement::parse(const QuadraticField& field, const std::string& text)
{
    auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw DataError("element must be written as x,y; got '" + text + "'");
    return {field, parse_integer(text.substr(0, comma)), parse_integer(text.substr(comma + 1))};
}

void RingElement::require_same_field(const RingElement& w) const
{
    if (!(field_ == w.field_))
        throw DomainError("operands belong to different fields: " + field_.name() + " and " +
                          w.field_.name());
}

Integer RingElement::norm() const
{
    return x_ * x_ + field_.omega_trace() * x_ * y_ + field_.omega_norm() * y_ * y_;
}

RingElement RingElement::conj() const
{
    return {field_, x_ + field_.omega_trace() * y_, -y_};
}

RingElement RingElement::pow(unsigned long e) const
{
    RingElement result = one(field_);
    RingElement base = *this;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

RingElement RingElement::scaled(const Integer& k) const { return {field_, x_ * k, y_ * k}; }

std::optional<RingElement> RingElement::divide_exact(const RingElement& w) const
{
    require_same_field(w);
    if (w.is_zero())
        throw DomainError("division by zero element");
    const Integer nw = w.norm();
    RingElement t = *this * w.conj();
    if (!mpz_divisible_p(t.x_.get_mpz_t(), nw.get_mpz_t()) ||
        !mpz_divisible_p(t.y_.get_mpz_t(), nw.get_mpz_t()))
        return std::nullopt;
    mpz_divexact(t.x_.get_mpz_t(), t.x_.get_mpz_t(), nw.get_mpz_t());
    mpz_divexact(t.y_.get_mpz_t(), t.y_.get_mpz_t(), nw.get_mpz_t());
    return t;
}

bool RingElement::divisible_by(const RingElement& w) const { return divide_exact(w).has_value(); }

std::string RingElement::str() const { return x_.get_str() + "," + y_.get_str(); }

RingElement& RingElement::operator+=(const RingElement& w)
{
    require_same_field(w);
    x_ += w.x_;
    y_ += w.y_;
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& w)
{
    require_same_field(w);
    x_ -= w.x_;
    y_ -= w.y_;
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& w)
{
    require_same_field(w);
    // (x1 + y1 w)(x2 + y2 w) with w^2 = t w - n
    Integer yy = y_ * w.y_;
    Integer nx = x_ * w.x_ - field_.omega_norm() * yy;
    Integer ny = x_ * w.y_ + y_ * w.x_ + field_.omega_trace() * yy;
    x_ = std::move(nx);
    y_ = std::move(ny);
    return *this;
}

RingElement operator-(const RingElement& z) { return {z.field_, -z.x_, -z.y_}; }

bool operator==(const RingElement& z, const RingElement& w)
{
    return z.field_ == w.field_ && z.x_ == w.x_ && z.y_ == w.y_;
}

RingElement element_arith(const RingElement& z, const RingElement& w, ArithOp op)
{
    switch (op) {
    case ArithOp::Add:
        return z + w;
    case ArithOp::Sub:
        return z - w;
    case ArithOp::Mul:
        return z * w;
    }
    throw DomainError("unknown ring operation");
}

Integer norm(const RingElement& z) { return z.norm(); }

std::vector<RingElement> units(const QuadraticField& field)
{
    std::vector<RingElement> out;
    for (const RingElement& u : elements_of_norm(field, 1))
        out.push_back(u);
    std::sort(out.begin(), out.end(), [](const RingElement& a, const RingElement& b) {
        if (a == RingElement::one(a.field()))
            return !(b == a);
        if (b == RingElement::one(b.field()))
            return false;
        return std::make_pair(a.x(), a.y()) > std::make_pair(b.x(), b.y());
    });
    return out;
}

RingElement canonical_associate(const RingElement& z)
{
    std::optional<RingElement> best;
    for (const RingElement& u : units(z.field())) {
        RingElement c = z * u;
        if (c.x() < 0)
            continue;
        if (!best || std::make_pair(c.x(), c.y()) < std::make_pair(best->x(), best->y()))
            best = c;
    }
    return *best;
}

// --- Valuation ------------------------------------------------------------

long Valuation::value() const
{
    if (!value_)
        throw DomainError("valuation is infinite");
    return *value_;
}

std::string Valuation::str() const { return value_ ? std::to_string(*value_) : "inf"; }

Valuation operator+(const Valuation& a, const Valuation& b)
{
    if (a.is_infinite() || b.is_infinite())
        return Valuation::infinity();
    return Valuation(*a.value_ + *b.value_);
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b)
{
    if (a.is_infinite() || b.is_infinite())
        return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
}

Valuation val_lambda(const RingElement& z)
{
    if (z.is_zero())
        return Valuation::infinity();
    Integer g;
    mpz_gcd(g.get_mpz_t(), z.x().get_mpz_t(), z.y().get_mpz_t());
    return Valuation(static_cast<long>(mpz_remove(g.get_mpz_t(), g.get_mpz_t(), Integer(3).get_mpz_t())));
}

// --- PrimeIdeal -----------------------------------------------------------

PrimeIdeal PrimeIdeal::from_generator(const RingElement& generator)
{
    const Integer n = generator.norm();
    const QuadraticField& field = generator.field();
    if (n < 2 || !n.fits_ulong_p())
        throw DomainError("(" + generator.str() + ") is not a prime ideal");
    const std::uint64_t nu = n.get_ui();
    if (is_prime(nu)) {
        SplitType s = splitting_type(field, nu);
        return PrimeIdeal(nu, canonical_associate(generator), nu, s);
    }
    const std::uint64_t r = isqrt(nu);
    if (r * r == nu && is_prime(r) && splitting_type(field, r) == SplitType::Inert) {
        // The only ideal of norm r^2 with r inert is (r) itself.
        if (generator.divisible_by(RingElement::from_integer(field, Integer(static_cast<unsigned long>(r)))))
            return PrimeIdeal(r, canonical_associate(generator), nu, SplitType::Inert);
    }
    throw DomainError("(" + generator.str() + ") is not a prime ideal of " + field.name());
}

std::string PrimeIdeal::str() const { return "(" + generator_.str() + ")"; }

PrimeIdeal lambda(const QuadraticField& field)
{
    if (!inert_at_3(field))
        throw DomainError("3 is not inert in " + field.name() + "; lambda is not unique");
    return PrimeIdeal::from_generator(RingElement::from_integer(field, 3));
}

Valuation valuation(const RingElement& z, const PrimeIdeal& q)
{
    if (!(z.field() == q.field()))
        throw DomainError("element and prime ideal belong to different fields");
    if (z.is_zero())
        return Valuation::infinity();
    return Valuation(valuation_by_generator(z, q.generator()));
}

SplitType splitting_type(const QuadraticField& field, std::uint64_t p)
{
    if (!is_prime(p))
        throw DomainError(std::to_string(p) + " is not prime");
    const Integer disc(field.disc());
    if (mpz_divisible_ui_p(disc.get_mpz_t(), p))
        return SplitType::Ramified;
    return kronecker(disc, Integer(static_cast<unsigned long>(p))) == 1 ? SplitType::Split
                                                                        : SplitType::Inert;
}

std::vector<PrimeIdeal> primes_up_to_norm(const QuadraticField& field, std::uint64_t bound)
{
    std::vector<PrimeIdeal> out;
    for (std::uint64_t p : primes_up_to(bound)) {
        switch (splitting_type(field, p)) {
        case SplitType::Inert:
            if (p * p <= bound)
                out.push_back(PrimeIdeal::from_generator(
                    RingElement::from_integer(field, Integer(static_cast<unsigned long>(p)))));
            break;
        case SplitType::Split:
        case SplitType::Ramified: {
            std::vector<RingElement> gens;
            for (const RingElement& g : elements_of_norm(field, static_cast<std::int64_t>(p))) {
                RingElement c = canonical_associate(g);
                if (std::find(gens.begin(), gens.end(), c) == gens.end())
                    gens.push_back(c);
            }
            for (const RingElement& g : gens)
                out.push_back(PrimeIdeal::from_generator(g));
            break;
        }
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
        return std::make_tuple(a.norm(), a.generator().x(), a.generator().y()) <
               std::make_tuple(b.norm(), b.generator().x(), b.generator().y());
    });
    return out;
}

// --- ResidueRing ----------------------------------------------------------

ResidueRing::ResidueRing(const QuadraticField& field, int m) : field_(field), m_(m), mod_(1)
{
    if (m < 1 || m > 4)
        throw DomainError("residue ring exponent must be in [1, 4], got " + std::to_string(m));
    if (!inert_at_3(field))
        throw DomainError("O_K/3^m is only modelled for fields where 3 is inert");
    for (int i = 0; i < m; ++i)
        mod_ *= 3;
}

Residue ResidueRing::reduce(const RingElement& z) const
{
    if (!(z.field() == field_))
        throw DomainError("element does not belong to " + field_.name());
    return {mod3m(z.x(), mod_), mod3m(z.y(), mod_)};
}

Residue ResidueRing::make(long x, long y) const
{
    auto r = [this](long v) {
        long m = static_cast<long>(mod_);
        return static_cast<std::uint32_t>(((v % m) + m) % m);
    };
    return {r(x), r(y)};
}

Residue ResidueRing::add(Residue a, Residue b) const
{
    return {(a.x + b.x) % mod_, (a.y + b.y) % mod_};
}

Residue ResidueRing::neg(Residue a) const
{
    return {(mod_ - a.x) % mod_, (mod_ - a.y) % mod_};
}

Residue ResidueRing::sub(Residue a, Residue b) const { return add(a, neg(b)); }

Residue ResidueRing::mul(Residue a, Residue b) const
{
    const long t = field_.omega_trace();
    const long n = field_.omega_norm();
    long yy = long(a.y) * b.y;
    return make(long(a.x) * b.x - n * yy, long(a.x) * b.y + long(a.y) * b.x + t * yy);
}

Residue ResidueRing::pow(Residue a, const Integer& e) const
{
    if (e < 0)
        throw DomainError("negative exponent in residue ring");
    Residue r = one();
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = mul(r, a);
    }
    return r;
}

bool ResidueRing::is_unit(Residue a) const
{
    long n = long(a.x) * a.x + field_.omega_trace() * long(a.x) * a.y +
             field_.omega_norm() * long(a.y) * a.y;
    return n % 3 != 0;
}

std::vector<Residue> ResidueRing::elements() const
{
    std::vector<Residue> out;
    out.reserve(cardinality());
    for (std::uint32_t x = 0; x < mod_; ++x)
        for (std::uint32_t y = 0; y < mod_; ++y)
            out.push_back({x, y});
    return out;
}

std::vector<Residue> ResidueRing::units() const
{
    std::vector<Residue> out;
    for (Residue r : elements())
        if (is_unit(r))
            out.push_back(r);
    return out;
}

ResidueRing residue_ring(const QuadraticField& field, int m) { return ResidueRing(field, m); }

std::vector<Residue> unit_image_mod(const QuadraticField& field, int m)
{
    ResidueRing ring(field, m);
    std::set<Residue> image;
    for (const RingElement& u : units(field))
        image.insert(ring.reduce(u));
    return {image.begin(), image.end()};
}

} // namespace fermat
