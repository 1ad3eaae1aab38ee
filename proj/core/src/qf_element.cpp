#include "fermat/qf_element.hpp"

#include <algorithm>
#include <cmath>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

void require_same_modulus(const QfElement& a, const QfElement& b)
{
    if (!(a.modulus() == b.modulus()))
        throw DomainError("elements of different coefficient fields");
}

// Remainder of a rational polynomial modulo an integer polynomial.
std::vector<Rational> reduce(std::vector<Rational> c, const Polynomial& g)
{
    const int n = g.degree();
    const Rational lead(g.leading());
    for (int k = static_cast<int>(c.size()) - 1; k >= n; --k) {
        if (c[k] == 0)
            continue;
        Rational q = c[k] / lead;
        for (int i = 0; i <= n; ++i)
            c[k - n + i] -= q * Rational(g.coeff(i));
    }
    c.resize(n, Rational(0));
    for (Rational& r : c)
        r.canonicalize();
    return c;
}

} // namespace

QfElement::QfElement(Polynomial modulus, std::vector<Rational> coords)
    : modulus_(std::move(modulus))
{
    if (modulus_.degree() < 1)
        throw DomainError("coefficient field needs a defining polynomial of degree >= 1");
    coords_ = reduce(std::move(coords), modulus_);
}

QfElement QfElement::from_integer(const Polynomial& modulus, const Integer& n)
{
    return QfElement(modulus, {Rational(n)});
}

bool QfElement::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
}

bool QfElement::is_rational() const
{
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& r) { return r == 0; });
}

std::complex<long double> QfElement::embed(std::complex<long double> root) const
{
    std::complex<long double> v = 0;
    for (auto it = coords_.rbegin(); it != coords_.rend(); ++it)
        v = v * root + static_cast<long double>(it->get_d());
    return v;
}

std::string QfElement::str() const
{
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            s += ',';
        s += coords_[i].get_str();
    }
    return s;
}

QfElement operator+(const QfElement& a, const QfElement& b)
{
    require_same_modulus(a, b);
    std::vector<Rational> c(a.coords_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.coords_[i];
    return QfElement(a.modulus_, std::move(c));
}

QfElement operator-(const QfElement& a, const QfElement& b)
{
    require_same_modulus(a, b);
    std::vector<Rational> c(a.coords_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] -= b.coords_[i];
    return QfElement(a.modulus_, std::move(c));
}

QfElement operator*(const QfElement& a, const QfElement& b)
{
    require_same_modulus(a, b);
    std::vector<Rational> c(a.coords_.size() + b.coords_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        if (a.coords_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coords_.size(); ++j)
            c[i + j] += a.coords_[i] * b.coords_[j];
    }
    return QfElement(a.modulus_, std::move(c));
}

bool operator==(const QfElement& a, const QfElement& b)
{
    return a.modulus_ == b.modulus_ && a.coords_ == b.coords_;
}

Rational norm_qf(const QfElement& z)
{
    if (z.is_zero())
        return Rational(0);
    const Polynomial& g = z.modulus();
    // Z = Zint / D with Zint integral.
    Integer den = 1;
    for (const Rational& r : z.coords())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den().get_mpz_t());
    std::vector<Integer> zint;
    for (const Rational& r : z.coords())
        zint.push_back(r.get_num() * (den / r.get_den()));
    const Polynomial zp(std::move(zint));

    // Res(g, Zint / D) = D^(-deg g) Res(g, Zint)
    Integer lead_pow, den_pow;
    mpz_pow_ui(lead_pow.get_mpz_t(), g.leading().get_mpz_t(), zp.degree());
    mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), g.degree());
    Rational n(resultant(g, zp), lead_pow * den_pow);
    n.canonicalize();
    return n;
}

std::vector<std::complex<long double>> complex_roots(const Polynomial& f)
{
    const int n = f.degree();
    if (n < 1)
        throw DomainError("complex_roots needs a nonconstant polynomial");
    using C = std::complex<long double>;
    std::vector<C> monic(n + 1);
    const long double lead = f.leading().get_d();
    for (int i = 0; i <= n; ++i)
        monic[i] = static_cast<long double>(f.coeff(i).get_d()) / lead;
    auto eval = [&](C z) {
        C v = 0;
        for (int i = n; i >= 0; --i)
            v = v * z + monic[i];
        return v;
    };
    long double radius = 1;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, 1 + std::abs(monic[i]));
    std::vector<C> roots(n);
    const C seed(0.4L, 0.9L);
    for (int i = 0; i < n; ++i)
        roots[i] = std::pow(seed, i) * (radius / 2);
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (int i = 0; i < n; ++i) {
            C denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i)
                    denom *= roots[i] - roots[j];
            if (std::abs(denom) == 0)
                denom = C(1e-30L, 0);
            C step = eval(roots[i]) / denom;
            roots[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-18L * radius)
            break;
    }
    return roots;
}

} // namespace fermat
