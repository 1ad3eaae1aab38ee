#include "fermat/fp_poly.hpp"

#include <algorithm>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 inverse(u64 a, u64 p)
{
    u64 r = 1, e = p - 2;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

void require_same_prime(const FpPoly& a, const FpPoly& b)
{
    if (a.prime() != b.prime())
        throw DomainError("polynomials over different prime fields");
}

} // namespace

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs))
{
    if (p < 2)
        throw DomainError("F_p needs a prime p");
    for (auto& c : c_)
        c %= p_;
    trim();
}

void FpPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

FpPoly FpPoly::reduce(const Polynomial& f, std::uint64_t p)
{
    std::vector<u64> c;
    Integer r;
    for (const Integer& a : f.coeffs()) {
        mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
        c.push_back(r.get_ui());
    }
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

FpPoly FpPoly::monic() const
{
    if (c_.empty())
        return *this;
    u64 inv = inverse(c_.back(), p_);
    std::vector<u64> c(c_);
    for (auto& v : c)
        v = mulmod(v, inv, p_);
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::derivative() const
{
    std::vector<u64> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(mulmod(c_[i], i % p_, p_));
    return FpPoly(p_, std::move(d));
}

Polynomial FpPoly::lift() const
{
    std::vector<Integer> c;
    for (u64 v : c_)
        c.emplace_back(static_cast<unsigned long>(v));
    return Polynomial(std::move(c));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b)
{
    require_same_prime(a, b);
    const u64 p = a.prime();
    std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (a.coeff(i) + b.coeff(i)) % p;
    return FpPoly(p, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b)
{
    require_same_prime(a, b);
    const u64 p = a.prime();
    std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (a.coeff(i) + p - b.coeff(i)) % p;
    return FpPoly(p, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b)
{
    require_same_prime(a, b);
    const u64 p = a.prime();
    if (a.is_zero() || b.is_zero())
        return FpPoly(p, {});
    std::vector<u64> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = (c[i + j] + mulmod(a.c_[i], b.c_[j], p)) % p;
    }
    return FpPoly(p, std::move(c));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b)
{
    require_same_prime(a, b);
    if (b.is_zero())
        throw DomainError("division by the zero polynomial over F_p");
    const u64 p = a.prime();
    if (a.degree() < b.degree())
        return {FpPoly(p, {}), a};
    std::vector<u64> rem(a.coeffs());
    std::vector<u64> quot(a.degree() - b.degree() + 1, 0);
    const u64 inv = inverse(b.coeffs().back(), p);
    const int db = b.degree();
    for (int k = a.degree() - db; k >= 0; --k) {
        u64 c = mulmod(rem[k + db], inv, p);
        quot[k] = c;
        if (c == 0)
            continue;
        for (int i = 0; i <= db; ++i)
            rem[k + i] = (rem[k + i] + p - mulmod(c, b.coeffs()[i], p)) % p;
    }
    return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }
FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

FpPoly gcd(FpPoly a, FpPoly b)
{
    require_same_prime(a, b);
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m)
{
    FpPoly r = FpPoly::constant(base.prime(), 1) % m;
    FpPoly b = base % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = (r * b) % m;
    }
    return r;
}

std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly& f)
{
    if (f.is_zero())
        throw DomainError("squarefree decomposition of the zero polynomial");
    const u64 p = f.prime();
    std::vector<std::pair<FpPoly, unsigned>> out;
    FpPoly g = f.monic();
    if (g.degree() == 0)
        return out;

    FpPoly c = gcd(g, g.derivative());
    FpPoly w = g / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        FpPoly y = gcd(w, c);
        FpPoly fac = w / y;
        if (fac.degree() > 0)
            out.emplace_back(fac, i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        // c is a polynomial in x^p; take the p-th root coefficientwise.
        std::vector<u64> root;
        for (std::size_t k = 0; k < c.coeffs().size(); k += p)
            root.push_back(c.coeffs()[k]);
        for (auto& [h, j] : squarefree_decomposition(FpPoly(p, std::move(root))))
            out.emplace_back(h, j * static_cast<unsigned>(p));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

std::vector<std::pair<unsigned, FpPoly>> distinct_degree_factorization(const FpPoly& f)
{
    const u64 p = f.prime();
    std::vector<std::pair<unsigned, FpPoly>> out;
    FpPoly rest = f.monic();
    const FpPoly x = FpPoly::x(p);
    FpPoly h = x % rest;
    const Integer pz(static_cast<unsigned long>(p));
    for (unsigned d = 1; rest.degree() >= 2 * static_cast<int>(d); ++d) {
        h = powmod(h, pz, rest);
        FpPoly g = gcd(h - x, rest);
        if (g.degree() > 0) {
            out.emplace_back(d, g);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0)
        out.emplace_back(static_cast<unsigned>(rest.degree()), rest);
    return out;
}

std::vector<std::pair<unsigned, unsigned>> factor_shape(const FpPoly& f)
{
    std::vector<std::pair<unsigned, unsigned>> shape;
    for (const auto& [s, mult] : squarefree_decomposition(f)) {
        for (const auto& [d, g] : distinct_degree_factorization(s)) {
            for (int k = 0; k < g.degree() / static_cast<int>(d); ++k)
                shape.emplace_back(d, mult);
        }
    }
    std::sort(shape.begin(), shape.end());
    return shape;
}

} // namespace fermat
