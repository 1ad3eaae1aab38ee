#include "fermat/arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m)
{
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s)
{
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return false;
    }
    return true;
}

Integer pollard_brent(const Integer& n)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](const Integer& v) {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer diff = abs(x - y);
                    q = q * diff % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, a, d, s))
            return false;
    }
    return true;
}

bool is_prime(const Integer& n)
{
    if (n < 2)
        return false;
    if (n.fits_ulong_p())
        return is_prime(static_cast<std::uint64_t>(n.get_ui()));
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::uint64_t next_prime(std::uint64_t n)
{
    u64 c = n + 1;
    while (!is_prime(c))
        ++c;
    return c;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(bound + 1, false);
    for (u64 i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (u64 j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return out;
}

std::uint64_t isqrt(std::uint64_t n)
{
    Integer r;
    Integer v = static_cast<unsigned long>(n);
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r.get_ui();
}

int kronecker(const Integer& a, const Integer& n)
{
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

std::map<Integer, unsigned> factorize(const Integer& n)
{
    std::map<Integer, unsigned> out;
    Integer m = abs(n);
    if (m == 0)
        return out;
    for (unsigned long p = 2; p < 1000000; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > m)
            break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Integer(p)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    factor_into(m, out);
    return out;
}

std::string format_factorization(const std::map<Integer, unsigned>& f)
{
    if (f.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : f) {
        if (!first)
            os << " * ";
        first = false;
        os << p;
        if (e > 1)
            os << '^' << e;
    }
    return os.str();
}

Integer max_prime(const std::map<Integer, unsigned>& f)
{
    return f.empty() ? Integer(0) : f.rbegin()->first;
}

Integer parse_integer(const std::string& text)
{
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+'))
        i = 1;
    if (i == text.size())
        throw DataError("expected an integer, got '" + text + "'");
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw DataError("expected an integer, got '" + text + "'");
    }
    Integer v(text[0] == '+' ? text.substr(1) : text, 10);
    return v;
}

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw DataError("denominator must be an unsigned integer in '" + text + "'");
    Integer den = parse_integer(den_text);
    if (den == 0)
        throw DataError("zero denominator in '" + text + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace fermat
