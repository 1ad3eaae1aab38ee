#include "fermat/poly.hpp"

#include <algorithm>
#include <sstream>

#include "fermat/errors.hpp"

namespace fermat {

Polynomial::Polynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        c_.emplace_back(c);
    trim();
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Polynomial Polynomial::constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

Polynomial Polynomial::x() { return Polynomial{0, 1}; }

Polynomial Polynomial::monomial(const Integer& c, unsigned n)
{
    std::vector<Integer> v(n + 1, Integer(0));
    v[n] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::parse_coefficients(const std::string& text, char sep)
{
    std::vector<Integer> v;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        v.push_back(parse_integer(text.substr(start, pos - start)));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return Polynomial(std::move(v));
}

const Integer& Polynomial::leading() const
{
    if (c_.empty())
        throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
}

Integer Polynomial::eval(const Integer& v) const
{
    Integer r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * v + *it;
    return r;
}

Polynomial Polynomial::derivative() const
{
    std::vector<Integer> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * static_cast<unsigned long>(i));
    return Polynomial(std::move(d));
}

Integer Polynomial::content() const
{
    Integer g = 0;
    for (const Integer& c : c_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial r = constant(1);
    Polynomial b = *this;
    while (e) {
        if (e & 1)
            r = r * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

std::string Polynomial::str() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Integer& c = c_[k];
        if (c == 0)
            continue;
        Integer a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << a;
            continue;
        }
        if (a != 1)
            os << a << '*';
        os << 'x';
        if (k > 1)
            os << '^' << k;
    }
    return os.str();
}

std::string Polynomial::coeff_str(char sep) const
{
    if (c_.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i)
            s += sep;
        s += c_[i].get_str();
    }
    return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a)
{
    std::vector<Integer> r(a.c_);
    for (Integer& c : r)
        c = -c;
    return Polynomial(std::move(r));
}

Integer determinant(std::vector<std::vector<Integer>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

std::vector<std::vector<Integer>> sylvester_matrix(const Polynomial& p, const Polynomial& q)
{
    const int m = p.degree();
    const int n = q.degree();
    const int size = m + n;
    std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, Integer(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i)
            s[r][r + i] = p.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            s[n + r][r + i] = q.coeff(n - i);
    return s;
}

Integer resultant(const Polynomial& p, const Polynomial& q)
{
    if (p.is_zero() || q.is_zero())
        throw DomainError("resultant of a zero polynomial");
    if (p.degree() == 0 || q.degree() == 0) {
        Integer r;
        if (p.degree() == 0)
            mpz_pow_ui(r.get_mpz_t(), p.coeff(0).get_mpz_t(), q.degree());
        else
            mpz_pow_ui(r.get_mpz_t(), q.coeff(0).get_mpz_t(), p.degree());
        return r;
    }
    return determinant(sylvester_matrix(p, q));
}

Integer discriminant(const Polynomial& f)
{
    const int n = f.degree();
    if (n < 1)
        throw DomainError("discriminant needs a polynomial of degree >= 1");
    if (n == 1)
        return 1;
    Integer r = resultant(f, f.derivative());
    Integer d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    if ((n * (n - 1) / 2) % 2)
        d = -d;
    return d;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g)
{
    if (g.is_zero())
        throw DomainError("division by the zero polynomial");
    if (f.is_zero())
        return Polynomial{};
    if (f.degree() < g.degree())
        return std::nullopt;
    std::vector<Integer> rem = f.coeffs();
    std::vector<Integer> quot(f.degree() - g.degree() + 1, Integer(0));
    const Integer& lg = g.leading();
    for (int k = f.degree() - g.degree(); k >= 0; --k) {
        Integer& top = rem[k + g.degree()];
        if (!mpz_divisible_p(top.get_mpz_t(), lg.get_mpz_t()))
            return std::nullopt;
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lg.get_mpz_t());
        quot[k] = c;
        for (int i = 0; i <= g.degree(); ++i)
            rem[k + i] -= c * g.coeff(i);
    }
    for (const Integer& r : rem)
        if (r != 0)
            return std::nullopt;
    return Polynomial(std::move(quot));
}

namespace {

std::vector<Integer> signed_divisors(const Integer& n)
{
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::vector<Integer> out;
    for (const Integer& d : divs) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

// Polynomial of degree <= points.size()-1 through (points[i], values[i]),
// nullopt unless all coefficients are integers.
std::optional<Polynomial> interpolate(const std::vector<Integer>& points,
                                      const std::vector<Integer>& values)
{
    const std::size_t n = points.size();
    std::vector<Rational> dd(values.begin(), values.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i] - points[i - level]);
    // Newton form -> monomial coefficients.
    std::vector<Rational> c(1, dd[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        std::vector<Rational> next(c.size() + 1, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * points[k];
        }
        next[0] += dd[k];
        c = std::move(next);
    }
    std::vector<Integer> out;
    for (Rational& r : c) {
        r.canonicalize();
        if (r.get_den() != 1)
            return std::nullopt;
        out.push_back(r.get_num());
    }
    return Polynomial(std::move(out));
}

} // namespace

std::optional<Polynomial> find_small_factor(const Polynomial& f, int max_degree)
{
    if (f.is_zero())
        throw DomainError("factor search on the zero polynomial");
    for (int k = 1; k <= std::min(max_degree, f.degree() - 1); ++k) {
        std::vector<Integer> points;
        std::vector<std::vector<Integer>> choices;
        for (long a = 0; static_cast<int>(points.size()) < k + 1; a = a > 0 ? -a : -a + 1) {
            Integer v = f.eval(a);
            if (v == 0)
                return Polynomial{-a, 1};
            points.emplace_back(a);
            choices.push_back(signed_divisors(v));
        }
        // g and -g are both factors, so pin the sign of g(points[0]).
        std::vector<std::size_t> idx(k + 1, 0);
        while (true) {
            std::vector<Integer> values;
            for (int i = 0; i <= k; ++i)
                values.push_back(choices[i][idx[i]]);
            if (values[0] > 0) {
                auto g = interpolate(points, values);
                if (g && g->degree() == k && divide_exact(f, *g))
                    return g;
            }
            int pos = 0;
            while (pos <= k && ++idx[pos] == choices[pos].size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos > k)
                break;
        }
    }
    return std::nullopt;
}

std::optional<bool> is_irreducible_small(const Polynomial& f)
{
    if (f.degree() < 1)
        throw DomainError("irreducibility is only defined for nonconstant polynomials");
    if (f.degree() > 4)
        return std::nullopt;
    if (f.degree() == 1)
        return true;
    Integer g = f.content();
    std::vector<Integer> prim;
    for (const Integer& c : f.coeffs())
        prim.push_back(c / g);
    return !find_small_factor(Polynomial(std::move(prim)), f.degree() / 2).has_value();
}

} // namespace fermat
