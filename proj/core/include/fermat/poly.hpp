#pragma once

// Dense univariate polynomials with arbitrary-precision integer coefficients.

#include <optional>
#include <string>
#include <vector>

#include "fermat/arith.hpp"

namespace fermat {

class Polynomial
{
  public:
    Polynomial() = default;
    /// Coefficients low-to-high; trailing zeros are dropped.
    explicit Polynomial(std::vector<Integer> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial constant(const Integer& c);
    static Polynomial x();
    /// c * x^n
    static Polynomial monomial(const Integer& c, unsigned n);

    /// Parses "c0<sep>c1<sep>...<sep>cn" (low-to-high).
    static Polynomial parse_coefficients(const std::string& text, char sep = ',');

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    /// Coefficient of x^i, zero past the degree.
    Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    const Integer& leading() const;
    const std::vector<Integer>& coeffs() const { return c_; }

    Integer eval(const Integer& v) const;
    Polynomial derivative() const;
    Integer content() const;
    Polynomial pow(unsigned e) const;

    /// Human-readable form, e.g. "x^4 - 4*x^2 + 2".
    std::string str() const;
    /// "c0,c1,...,cn"
    std::string coeff_str(char sep = ',') const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

  private:
    void trim();
    std::vector<Integer> c_;
};

/// Determinant of a square integer matrix (fraction-free Bareiss elimination).
Integer determinant(std::vector<std::vector<Integer>> m);

/// Sylvester matrix with deg(q) rows of p coefficients followed by deg(p)
/// rows of q coefficients, leading coefficients first.
std::vector<std::vector<Integer>> sylvester_matrix(const Polynomial& p, const Polynomial& q);

/// Res(p, q) as the determinant of the Sylvester matrix. A constant argument
/// c gives c^(degree of the other). DomainError if either input is zero.
Integer resultant(const Polynomial& p, const Polynomial& q);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lead(f); requires deg f >= 1.
Integer discriminant(const Polynomial& f);

/// Exact division by a nonzero polynomial; nullopt unless the quotient has
/// integer coefficients and there is no remainder.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Searches for a factor of degree 1..max_degree using Kronecker's
/// interpolation method. f must be nonzero and primitive. Returns a factor g
/// with 1 <= deg g <= max_degree and g | f, or nullopt if none exists.
std::optional<Polynomial> find_small_factor(const Polynomial& f, int max_degree);

/// Exact irreducibility over Q for 1 <= deg f <= 4; nullopt for larger degrees.
std::optional<bool> is_irreducible_small(const Polynomial& f);

} // namespace fermat
