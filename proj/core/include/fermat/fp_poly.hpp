#pragma once

// Polynomials over the prime field F_p for word-size p, with the pieces of
// factorization needed to read splitting shapes: squarefree decomposition
// and distinct-degree factorization.

#include <cstdint>
#include <utility>
#include <vector>

#include "fermat/poly.hpp"

namespace fermat {

class FpPoly
{
  public:
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    /// Reduction of an integer polynomial mod p.
    static FpPoly reduce(const Polynomial& f, std::uint64_t p);
    static FpPoly constant(std::uint64_t p, std::uint64_t c);
    static FpPoly x(std::uint64_t p);

    std::uint64_t prime() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    FpPoly monic() const;
    FpPoly derivative() const;

    /// Lift to integer coefficients in [0, p).
    Polynomial lift() const;

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly&, const FpPoly&) = default;

  private:
    void trim();
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly operator/(const FpPoly& a, const FpPoly& b);

/// Monic gcd (zero if both inputs are zero).
FpPoly gcd(FpPoly a, FpPoly b);

/// base^e mod m.
FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m);

/// Squarefree decomposition of a nonzero polynomial: pairs (s_i, i) with s_i
/// monic squarefree, pairwise coprime, nonconstant and f = lc * prod s_i^i.
std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly& f);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (d, g_d) where g_d is the product of all irreducible factors of degree d.
std::vector<std::pair<unsigned, FpPoly>> distinct_degree_factorization(const FpPoly& f);

/// Degrees of the irreducible factors with their multiplicities, as
/// (degree, multiplicity) pairs sorted ascending. f must be nonzero.
std::vector<std::pair<unsigned, unsigned>> factor_shape(const FpPoly& f);

} // namespace fermat
