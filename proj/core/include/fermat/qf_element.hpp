#pragma once

// Elements of a number field Q_f = Q[x]/(g) given by an integer defining
// polynomial g, stored as rational coordinates over the power basis
// 1, x, ..., x^(deg g - 1).

#include <complex>
#include <string>
#include <vector>

#include "fermat/poly.hpp"

namespace fermat {

class QfElement
{
  public:
    /// coords are reduced modulo the defining polynomial, so any length works.
    QfElement(Polynomial modulus, std::vector<Rational> coords);
    static QfElement from_integer(const Polynomial& modulus, const Integer& n);

    const Polynomial& modulus() const { return modulus_; }
    /// Exactly deg(modulus) coordinates.
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;

    /// Value at a complex root of the modulus.
    std::complex<long double> embed(std::complex<long double> root) const;

    /// "r0,r1,..." with rationals as num/den.
    std::string str() const;

    friend QfElement operator+(const QfElement& a, const QfElement& b);
    friend QfElement operator-(const QfElement& a, const QfElement& b);
    friend QfElement operator*(const QfElement& a, const QfElement& b);
    friend bool operator==(const QfElement& a, const QfElement& b);

  private:
    Polynomial modulus_;
    std::vector<Rational> coords_;
};

/// Field norm N_{Q_f/Q}(z) = Res(g, Z) / lead(g)^deg(Z), where Z is the
/// polynomial representative of z. Exact.
Rational norm_qf(const QfElement& z);

/// All complex roots of a nonconstant polynomial (Durand-Kerner iteration in
/// long double), with multiplicity.
std::vector<std::complex<long double>> complex_roots(const Polynomial& f);

} // namespace fermat
