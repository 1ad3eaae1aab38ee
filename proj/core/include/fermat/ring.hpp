#pragma once

// Exact arithmetic in the maximal orders of the imaginary quadratic fields
// Q(sqrt(-d)), d in {1, 7, 19, 43, 67}.
//
// Elements are stored as integer coordinates (x, y) over the integral basis
// {1, w}, where w = sqrt(-1) for d = 1 and w = (1 + sqrt(-d))/2 for
// d = 3 (mod 4). In both cases w is a root of X^2 - t X + n with
// (t, n) = (0, d) or (1, (1 + d)/4). All of the supported fields have class
// number one, so every ideal is described by a single generator.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermat/arith.hpp"

namespace fermat {

enum class OmegaConvention
{
    Gaussian, ///< w = sqrt(-d), used for d = 1, 2 (mod 4)
    HalfTrace ///< w = (1 + sqrt(-d))/2, used for d = 3 (mod 4)
};

enum class SplitType
{
    Split,
    Inert,
    Ramified
};

std::string to_string(OmegaConvention c);
std::string to_string(SplitType s);

class QuadraticField
{
  public:
    /// One of the five fields the library is built for; DomainError otherwise.
    static QuadraticField supported(long d);

    /// Any squarefree d > 0. Used for comparison fields such as Q(sqrt(-2));
    /// arithmetic works, but lambda() is only defined when 3 is inert.
    static QuadraticField adhoc(long d);

    static const std::array<long, 5>& supported_ds();
    static std::vector<QuadraticField> all_supported();

    long d() const { return d_; }
    long disc() const;
    OmegaConvention omega_convention() const;
    /// Number of roots of unity in the maximal order.
    int unit_count() const;
    bool is_supported() const;

    /// Coefficients of the minimal polynomial X^2 - trace X + norm of w.
    long omega_trace() const;
    long omega_norm() const;

    std::string name() const;

    friend bool operator==(const QuadraticField&, const QuadraticField&) = default;

  private:
    explicit QuadraticField(long d) : d_(d) {}
    long d_;
};

class RingElement
{
  public:
    RingElement(const QuadraticField& field, Integer x, Integer y);

    static RingElement zero(const QuadraticField& field);
    static RingElement one(const QuadraticField& field);
    static RingElement omega(const QuadraticField& field);
    static RingElement from_integer(const QuadraticField& field, const Integer& n);

    /// Parses the "x,y" element syntax shared by all CLI surfaces.
    static RingElement parse(const QuadraticField& field, const std::string& text);

    const QuadraticField& field() const { return field_; }
    const Integer& x() const { return x_; }
    const Integer& y() const { return y_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_unit() const { return norm() == 1; }

    Integer norm() const;
    RingElement conj() const;
    RingElement pow(unsigned long e) const;
    RingElement scaled(const Integer& k) const;

    /// z / w when w divides z in the maximal order, nullopt otherwise.
    std::optional<RingElement> divide_exact(const RingElement& w) const;
    bool divisible_by(const RingElement& w) const;

    /// "x,y"
    std::string str() const;

    RingElement& operator+=(const RingElement& w);
    RingElement& operator-=(const RingElement& w);
    RingElement& operator*=(const RingElement& w);

    friend RingElement operator+(RingElement z, const RingElement& w) { return z += w; }
    friend RingElement operator-(RingElement z, const RingElement& w) { return z -= w; }
    friend RingElement operator*(RingElement z, const RingElement& w) { return z *= w; }
    friend RingElement operator-(const RingElement& z);
    friend bool operator==(const RingElement& z, const RingElement& w);

  private:
    void require_same_field(const RingElement& w) const;

    QuadraticField field_;
    Integer x_;
    Integer y_;
};

enum class ArithOp
{
    Add,
    Sub,
    Mul
};

/// Binary ring operation; DomainError on mixed-field operands.
RingElement element_arith(const RingElement& z, const RingElement& w, ArithOp op);

Integer norm(const RingElement& z);

/// The roots of unity of the maximal order, starting with 1.
std::vector<RingElement> units(const QuadraticField& field);

/// Associate with x >= 0 that is minimal in (x, y) lexicographic order.
RingElement canonical_associate(const RingElement& z);

/// An additive valuation value; zero has valuation +infinity.
class Valuation
{
  public:
    explicit Valuation(long v) : value_(v) {}
    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const { return !value_.has_value(); }
    /// Throws DomainError when infinite.
    long value() const;

    std::string str() const;

    friend Valuation operator+(const Valuation& a, const Valuation& b);
    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

  private:
    Valuation() = default;
    std::optional<long> value_;
};

/// Valuation at lambda = (3): the exponent of 3 dividing both coordinates.
Valuation val_lambda(const RingElement& z);

class PrimeIdeal
{
  public:
    /// Validates that (generator) is a prime ideal and stores its canonical
    /// associate. DomainError if the generator does not generate a prime.
    static PrimeIdeal from_generator(const RingElement& generator);

    std::uint64_t residue_char() const { return residue_char_; }
    const RingElement& generator() const { return generator_; }
    std::uint64_t norm() const { return norm_; }
    SplitType split_type() const { return split_type_; }
    const QuadraticField& field() const { return generator_.field(); }

    std::string str() const;

    friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b)
    {
        return a.generator_ == b.generator_;
    }

  private:
    PrimeIdeal(std::uint64_t p, RingElement g, std::uint64_t norm, SplitType s)
        : residue_char_(p), generator_(std::move(g)), norm_(norm), split_type_(s)
    {
    }

    std::uint64_t residue_char_;
    RingElement generator_;
    std::uint64_t norm_;
    SplitType split_type_;
};

/// The unique prime above 3. DomainError if 3 is not inert in the field.
PrimeIdeal lambda(const QuadraticField& field);

/// Exponent of q in (z); infinity for z = 0.
Valuation valuation(const RingElement& z, const PrimeIdeal& q);

/// Splitting of the rational prime p; DomainError if p is not prime.
SplitType splitting_type(const QuadraticField& field, std::uint64_t p);

/// Every prime ideal of norm <= bound, ordered by (norm, x, y) of the
/// canonical generator.
std::vector<PrimeIdeal> primes_up_to_norm(const QuadraticField& field, std::uint64_t bound);

/// A class in O_K / 3^m, coordinates reduced into [0, 3^m).
struct Residue
{
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    friend auto operator<=>(const Residue&, const Residue&) = default;
};

/// The finite ring O_K / 3^m for 1 <= m <= 4.
class ResidueRing
{
  public:
    ResidueRing(const QuadraticField& field, int m);

    const QuadraticField& field() const { return field_; }
    int exponent() const { return m_; }
    std::uint32_t modulus() const { return mod_; }
    std::uint64_t cardinality() const { return std::uint64_t(mod_) * mod_; }

    Residue reduce(const RingElement& z) const;
    Residue make(long x, long y) const;
    Residue one() const { return {1, 0}; }

    Residue add(Residue a, Residue b) const;
    Residue sub(Residue a, Residue b) const;
    Residue neg(Residue a) const;
    Residue mul(Residue a, Residue b) const;
    Residue pow(Residue a, const Integer& e) const;

    /// Units are exactly the classes of norm prime to 3, since 3 is inert.
    bool is_unit(Residue a) const;

    std::vector<Residue> elements() const;
    std::vector<Residue> units() const;

    /// Dense index x * 3^m + y, in [0, 9^m).
    std::uint32_t index(Residue a) const { return a.x * mod_ + a.y; }

  private:
    QuadraticField field_;
    int m_;
    std::uint32_t mod_;
};

ResidueRing residue_ring(const QuadraticField& field, int m);

/// Image of the global roots of unity in (O_K / 3^m)^x, sorted, distinct.
std::vector<Residue> unit_image_mod(const QuadraticField& field, int m);

} // namespace fermat
