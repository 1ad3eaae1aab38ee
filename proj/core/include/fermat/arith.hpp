#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fermat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Deterministic primality for 64-bit inputs (Miller-Rabin with a fixed base
/// set that is exact below 2^64).
bool is_prime(std::uint64_t n);

/// Primality for arbitrary integers; exact below 2^64, BPSW-strength above.
bool is_prime(const Integer& n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// All primes <= bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// floor(sqrt(n)) for n >= 0.
std::uint64_t isqrt(std::uint64_t n);

/// Kronecker symbol (a/n).
int kronecker(const Integer& a, const Integer& n);

/// Prime factorization of |n| as prime -> exponent. Trial division to 10^6
/// followed by Pollard-Brent rho on the cofactor. n = 0 yields an empty map.
std::map<Integer, unsigned> factorize(const Integer& n);

/// Renders a factorization as "2^6 * 3^4"; "1" for the empty product.
std::string format_factorization(const std::map<Integer, unsigned>& f);

/// Largest prime in the factorization, 0 if there is none.
Integer max_prime(const std::map<Integer, unsigned>& f);

/// Parses a signed decimal integer; throws DataError on anything else.
Integer parse_integer(const std::string& text);

/// Parses "num" or "num/den" (den > 0); result is canonicalized.
Rational parse_rational(const std::string& text);

} // namespace fermat
