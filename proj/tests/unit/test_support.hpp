#pragma once

// Shared helpers for the test suites: a seeded generator of ring elements
// and polynomials, and access to the bundled data directory.

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "fermat/poly.hpp"
#include "fermat/ring.hpp"

namespace fermat::test {

inline constexpr std::uint64_t kSeed = 0x5eed2024;

class Gen
{
  public:
    explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    RingElement element(const QuadraticField& f, long bound)
    {
        return {f, Integer(integer(-bound, bound)), Integer(integer(-bound, bound))};
    }

    RingElement nonzero_element(const QuadraticField& f, long bound)
    {
        for (;;) {
            RingElement z = element(f, bound);
            if (!z.is_zero())
                return z;
        }
    }

    /// Element with lambda not dividing it.
    RingElement lambda_unit(const QuadraticField& f, long bound)
    {
        for (;;) {
            RingElement z = element(f, bound);
            if (!z.is_zero() && val_lambda(z).value() == 0)
                return z;
        }
    }

    Polynomial polynomial(int degree, long bound)
    {
        std::vector<Integer> c;
        for (int i = 0; i <= degree; ++i)
            c.emplace_back(integer(-bound, bound));
        while (c.back() == 0)
            c.back() = integer(-bound, bound);
        return Polynomial(std::move(c));
    }

    Polynomial monic(int degree, long bound)
    {
        std::vector<Integer> c;
        for (int i = 0; i < degree; ++i)
            c.emplace_back(integer(-bound, bound));
        c.emplace_back(1);
        return Polynomial(std::move(c));
    }

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

inline std::string data_path(const std::string& rel) { return std::string(FERMAT_DATA_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace fermat::test
