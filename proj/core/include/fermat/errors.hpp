#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

/// Precondition violated by the caller (bad field, out-of-range parameter,
/// mixed-field operands).
class DomainError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or inconsistent input data. Carries the 1-based line number of
/// the offending input when one is known (0 otherwise).
class DataError : public std::runtime_error
{
  public:
    explicit DataError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Two independent computations of the same quantity disagreed, or a
/// valuation pattern arose that cannot occur for a primitive solution.
class ConsistencyError : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

} // namespace fermat
