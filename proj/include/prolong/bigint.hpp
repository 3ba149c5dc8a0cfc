#ifndef PROLONG_BIGINT_HPP
#define PROLONG_BIGINT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace prolong {

/// Arbitrary-precision nonnegative counter. All Hilbert, Ackermann and
/// Bezout values live here; machine integers are reserved for lattice
/// coordinates.
using BigCount = mpz_class;

/// Raised when a computed value would exceed the global bit-length cap.
/// The message names the offending subexpression.
class ValueExceedsLimit : public std::runtime_error {
public:
    explicit ValueExceedsLimit(const std::string& what_arg)
        : std::runtime_error("value exceeds bit cap: " + what_arg) {}
};

/// Raised when an enumeration or search exceeds its configured budget.
class EnumerationLimit : public std::runtime_error {
public:
    explicit EnumerationLimit(const std::string& what_arg)
        : std::runtime_error("enumeration budget exceeded: " + what_arg) {}
};

class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what_arg)
        : std::invalid_argument("dimension mismatch: " + what_arg) {}
};

/// A would-be antichain contained a comparable pair; positions refer to the
/// offending elements in the input list.
class ComparablePair : public std::invalid_argument {
public:
    ComparablePair(std::size_t first, std::size_t second)
        : std::invalid_argument("comparable pair at positions " +
                                std::to_string(first) + " and " +
                                std::to_string(second)),
          first_(first), second_(second) {}
    std::size_t first() const { return first_; }
    std::size_t second() const { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

/// Global bit-length cap on big-integer growth (default 2^24 bits).
/// Exceeding it raises ValueExceedsLimit instead of exhausting memory.
namespace bitcap {
std::uint64_t get();
void set(std::uint64_t bits);
/// RAII override, used by tests.
class Scoped {
public:
    explicit Scoped(std::uint64_t bits) : saved_(get()) { set(bits); }
    ~Scoped() { set(saved_); }
    Scoped(const Scoped&) = delete;
    Scoped& operator=(const Scoped&) = delete;

private:
    std::uint64_t saved_;
};
}  // namespace bitcap

std::uint64_t bit_length(const BigCount& x);

/// Throws ValueExceedsLimit naming `context` if x is wider than the cap.
void check_cap(const BigCount& x, const char* context);

/// 2^exp with a cap check before any allocation happens.
BigCount pow2_checked(const BigCount& exp, const char* context);

/// base^exp for base >= 2, capped.
BigCount pow_checked(const BigCount& base, const BigCount& exp, const char* context);

/// Exact binomial coefficient; k > n yields 0. n may be astronomically
/// large as long as the result fits the cap.
BigCount binomial(const BigCount& n, const BigCount& k);

/// Converts to uint64, throwing ValueExceedsLimit(context) when too wide.
std::uint64_t to_u64(const BigCount& x, const char* context);

}  // namespace prolong

#endif
