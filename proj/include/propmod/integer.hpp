#pragma once

// Checked 128-bit integer arithmetic shared by every module.
//
// Coordinates and coefficients are stored as 64-bit values; every
// intermediate product or sum is formed in 128 bits and checked. Results
// that must be stored again are narrowed with `narrow`, which also checks.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace propmod {

using Int = __int128;

/// Raised when a computation leaves the representable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when a computation cannot be completed (size caps, broken
/// internal certificates, inputs outside an operation's hypothesis).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

std::int64_t narrow(Int v);

/// Euclidean remainder: result in [0, b) for every sign of `a`.
/// Throws std::invalid_argument when b <= 0.
Int mod_reduce(Int a, Int b);

/// Floor and ceiling of a / b for b != 0.
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

/// Non-negative gcd; gcd(0, 0) = 0.
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

/// Bezout coefficients: returns g = gcd(a, b) >= 0 with a*x + b*y = g.
Int ext_gcd(Int a, Int b, Int& x, Int& y);

std::string to_string(Int v);
Int parse_int(const std::string& text);

}  // namespace propmod
