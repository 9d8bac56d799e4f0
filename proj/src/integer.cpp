#include "propmod/integer.hpp"

#include <algorithm>
#include <limits>

namespace propmod {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

std::int64_t narrow(Int v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("value does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

Int mod_reduce(Int a, Int b) {
  if (b <= 0) throw std::invalid_argument("modulus must be positive");
  Int r = a % b;
  return r < 0 ? r + b : r;
}

Int floor_div(Int a, Int b) {
  if (b == 0) throw std::invalid_argument("division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) {
  if (b == 0) throw std::invalid_argument("division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

Int gcd(Int a, Int b) {
  if (a < 0) a = checked_neg(a);
  if (b < 0) b = checked_neg(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd(a, b);
  Int r = checked_mul(a / g, b);
  return r < 0 ? checked_neg(r) : r;
}

Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = checked_sub(old_r, checked_mul(q, r));
    old_r = r;
    r = tmp;
    tmp = checked_sub(old_s, checked_mul(q, s));
    old_s = s;
    s = tmp;
    tmp = checked_sub(old_t, checked_mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

std::string to_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Work with negative values so the minimum is representable.
  std::string out;
  Int n = neg ? v : -v;
  while (n != 0) {
    int digit = static_cast<int>(-(n % 10));
    out.push_back(static_cast<char>('0' + digit));
    n /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Int parse_int(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("malformed integer '" + text + "'");
  Int v = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("malformed integer '" + text + "'");
    v = checked_add(checked_mul(v, 10), c - '0');
  }
  return neg ? -v : v;
}

}  // namespace propmod
