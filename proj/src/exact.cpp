#include "isoperim/exact.hpp"

#include <stdexcept>

#include "isoperim/errors.hpp"

namespace isop {

std::uint64_t isqrt(std::uint64_t x) {
  if (x < 2) return x;
  // Start above the root; Newton's iteration then decreases monotonically to floor(sqrt(x)).
  int bits = 64 - __builtin_clzll(x);
  std::uint64_t r = std::uint64_t{1} << ((bits + 1) / 2);
  for (;;) {
    std::uint64_t next = (r + x / r) / 2;
    if (next >= r) break;
    r = next;
  }
  return r;
}

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw DomainError("isqrt of negative value " + std::to_string(x));
  return static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(x)));
}

std::int64_t ceil_sqrt(std::int64_t x) {
  std::int64_t r = isqrt(x);
  return r * r == x ? r : r + 1;
}

bool is_perfect_square(std::int64_t x) {
  if (x < 0) return false;
  std::int64_t r = isqrt(x);
  return r * r == x;
}

std::int64_t binom2(std::int64_t x) {
  // One of x, x-1 is even, so divide that one first.
  if (x % 2 == 0) return checked_mul(x / 2, x - 1);
  return checked_mul(x, (x - 1) / 2);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

}  // namespace isop
