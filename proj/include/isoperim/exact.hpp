#pragma once

#include <cstdint>

namespace isop {

// Floor of the square root, by integer Newton iteration.
std::uint64_t isqrt(std::uint64_t x);

// Floor square root of a nonnegative value; DomainError if x < 0.
std::int64_t isqrt(std::int64_t x);

// Smallest r with r*r >= x; DomainError if x < 0.
std::int64_t ceil_sqrt(std::int64_t x);

bool is_perfect_square(std::int64_t x);

// x*(x-1)/2, valid for any integer x (zero for x in {0, 1}).
std::int64_t binom2(std::int64_t x);

// Overflow-checked arithmetic; throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace isop
