#pragma once

#include <cstdint>
#include <stdexcept>

namespace bcr {

class CountOverflow : public std::overflow_error {
 public:
  CountOverflow() : std::overflow_error("crossing count exceeds 64 bits") {}
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CountOverflow();
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CountOverflow();
  return r;
}

}  // namespace bcr
