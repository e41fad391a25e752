#pragma once

#include <stdexcept>

#include "mahonia/exact_int.hpp"

namespace mahonia {

/// Thrown when a brute-force enumeration would exceed its cost guard.
class resource_guard_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Throws resource_guard_error when `cost` (number of objects that would be
/// enumerated) exceeds the effective limit. The limit is `fallback` unless the
/// environment variable MAHONIA_MAX_BRUTE is set to a nonnegative integer, in
/// which case that value replaces it. The override is intended for tests.
void check_enumeration_guard(const char* what, const ExactInt& cost, unsigned long fallback);

}  // namespace detail

}  // namespace mahonia
