#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "kperm/error.hpp"

namespace kperm {

/// Arbitrary-precision signed integer used for every count in the library.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

/// Parses a plain decimal string (optional leading '-', digits only).
BigInt parse_decimal(std::string_view text);

/// Divides `numerator` by `denominator`, throwing std::logic_error if the
/// remainder is nonzero. Closed-form polynomials rely on this.
BigInt exact_div(const BigInt& numerator, const BigInt& denominator);

}  // namespace kperm
