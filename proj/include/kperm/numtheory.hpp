#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kperm/bigint.hpp"

namespace kperm {

inline constexpr std::uint64_t kDefaultFactorBudget = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kDefaultFactorialCap = 10000;

struct PrimePower {
  BigInt prime;
  std::uint64_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes. Empty means 1.
struct Factorization {
  std::vector<PrimePower> factors;

  BigInt value() const;
  bool empty() const noexcept { return factors.empty(); }

  /// "p1^e1 * p2^e2 * ..." with primes ascending; "1" when empty.
  std::string to_string() const;
  /// Inverse of to_string(); exponents of 1 may be written bare ("5 * 7^3").
  static Factorization parse(const std::string& text);

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Outcome of a budgeted factorization: `known` lists every prime found and
/// `cofactor` is the unsplit remainder (1 when the factorization is complete).
/// Invariant: known.value() * cofactor equals the input.
struct FactorAttempt {
  Factorization known;
  BigInt cofactor = 1;

  bool complete() const { return cofactor == 1; }
};

/// Trial division by primes below 10^6, then seeded Pollard-Brent splitting.
/// `budget` bounds the total number of rho iterations across the call.
/// Deterministic: the same input and budget always give the same output.
FactorAttempt try_factorize(const BigInt& value, std::uint64_t budget = kDefaultFactorBudget);

/// Complete factorization or BudgetExhausted. Requires value >= 1.
Factorization factorize(const BigInt& value, std::uint64_t budget = kDefaultFactorBudget);

/// Largest prime in a nonempty factorization.
BigInt max_prime_factor(const Factorization& f);

bool is_prime(const BigInt& value);

/// Exponent of p in n!, by Legendre's formula.
std::uint64_t legendre_valuation(std::uint64_t n, const BigInt& p);

/// True iff the value with factorization `f` divides n!. Never forms n!.
bool divides_factorial(const Factorization& f, std::uint64_t n);

/// Exact n!, n <= cap.
BigInt factorial(std::uint64_t n, std::uint64_t cap = kDefaultFactorialCap);

}  // namespace kperm
