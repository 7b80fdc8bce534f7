#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kperm/bigint.hpp"
#include "kperm/mahonian.hpp"
#include "kperm/numtheory.hpp"

namespace kperm {

enum class Verdict {
  /// The ball size has a prime factor p > n, so it cannot divide n!.
  NonexistentPrimeFactor,
  /// Some prime occurs in the ball size more often than in n!.
  NonexistentNotDividing,
  /// The ball size divides n!; the sphere-packing test says nothing.
  Inconclusive,
};

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct CertifyOptions {
  std::uint64_t factor_budget = kDefaultFactorBudget;
  std::uint32_t table_cap = kDefaultTableCap;
  std::uint64_t factorial_cap = kDefaultFactorialCap;
};

/// Verdict on whether a perfect t-error-correcting code in S_n can exist,
/// together with everything needed to re-check it from (n, t) alone.
struct Certificate {
  std::uint32_t n = 0;
  std::uint64_t t = 0;
  BigInt ball;
  /// nullopt when the factorization budget ran out ("unfactored").
  std::optional<Factorization> factorization;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<BigInt> witness_prime;
  /// (exponent in ball, exponent in n!) for NonexistentNotDividing.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness_exponents;
  /// n! / ball, present exactly when ball divides n!.
  std::optional<BigInt> quotient;
  /// Set when the verdict was reached without a complete factorization.
  bool degraded = false;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Applies the prime-factor test, then the Legendre divisibility test, to
/// B^n(t). Requires n >= 2 and t <= n(n-1)/2; t >= 6 (or n below a closed
/// form's threshold) additionally requires n <= table_cap.
Certificate certify(std::uint32_t n, std::uint64_t t, const CertifyOptions& options = {});

/// One scan slot: a certificate, or the error that prevented one.
struct ScanEntry {
  std::uint32_t n = 0;
  std::uint64_t t = 0;
  std::optional<Certificate> certificate;
  std::string error;
  bool budget_exhausted = false;
};

/// certify(n, t) for n_from <= n <= n_to, in order. Errors are captured per
/// entry. `jobs` > 1 evaluates entries on worker threads.
std::vector<ScanEntry> scan(std::uint64_t t, std::uint32_t n_from, std::uint32_t n_to,
                            const CertifyOptions& options = {}, unsigned jobs = 1);

/// Independent re-verification: recomputes the ball with the truncated
/// recurrence, checks the factorization, the witness and the verdict.
bool check_certificate(const Certificate& c, const CertifyOptions& options = {});

/// Which polynomial factor of the t = 2..5 closed form the witness prime
/// divides, e.g. "n+2" or "n^2+2n-6". Empty when not applicable.
std::string witness_family(const Certificate& c);

/// One-line JSON record with fields n, t, ball, factorization, verdict,
/// witness_prime, witness_exponents, quotient, degraded in that order.
std::string to_record(const Certificate& c);
std::string to_record(const ScanEntry& e);
Certificate parse_record(std::string_view line);

/// Human-readable sentence for the certificate.
std::string to_pretty(const Certificate& c);

}  // namespace kperm
