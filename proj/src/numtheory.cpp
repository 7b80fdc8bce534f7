#include "kperm/numtheory.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>

#include "kperm/error.hpp"

namespace kperm {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;
constexpr std::uint64_t kRhoSeed = 0x6b656e64616c6c00ULL;
constexpr std::uint64_t kRhoBatch = 128;

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool fits_u64(const BigInt& v) { return mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const BigInt& v) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

BigInt from_u64(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Brent's variant of Pollard rho on a 64-bit composite. Returns a nontrivial
// divisor, or 0 when this (x0, c) pair fails or the budget runs out.
std::uint64_t rho_u64(std::uint64_t n, std::uint64_t x0, std::uint64_t c, std::uint64_t& budget) {
  auto f = [n, c](std::uint64_t x) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * x + c) % n);
  };
  std::uint64_t y = x0, x = x0, ys = x0, q = 1, g = 1;
  for (std::uint64_t r = 1; g == 1; r *= 2) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kRhoBatch) {
      ys = y;
      const std::uint64_t steps = std::min(kRhoBatch, r - k);
      if (budget < steps) return 0;
      budget -= steps;
      for (std::uint64_t i = 0; i < steps; ++i) {
        y = f(y);
        const std::uint64_t diff = x > y ? x - y : y - x;
        q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(q) * diff) % n);
      }
      g = gcd_u64(q, n);
    }
  }
  if (g == n) {
    do {
      if (budget == 0) return 0;
      --budget;
      ys = f(ys);
      g = gcd_u64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

BigInt rho_big(const BigInt& n, const BigInt& x0, const BigInt& c, std::uint64_t& budget) {
  mpz_srcptr nn = n.get_mpz_t();
  auto f = [nn, &c](BigInt& v) {
    mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
    mpz_add(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), nn);
  };
  BigInt y = x0, x = x0, ys = x0, q = 1, g = 1, diff;
  for (std::uint64_t r = 1; g == 1; r *= 2) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kRhoBatch) {
      ys = y;
      const std::uint64_t steps = std::min(kRhoBatch, r - k);
      if (budget < steps) return 0;
      budget -= steps;
      for (std::uint64_t i = 0; i < steps; ++i) {
        f(y);
        mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), nn);
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), nn);
    }
  }
  if (g == n) {
    do {
      if (budget == 0) return 0;
      --budget;
      f(ys);
      mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), nn);
    } while (g == 1);
  }
  return g == n ? BigInt(0) : g;
}

class Splitter {
 public:
  explicit Splitter(std::uint64_t budget) : budget_(budget), rng_(kRhoSeed) {}

  void add(const BigInt& p, std::uint64_t e) { found_[p] += e; }

  // Fully splits `m` (no prime factors below the trial limit) or parks the
  // unsplit part in the cofactor.
  void split(const BigInt& m, std::uint64_t multiplicity) {
    if (m == 1) return;
    if (is_prime(m)) {
      add(m, multiplicity);
      return;
    }
    const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    for (unsigned long k = bits / 20 + 1; k >= 2; --k) {
      BigInt root;
      if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
        split(root, multiplicity * k);
        return;
      }
    }
    const BigInt d = find_divisor(m);
    if (d == 0) {
      for (std::uint64_t i = 0; i < multiplicity; ++i) cofactor_ *= m;
      return;
    }
    split(d, multiplicity);
    split(m / d, multiplicity);
  }

  FactorAttempt finish() && {
    FactorAttempt out;
    for (auto& [p, e] : found_) out.known.factors.push_back({p, e});
    out.cofactor = std::move(cofactor_);
    return out;
  }

 private:
  BigInt find_divisor(const BigInt& m) {
    const bool small = fits_u64(m);
    while (budget_ > 0) {
      if (small) {
        const std::uint64_t n = to_u64(m);
        const std::uint64_t x0 = rng_() % n;
        const std::uint64_t c = rng_() % (n - 1) + 1;
        if (const auto d = rho_u64(n, x0, c, budget_); d != 0) return from_u64(d);
      } else {
        const BigInt x0 = from_u64(rng_()) % m;
        const BigInt c = from_u64(rng_()) % (m - 1) + 1;
        if (BigInt d = rho_big(m, x0, c, budget_); d != 0) return d;
      }
    }
    return 0;
  }

  std::uint64_t budget_;
  std::mt19937_64 rng_;
  std::map<BigInt, std::uint64_t> found_;
  BigInt cofactor_ = 1;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigInt Factorization::value() const {
  BigInt v = 1;
  for (const auto& [p, e] : factors) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e);
    v *= power;
  }
  return v;
}

std::string Factorization::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out << " * ";
    out << to_decimal(factors[k].prime) << '^' << factors[k].exponent;
  }
  return out.str();
}

Factorization Factorization::parse(const std::string& text) {
  Factorization f;
  std::string_view rest = trim(text);
  if (rest == "1") return f;
  while (true) {
    const auto star = rest.find('*');
    const std::string_view term = trim(rest.substr(0, star));
    const auto caret = term.find('^');
    PrimePower pp;
    pp.prime = parse_decimal(trim(term.substr(0, caret)));
    pp.exponent = 1;
    if (caret != std::string_view::npos) {
      const BigInt e = parse_decimal(trim(term.substr(caret + 1)));
      if (e < 1 || !e.fits_ulong_p()) throw ValidationError("bad exponent in '" + text + "'");
      pp.exponent = e.get_ui();
    }
    if (pp.prime < 2) throw ValidationError("bad prime in '" + text + "'");
    if (!f.factors.empty() && f.factors.back().prime >= pp.prime) {
      throw ValidationError("primes must be strictly increasing in '" + text + "'");
    }
    f.factors.push_back(std::move(pp));
    if (star == std::string_view::npos) break;
    rest.remove_prefix(star + 1);
  }
  return f;
}

bool is_prime(const BigInt& value) {
  if (value < 2) return false;
  return mpz_probab_prime_p(value.get_mpz_t(), 30) > 0;
}

FactorAttempt try_factorize(const BigInt& value, std::uint64_t budget) {
  if (value < 1) throw ValidationError("factorize needs a positive integer");
  Splitter splitter(budget);
  BigInt m = value;
  BigInt root = sqrt(m);
  // Once the small primes are gone a prime remainder ends the search early.
  constexpr std::uint32_t kPrimalityCheckFrom = 1000;
  bool checked_prime = false;
  bool exhausted_trial = true;
  const auto& primes = trial_primes();
  std::uint64_t block_rem = 0;
  for (std::size_t k = 0; k < primes.size() && m > 1; ++k) {
    const std::uint32_t p = primes[k];
    if (mpz_cmp_ui(root.get_mpz_t(), p) < 0) {
      exhausted_trial = false;
      break;
    }
    if (p > kPrimalityCheckFrom && !checked_prime) {
      checked_prime = true;
      if (is_prime(m)) {
        exhausted_trial = false;
        break;
      }
    }
    // One multi-limb remainder screens a block of three primes.
    if (k % 3 == 0) {
      block_rem = 0;
      std::uint64_t modulus = 1;
      for (std::size_t j = k; j < std::min(k + 3, primes.size()); ++j) modulus *= primes[j];
      block_rem = mpz_tdiv_ui(m.get_mpz_t(), modulus);
    }
    if (block_rem % p != 0) continue;
    std::uint64_t e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    splitter.add(p, e);
    root = sqrt(m);
    if (p > kPrimalityCheckFrom) checked_prime = false;
  }
  if (m > 1) {
    if (exhausted_trial) {
      splitter.split(m, 1);
    } else {
      splitter.add(m, 1);
    }
  }
  return std::move(splitter).finish();
}

Factorization factorize(const BigInt& value, std::uint64_t budget) {
  FactorAttempt attempt = try_factorize(value, budget);
  if (!attempt.complete()) {
    throw BudgetExhausted("factorization budget exhausted; unfactored cofactor " +
                          to_decimal(attempt.cofactor));
  }
  return std::move(attempt.known);
}

BigInt max_prime_factor(const Factorization& f) {
  if (f.empty()) throw ValidationError("empty factorization has no prime factor");
  return f.factors.back().prime;
}

std::uint64_t legendre_valuation(std::uint64_t n, const BigInt& p) {
  if (p < 2) throw ValidationError("valuation base must be at least 2");
  if (p > n) return 0;
  const std::uint64_t base = p.get_ui();
  std::uint64_t total = 0;
  for (std::uint64_t q = n / base; q > 0; q /= base) total += q;
  return total;
}

bool divides_factorial(const Factorization& f, std::uint64_t n) {
  return std::all_of(f.factors.begin(), f.factors.end(), [n](const PrimePower& pp) {
    return pp.exponent <= legendre_valuation(n, pp.prime);
  });
}

BigInt factorial(std::uint64_t n, std::uint64_t cap) {
  if (n > cap) {
    throw ValidationError("factorial argument " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
  }
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace kperm
