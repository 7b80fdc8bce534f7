#include "kperm/certifier.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "kperm/error.hpp"

namespace kperm {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t valuation(const BigInt& value, const BigInt& p) {
  BigInt rest;
  return mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t());
}

void validate(std::uint32_t n, std::uint64_t t) {
  if (n < 2) throw ValidationError("certify needs n >= 2");
  if (t > max_inversions(n)) {
    throw ValidationError("t = " + std::to_string(t) + " exceeds C(n,2) = " +
                          std::to_string(max_inversions(n)));
  }
}

// Applies both tests to the primes in `factors`. Returns true if one decided.
bool decide_from_factors(Certificate& c, const Factorization& factors) {
  if (!factors.empty() && max_prime_factor(factors) > c.n) {
    c.verdict = Verdict::NonexistentPrimeFactor;
    c.witness_prime = max_prime_factor(factors);
    return true;
  }
  for (const auto& [p, e] : factors.factors) {
    const std::uint64_t in_factorial = legendre_valuation(c.n, p);
    const std::uint64_t in_ball = valuation(c.ball, p);
    if (in_ball > in_factorial) {
      c.verdict = Verdict::NonexistentNotDividing;
      c.witness_prime = p;
      c.witness_exponents = {in_ball, in_factorial};
      return true;
    }
  }
  return false;
}

void set_inconclusive(Certificate& c, const CertifyOptions& options) {
  c.verdict = Verdict::Inconclusive;
  if (c.n <= options.factorial_cap) {
    c.quotient = exact_div(factorial(c.n, options.factorial_cap), c.ball);
  } else {
    c.degraded = true;
  }
}

// B^n(t) via the truncated recurrence; the cap only guards large radii.
BigInt recompute_ball(std::uint32_t n, std::uint64_t t, const CertifyOptions& options) {
  const std::uint32_t cap = t <= 5 ? std::max(n, options.table_cap) : options.table_cap;
  return ball_size_dp(n, t, cap);
}

struct Family {
  const char* name;
  BigInt value;
};

std::vector<Family> families(std::uint32_t n, std::uint64_t t) {
  const BigInt x = n;
  switch (t) {
    case 2:
      return {{"n+2", x + 2}, {"n-1", x - 1}};
    case 3:
      return {{"n+1", x + 1}, {"n^2+2n-6", x * x + 2 * x - 6}};
    case 4:
      return {{"n+1", x + 1}, {"n+2", x + 2}, {"n^2+3n-12", x * x + 3 * x - 12}};
    case 5:
      return {{"n+7", x + 7}, {"n", x}, {"n^3+3n^2-6n-28", x * x * x + 3 * x * x - 6 * x - 28}};
    default:
      return {};
  }
}

ordered_json optional_decimal(const std::optional<BigInt>& v) {
  return v ? ordered_json(to_decimal(*v)) : ordered_json(nullptr);
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::NonexistentPrimeFactor:
      return "NONEXISTENT_PRIME_FACTOR";
    case Verdict::NonexistentNotDividing:
      return "NONEXISTENT_NOT_DIVIDING";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Verdict parse_verdict(std::string_view text) {
  for (auto v : {Verdict::NonexistentPrimeFactor, Verdict::NonexistentNotDividing,
                 Verdict::Inconclusive}) {
    if (to_string(v) == text) return v;
  }
  throw ValidationError("unknown verdict '" + std::string(text) + "'");
}

Certificate certify(std::uint32_t n, std::uint64_t t, const CertifyOptions& options) {
  validate(n, t);
  Certificate c;
  c.n = n;
  c.t = t;
  c.ball = ball_size_for(n, t, options.table_cap);

  FactorAttempt attempt = try_factorize(c.ball, options.factor_budget);
  if (attempt.complete()) {
    c.factorization = attempt.known;
    if (!decide_from_factors(c, attempt.known)) set_inconclusive(c, options);
    return c;
  }

  // Unfactored cofactor: use the primes we have, then a direct remainder test.
  c.degraded = true;
  if (decide_from_factors(c, attempt.known)) return c;
  if (n <= options.factorial_cap) {
    const BigInt remainder = factorial(n, options.factorial_cap) % c.ball;
    if (remainder != 0) {
      c.verdict = Verdict::NonexistentNotDividing;
      return c;
    }
  }
  set_inconclusive(c, options);
  return c;
}

std::vector<ScanEntry> scan(std::uint64_t t, std::uint32_t n_from, std::uint32_t n_to,
                            const CertifyOptions& options, unsigned jobs) {
  if (n_from > n_to) throw ValidationError("scan range is empty (from > to)");
  if (n_from < 1) throw ValidationError("scan needs n_from >= 1");
  std::vector<ScanEntry> entries(n_to - n_from + 1);
  auto run = [&](std::size_t k) {
    ScanEntry& e = entries[k];
    e.n = static_cast<std::uint32_t>(n_from + k);
    e.t = t;
    try {
      e.certificate = certify(e.n, t, options);
    } catch (const BudgetExhausted& ex) {
      e.error = ex.what();
      e.budget_exhausted = true;
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
  };
  if (jobs <= 1) {
    for (std::size_t k = 0; k < entries.size(); ++k) run(k);
    return entries;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t k = next++; k < entries.size(); k = next++) run(k);
    });
  }
  for (auto& w : workers) w.join();
  return entries;
}

bool check_certificate(const Certificate& c, const CertifyOptions& options) {
  try {
    if (c.n < 2 || c.t > max_inversions(c.n)) return false;
    if (recompute_ball(c.n, c.t, options) != c.ball) return false;

    if (c.factorization) {
      const auto& fs = c.factorization->factors;
      for (std::size_t k = 0; k < fs.size(); ++k) {
        if (!is_prime(fs[k].prime) || fs[k].exponent == 0) return false;
        if (k > 0 && fs[k - 1].prime >= fs[k].prime) return false;
      }
      if (c.factorization->value() != c.ball || c.degraded) return false;
    } else if (!c.degraded) {
      return false;
    }

    // What a full factorization says about each test, when we have one.
    const bool has_big_prime =
        c.factorization && !c.factorization->empty() && max_prime_factor(*c.factorization) > c.n;
    const bool factors_divide = c.factorization && divides_factorial(*c.factorization, c.n);

    switch (c.verdict) {
      case Verdict::NonexistentPrimeFactor: {
        if (!c.witness_prime || c.witness_exponents || c.quotient) return false;
        const BigInt& p = *c.witness_prime;
        return is_prime(p) && p > c.n && mpz_divisible_p(c.ball.get_mpz_t(), p.get_mpz_t());
      }
      case Verdict::NonexistentNotDividing: {
        if (c.quotient || has_big_prime) return false;
        if (c.factorization && factors_divide) return false;
        if (c.witness_prime) {
          const BigInt& p = *c.witness_prime;
          if (!c.witness_exponents || !is_prime(p) || p > c.n) return false;
          const std::uint64_t in_ball = valuation(c.ball, p);
          const std::uint64_t in_factorial = legendre_valuation(c.n, p);
          return c.witness_exponents->first == in_ball &&
                 c.witness_exponents->second == in_factorial && in_ball > in_factorial;
        }
        if (c.witness_exponents || !c.degraded || c.n > options.factorial_cap) return false;
        return factorial(c.n, options.factorial_cap) % c.ball != 0;
      }
      case Verdict::Inconclusive: {
        if (c.witness_prime || c.witness_exponents || has_big_prime) return false;
        if (c.factorization && !factors_divide) return false;
        if (c.quotient) {
          if (c.n > options.factorial_cap) return false;
          return *c.quotient * c.ball == factorial(c.n, options.factorial_cap);
        }
        return c.degraded && c.n > options.factorial_cap;
      }
    }
    return false;
  } catch (const std::exception&) {
    return false;
  }
}

std::string witness_family(const Certificate& c) {
  if (!c.witness_prime || c.t < 2 || c.t > 5) return {};
  if (c.n < ball_closed_form_min_n(static_cast<int>(c.t))) return {};
  for (const auto& [name, value] : families(c.n, c.t)) {
    if (value != 0 && mpz_divisible_p(value.get_mpz_t(), c.witness_prime->get_mpz_t())) {
      return name;
    }
  }
  return {};
}

std::string to_record(const Certificate& c) {
  ordered_json j;
  j["n"] = c.n;
  j["t"] = c.t;
  j["ball"] = to_decimal(c.ball);
  j["factorization"] = c.factorization ? c.factorization->to_string() : "unfactored";
  j["verdict"] = to_string(c.verdict);
  j["witness_prime"] = optional_decimal(c.witness_prime);
  j["witness_exponents"] =
      c.witness_exponents
          ? ordered_json::array({c.witness_exponents->first, c.witness_exponents->second})
          : ordered_json(nullptr);
  j["quotient"] = optional_decimal(c.quotient);
  j["degraded"] = c.degraded;
  return j.dump();
}

std::string to_record(const ScanEntry& e) {
  if (e.certificate) return to_record(*e.certificate);
  ordered_json j;
  j["n"] = e.n;
  j["t"] = e.t;
  j["error"] = e.error;
  return j.dump();
}

Certificate parse_record(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed certificate record: ") + ex.what());
  }
  try {
    Certificate c;
    c.n = j.at("n").get<std::uint32_t>();
    c.t = j.at("t").get<std::uint64_t>();
    c.ball = parse_decimal(j.at("ball").get<std::string>());
    const auto factorization = j.at("factorization").get<std::string>();
    if (factorization != "unfactored") c.factorization = Factorization::parse(factorization);
    c.verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (!j.at("witness_prime").is_null()) {
      c.witness_prime = parse_decimal(j.at("witness_prime").get<std::string>());
    }
    if (const auto& e = j.at("witness_exponents"); !e.is_null()) {
      c.witness_exponents = {e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint64_t>()};
    }
    if (!j.at("quotient").is_null()) c.quotient = parse_decimal(j.at("quotient").get<std::string>());
    c.degraded = j.at("degraded").get<bool>();
    return c;
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed certificate record: ") + ex.what());
  }
}

std::string to_pretty(const Certificate& c) {
  std::ostringstream out;
  out << "B(" << c.n << ',' << c.t << ") = " << to_decimal(c.ball);
  if (c.factorization) {
    out << " = " << c.factorization->to_string();
  } else {
    out << " (unfactored)";
  }
  out << ": ";
  switch (c.verdict) {
    case Verdict::NonexistentPrimeFactor: {
      out << "no perfect " << c.t << "-error-correcting code in S_" << c.n << ", prime factor "
          << to_decimal(*c.witness_prime) << " > " << c.n;
      if (const auto family = witness_family(c); !family.empty()) out << " (divides " << family << ')';
      break;
    }
    case Verdict::NonexistentNotDividing:
      out << "no perfect " << c.t << "-error-correcting code in S_" << c.n << ", ball does not divide "
          << c.n << '!';
      if (c.witness_prime) {
        out << " (" << to_decimal(*c.witness_prime) << " has exponent " << c.witness_exponents->first
            << " in the ball, " << c.witness_exponents->second << " in " << c.n << "!)";
      }
      break;
    case Verdict::Inconclusive:
      out << "inconclusive, ball divides " << c.n << '!';
      if (c.quotient) out << " with quotient " << to_decimal(*c.quotient);
      break;
  }
  if (c.degraded) out << " [degraded evidence]";
  return out.str();
}

}  // namespace kperm
