#include "doctest.h"

#include "kperm/certifier.hpp"
#include "kperm/error.hpp"
#include "oracles.hpp"

using namespace kperm;

namespace {

bool nonexistent(const Certificate& c) { return c.verdict != Verdict::Inconclusive; }

bool prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("certify (13,3) fails divisibility at 7") {
  const auto c = certify(13, 3);
  CHECK(c.ball == 441);
  REQUIRE(c.factorization);
  CHECK(c.factorization->to_string() == "3^2 * 7^2");
  CHECK(c.verdict == Verdict::NonexistentNotDividing);
  CHECK(c.witness_prime == BigInt(7));
  CHECK(c.witness_exponents == std::pair<std::uint64_t, std::uint64_t>{2, 1});
  CHECK_FALSE(c.quotient);
  CHECK_FALSE(c.degraded);
}

TEST_CASE("certify other fixed points") {
  const auto c52 = certify(5, 2);
  CHECK(c52.ball == 14);
  CHECK(c52.verdict == Verdict::NonexistentPrimeFactor);
  CHECK(c52.witness_prime == BigInt(7));
  CHECK_FALSE(c52.witness_exponents);

  const auto c263 = certify(26, 3);
  CHECK(c263.ball == 3249);
  CHECK(c263.factorization->to_string() == "3^2 * 19^2");
  CHECK(c263.verdict == Verdict::NonexistentNotDividing);
  CHECK(c263.witness_prime == BigInt(19));
  CHECK(c263.witness_exponents == std::pair<std::uint64_t, std::uint64_t>{2, 1});

  const auto c134 = certify(13, 4);
  CHECK(c134.ball == 1715);
  CHECK(c134.factorization->to_string() == "5^1 * 7^3");
  CHECK(c134.verdict == Verdict::NonexistentNotDividing);
  CHECK(c134.witness_prime == BigInt(7));
  CHECK(c134.witness_exponents == std::pair<std::uint64_t, std::uint64_t>{3, 1});

  const auto c46 = certify(4, 6);
  CHECK(c46.ball == 24);
  CHECK(c46.verdict == Verdict::Inconclusive);
  CHECK(c46.quotient == BigInt(1));
  CHECK_FALSE(c46.witness_prime);
}

TEST_CASE("certify rejects bad input") {
  CHECK_THROWS_AS(certify(1, 0), ValidationError);
  CHECK_THROWS_AS(certify(4, 7), ValidationError);
  CHECK_THROWS_AS(certify(3000, 6), ValidationError);
  CHECK_NOTHROW(certify(3000, 5));
  CHECK_NOTHROW(certify(100, 6, {.table_cap = 100}));
}

TEST_CASE("the prime-factor test runs before the divisibility test") {
  // B^7(2) = 27 = 3^3 fails only divisibility (v_3(7!) = 2); B^9(2) = 44 has 11 > 9.
  CHECK(certify(7, 2).verdict == Verdict::NonexistentNotDividing);
  const auto c = certify(9, 2);
  CHECK(c.ball == 44);
  CHECK(c.verdict == Verdict::NonexistentPrimeFactor);
  CHECK(c.witness_prime == BigInt(11));
}

TEST_CASE("scan") {
  const auto t3 = scan(3, 4, 33);
  REQUIRE(t3.size() == 30);
  for (std::size_t k = 0; k < t3.size(); ++k) {
    CHECK(t3[k].n == 4 + k);
    REQUIRE(t3[k].certificate);
    CHECK(nonexistent(*t3[k].certificate));
  }
  const auto t4 = scan(4, 5, 19);
  REQUIRE(t4.size() == 15);
  for (const auto& e : t4) CHECK(nonexistent(*e.certificate));

  const auto one = scan(2, 5, 5);
  REQUIRE(one.size() == 1);
  CHECK(one[0].certificate->verdict == Verdict::NonexistentPrimeFactor);

  CHECK_THROWS_AS(scan(2, 6, 5), ValidationError);
  CHECK_THROWS_AS(scan(2, 0, 5), ValidationError);
}

TEST_CASE("scan records per-entry errors without aborting") {
  const auto out = scan(2, 1, 3);
  REQUIRE(out.size() == 3);
  CHECK_FALSE(out[0].certificate);
  CHECK_FALSE(out[0].error.empty());
  CHECK(to_record(out[0]) == R"({"n":1,"t":2,"error":")" + out[0].error + R"("})");
  CHECK_FALSE(out[1].certificate);  // t > C(2,2)
  CHECK(out[2].certificate);
}

TEST_CASE("parallel scan matches serial scan") {
  const auto serial = scan(4, 2, 120);
  const auto parallel = scan(4, 2, 120, {}, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) CHECK(to_record(serial[k]) == to_record(parallel[k]));
}

TEST_CASE("check_certificate") {
  CHECK(check_certificate(certify(13, 3)));
  CHECK(check_certificate(certify(26, 3)));
  CHECK(check_certificate(certify(4, 6)));
  CHECK(check_certificate(certify(40, 7)));

  SUBCASE("tampering is rejected") {
    auto witness = certify(13, 3);
    witness.witness_prime = BigInt(3);
    CHECK_FALSE(check_certificate(witness));

    auto ball = certify(13, 3);
    ball.ball = 442;
    CHECK_FALSE(check_certificate(ball));

    auto verdict = certify(13, 3);
    verdict.verdict = Verdict::NonexistentPrimeFactor;
    CHECK_FALSE(check_certificate(verdict));

    auto exps = certify(13, 3);
    exps.witness_exponents = {{2, 0}};
    CHECK_FALSE(check_certificate(exps));

    auto fact = certify(13, 3);
    fact.factorization = Factorization::parse("3 * 7^2");
    CHECK_FALSE(check_certificate(fact));

    auto quotient = certify(4, 6);
    quotient.quotient = BigInt(2);
    CHECK_FALSE(check_certificate(quotient));

    auto to_inconclusive = certify(13, 3);
    to_inconclusive.verdict = Verdict::Inconclusive;
    to_inconclusive.witness_prime.reset();
    to_inconclusive.witness_exponents.reset();
    CHECK_FALSE(check_certificate(to_inconclusive));

    auto degraded = certify(13, 3);
    degraded.degraded = true;
    CHECK_FALSE(check_certificate(degraded));
  }
}

TEST_CASE("family scans up to n = 500") {
  std::size_t checked = 0;
  for (std::uint32_t n = 2; n <= 500; ++n) {
    if (prime_u64(n + 2) && n + 2 > 6) {
      const auto c = certify(n, 2);
      REQUIRE(c.verdict == Verdict::NonexistentPrimeFactor);
      // The ball is (n+2)(n-1)/2 and n+2 is its largest prime factor.
      REQUIRE(c.witness_prime == BigInt(n + 2));
      ++checked;
    }
    if (n >= 4 && ((prime_u64(n + 1) && n + 1 > 6) || n <= 33)) {
      REQUIRE(nonexistent(certify(n, 3)));
      ++checked;
    }
    if (n >= 5 && ((prime_u64(n + 1) && n + 1 > 6) || (prime_u64(n + 2) && n + 2 > 7) || n <= 19)) {
      REQUIRE(nonexistent(certify(n, 4)));
      ++checked;
    }
    if (n >= 5 && prime_u64(n + 7) && n + 7 >= 12) {
      REQUIRE(nonexistent(certify(n, 5)));
      ++checked;
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("every certificate up to n = 200, t <= 5 re-checks") {
  for (std::uint64_t t = 0; t <= 5; ++t) {
    for (const auto& e : scan(t, 2, 200, {}, 4)) {
      if (!e.certificate) continue;
      REQUIRE(check_certificate(*e.certificate));
      if (e.certificate->verdict == Verdict::Inconclusive) {
        REQUIRE(*e.certificate->quotient * e.certificate->ball == testing::product_factorial(e.n));
      }
    }
  }
}

TEST_CASE("single-error balls always divide n!") {
  for (std::uint32_t n = 2; n <= 300; ++n) {
    const auto c = certify(n, 1);
    REQUIRE(c.verdict == Verdict::Inconclusive);
    REQUIRE(c.ball == n);
    REQUIRE(*c.quotient * n == testing::product_factorial(n));
  }
}

TEST_CASE("records") {
  const std::string golden =
      R"({"n":13,"t":3,"ball":"441","factorization":"3^2 * 7^2","verdict":"NONEXISTENT_NOT_DIVIDING",)"
      R"("witness_prime":"7","witness_exponents":[2,1],"quotient":null,"degraded":false})";
  CHECK(to_record(certify(13, 3)) == golden);
  CHECK(parse_record(golden) == certify(13, 3));
  CHECK(to_record(certify(4, 6)) ==
        R"({"n":4,"t":6,"ball":"24","factorization":"2^3 * 3^1","verdict":"INCONCLUSIVE",)"
        R"("witness_prime":null,"witness_exponents":null,"quotient":"1","degraded":false})");
  CHECK(to_record(certify(5, 2)) ==
        R"({"n":5,"t":2,"ball":"14","factorization":"2^1 * 7^1","verdict":"NONEXISTENT_PRIME_FACTOR",)"
        R"("witness_prime":"7","witness_exponents":null,"quotient":null,"degraded":false})");
  for (std::uint32_t n = 2; n <= 60; ++n) {
    for (std::uint64_t t = 0; t <= 6 && t <= n * (n - 1) / 2; ++t) {
      const auto c = certify(n, t);
      REQUIRE(parse_record(to_record(c)) == c);
    }
  }
  CHECK_THROWS_AS(parse_record("{"), ValidationError);
  CHECK_THROWS_AS(parse_record(R"({"n":13})"), ValidationError);
  CHECK(to_string(Verdict::Inconclusive) == "INCONCLUSIVE");
  CHECK(parse_verdict("NONEXISTENT_PRIME_FACTOR") == Verdict::NonexistentPrimeFactor);
  CHECK_THROWS_AS(parse_verdict("MAYBE"), ValidationError);
}

TEST_CASE("an exhausted factorization budget degrades the certificate") {
  // B^18(45) = 3^2 * 1662901 * 3680657: both large primes exceed 18.
  const auto full = certify(18, 45);
  CHECK(full.ball == BigInt("55085113853613"));
  CHECK(full.factorization->to_string() == "3^2 * 1662901^1 * 3680657^1");
  CHECK(full.verdict == Verdict::NonexistentPrimeFactor);
  CHECK(full.witness_prime == BigInt(3680657));
  CHECK_FALSE(full.degraded);

  const auto starved = certify(18, 45, {.factor_budget = 1});
  CHECK_FALSE(starved.factorization);
  CHECK(starved.verdict == Verdict::NonexistentNotDividing);
  CHECK(starved.degraded);
  CHECK_FALSE(starved.witness_prime);
  CHECK(check_certificate(starved, {.factor_budget = 1}));
  CHECK(to_record(starved) ==
        R"({"n":18,"t":45,"ball":"55085113853613","factorization":"unfactored",)"
        R"("verdict":"NONEXISTENT_NOT_DIVIDING","witness_prime":null,"witness_exponents":null,)"
        R"("quotient":null,"degraded":true})");
  CHECK(parse_record(to_record(starved)) == starved);
}

TEST_CASE("witness_family") {
  CHECK(witness_family(certify(5, 2)) == "n+2");
  CHECK(witness_family(certify(26, 3)) == "n^2+2n-6");
  CHECK(witness_family(certify(13, 3)) == "n+1");  // 7 divides both 14 and 189
  CHECK(witness_family(certify(12, 3)) == "n+1");
  CHECK(witness_family(certify(4, 6)).empty());
  CHECK(to_pretty(certify(13, 3)).find("441") != std::string::npos);
}
