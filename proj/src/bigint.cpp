#include "kperm/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace kperm {

BigInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw ValidationError("empty decimal integer");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ValidationError("bad decimal integer '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text), 10);
}

BigInt exact_div(const BigInt& numerator, const BigInt& denominator) {
  BigInt quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
              denominator.get_mpz_t());
  if (remainder != 0) {
    throw std::logic_error("inexact division " + to_decimal(numerator) + " / " +
                           to_decimal(denominator));
  }
  return quotient;
}

}  // namespace kperm
