#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mspat {

/// Arbitrary-precision nonnegative count. Every counting result uses it.
using BigCount = mpz_class;
using Rational = mpq_class;

inline BigCount binomial(std::uint64_t n, std::uint64_t k) {
  BigCount out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline BigCount factorial(std::uint64_t n) {
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline BigCount power(const BigCount& base, std::uint64_t exponent) {
  BigCount out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline std::string to_string(const BigCount& value) { return value.get_str(); }

}  // namespace mspat
