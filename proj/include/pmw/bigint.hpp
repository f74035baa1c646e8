#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pmw {

using BigInt = mpz_class;
using BigVector = std::vector<BigInt>;
using BigMatrix = std::vector<BigVector>;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace pmw
