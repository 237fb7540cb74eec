#ifndef HIGGSMOT_SRC_MODP_HPP
#define HIGGSMOT_SRC_MODP_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>

// Word-size arithmetic modulo primes below 2^31, used for cheap
// probabilistic rejections ahead of exact computations.
namespace higgsmot::modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

inline std::uint64_t pow(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (n > 0) {
    if (n & 1U) r = mul(r, a, p);
    a = mul(a, a, p);
    n >>= 1U;
  }
  return r;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

inline std::uint64_t pow_signed(std::uint64_t a, std::int64_t n, std::uint64_t p) {
  const std::uint64_t r = pow(a, static_cast<std::uint64_t>(n < 0 ? -n : n), p);
  return n < 0 ? inverse(r, p) : r;
}

// nullopt when p divides the denominator.
inline std::optional<std::uint64_t> reduce(const mpq_class& c, std::uint64_t p) {
  std::uint64_t v = mpz_fdiv_ui(c.get_num_mpz_t(), p);
  if (c.get_den() != 1) {
    const std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), p);
    if (den == 0) return std::nullopt;
    v = mul(v, inverse(den, p), p);
  }
  return v;
}

}  // namespace higgsmot::modp

#endif  // HIGGSMOT_SRC_MODP_HPP
