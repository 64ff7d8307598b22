#include "qsc/modp.hpp"

#include <stdexcept>

namespace qsc::modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("modp::inv: zero has no inverse");
  return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t s : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % s == 0) return n == s;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(std::mt19937_64& rng, int bits) {
  const std::uint64_t top = 1ULL << (bits - 1);
  std::uniform_int_distribution<std::uint64_t> dist(0, top - 1);
  for (;;) {
    std::uint64_t c = top | dist(rng) | 1ULL;
    if (is_prime(c)) return c;
  }
}

std::vector<EvalPoint> eval_points(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<EvalPoint> out;
  for (int i = 0; i < count; ++i) {
    std::uint64_t p = random_prime(rng);
    std::uniform_int_distribution<std::uint64_t> dist(2, p - 2);
    out.push_back({dist(rng), p});
  }
  return out;
}

}  // namespace qsc::modp
