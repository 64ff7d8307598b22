#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qsc::modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);  // a != 0, p prime

bool is_prime(std::uint64_t n);  // deterministic for all 64-bit n
std::uint64_t random_prime(std::mt19937_64& rng, int bits = 62);

struct EvalPoint {
  std::uint64_t q0;
  std::uint64_t p;
};

// Independent (q0, p) pairs drawn from one seeded generator.
std::vector<EvalPoint> eval_points(std::uint64_t seed, int count);

}  // namespace qsc::modp
