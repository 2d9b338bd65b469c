#include "graphveil/random.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace graphveil {
namespace {

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t seed,
                         std::initializer_list<std::uint64_t> stream) {
  std::uint64_t h = SplitMix(seed);
  for (std::uint64_t s : stream) h = SplitMix(h ^ SplitMix(s + 1));
  return h;
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Below(0)");
  // Rejection sampling: discard the top partial block.
  const std::uint64_t limit = -bound % bound;  // (2^64 - bound) mod bound
  while (true) {
    std::uint64_t x = engine_();
    if (x >= limit) return x % bound;
  }
}

bool Rng::Bernoulli(const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("probability outside [0,1]");
  if (p == Rational(0)) return false;
  if (p == Rational(1)) return true;
  return Below(static_cast<std::uint64_t>(p.denominator())) <
         static_cast<std::uint64_t>(p.numerator());
}

std::vector<std::uint32_t> Rng::Subset(std::uint32_t n, std::uint32_t count) {
  if (count > n) throw std::invalid_argument("subset larger than population");
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  // Partial Fisher-Yates.
  for (std::uint32_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + Below(n - i)]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace graphveil
