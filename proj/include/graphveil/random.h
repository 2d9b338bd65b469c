#ifndef GRAPHVEIL_RANDOM_H_
#define GRAPHVEIL_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "graphveil/rational.h"

namespace graphveil {

// Seed used when callers do not provide one.
inline constexpr std::uint64_t kDefaultRngSeed = 20200305;

// Mixes a base seed with stream indices so that each replication or trial
// gets an independent, schedule-free stream.
std::uint64_t DeriveSeed(std::uint64_t seed,
                         std::initializer_list<std::uint64_t> stream);

// Portable random source. The engine output is fully specified by the
// standard; all derived draws are computed here rather than through
// implementation-defined std distributions, so results match across
// toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound);

  // True with probability exactly p, which must lie in [0, 1].
  bool Bernoulli(const Rational& p);

  // Fisher-Yates with Below().
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

  // `count` distinct values from [0, n), sorted ascending.
  std::vector<std::uint32_t> Subset(std::uint32_t n, std::uint32_t count);

 private:
  std::mt19937_64 engine_;
};

}  // namespace graphveil

#endif  // GRAPHVEIL_RANDOM_H_
