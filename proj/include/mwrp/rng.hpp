#pragma once

#include <cstdint>
#include <random>

namespace mwrp {

// All randomized generation goes through these helpers instead of
// std::uniform_int_distribution / std::shuffle, whose outputs differ between
// standard-library implementations. Fixed seeds must reproduce identical maps
// and scenarios everywhere.

// Unbiased draw from [0, n) via rejection sampling.
inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t n) {
  if (n <= 1) return 0;
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = uniform_below(rng, i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace mwrp
