#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "lorenz/braid_word.hpp"
#include "lorenz/lorenz_vector.hpp"

namespace lorenz::testing {

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Normalized: 2 <= d_1 <= ... <= d_{p-1} = d_p, p >= 2.
inline LorenzVector random_normalized(std::mt19937& rng, int max_p, int max_d) {
  const int p = uniform(rng, 2, max_p);
  std::vector<int> d(static_cast<std::size_t>(p - 1));
  for (auto& x : d) x = uniform(rng, 2, max_d);
  std::sort(d.begin(), d.end());
  d.push_back(d.back());
  return LorenzVector(std::move(d));
}

// Any positive nondecreasing vector, possibly destabilizable.
inline LorenzVector random_vector(std::mt19937& rng, int max_p, int max_d) {
  const int p = uniform(rng, 1, max_p);
  std::vector<int> d(static_cast<std::size_t>(p));
  for (auto& x : d) x = uniform(rng, 1, max_d);
  std::sort(d.begin(), d.end());
  return LorenzVector(std::move(d));
}

inline BraidWord random_word(std::mt19937& rng, int strands, int length) {
  std::vector<int> letters(static_cast<std::size_t>(length));
  for (auto& x : letters) x = uniform(rng, 1, strands - 1);
  return BraidWord(strands, std::move(letters));
}

inline std::vector<int> letters_of(const BraidWord& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace lorenz::testing
