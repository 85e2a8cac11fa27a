#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "torlink/braid.hpp"
#include "torlink/free_word.hpp"

// Seeded random braid words and free words for property checks.

namespace torlink {

using Rng = std::mt19937_64;

inline int random_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline int random_letter(Rng& rng, int max_index) {
  int g = random_int(rng, 1, max_index);
  return random_int(rng, 0, 1) ? g : -g;
}

// Uniform letters; may contain cancelling pairs on purpose.
inline BraidWord random_braid(Rng& rng, int strands, int length) {
  BraidWord w(strands);
  if (strands < 2) {
    return w;
  }
  for (int i = 0; i < length; ++i) {
    w.push_back(random_letter(rng, strands - 1));
  }
  return w;
}

inline FreeWord random_free_word(Rng& rng, int rank, int length) {
  std::vector<int> letters;
  for (int i = 0; i < length; ++i) {
    letters.push_back(random_letter(rng, rank));
  }
  return FreeWord(rank, letters);
}

// Inserts s s^-1 for a random generator s at a random position.
inline BraidWord insert_trivial_pair(Rng& rng, BraidWord const& w) {
  if (w.strands() < 2) {
    return w;
  }
  auto letters = w.letters();
  int const g = random_letter(rng, w.strands() - 1);
  auto at = letters.begin() + random_int(rng, 0, static_cast<int>(letters.size()));
  letters.insert(at, {g, -g});
  return BraidWord(w.strands(), letters);
}

}  // namespace torlink
