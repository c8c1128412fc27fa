#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "postgroup/words.hpp"

namespace postgroup {

// Uniform length in [0, max_length], each letter drawn among those that do
// not cancel the previous one, so the result is already reduced.
template <typename Rng>
ReducedWord random_reduced_word(const AlphabetPtr& alphabet, std::size_t max_length, Rng& rng) {
  const auto n = static_cast<std::uint32_t>(alphabet->size());
  std::uniform_int_distribution<std::size_t> length_dist(0, max_length);
  std::uniform_int_distribution<std::uint32_t> letter_dist(0, 2 * n - 1);
  const std::size_t length = length_dist(rng);
  std::vector<Letter> letters;
  while (letters.size() < length) {
    const auto r = letter_dist(rng);
    const Letter a{r / 2, static_cast<std::int8_t>(r % 2 ? -1 : 1)};
    if (!letters.empty() && cancels(letters.back(), a)) continue;
    letters.push_back(a);
  }
  return reduce(alphabet, letters);
}

// Arbitrary letter sequence, not reduced.
template <typename Rng>
std::vector<Letter> random_letters(std::size_t alphabet_size, std::size_t length, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> letter_dist(0, 2 * static_cast<std::uint32_t>(alphabet_size) - 1);
  std::vector<Letter> letters(length);
  for (auto& a : letters) {
    const auto r = letter_dist(rng);
    a = {r / 2, static_cast<std::int8_t>(r % 2 ? -1 : 1)};
  }
  return letters;
}

}  // namespace postgroup
