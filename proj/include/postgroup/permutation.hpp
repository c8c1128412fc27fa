#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "postgroup/words.hpp"

namespace postgroup {

// Permutation of {0..n-1}; image[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {}

  static Permutation identity(std::size_t n) {
    std::vector<std::uint32_t> image(n);
    std::iota(image.begin(), image.end(), 0u);
    return Permutation(std::move(image));
  }

  std::size_t size() const { return image_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return image_[i]; }
  const std::vector<std::uint32_t>& image() const { return image_; }

  // Sign-equivariant extension to M u M^{-1}: g^{-1} -> (pi(g))^{-1}.
  Letter operator()(const Letter& a) const { return {image_[a.generator], a.sign}; }

  bool is_identity() const {
    for (std::uint32_t i = 0; i < image_.size(); ++i)
      if (image_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> inv(image_.size());
    for (std::uint32_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

// (p o q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  std::vector<std::uint32_t> image(q.size());
  for (std::uint32_t i = 0; i < q.size(); ++i) image[i] = p(q(i));
  return Permutation(std::move(image));
}

// Returns a colliding pair (i, j), i < j, with row[i] == row[j], or an
// out-of-range entry reported as (i, i). nullopt when row is a bijection.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> bijection_witness(
    const std::vector<std::uint32_t>& row) {
  const std::size_t n = row.size();
  std::vector<std::int64_t> seen(n, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (row[i] >= n) return std::pair{i, i};
    if (seen[row[i]] >= 0) return std::pair{static_cast<std::uint32_t>(seen[row[i]]), i};
    seen[row[i]] = i;
  }
  return std::nullopt;
}

}  // namespace postgroup
