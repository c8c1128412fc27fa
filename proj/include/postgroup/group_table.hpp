#pragma once

// Finite groups given by Cayley tables.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "postgroup/error.hpp"
#include "postgroup/magma.hpp"

namespace postgroup {

class GroupTable {
 public:
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::uint32_t a) const { return names_[a]; }
  const IndexTable& table() const { return mul_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a][b]; }
  std::uint32_t unit() const { return unit_; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }

  bool is_abelian() const {
    for (std::uint32_t a = 0; a < size(); ++a)
      for (std::uint32_t b = a + 1; b < size(); ++b)
        if (mul_[a][b] != mul_[b][a]) return false;
    return true;
  }

  std::optional<std::uint32_t> find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - names_.begin());
  }

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.names_ == b.names_ && a.mul_ == b.mul_;
  }

  // Exhaustive check of shape, associativity, unit and inverses.
  friend GroupTable validate_group(std::vector<std::string> names, IndexTable mul);

 private:
  GroupTable() = default;

  std::vector<std::string> names_;
  IndexTable mul_;
  std::uint32_t unit_ = 0;
  std::vector<std::uint32_t> inv_;
};

inline void check_square(const std::vector<std::string>& names, const IndexTable& t,
                         const std::string& what) {
  const std::size_t n = names.size();
  if (t.size() != n) {
    throw Error(ErrorKind::kShape, what + " has " + std::to_string(t.size()) + " rows, expected " +
                                       std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n) {
      throw Error(ErrorKind::kShape, what + " row " + names[i] + " has " +
                                         std::to_string(t[i].size()) + " entries, expected " +
                                         std::to_string(n));
    }
    for (auto v : t[i]) {
      if (v >= n) {
        throw Error(ErrorKind::kOutOfRange,
                    what + " row " + names[i] + " has out-of-range entry " + std::to_string(v));
      }
    }
  }
}

inline GroupTable validate_group(std::vector<std::string> names, IndexTable mul) {
  check_square(names, mul, "group table");
  const std::uint32_t n = static_cast<std::uint32_t>(names.size());
  if (n == 0) throw Error(ErrorKind::kGroupAxiom, "group must be non-empty");
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::kParse, "duplicate element names");
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw Error(ErrorKind::kGroupAxiom, "associativity fails at (" + names[a] + ", " +
                                                  names[b] + ", " + names[c] + ")");
  std::optional<std::uint32_t> unit;
  for (std::uint32_t e = 0; e < n && !unit; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) ok = mul[e][a] == a && mul[a][e] == a;
    if (ok) unit = e;
  }
  if (!unit) throw Error(ErrorKind::kGroupAxiom, "no two-sided unit");
  std::vector<std::uint32_t> inv(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::optional<std::uint32_t> found;
    for (std::uint32_t b = 0; b < n && !found; ++b)
      if (mul[a][b] == *unit && mul[b][a] == *unit) found = b;
    if (!found) throw Error(ErrorKind::kGroupAxiom, "element " + names[a] + " has no inverse");
    inv[a] = *found;
  }
  GroupTable g;
  g.names_ = std::move(names);
  g.mul_ = std::move(mul);
  g.unit_ = *unit;
  g.inv_ = std::move(inv);
  return g;
}

// Z/n with elements named "0".."n-1".
inline GroupTable cyclic_group(std::uint32_t n) {
  std::vector<std::string> names;
  IndexTable mul(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::uint32_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return validate_group(std::move(names), std::move(mul));
}

// S_k on {1..k} in one-line notation ("123" is the unit), composed as
// (p.q)(i) = p(q(i)).
inline GroupTable symmetric_group(std::uint32_t k) {
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(k);
  std::iota(p.begin(), p.end(), 0u);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const auto n = static_cast<std::uint32_t>(perms.size());
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s;
    for (auto v : q) s += std::to_string(v + 1);
    names.push_back(s);
  }
  IndexTable mul(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      std::vector<std::uint32_t> c(k);
      for (std::uint32_t i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      mul[a][b] = static_cast<std::uint32_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return validate_group(std::move(names), std::move(mul));
}

}  // namespace postgroup
