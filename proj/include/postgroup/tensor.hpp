#pragma once

// The tensor algebra T(M) over the free magma generated by finitely many
// letters, with exact rational coefficients. Concatenation and the unshuffle
// coproduct make it a cocommutative Hopf algebra; the magmatic product
// extends to a post-Hopf triangle |>, which gives the Grossman-Larson
// product A * B = sum A_1.(A_2 |> B). Grading is by leaf count throughout.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "postgroup/error.hpp"
#include "postgroup/rational.hpp"

namespace postgroup {

// ---------------------------------------------------------------------------
// MagmaTree

// A binary tree over generator indices, stored in prefix order: a leaf is its
// generator index, a node is kNodeToken followed by the left and right
// subtrees. Lexicographic order on the prefix code coincides with the
// structural order (leaf < node, leaves by index, then left, then right), so
// the canonical order is (degree, code).
class MagmaTree {
 public:
  static constexpr std::uint32_t kNodeToken = 0xFFFFFFFFu;

  static MagmaTree leaf(std::uint32_t generator) {
    MagmaTree t;
    t.code_.push_back(generator);
    t.degree_ = 1;
    return t;
  }

  // node(s, t), read as s |> t.
  static MagmaTree node(const MagmaTree& s, const MagmaTree& t) {
    MagmaTree r;
    r.code_.reserve(1 + s.code_.size() + t.code_.size());
    r.code_.push_back(kNodeToken);
    r.code_.insert(r.code_.end(), s.code_.begin(), s.code_.end());
    r.code_.insert(r.code_.end(), t.code_.begin(), t.code_.end());
    r.degree_ = s.degree_ + t.degree_;
    return r;
  }

  std::uint32_t degree() const { return degree_; }
  bool is_leaf() const { return code_.size() == 1; }
  std::uint32_t generator() const { return code_.front(); }
  const std::vector<std::uint32_t>& code() const { return code_; }

  MagmaTree left() const { return subtree(1).first; }
  MagmaTree right() const { return subtree(subtree(1).second).first; }

  friend bool operator==(const MagmaTree& a, const MagmaTree& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const MagmaTree& a, const MagmaTree& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  MagmaTree() = default;

  // Subtree starting at `pos` and the position just past it.
  std::pair<MagmaTree, std::size_t> subtree(std::size_t pos) const {
    std::size_t end = pos;
    std::size_t pending = 1;
    std::uint32_t leaves = 0;
    while (pending > 0) {
      if (code_[end] == kNodeToken) {
        ++pending;
      } else {
        --pending;
        ++leaves;
      }
      ++end;
    }
    MagmaTree t;
    t.code_.assign(code_.begin() + pos, code_.begin() + end);
    t.degree_ = leaves;
    return {t, end};
  }

  std::vector<std::uint32_t> code_;
  std::uint32_t degree_ = 0;
};

inline MagmaTree magma_product(const MagmaTree& s, const MagmaTree& t) { return MagmaTree::node(s, t); }

// ---------------------------------------------------------------------------
// TensorWord

// A concatenation word of trees; the empty word is the unit 1.
class TensorWord {
 public:
  TensorWord() = default;
  explicit TensorWord(std::vector<MagmaTree> letters) : letters_(std::move(letters)) {
    for (const auto& t : letters_) degree_ += t.degree();
  }
  static TensorWord letter(const MagmaTree& t) { return TensorWord({t}); }

  const std::vector<MagmaTree>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  std::uint32_t degree() const { return degree_; }
  bool is_unit() const { return letters_.empty(); }
  const MagmaTree& operator[](std::size_t i) const { return letters_[i]; }

  TensorWord suffix(std::size_t from) const {
    return TensorWord({letters_.begin() + static_cast<std::ptrdiff_t>(from), letters_.end()});
  }

  friend TensorWord operator+(const TensorWord& a, const TensorWord& b) {
    std::vector<MagmaTree> l = a.letters_;
    l.insert(l.end(), b.letters_.begin(), b.letters_.end());
    return TensorWord(std::move(l));
  }

  friend bool operator==(const TensorWord& a, const TensorWord& b) { return a.letters_ == b.letters_; }
  friend std::strong_ordering operator<=>(const TensorWord& a, const TensorWord& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

 private:
  std::vector<MagmaTree> letters_;
  std::uint32_t degree_ = 0;
};

// ---------------------------------------------------------------------------
// TensorPoly / TensorPolyPair

// Finite linear combination with no stored zero coefficients.
template <typename Key>
class LinearCombination {
 public:
  using Map = std::map<Key, Rational>;

  LinearCombination() = default;
  LinearCombination(const Key& k, Rational c = 1) { add(k, std::move(c)); }

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const Rational& scale = 1) {
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    add(o);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add(o, -1);
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  Map terms_;
};

using TensorPoly = LinearCombination<TensorWord>;
using TensorPolyPair = LinearCombination<std::pair<TensorWord, TensorWord>>;

inline TensorPoly unit_poly() { return TensorPoly(TensorWord{}); }
inline TensorPoly generator_poly(std::uint32_t g) { return TensorPoly(TensorWord::letter(MagmaTree::leaf(g))); }
inline TensorPoly tree_poly(const MagmaTree& t) { return TensorPoly(TensorWord::letter(t)); }

// Counit: the coefficient of 1.
inline Rational counit(const TensorPoly& a) { return a.coefficient(TensorWord{}); }

// Bilinear extension of a map on basis words.
template <typename F>
TensorPoly bilinear(const TensorPoly& a, const TensorPoly& b, F&& on_words) {
  TensorPoly out;
  for (const auto& [u, cu] : a)
    for (const auto& [w, cw] : b) out.add(on_words(u, w), cu * cw);
  return out;
}

template <typename F>
TensorPoly linear(const TensorPoly& a, F&& on_word) {
  TensorPoly out;
  for (const auto& [u, c] : a) out.add(on_word(u), c);
  return out;
}

// Homogeneous component of leaf degree d.
inline TensorPoly degree_part(const TensorPoly& a, std::uint32_t d) {
  TensorPoly out;
  for (const auto& [w, c] : a)
    if (w.degree() == d) out.add(w, c);
  return out;
}

// ---------------------------------------------------------------------------
// Concatenation and unshuffle

inline TensorPoly concat(const TensorPoly& a, const TensorPoly& b) {
  return bilinear(a, b, [](const TensorWord& u, const TensorWord& w) { return TensorPoly(u + w); });
}

inline constexpr std::size_t kDefaultUnshuffleCap = 8;

// All 2^k splits of a word of length k into (w|_S, w|_{S^c}), unsummed.
inline std::vector<std::pair<TensorWord, TensorWord>> unshuffle_splits(
    const TensorWord& w, std::size_t cap = kDefaultUnshuffleCap) {
  const std::size_t k = w.length();
  if (k > cap) {
    throw Error(ErrorKind::kSizeCap, "unshuffle of a word of length " + std::to_string(k) +
                                         " exceeds the cap of " + std::to_string(cap));
  }
  std::vector<std::pair<TensorWord, TensorWord>> splits;
  splits.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<MagmaTree> left, right;
    for (std::size_t i = 0; i < k; ++i) (mask >> i & 1 ? left : right).push_back(w[i]);
    splits.emplace_back(TensorWord(std::move(left)), TensorWord(std::move(right)));
  }
  return splits;
}

inline TensorPolyPair unshuffle(const TensorPoly& a, std::size_t cap = kDefaultUnshuffleCap) {
  TensorPolyPair out;
  for (const auto& [w, c] : a)
    for (auto& split : unshuffle_splits(w, cap)) out.add(split, c);
  return out;
}

inline TensorPolyPair tensor(const TensorPoly& a, const TensorPoly& b) {
  TensorPolyPair out;
  for (const auto& [u, cu] : a)
    for (const auto& [w, cw] : b) out.add({u, w}, cu * cw);
  return out;
}

// Apply f (x) g to a pair combination.
template <typename F, typename G>
TensorPolyPair tensor_map(const TensorPolyPair& p, F&& f, G&& g) {
  TensorPolyPair out;
  for (const auto& [k, c] : p) out.add(tensor(f(k.first), g(k.second)), c);
  return out;
}

// A is primitive iff Delta(A) = A (x) 1 + 1 (x) A.
inline bool is_primitive(const TensorPoly& a) {
  return unshuffle(a) == tensor(a, unit_poly()) + tensor(unit_poly(), a);
}

// ---------------------------------------------------------------------------
// Triangle (post-Hopf extension of the magmatic product)

// x |> (y_1 ... y_k) = sum_i y_1 ... (x |> y_i) ... y_k for a single tree x.
inline TensorPoly derivation(const MagmaTree& x, const TensorWord& w) {
  TensorPoly out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    std::vector<MagmaTree> letters = w.letters();
    letters[i] = magma_product(x, letters[i]);
    out.add(TensorWord(std::move(letters)), 1);
  }
  return out;
}

// 1 |> w = w; x |> w is the derivation; (x.v) |> w = x |> (v |> w) - (x |> v) |> w.
inline TensorPoly triangle_word(const TensorWord& u, const TensorWord& w) {
  if (u.is_unit()) return TensorPoly(w);
  if (w.is_unit()) return {};
  const MagmaTree& x = u[0];
  if (u.length() == 1) return derivation(x, w);
  const TensorWord v = u.suffix(1);
  TensorPoly out = linear(triangle_word(v, w), [&](const TensorWord& y) { return derivation(x, y); });
  out -= linear(derivation(x, v), [&](const TensorWord& y) { return triangle_word(y, w); });
  return out;
}

inline TensorPoly triangle(const TensorPoly& a, const TensorPoly& b) { return bilinear(a, b, triangle_word); }

// ---------------------------------------------------------------------------
// Grossman-Larson product and antipodes

inline TensorPoly gl_star_word(const TensorWord& u, const TensorWord& w) {
  TensorPoly out;
  for (const auto& [u1, u2] : unshuffle_splits(u)) {
    for (const auto& [y, c] : triangle_word(u2, w)) out.add(u1 + y, c);
  }
  return out;
}

inline TensorPoly gl_star(const TensorPoly& a, const TensorPoly& b) { return bilinear(a, b, gl_star_word); }

// S(x_1 ... x_n) = (-1)^n x_n ... x_1
inline TensorPoly antipode_dot(const TensorPoly& a) {
  return linear(a, [](const TensorWord& w) {
    std::vector<MagmaTree> letters(w.letters().rbegin(), w.letters().rend());
    return TensorPoly(TensorWord(std::move(letters)), w.length() % 2 ? -1 : 1);
  });
}

// Graded connected recursion: S_*(1) = 1 and for w != 1
//   S_*(w) = -w - sum' S_*(w') * w''
// over the splits with both parts non-empty.
inline TensorPoly antipode_star_word(const TensorWord& w) {
  if (w.is_unit()) return unit_poly();
  TensorPoly out(w, -1);
  for (const auto& [w1, w2] : unshuffle_splits(w)) {
    if (w1.is_unit() || w2.is_unit()) continue;
    out -= gl_star(antipode_star_word(w1), TensorPoly(w2));
  }
  return out;
}

inline TensorPoly antipode_star(const TensorPoly& a) { return linear(a, antipode_star_word); }

// ---------------------------------------------------------------------------
// Gavrilov K-map

// K(1) = 1, K(x) = x, K(x_1 x_2 ... ) = x_1.K(x_2 ...) - K(x_1 |> (x_2 ...)).
inline TensorPoly kmap_tensor_word(const TensorWord& w) {
  if (w.length() <= 1) return TensorPoly(w);
  const TensorWord head = TensorWord::letter(w[0]);
  const TensorWord rest = w.suffix(1);
  TensorPoly out = concat(TensorPoly(head), kmap_tensor_word(rest));
  out -= linear(derivation(w[0], rest), kmap_tensor_word);
  return out;
}

inline TensorPoly kmap_tensor(const TensorPoly& a) { return linear(a, kmap_tensor_word); }

// K(w) - w only involves shorter words, so K^{-1}(w) = w - K^{-1}(K(w) - w)
// terminates by induction on length.
inline TensorPoly kmap_tensor_inverse_word(const TensorWord& w) {
  if (w.length() <= 1) return TensorPoly(w);
  TensorPoly lower = kmap_tensor_word(w);
  lower.add(w, -1);
  TensorPoly out(w);
  out -= linear(lower, kmap_tensor_inverse_word);
  return out;
}

inline TensorPoly kmap_tensor_inverse(const TensorPoly& a) { return linear(a, kmap_tensor_inverse_word); }

// ---------------------------------------------------------------------------
// Lie structure

inline TensorPoly lie_bracket(const TensorPoly& x, const TensorPoly& y) {
  return concat(x, y) - concat(y, x);
}

// [[X,Y]] = [X,Y] + X |> Y - Y |> X
inline TensorPoly gl_lie_bracket(const TensorPoly& x, const TensorPoly& y) {
  return lie_bracket(x, y) + triangle(x, y) - triangle(y, x);
}

struct PostLieReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Both post-Lie axioms for (bracket, |>) and for the opposite structure
// (-bracket, X |>> Y = X |> Y + [X,Y]) on one triple of primitives.
inline PostLieReport check_postlie_axioms(const TensorPoly& x, const TensorPoly& y, const TensorPoly& z) {
  for (const auto* p : {&x, &y, &z})
    if (!is_primitive(*p)) throw Error(ErrorKind::kInvalidArgument, "post-Lie check needs primitive inputs");

  PostLieReport report;
  using Op = std::function<TensorPoly(const TensorPoly&, const TensorPoly&)>;
  auto run = [&](const std::string& label, const Op& br, const Op& tr) {
    if (tr(x, br(y, z)) != br(tr(x, y), z) + br(y, tr(x, z)))
      report.failures.push_back(label + ": X |> [Y,Z] != [X |> Y, Z] + [Y, X |> Z]");
    const TensorPoly rhs = tr(x, tr(y, z)) - tr(tr(x, y), z) - tr(y, tr(x, z)) + tr(tr(y, x), z);
    if (tr(br(x, y), z) != rhs)
      report.failures.push_back(label + ": [X,Y] |> Z != associator difference");
  };
  run("post-Lie", lie_bracket, triangle);
  run("opposite post-Lie",
      [](const TensorPoly& a, const TensorPoly& b) { return -lie_bracket(a, b); },
      [](const TensorPoly& a, const TensorPoly& b) { return triangle(a, b) + lie_bracket(a, b); });
  return report;
}

// ---------------------------------------------------------------------------
// Basis enumeration

inline std::vector<MagmaTree> trees_of_degree(std::uint32_t generators, std::uint32_t degree) {
  std::vector<MagmaTree> out;
  if (degree == 0) return out;
  if (degree == 1) {
    for (std::uint32_t g = 0; g < generators; ++g) out.push_back(MagmaTree::leaf(g));
    return out;
  }
  for (std::uint32_t d = 1; d < degree; ++d)
    for (const auto& s : trees_of_degree(generators, d))
      for (const auto& t : trees_of_degree(generators, degree - d)) out.push_back(magma_product(s, t));
  std::sort(out.begin(), out.end());
  return out;
}

// All words of exactly the given leaf degree, canonically ordered.
inline std::vector<TensorWord> words_of_degree(std::uint32_t generators, std::uint32_t degree) {
  std::vector<TensorWord> out;
  if (degree == 0) return {TensorWord{}};
  for (std::uint32_t d = 1; d <= degree; ++d)
    for (const auto& t : trees_of_degree(generators, d))
      for (const auto& rest : words_of_degree(generators, degree - d))
        out.push_back(TensorWord::letter(t) + rest);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<TensorWord> words_up_to_degree(std::uint32_t generators, std::uint32_t degree) {
  std::vector<TensorWord> out;
  for (std::uint32_t d = 0; d <= degree; ++d) {
    auto part = words_of_degree(generators, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace postgroup
