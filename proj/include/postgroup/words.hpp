#pragma once

// Reduced words in the free group F_M over a finite named alphabet.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "postgroup/error.hpp"

namespace postgroup {

// A generator (sign = +1) or its dot-inverse (sign = -1).
struct Letter {
  std::uint32_t generator = 0;
  std::int8_t sign = 1;

  constexpr Letter inverse() const { return {generator, static_cast<std::int8_t>(-sign)}; }
  constexpr bool positive() const { return sign > 0; }

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

constexpr bool cancels(const Letter& a, const Letter& b) {
  return a.generator == b.generator && a.sign == -b.sign;
}

inline bool valid_generator_name(std::string_view name) {
  if (name.empty() || name == "e") return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == '\'' || std::isspace(static_cast<unsigned char>(c));
  });
}

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& name = names_[i];
      if (!valid_generator_name(name)) {
        throw Error(ErrorKind::kParse, "invalid generator name '" + name + "'");
      }
      if (!index_.emplace(name, static_cast<std::uint32_t>(i)).second) {
        throw Error(ErrorKind::kParse, "duplicate generator name '" + name + "'");
      }
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::uint32_t generator) const { return names_.at(generator); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::uint32_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

// Element of F_M in normal form: no adjacent cancelling pair. The empty
// sequence is the unit e.
class ReducedWord {
 public:
  ReducedWord() = default;
  explicit ReducedWord(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_unit() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.letters_ == b.letters_ && same_alphabet(a.alphabet_, b.alphabet_);
  }

  static bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
  }

 private:
  friend ReducedWord reduce(AlphabetPtr, std::span<const Letter>);

  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

// Stack scan: push each letter, pop when it cancels the top.
inline ReducedWord reduce(AlphabetPtr alphabet, std::span<const Letter> raw) {
  ReducedWord out(std::move(alphabet));
  const std::size_t n = out.alphabet_ ? out.alphabet_->size() : 0;
  out.letters_.reserve(raw.size());
  for (const Letter& a : raw) {
    if (a.generator >= n || (a.sign != 1 && a.sign != -1)) {
      throw Error(ErrorKind::kAlphabetMismatch,
                  "letter generator " + std::to_string(a.generator) + " outside alphabet of size " +
                      std::to_string(n));
    }
    if (!out.letters_.empty() && cancels(out.letters_.back(), a)) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(a);
    }
  }
  return out;
}

inline ReducedWord unit(AlphabetPtr alphabet) { return ReducedWord(std::move(alphabet)); }

inline ReducedWord generator_word(AlphabetPtr alphabet, Letter a) {
  return reduce(std::move(alphabet), std::span<const Letter>(&a, 1));
}

inline void require_same_alphabet(const ReducedWord& u, const ReducedWord& v) {
  if (!ReducedWord::same_alphabet(u.alphabet(), v.alphabet())) {
    throw Error(ErrorKind::kAlphabetMismatch, "words are over different alphabets");
  }
}

inline ReducedWord dot(const ReducedWord& u, const ReducedWord& v) {
  require_same_alphabet(u, v);
  std::vector<Letter> raw(u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return reduce(u.alphabet(), raw);
}

inline ReducedWord invert(const ReducedWord& u) {
  std::vector<Letter> raw;
  raw.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) raw.push_back(it->inverse());
  return reduce(u.alphabet(), raw);
}

inline std::string print(const Alphabet& alphabet, const Letter& a) {
  std::string s = alphabet.name(a.generator);
  if (!a.positive()) s += '\'';
  return s;
}

inline std::string print(const ReducedWord& u) {
  if (u.is_unit()) return "e";
  std::string out;
  for (std::size_t i = 0; i < u.length(); ++i) {
    if (i) out += ' ';
    out += print(*u.alphabet(), u[i]);
  }
  return out;
}

// Letters of `text` without reduction. Token positions in errors are 1-based.
inline std::vector<Letter> parse_letters(const Alphabet& alphabet, std::string_view text) {
  std::vector<Letter> raw;
  std::istringstream in{std::string(text)};
  std::string token;
  std::size_t position = 0;
  while (in >> token) {
    ++position;
    if (token == "e") continue;
    Letter a;
    std::string_view name = token;
    if (name.back() == '\'') {
      name.remove_suffix(1);
      a.sign = -1;
    }
    if (!valid_generator_name(name)) {
      throw Error(ErrorKind::kParse,
                  "malformed token '" + token + "' at position " + std::to_string(position));
    }
    auto g = alphabet.find(name);
    if (!g) {
      throw Error(ErrorKind::kUnknownName, "unknown generator '" + std::string(name) +
                                               "' at position " + std::to_string(position));
    }
    a.generator = *g;
    raw.push_back(a);
  }
  return raw;
}

inline ReducedWord parse_word(const AlphabetPtr& alphabet, std::string_view text) {
  return reduce(alphabet, parse_letters(*alphabet, text));
}

}  // namespace postgroup
