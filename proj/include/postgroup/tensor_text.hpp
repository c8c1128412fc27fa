#pragma once

// Text form of T(M) elements:
//   tree  := name | "(" tree ">" tree ")"
//   word  := "1" | tree ("." tree)*
//   term  := [rational "*"] word
//   poly  := "0" | ["-"] term (("+" | "-") term)*
// with rationals written p or p/q.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "postgroup/error.hpp"
#include "postgroup/tensor.hpp"

namespace postgroup {

// x1 .. xn, the default generator names of the tensor tools.
inline std::vector<std::string> tensor_generator_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

inline std::string to_text(const MagmaTree& t, const std::vector<std::string>& names) {
  if (t.is_leaf()) return names.at(t.generator());
  return "(" + to_text(t.left(), names) + ">" + to_text(t.right(), names) + ")";
}

inline std::string to_text(const TensorWord& w, const std::vector<std::string>& names) {
  if (w.is_unit()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) s += '.';
    s += to_text(w[i], names);
  }
  return s;
}

inline std::string to_text(const TensorPoly& a, const std::vector<std::string>& names) {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : a) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    if (mag != 1) s += to_string(mag) + "*";
    s += to_text(w, names);
    first = false;
  }
  return s;
}

namespace detail {

class TensorParser {
 public:
  TensorParser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  TensorPoly poly() {
    skip();
    TensorPoly out;
    if (peek() == '0' && is_end_after_zero()) {
      ++pos_;
      expect_end();
      return out;
    }
    Rational sign = 1;
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      auto [c, w] = term();
      out.add(w, sign * c);
      skip();
      if (at_end()) break;
      if (peek() == '+') sign = 1;
      else if (peek() == '-') sign = -1;
      else fail("expected '+' or '-'");
      ++pos_;
    }
    return out;
  }

 private:
  std::pair<Rational, TensorWord> term() {
    skip();
    Rational c = 1;
    // A numeric prefix followed by '*' is a coefficient; a lone "1" is the unit word.
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t end = pos_;
      while (end < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '/'))
        ++end;
      std::size_t star = end;
      while (star < text_.size() && std::isspace(static_cast<unsigned char>(text_[star]))) ++star;
      if (star < text_.size() && text_[star] == '*') {
        const std::string digits(text_.substr(pos_, end - pos_));
        try {
          c = Rational(digits);
        } catch (const std::exception&) {
          fail("malformed coefficient '" + digits + "'");
        }
        pos_ = star + 1;
      }
    }
    return {c, word()};
  }

  TensorWord word() {
    skip();
    if (peek() == '1') {
      ++pos_;
      return TensorWord{};
    }
    std::vector<MagmaTree> letters{tree()};
    for (;;) {
      skip();
      if (peek() != '.') break;
      ++pos_;
      letters.push_back(tree());
    }
    return TensorWord(std::move(letters));
  }

  MagmaTree tree() {
    skip();
    if (peek() == '(') {
      ++pos_;
      MagmaTree l = tree();
      skip();
      if (peek() != '>') fail("expected '>'");
      ++pos_;
      MagmaTree r = tree();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return magma_product(l, r);
    }
    std::size_t end = pos_;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
      ++end;
    if (end == pos_) fail("expected a generator name");
    const std::string name(text_.substr(pos_, end - pos_));
    for (std::size_t g = 0; g < names_.size(); ++g) {
      if (names_[g] == name) {
        pos_ = end;
        return MagmaTree::leaf(static_cast<std::uint32_t>(g));
      }
    }
    throw Error(ErrorKind::kUnknownName, "unknown generator '" + name + "'");
  }

  bool is_end_after_zero() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p == text_.size();
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void expect_end() {
    skip();
    if (!at_end()) fail("trailing input");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kParse, what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline TensorPoly parse_tensor(std::string_view text, const std::vector<std::string>& names) {
  return detail::TensorParser(text, names).poly();
}

}  // namespace postgroup
