#pragma once

// The free post-group F_M over a diagonal left-regular magma M.
//
// The automorphism L_u = u |> - of a word u is carried by a single
// permutation of M acting letterwise (g^{-1} -> pi(g)^{-1}). For
// u = a_1 ... a_n it is the composite
//
//   L_u = L_{u_1} o L_{u_1 |>^{-1} a_2} o ... o L_{u_{n-1} |>^{-1} a_n},
//
// where u_k is the prefix a_1 ... a_k and every factor is the action of a
// single letter.

#include <span>
#include <vector>

#include "postgroup/magma.hpp"
#include "postgroup/permutation.hpp"
#include "postgroup/words.hpp"

namespace postgroup {

using LetterAction = Permutation;

inline void require_magma_alphabet(const MagmaTable& magma, const ReducedWord& u) {
  if (!ReducedWord::same_alphabet(magma.alphabet(), u.alphabet())) {
    throw Error(ErrorKind::kAlphabetMismatch, "word is not over the magma alphabet");
  }
}

inline Letter apply(const LetterAction& pi, const Letter& a) { return pi(a); }

// Letterwise image of a reduced word. A letterwise bijection keeps the word
// reduced, so no further reduction happens.
inline ReducedWord apply(const LetterAction& pi, const ReducedWord& v) {
  std::vector<Letter> raw;
  raw.reserve(v.length());
  for (const Letter& a : v.letters()) raw.push_back(pi(a));
  return reduce(v.alphabet(), raw);
}

// The def-L iteration over an arbitrary (possibly unreduced) letter sequence.
inline LetterAction act_perm_of_letters(const MagmaTable& magma, std::span<const Letter> letters) {
  LetterAction pi = Permutation::identity(magma.size());
  LetterAction pi_inv = pi;
  for (const Letter& a : letters) {
    if (a.generator >= magma.size()) {
      throw Error(ErrorKind::kAlphabetMismatch, "letter outside the magma alphabet");
    }
    const Letter b = pi_inv(a);
    const Permutation& step = magma.generator_perm(b);
    pi = compose(pi, step);
    pi_inv = compose(step.inverse(), pi_inv);
  }
  return pi;
}

inline LetterAction act_perm(const MagmaTable& magma, const ReducedWord& u) {
  require_magma_alphabet(magma, u);
  return act_perm_of_letters(magma, u.letters());
}

// u |> v
inline ReducedWord act(const MagmaTable& magma, const ReducedWord& u, const ReducedWord& v) {
  require_magma_alphabet(magma, v);
  return apply(act_perm(magma, u), v);
}

// u |>^{-1} v
inline ReducedWord inverse_act(const MagmaTable& magma, const ReducedWord& u,
                               const ReducedWord& v) {
  require_magma_alphabet(magma, v);
  return apply(act_perm(magma, u).inverse(), v);
}

// u * v = u.(u |> v)
inline ReducedWord gl_product(const MagmaTable& magma, const ReducedWord& u,
                              const ReducedWord& v) {
  return dot(u, act(magma, u, v));
}

// u^{*-1} = (L_u)^{-1}(u^{.-1})
inline ReducedWord gl_inverse(const MagmaTable& magma, const ReducedWord& u) {
  return inverse_act(magma, u, invert(u));
}

// u |>> v = u.(u |> v).u^{.-1}, the action of the opposite post-group.
inline ReducedWord opposite_act(const MagmaTable& magma, const ReducedWord& u,
                                const ReducedWord& v) {
  return dot(gl_product(magma, u, v), invert(u));
}

// J on letters: positive letters are fixed, m^{-1} goes to the GL inverse of
// m, which is psi(m).
inline Letter jmap_letter(const MagmaTable& magma, const Letter& a) {
  return a.positive() ? a : magma.psi(a.inverse());
}

inline Letter jmap_letter_inverse(const MagmaTable& magma, const Letter& a) {
  return a.positive() ? a : magma.psi(a).inverse();
}

// J : (F_M, .) -> (F_M, *), the group morphism fixing M.
//
// Evaluates a'_1 * ... * a'_n left to right. The running permutation is the
// action of the GL prefix, so each factor contributes exactly one letter.
inline ReducedWord jmap(const MagmaTable& magma, const ReducedWord& u) {
  require_magma_alphabet(magma, u);
  LetterAction prefix = Permutation::identity(magma.size());
  std::vector<Letter> raw;
  raw.reserve(u.length());
  for (const Letter& a : u.letters()) {
    const Letter image = jmap_letter(magma, a);
    raw.push_back(prefix(image));
    prefix = compose(prefix, magma.generator_perm(image));
  }
  return reduce(u.alphabet(), raw);
}

// K = J^{-1}. Solves the triangular system b_k = (L_{a'_1} o ... o L_{a'_{k-1}})(a'_k)
// letter by letter, then pulls each a'_k back through J on letters.
inline ReducedWord kmap(const MagmaTable& magma, const ReducedWord& v) {
  require_magma_alphabet(magma, v);
  LetterAction prefix_inv = Permutation::identity(magma.size());
  std::vector<Letter> raw;
  raw.reserve(v.length());
  for (const Letter& b : v.letters()) {
    const Letter image = prefix_inv(b);
    raw.push_back(jmap_letter_inverse(magma, image));
    prefix_inv = compose(magma.generator_perm(image).inverse(), prefix_inv);
  }
  return reduce(v.alphabet(), raw);
}

}  // namespace postgroup
