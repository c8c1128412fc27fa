#include <map>

#include <gtest/gtest.h>

#include "postgroup/selftest.hpp"
#include "postgroup/tensor.hpp"
#include "postgroup/tensor_text.hpp"

namespace postgroup {
namespace {

const std::vector<std::string> kNames = tensor_generator_names(3);
TensorPoly P(const char* text) { return parse_tensor(text, kNames); }

TEST(Tensor, TreesAndWords) {
  const MagmaTree x = MagmaTree::leaf(0), y = MagmaTree::leaf(1);
  const MagmaTree xy = magma_product(x, y);
  EXPECT_EQ(xy.degree(), 2u);
  EXPECT_EQ(xy.left(), x);
  EXPECT_EQ(xy.right(), y);
  EXPECT_EQ(trees_of_degree(2, 1).size(), 2u);
  EXPECT_EQ(trees_of_degree(2, 2).size(), 4u);
  EXPECT_EQ(trees_of_degree(2, 3).size(), 16u);
  EXPECT_EQ(trees_of_degree(1, 5).size(), 14u);
  EXPECT_EQ(words_of_degree(2, 2).size(), 8u);
  EXPECT_EQ(words_up_to_degree(2, 4).size(), 275u);
}

TEST(Tensor, Unshuffle) {
  EXPECT_EQ(unshuffle(unit_poly()), tensor(unit_poly(), unit_poly()));
  EXPECT_EQ(unshuffle(P("x1")), tensor(P("x1"), P("1")) + tensor(P("1"), P("x1")));
  const TensorPolyPair expected = tensor(P("x1.x2"), P("1")) + tensor(P("x1"), P("x2")) + tensor(P("x2"), P("x1")) +
                                  tensor(P("1"), P("x1.x2"));
  EXPECT_EQ(unshuffle(P("x1.x2")), expected);
  EXPECT_EQ(unshuffle(P("x1.x1")).coefficient({TensorWord::letter(MagmaTree::leaf(0)), TensorWord::letter(MagmaTree::leaf(0))}), 2);
  EXPECT_THROW(unshuffle_splits(TensorWord(std::vector<MagmaTree>(9, MagmaTree::leaf(0)))), Error);
}

TEST(Tensor, Primitivity) {
  EXPECT_TRUE(is_primitive(P("x1")));
  EXPECT_TRUE(is_primitive(P("(x1>x2)")));
  EXPECT_FALSE(is_primitive(P("x1.x2")));
  EXPECT_TRUE(is_primitive(lie_bracket(P("x1"), P("x2"))));
  EXPECT_FALSE(is_primitive(unit_poly()));
}

TEST(Tensor, TriangleExamples) {
  EXPECT_EQ(triangle(P("x1"), P("x2")), P("(x1>x2)"));
  EXPECT_EQ(triangle(P("x1"), P("x2.x3")), P("(x1>x2).x3 + x2.(x1>x3)"));
  EXPECT_EQ(triangle(P("x1.x2"), P("x3")), P("(x1>(x2>x3)) - ((x1>x2)>x3)"));
  EXPECT_EQ(triangle(P("1"), P("x1.x2")), P("x1.x2"));
  EXPECT_EQ(triangle(P("x1"), P("1")), P("0"));
}

TEST(Tensor, GlStarAndAntipodeExamples) {
  EXPECT_EQ(gl_star(P("1"), P("x1.(x2>x3)")), P("x1.(x2>x3)"));
  EXPECT_EQ(gl_star(P("x1"), P("x2")), P("x1.x2 + (x1>x2)"));
  EXPECT_EQ(antipode_star(P("x1")), P("-x1"));
  EXPECT_EQ(antipode_dot(P("x1.x2")), P("x2.x1"));
  EXPECT_EQ(antipode_dot(P("x1.x2.x3")), P("-x3.x2.x1"));
}

TEST(Tensor, KExamples) {
  EXPECT_EQ(kmap_tensor(P("x1")), P("x1"));
  EXPECT_EQ(kmap_tensor(P("x1.x2")), P("x1.x2 - (x1>x2)"));
  EXPECT_EQ(kmap_tensor(P("x1.x2.x3")),
            P("x1.x2.x3 - x1.(x2>x3) - (x1>x2).x3 - x2.(x1>x3) + (x2>(x1>x3)) + ((x1>x2)>x3)"));
}

// Gauss-Jordan inversion of K on one graded piece, compared with K^{-1}.
TEST(Tensor, KInverseMatchesMatrixInverse) {
  for (std::uint32_t degree = 1; degree <= 4; ++degree) {
    const auto basis = words_of_degree(2, degree);
    const std::size_t n = basis.size();
    std::map<TensorWord, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[basis[i]] = i;
    // Augmented [K | I], column j is K(basis[j]).
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [w, c] : kmap_tensor_word(basis[j])) m[index.at(w)][j] = c;
      m[j][n + j] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && m[pivot][col] == 0) ++pivot;
      ASSERT_LT(pivot, n) << "K is singular in degree " << degree;
      std::swap(m[pivot], m[col]);
      const Rational scale = m[col][col];
      for (auto& v : m[col]) v /= scale;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || m[r][col] == 0) continue;
        const Rational f = m[r][col];
        for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[col][k];
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      TensorPoly column;
      for (std::size_t i = 0; i < n; ++i) column.add(basis[i], m[i][n + j]);
      EXPECT_EQ(kmap_tensor_inverse_word(basis[j]), column) << to_text(basis[j], kNames);
    }
  }
}

TEST(Tensor, KRoundTrip) {
  for (const auto& w : words_up_to_degree(3, 3)) {
    const TensorPoly a(w);
    EXPECT_EQ(kmap_tensor(kmap_tensor_inverse(a)), a);
    EXPECT_EQ(kmap_tensor_inverse(kmap_tensor(a)), a);
  }
}

// (v.y) |> C computed by peeling the last letter, using A |> (B |> C) = (A*B) |> C.
TensorPoly right_peel(const TensorWord& u, const TensorWord& c) {
  if (u.length() <= 1) return triangle_word(u, c);
  std::vector<MagmaTree> head(u.letters().begin(), u.letters().end() - 1);
  const TensorWord v(std::move(head));
  const TensorWord y = TensorWord::letter(u[u.length() - 1]);
  TensorPoly out = linear(right_peel(y, c), [&](const TensorWord& w) { return right_peel(v, w); });
  for (const auto& [v1, v2] : unshuffle_splits(v)) {
    if (v2.is_unit()) continue;
    for (const auto& [t, coeff] : right_peel(v2, y)) out.add(right_peel(v1 + t, c), -coeff);
  }
  return out;
}

TEST(Tensor, TriangleIsIndependentOfPeelingOrder) {
  for (const auto& u : words_up_to_degree(2, 4))
    for (const auto& c : words_up_to_degree(2, 4 - u.degree()))
      EXPECT_EQ(triangle_word(u, c), right_peel(u, c)) << to_text(u, kNames) << " |> " << to_text(c, kNames);
}

TEST(Tensor, HopfStructureLaws) {
  const auto basis = words_up_to_degree(2, 4);
  for (const auto& a : basis) {
    const TensorPoly A(a);
    TensorPoly left_star, right_star, left_dot;
    for (const auto& [a1, a2] : unshuffle_splits(a)) {
      left_star += gl_star(antipode_star_word(a1), TensorPoly(a2));
      right_star += gl_star(TensorPoly(a1), antipode_star_word(a2));
      left_dot += concat(antipode_dot(TensorPoly(a1)), TensorPoly(a2));
    }
    const TensorPoly eps = unit_poly() * counit(A);
    EXPECT_EQ(left_star, eps) << to_text(a, kNames);
    EXPECT_EQ(right_star, eps) << to_text(a, kNames);
    EXPECT_EQ(left_dot, eps) << to_text(a, kNames);
    for (const auto& b : basis) {
      if (a.degree() + b.degree() > 4) continue;
      const TensorPoly B(b);
      const TensorPolyPair da = unshuffle(A), db = unshuffle(B);
      auto pair_product = [&](const TensorPolyPair& x, const TensorPolyPair& y, auto op) {
        TensorPolyPair out;
        for (const auto& [k1, c1] : x)
          for (const auto& [k2, c2] : y)
            out.add(tensor(op(TensorPoly(k1.first), TensorPoly(k2.first)), op(TensorPoly(k1.second), TensorPoly(k2.second))),
                    c1 * c2);
        return out;
      };
      EXPECT_EQ(unshuffle(concat(A, B)), pair_product(da, db, concat));
      EXPECT_EQ(unshuffle(gl_star(A, B)), pair_product(da, db, gl_star));
      EXPECT_EQ(unshuffle(triangle(A, B)), pair_product(da, db, triangle));
      EXPECT_EQ(counit(triangle(A, B)), counit(A) * counit(B));
      for (const auto& c : basis) {
        if (a.degree() + b.degree() + c.degree() > 4) continue;
        const TensorPoly C(c);
        EXPECT_EQ(gl_star(gl_star(A, B), C), gl_star(A, gl_star(B, C)));
      }
    }
  }
}

TEST(Tensor, GlLieBracketOnLetters) {
  EXPECT_EQ(gl_lie_bracket(P("x1"), P("x2")), P("(x1>x2) - (x2>x1) + x1.x2 - x2.x1"));
  EXPECT_EQ(gl_lie_bracket(P("x1"), P("x2")), gl_star(P("x1"), P("x2")) - gl_star(P("x2"), P("x1")));
}

TEST(Tensor, PostLieOnLetterTriples) {
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b)
      for (std::uint32_t c = 0; c < 2; ++c)
        EXPECT_TRUE(check_postlie_axioms(generator_poly(a), generator_poly(b), generator_poly(c)).ok());
  EXPECT_THROW(check_postlie_axioms(P("x1.x2"), P("x1"), P("x2")), Error);
}

TEST(Tensor, AxiomSuiteThroughDegreeFive) {
  const auto r = selftest::posthopf_postlie(2, 5);
  EXPECT_TRUE(r.identities_hold) << r.detail;
  const auto k = selftest::k_hopf_isomorphism(2, 5);
  EXPECT_TRUE(k.identities_hold) << k.detail;
}

TEST(Tensor, AxiomSuiteWithThreeGenerators) {
  const auto r = selftest::posthopf_postlie(3, 4);
  EXPECT_TRUE(r.identities_hold) << r.detail;
}

}  // namespace
}  // namespace postgroup
