#include <random>

#include <gtest/gtest.h>

#include "postgroup/free_postgroup.hpp"
#include "postgroup/random.hpp"

namespace postgroup {
namespace {

MagmaTable mixed3() { return validate_magma({"x0", "x1", "x2"}, {{1, 0, 2}, {0, 2, 1}, {2, 0, 1}}); }

class ShiftTest : public ::testing::Test {
 protected:
  MagmaTable m = cyclic_shift_magma(3);
  ReducedWord w(const char* text) { return parse_word(m.alphabet(), text); }
};

TEST_F(ShiftTest, ActPermExamples) {
  EXPECT_EQ(act_perm(m, w("x0 x1")), Permutation({2, 0, 1}));
  EXPECT_EQ(act_perm(m, w("x0'")), Permutation({2, 0, 1}));
  EXPECT_TRUE(act_perm(m, w("e")).is_identity());
}

TEST_F(ShiftTest, WordExamples) {
  EXPECT_EQ(print(act(m, w("x0"), w("x1 x2'"))), "x2 x0'");
  EXPECT_TRUE(act(m, w("x0 x1'"), w("")).is_unit());
  EXPECT_EQ(print(inverse_act(m, w("x0"), w("x0"))), "x2");
  EXPECT_EQ(inverse_act(m, w(""), w("x1 x0")), w("x1 x0"));
  EXPECT_EQ(print(gl_product(m, w("x0"), w("x1"))), "x0 x2");
  EXPECT_EQ(gl_product(m, w(""), w("x2' x1")), w("x2' x1"));
  EXPECT_EQ(print(gl_inverse(m, w("x0"))), "x2'");
  EXPECT_TRUE(gl_product(m, w("x0"), w("x2'")).is_unit());
  EXPECT_TRUE(gl_inverse(m, w("")).is_unit());
  EXPECT_EQ(opposite_act(m, w(""), w("x1")), w("x1"));
  EXPECT_EQ(print(jmap(m, w("x0 x1"))), "x0 x2");
  EXPECT_EQ(print(jmap(m, w("x0'"))), "x2'");
  EXPECT_TRUE(jmap(m, w("")).is_unit());
  EXPECT_EQ(print(kmap(m, w("x0 x2"))), "x0 x1");
  EXPECT_TRUE(kmap(m, w("")).is_unit());
}

TEST(FreePostGroup, TrivialMagmaIsTheTrivialPostGroup) {
  const MagmaTable m = trivial_magma(3);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto u = random_reduced_word(m.alphabet(), 10, rng);
    const auto v = random_reduced_word(m.alphabet(), 10, rng);
    EXPECT_TRUE(act_perm(m, u).is_identity());
    EXPECT_EQ(act(m, u, v), v);
    EXPECT_EQ(gl_product(m, u, v), dot(u, v));
    EXPECT_EQ(jmap(m, u), u);
  }
}

class AllMagmas : public ::testing::TestWithParam<int> {
 protected:
  MagmaTable magma() const {
    switch (GetParam()) {
      case 0: return cyclic_shift_magma(3);
      case 1: return trivial_magma(3);
      case 2: return mixed3();
      default: return cyclic_shift_magma(5, 2);
    }
  }
};

TEST_P(AllMagmas, PostGroupAxioms) {
  const MagmaTable m = magma();
  std::mt19937_64 rng(100 + GetParam());
  for (int i = 0; i < 400; ++i) {
    const auto u = random_reduced_word(m.alphabet(), 9, rng);
    const auto v = random_reduced_word(m.alphabet(), 9, rng);
    const auto x = random_reduced_word(m.alphabet(), 9, rng);
    EXPECT_EQ(act(m, gl_product(m, u, v), x), act(m, u, act(m, v, x)));
    EXPECT_EQ(act(m, u, dot(v, x)), dot(act(m, u, v), act(m, u, x)));
    EXPECT_EQ(gl_product(m, gl_product(m, u, v), x), gl_product(m, u, gl_product(m, v, x)));
    EXPECT_TRUE(gl_product(m, u, gl_inverse(m, u)).is_unit());
    EXPECT_TRUE(gl_product(m, gl_inverse(m, u), u).is_unit());
    EXPECT_EQ(inverse_act(m, u, act(m, u, v)), v);
    EXPECT_EQ(act(m, u, inverse_act(m, u, v)), v);
    EXPECT_EQ(act(m, u, v).length(), v.length());
  }
}

TEST_P(AllMagmas, OppositePostGroupAxioms) {
  const MagmaTable m = magma();
  std::mt19937_64 rng(200 + GetParam());
  for (int i = 0; i < 300; ++i) {
    const auto u = random_reduced_word(m.alphabet(), 8, rng);
    const auto v = random_reduced_word(m.alphabet(), 8, rng);
    const auto x = random_reduced_word(m.alphabet(), 8, rng);
    EXPECT_EQ(opposite_act(m, gl_product(m, u, v), x), opposite_act(m, u, opposite_act(m, v, x)));
    EXPECT_EQ(opposite_act(m, u, dot(v, x)), dot(opposite_act(m, u, v), opposite_act(m, u, x)));
    // Same GL product: u *op v = (u |>> v).u
    EXPECT_EQ(dot(opposite_act(m, u, v), u), gl_product(m, u, v));
  }
}

TEST_P(AllMagmas, ActionIsWellDefinedOnUnreducedInput) {
  const MagmaTable m = magma();
  std::mt19937_64 rng(300 + GetParam());
  for (int i = 0; i < 300; ++i) {
    const auto raw = random_letters(m.size(), 12, rng);
    EXPECT_EQ(act_perm_of_letters(m, raw), act_perm(m, reduce(m.alphabet(), raw)));
  }
}

TEST_P(AllMagmas, JIsTheFoldOfGlProducts) {
  const MagmaTable m = magma();
  std::mt19937_64 rng(400 + GetParam());
  for (int i = 0; i < 300; ++i) {
    const auto u = random_reduced_word(m.alphabet(), 12, rng);
    ReducedWord fold = unit(m.alphabet());
    for (const Letter& a : u.letters()) fold = gl_product(m, fold, generator_word(m.alphabet(), jmap_letter(m, a)));
    EXPECT_EQ(jmap(m, u), fold);
    EXPECT_EQ(kmap(m, jmap(m, u)), u);
    EXPECT_EQ(jmap(m, kmap(m, u)), u);
  }
}

TEST_P(AllMagmas, JOnLettersMatchesGlInverse) {
  const MagmaTable m = magma();
  for (std::uint32_t g = 0; g < m.size(); ++g) {
    const auto gen = generator_word(m.alphabet(), {g, 1});
    EXPECT_EQ(generator_word(m.alphabet(), jmap_letter(m, {g, -1})), gl_inverse(m, gen));
    EXPECT_EQ(jmap_letter_inverse(m, jmap_letter(m, {g, -1})), (Letter{g, -1}));
  }
}

INSTANTIATE_TEST_SUITE_P(Magmas, AllMagmas, ::testing::Values(0, 1, 2, 3));

TEST(FreePostGroup, RejectsForeignWords) {
  const MagmaTable m = cyclic_shift_magma(3);
  const auto other = make_alphabet({"y0", "y1", "y2"});
  EXPECT_THROW(act(m, parse_word(other, "y0"), parse_word(other, "y1")), Error);
  EXPECT_THROW(jmap(m, parse_word(other, "y0")), Error);
}

}  // namespace
}  // namespace postgroup
