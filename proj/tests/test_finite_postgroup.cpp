#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "postgroup/corpus.hpp"
#include "postgroup/finite_postgroup.hpp"
#include "postgroup/selftest.hpp"

namespace postgroup {
namespace {

TEST(GroupTable, BuiltinsAreGroups) {
  const GroupTable z4 = cyclic_group(4);
  EXPECT_TRUE(z4.is_abelian());
  EXPECT_EQ(z4.mul(3, 2), 1u);
  EXPECT_EQ(z4.inv(1), 3u);
  const GroupTable s3 = symmetric_group(3);
  EXPECT_EQ(s3.size(), 6u);
  EXPECT_FALSE(s3.is_abelian());
  EXPECT_EQ(s3.name(s3.unit()), "123");
  // (p.q)(i) = p(q(i)): 213 . 132 sends 1 -> 2, 2 -> 3, 3 -> 1.
  EXPECT_EQ(s3.name(s3.mul(*s3.find("213"), *s3.find("132"))), "231");
}

TEST(GroupTable, RejectsNonGroups) {
  EXPECT_THROW(validate_group({"a", "b"}, {{0, 0}, {0, 0}}), Error);
  EXPECT_THROW(validate_group({"a", "b"}, {{0, 1}}), Error);
  EXPECT_THROW(validate_group({"a", "a"}, {{0, 1}, {1, 0}}), Error);
  // Latin square with a unit that is not associative.
  EXPECT_THROW(validate_group({"0", "1", "2", "3", "4"},
                              {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}),
               Error);
}

TEST(PostGroup, Examples) {
  EXPECT_NO_THROW(make_trivial(cyclic_group(3)));
  EXPECT_NO_THROW(make_conjugation(symmetric_group(3)));
  const GroupTable z3 = cyclic_group(3);
  IndexTable additive(3, std::vector<std::uint32_t>(3));
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) additive[a][b] = (a + b) % 3;
  try {
    validate_postgroup(z3, additive);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAutomorphism);
  }
}

TEST(PostGroup, GlGroupOfTrivialAndConjugation) {
  for (const GroupTable& g : {cyclic_group(4), symmetric_group(3)}) {
    EXPECT_EQ(gl_group(make_trivial(g)), g);
    // The conjugation post-group has dot a.op b = b.a and GL product the original a.b.
    const PostGroupTable conj = make_conjugation(g);
    EXPECT_EQ(gl_group(conj), g);
    for (std::uint32_t a = 0; a < g.size(); ++a)
      for (std::uint32_t b = 0; b < g.size(); ++b) {
        EXPECT_EQ(conj.dot(a, b), g.mul(b, a));
        EXPECT_EQ(conj.star(a, b), g.mul(a, b));
      }
  }
}

TEST(PostGroup, Opposite) {
  const GroupTable s3 = symmetric_group(3);
  EXPECT_EQ(opposite(make_trivial(s3)), make_conjugation(s3));
  for (const auto& entry : postgroup_corpus()) {
    if (!entry.table) continue;
    EXPECT_EQ(opposite(opposite(*entry.table)), *entry.table) << entry.name;
    if (is_pregroup(*entry.table)) EXPECT_EQ(opposite(*entry.table).triangle_table(), entry.table->triangle_table());
  }
}

TEST(PostGroup, PreGroupFlag) {
  EXPECT_TRUE(is_pregroup(make_trivial(cyclic_group(4))));
  EXPECT_FALSE(is_pregroup(make_conjugation(symmetric_group(3))));
}

TEST(Braiding, TrivialAbelianIsTheFlip) {
  const GroupTable z4 = cyclic_group(4);
  EXPECT_EQ(braiding(make_trivial(z4)), flip_map(z4.names()));
  EXPECT_EQ(postgroup_from_braided(z4, flip_map(z4.names())), make_trivial(z4));
  EXPECT_TRUE(check_braid_equation(flip_map(symmetric_group(3).names())));
}

TEST(Braiding, ActionCharacterisation) {
  for (const auto& entry : postgroup_corpus()) {
    if (!entry.table) continue;
    const PostGroupTable& pg = *entry.table;
    const GroupTable gl = gl_group(pg);
    const BraidMap s = braiding(pg);
    EXPECT_FALSE(braided_group_violation(gl, s)) << entry.name;
    for (std::uint32_t g = 0; g < pg.size(); ++g) {
      for (std::uint32_t h = 0; h < pg.size(); ++h) EXPECT_EQ(gl.mul(s.left[g][h], s.right[g][h]), gl.mul(g, h));
      // a * ((L_a)^-1 (a^{.-1})) = e
      EXPECT_EQ(gl.mul(g, pg.triangle_inverse(g, pg.dot_inv(g))), pg.unit());
    }
    EXPECT_EQ(compose(s, inverse(s)), compose(inverse(s), s));
    EXPECT_TRUE(compose(s, inverse(s)) == compose(flip_map(pg.names()), flip_map(pg.names())));
  }
}

TEST(Braiding, CorruptedSigmaIsCaught) {
  const PostGroupTable pg = make_conjugation(symmetric_group(3));
  BraidMap s = braiding(pg);
  std::swap(s.left[1][2], s.left[2][1]);
  std::swap(s.right[1][2], s.right[2][1]);
  const auto w = braid_equation_witness(s);
  ASSERT_TRUE(w);
  EXPECT_EQ(triple_names(s.names, *w), "(132, 132, 213)");
  EXPECT_TRUE(braided_group_violation(gl_group(pg), s));
  EXPECT_THROW(postgroup_from_braided(gl_group(pg), s), Error);
}

TEST(Braiding, YbeAndBraidAgree) {
  // R = P o sigma satisfies YBE exactly when sigma satisfies the braid equation.
  const PostGroupTable pg = make_conjugation(symmetric_group(3));
  const BraidMap good = braiding(pg);
  EXPECT_TRUE(check_ybe(good));
  for (std::uint32_t i = 0; i < 6; ++i)
    for (std::uint32_t j = i + 1; j < 6; ++j) {
      BraidMap s = good;
      std::swap(s.left[i][j], s.left[j][i]);
      std::swap(s.right[i][j], s.right[j][i]);
      EXPECT_EQ(check_ybe(s), check_braid_equation(s)) << i << "," << j;
    }
}

TEST(SkewBrace, TrivialHasEqualProducts) {
  const GroupTable s3 = symmetric_group(3);
  const SkewBrace sb = to_skew_brace(make_trivial(s3));
  EXPECT_EQ(sb.dot_group(), sb.star_group());
}

TEST(SkewBrace, ConjugationOnS3) {
  const GroupTable s3 = symmetric_group(3);
  const SkewBrace sb = to_skew_brace(make_conjugation(s3));
  EXPECT_EQ(sb.star_group(), s3);
  EXPECT_EQ(skew_brace_to_postgroup(sb), make_conjugation(s3));
}

TEST(SkewBrace, WitnessesViolateTheIdentity) {
  // Relabel S3 by every unit-fixing bijection and pair it with the original product.
  const GroupTable s3 = symmetric_group(3);
  std::vector<std::uint32_t> phi(6);
  std::iota(phi.begin(), phi.end(), 0u);
  int rejected = 0;
  do {
    if (phi[s3.unit()] != s3.unit()) continue;
    std::vector<std::uint32_t> inv(6);
    for (std::uint32_t i = 0; i < 6; ++i) inv[phi[i]] = i;
    IndexTable star(6, std::vector<std::uint32_t>(6));
    for (std::uint32_t a = 0; a < 6; ++a)
      for (std::uint32_t b = 0; b < 6; ++b) star[a][b] = inv[s3.mul(phi[a], phi[b])];
    const GroupTable st = validate_group(s3.names(), star);
    if (auto w = skew_brace_witness(s3, st)) {
      ++rejected;
      const auto [g, h, k] = *w;
      EXPECT_NE(st.mul(g, s3.mul(h, k)), s3.mul(s3.mul(st.mul(g, h), s3.inv(g)), st.mul(g, k)));
      EXPECT_THROW(validate_skew_brace(s3, st), Error);
    } else {
      EXPECT_NO_THROW(skew_brace_to_postgroup(validate_skew_brace(s3, st)));
    }
  } while (std::next_permutation(phi.begin(), phi.end()));
  EXPECT_GT(rejected, 0);
}

TEST(Corpus, EveryBuildableEntryPassesAllChecks) {
  std::size_t built = 0;
  for (const auto& entry : postgroup_corpus()) {
    if (!entry.table) continue;
    ++built;
    for (const auto& check : selftest::postgroup_checks(*entry.table))
      EXPECT_FALSE(check.failure) << entry.name << ": " << check.name << ": " << *check.failure;
  }
  EXPECT_EQ(built, 9u);
}

}  // namespace
}  // namespace postgroup
