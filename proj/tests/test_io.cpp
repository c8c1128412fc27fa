#include <random>

#include <gtest/gtest.h>

#include "postgroup/corpus.hpp"
#include "postgroup/io.hpp"
#include "postgroup/tensor_text.hpp"

namespace postgroup {
namespace {

using io::json;

TEST(Io, MagmaRoundTrip) {
  const MagmaTable m = cyclic_shift_magma(3);
  const json j = io::to_json(m);
  EXPECT_EQ(j["triangle"][0][0], "x1");
  EXPECT_EQ(io::magma_from_json(j), m);
  EXPECT_EQ(io::to_json(io::magma_from_json(io::parse_json(j.dump()))), j);
}

TEST(Io, MagmaErrors) {
  const json additive = io::parse_json(R"({"elements":["x0","x1"],"triangle":[["x0","x1"],["x1","x0"]]})");
  EXPECT_FALSE(io::check_magma_json(additive).ok());
  try {
    io::magma_from_json(additive);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDiagonality);
  }
  EXPECT_THROW(io::magma_from_json(io::parse_json(R"({"elements":["x0"],"triangle":[["x0"]],"extra":1})")), Error);
  EXPECT_THROW(io::magma_from_json(io::parse_json(R"({"elements":["x0"]})")), Error);
  try {
    io::magma_from_json(io::parse_json(R"({"elements":["x0"],"triangle":[["y"]]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownName);
  }
  EXPECT_THROW(io::parse_json("{"), Error);
}

TEST(Io, PostGroupBraceAndBraidedRoundTrips) {
  for (const auto& entry : postgroup_corpus()) {
    if (!entry.table) continue;
    const PostGroupTable& pg = *entry.table;
    EXPECT_EQ(io::postgroup_from_json(io::to_json(pg)), pg) << entry.name;
    const SkewBrace sb = to_skew_brace(pg);
    EXPECT_EQ(io::skew_brace_from_json(io::to_json(sb)), sb) << entry.name;
    const auto doc = io::braided_from_json(io::to_json(gl_group(pg), braiding(pg)));
    EXPECT_EQ(doc.star, gl_group(pg));
    EXPECT_EQ(doc.sigma, braiding(pg));
    EXPECT_EQ(io::group_from_json(io::to_json(pg.dot_group())), pg.dot_group());
  }
}

TEST(Io, ActionRoundTrip) {
  const RightAction a = z2_swap_action();
  const json j = io::to_json(a);
  EXPECT_EQ(j["action"]["p"]["s"], "q");
  EXPECT_EQ(io::action_from_json(j), a);
  json missing = j;
  missing["action"]["q"].erase("s");
  EXPECT_THROW(io::action_from_json(missing), Error);
  json stray = j;
  stray["action"]["r"] = json::object();
  EXPECT_THROW(io::action_from_json(stray), Error);
}

TEST(Io, TensorTextRoundTrip) {
  const auto names = tensor_generator_names(2);
  EXPECT_EQ(to_text(TensorPoly{}, names), "0");
  EXPECT_EQ(to_text(unit_poly(), names), "1");
  const TensorPoly a = parse_tensor("1 - 3/2*(x1>x2) + x1.x2", names);
  EXPECT_EQ(to_text(a, names), "1 - 3/2*(x1>x2) + x1.x2");
  EXPECT_EQ(parse_tensor("2*x1 - x1 + 0*x2", names), parse_tensor("x1", names));
  EXPECT_TRUE(parse_tensor("0", names).is_zero());
  std::mt19937_64 rng(9);
  const auto basis = words_up_to_degree(2, 4);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    TensorPoly p;
    for (int t = 0; t < 4; ++t) p.add(basis[pick(rng)], Rational(num(rng), den(rng)));
    EXPECT_EQ(parse_tensor(to_text(p, names), names), p);
  }
  EXPECT_THROW(parse_tensor("x3", names), Error);
  EXPECT_THROW(parse_tensor("(x1>x2", names), Error);
  EXPECT_THROW(parse_tensor("x1 +", names), Error);
  EXPECT_THROW(parse_tensor("1/0*x1", names), Error);
}

}  // namespace
}  // namespace postgroup
