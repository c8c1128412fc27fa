#include <gtest/gtest.h>

#include "postgroup/magnus.hpp"
#include "postgroup/tensor_text.hpp"

namespace postgroup {
namespace {

const std::vector<std::string> kNames = tensor_generator_names(1);
TensorPoly P(const char* text) { return parse_tensor(text, kNames); }
const MagmaTree x = MagmaTree::leaf(0);

TEST(Magnus, ExpSeries) {
  EXPECT_EQ(exp_dot_series(x, 0)[0], unit_poly());
  EXPECT_EQ(exp_dot_series(x, 3)[2], P("1/2*x1.x1"));
  EXPECT_EQ(exp_dot_series(x, 3)[3], P("1/6*x1.x1.x1"));
  TruncatedSeries z(3);
  z[1] = P("x1");
  const auto e = exp_star_series(z, 3);
  EXPECT_EQ(e[2], P("1/2*x1.x1 + 1/2*(x1>x1)"));
  EXPECT_THROW(exp_star_series(constant_series(unit_poly(), 2), 2), Error);
}

TEST(Magnus, Bernoulli) {
  const std::vector<Rational> listed = {1, Rational(1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42)};
  for (std::size_t n = 0; n < listed.size(); ++n) EXPECT_EQ(bernoulli_modified(n), listed[n]) << n;
  EXPECT_EQ(bernoulli_modified(8), Rational(-1, 30));
  EXPECT_EQ(bernoulli_modified(10), Rational(5, 66));
}

TEST(Magnus, AlphaCoefficients) {
  const auto alpha = alpha_series(x, 3);
  EXPECT_EQ(alpha[0], P("x1"));
  EXPECT_EQ(alpha[1], P("-(x1>x1)"));
  // S_*(x.x) = x.x + 2 x|>x by hand, then (x.x)|>x = x|>(x|>x) - (x|>x)|>x.
  EXPECT_EQ(alpha[2], P("1/2*(x1>(x1>x1)) + 1/2*((x1>x1)>x1)"));
}

TEST(Magnus, AlphaOde) {
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_TRUE(check_alpha_ode(x, n).ok()) << n;
  TruncatedSeries bad = alpha_series(x, 5);
  bad[2] += P("(x1>(x1>x1))");
  EXPECT_EQ(check_alpha_ode(bad).first_failure, std::optional<std::size_t>(1));
}

TEST(Magnus, FlowIsKOfTheExponential) {
  const auto y = solve_right_flow(x, 5);
  EXPECT_EQ(y[2], P("1/2*x1.x1 - 1/2*(x1>x1)"));
  const auto k = coefficientwise(exp_dot_series(x, 5), kmap_tensor);
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(y[n], k[n]) << n;
  // Y' = Y.alpha holds coefficientwise.
  const auto lhs = derivative(y);
  const auto rhs = series_product(y, alpha_series(x, 5), concat);
  for (std::size_t n = 0; n < 5; ++n) EXPECT_EQ(lhs[n], rhs[n]) << n;
}

TEST(Magnus, LogPrimitivity) {
  EXPECT_TRUE(check_primitivity_of_log(exp_dot_series(x, 5)).ok());
  const auto log = log_dot_series(exp_dot_series(x, 5));
  EXPECT_EQ(log[1], P("x1"));
  for (std::size_t n = 2; n <= 5; ++n) EXPECT_TRUE(log[n].is_zero());
  EXPECT_TRUE(check_primitivity_of_log(solve_right_flow(x, 4)).ok());
  TruncatedSeries bad = exp_dot_series(x, 3);
  bad[2] = P("x1.x1");
  EXPECT_EQ(check_primitivity_of_log(bad).first_failure, std::optional<std::size_t>(2));
}

TEST(Magnus, OmegaCoefficients) {
  const auto omega = magnus_gl(x, 5);
  EXPECT_TRUE(omega[0].is_zero());
  EXPECT_EQ(omega[1], P("x1"));
  EXPECT_EQ(omega[2], P("-1/2*(x1>x1)"));
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_TRUE(check_magnus_gl(x, n).ok()) << n;
}

TEST(Magnus, WrongBernoulliSignIsDetected) {
  // Redo the recursion with B_1 = -1/2; the exp^* identity must then fail.
  const std::size_t order = 4;
  const auto alpha = alpha_series(x, order);
  TruncatedSeries omega(order);
  for (std::size_t k = 0; k < order; ++k) {
    TensorPoly integrand = alpha[k];
    TruncatedSeries ad = alpha;
    for (std::size_t n = 1; n <= k; ++n) {
      ad = series_product(omega, ad, gl_lie_bracket);
      Rational b = bernoulli_modified(n);
      if (n == 1) b = -b;
      integrand += ad[k] * (b / factorial(static_cast<unsigned>(n)));
    }
    omega[k + 1] = integrand * (Rational(1) / Rational(k + 1));
  }
  const auto lhs = exp_star_series(omega, order);
  const auto rhs = exp_dot_series(x, order);
  bool all_equal = true;
  for (std::size_t k = 0; k <= order; ++k) all_equal = all_equal && lhs[k] == rhs[k];
  EXPECT_FALSE(all_equal);
}

}  // namespace
}  // namespace postgroup
