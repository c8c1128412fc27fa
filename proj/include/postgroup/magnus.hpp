#pragma once

// Truncated formal series in t with coefficients in T(M): exp^.(tx),
// alpha(tx) = S_*(exp^.(tx)) |> x, the flow Y' = Y.alpha and the right-sided
// Magnus expansion Omega_* in the Grossman-Larson bracket.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "postgroup/error.hpp"
#include "postgroup/rational.hpp"
#include "postgroup/tensor.hpp"

namespace postgroup {

// Coefficients of t^0 .. t^order; everything beyond is discarded.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  std::size_t order() const { return coeffs_.size() - 1; }
  const TensorPoly& operator[](std::size_t k) const { return coeffs_[k]; }
  TensorPoly& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<TensorPoly>& coefficients() const { return coeffs_; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<TensorPoly> coeffs_;
};

inline TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
  for (std::size_t k = 0; k <= a.order(); ++k) a[k] += b[k];
  return a;
}

inline TruncatedSeries operator*(const Rational& s, TruncatedSeries a) {
  for (std::size_t k = 0; k <= a.order(); ++k) a[k] *= s;
  return a;
}

// Cauchy product under a bilinear map, truncated at the common order.
template <typename Op>
TruncatedSeries series_product(const TruncatedSeries& a, const TruncatedSeries& b, Op&& op) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += op(a[i], b[j]);
    }
  }
  return out;
}

template <typename F>
TruncatedSeries coefficientwise(const TruncatedSeries& a, F&& f) {
  TruncatedSeries out(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) out[k] = f(a[k]);
  return out;
}

inline TruncatedSeries constant_series(const TensorPoly& c, std::size_t order) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

// sum_k t^k x^{.k} / k!
inline TruncatedSeries exp_dot_series(const MagmaTree& x, std::size_t order) {
  TruncatedSeries s(order);
  TensorPoly power = unit_poly();
  const TensorPoly letter = tree_poly(x);
  for (std::size_t k = 0; k <= order; ++k) {
    s[k] = power * (1 / factorial(static_cast<unsigned>(k)));
    power = concat(power, letter);
  }
  return s;
}

// sum_k Z^{*k} / k! for Z with zero constant term.
inline TruncatedSeries exp_star_series(const TruncatedSeries& z, std::size_t order) {
  if (!z[0].is_zero()) throw Error(ErrorKind::kInvalidArgument, "exp_star needs a zero constant term");
  TruncatedSeries zt(order);
  for (std::size_t k = 1; k <= std::min(order, z.order()); ++k) zt[k] = z[k];
  TruncatedSeries out = constant_series(unit_poly(), order);
  TruncatedSeries power = out;
  for (std::size_t k = 1; k <= order; ++k) {
    power = series_product(power, zt, gl_star);
    out = out + (1 / factorial(static_cast<unsigned>(k))) * power;
  }
  return out;
}

// (1/t) d/dt shifted back: coefficient k of the derivative is (k+1) a_{k+1}.
inline TruncatedSeries derivative(const TruncatedSeries& a) {
  TruncatedSeries out(a.order() == 0 ? 0 : a.order() - 1);
  for (std::size_t k = 0; k + 1 <= a.order(); ++k) out[k] = Rational(k + 1) * a[k + 1];
  return out;
}

// Bernoulli numbers with B_1 = +1/2.
inline Rational bernoulli_modified(std::size_t n) {
  // Standard B_m from sum_{k=0}^{m} C(m+1,k) B_k = 0, then flip B_1.
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational s = 0;
    for (std::size_t k = 0; k < m; ++k) s += binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(k)) * b[k];
    b[m] = -s / Rational(m + 1);
  }
  return n == 1 ? -b[1] : b[n];
}

// alpha(tx) = S_*(exp^.(tx)) |> x
inline TruncatedSeries alpha_series(const MagmaTree& x, std::size_t order) {
  const TensorPoly letter = tree_poly(x);
  return coefficientwise(exp_dot_series(x, order),
                         [&](const TensorPoly& c) { return triangle(antipode_star(c), letter); });
}

struct OrderReport {
  std::optional<std::size_t> first_failure;  // order k of the first mismatch
  bool ok() const { return !first_failure; }
};

// (k+1) alpha_{k+1} = - sum_{i+j=k} alpha_i |> alpha_j for every k < order.
inline OrderReport check_alpha_ode(const TruncatedSeries& alpha) {
  const TruncatedSeries rhs = series_product(alpha, alpha, triangle);
  for (std::size_t k = 0; k < alpha.order(); ++k)
    if (Rational(k + 1) * alpha[k + 1] != -rhs[k]) return {k};
  return {};
}

inline OrderReport check_alpha_ode(const MagmaTree& x, std::size_t order) {
  return check_alpha_ode(alpha_series(x, order));
}

// Y' = Y.alpha, Y(0) = 1, order by order.
inline TruncatedSeries solve_right_flow(const TruncatedSeries& alpha) {
  TruncatedSeries y(alpha.order());
  y[0] = unit_poly();
  for (std::size_t k = 0; k < alpha.order(); ++k) {
    TensorPoly rhs;
    for (std::size_t i = 0; i <= k; ++i) rhs += concat(y[i], alpha[k - i]);
    y[k + 1] = rhs * (Rational(1) / Rational(k + 1));
  }
  return y;
}

inline TruncatedSeries solve_right_flow(const MagmaTree& x, std::size_t order) {
  return solve_right_flow(alpha_series(x, order));
}

// Omega_*' = sum_n B~_n / n! ad^{*n}_{Omega_*}(alpha), Omega_*(0) = 0, with
// ad^*_a(b) = [[a, b]].
inline TruncatedSeries magnus_gl(const TruncatedSeries& alpha) {
  const std::size_t order = alpha.order();
  TruncatedSeries omega(order);
  for (std::size_t k = 0; k < order; ++k) {
    // Coefficient k of the integrand only involves omega_1 .. omega_k.
    TensorPoly integrand = alpha[k];
    TruncatedSeries ad = alpha;
    for (std::size_t n = 1; n <= k; ++n) {
      ad = series_product(omega, ad, gl_lie_bracket);
      const Rational b = bernoulli_modified(n);
      if (b != 0) integrand += ad[k] * (b / factorial(static_cast<unsigned>(n)));
    }
    omega[k + 1] = integrand * (Rational(1) / Rational(k + 1));
  }
  return omega;
}

inline TruncatedSeries magnus_gl(const MagmaTree& x, std::size_t order) {
  return magnus_gl(alpha_series(x, order));
}

// exp^*(Omega_*) = exp^.(tx), checked order by order.
inline OrderReport check_magnus_gl(const MagmaTree& x, std::size_t order) {
  const auto lhs = exp_star_series(magnus_gl(x, order), order);
  const auto rhs = exp_dot_series(x, order);
  for (std::size_t k = 0; k <= order; ++k)
    if (lhs[k] != rhs[k]) return {k};
  return {};
}

// log^.(Y) for Y(0) = 1.
inline TruncatedSeries log_dot_series(const TruncatedSeries& y) {
  if (y[0] != unit_poly()) throw Error(ErrorKind::kInvalidArgument, "log needs constant term 1");
  const std::size_t order = y.order();
  TruncatedSeries z = y;
  z[0] = TensorPoly{};
  TruncatedSeries out(order);
  TruncatedSeries power = z;
  for (std::size_t m = 1; m <= order; ++m) {
    const Rational c = Rational(m % 2 ? 1 : -1) / Rational(m);
    out = out + c * power;
    power = series_product(power, z, concat);
  }
  return out;
}

// Every coefficient of log^.(Y) is primitive.
inline OrderReport check_primitivity_of_log(const TruncatedSeries& y) {
  const auto log = log_dot_series(y);
  for (std::size_t k = 0; k <= log.order(); ++k)
    if (!is_primitive(log[k])) return {k};
  return {};
}

}  // namespace postgroup
