#pragma once

// Finite diagonal left-regular magmas.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "postgroup/error.hpp"
#include "postgroup/permutation.hpp"
#include "postgroup/words.hpp"

namespace postgroup {

using IndexTable = std::vector<std::vector<std::uint32_t>>;

struct ValidationIssue {
  ErrorKind kind;
  std::string message;
};

struct MagmaReport;
MagmaReport check_magma(std::vector<std::string> elements, IndexTable triangle);

// A certified diagonal left-regular magma. Row m of the triangle table is
// the permutation L_m = m |> -. Only obtainable through validation.
class MagmaTable {
 public:
  std::size_t size() const { return rows_.size(); }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::string& name(std::uint32_t m) const { return alphabet_->name(m); }

  std::uint32_t triangle(std::uint32_t a, std::uint32_t b) const { return rows_[a](b); }
  const Permutation& row(std::uint32_t m) const { return rows_[m]; }

  // Lambda(m) = L_m^{-1}(m).
  std::uint32_t lambda(std::uint32_t m) const { return lambda_(m); }
  std::uint32_t lambda_inverse(std::uint32_t m) const { return lambda_inv_(m); }

  // psi(a) = (a |>^{-1} a)^{.-1}, an involution on M u M^{-1}.
  Letter psi(const Letter& a) const {
    return a.positive() ? Letter{lambda_(a.generator), -1} : Letter{lambda_inv_(a.generator), 1};
  }

  // L_a for a single letter. For a = m^{-1} this is (L_{Lambda^{-1}(m)})^{-1}.
  const Permutation& generator_perm(const Letter& a) const {
    return a.positive() ? rows_[a.generator] : inverse_rows_[lambda_inv_(a.generator)];
  }

  IndexTable table() const {
    IndexTable t;
    for (const auto& r : rows_) t.push_back(r.image());
    return t;
  }

  friend bool operator==(const MagmaTable& a, const MagmaTable& b) {
    return *a.alphabet_ == *b.alphabet_ && a.rows_ == b.rows_;
  }

 private:
  friend MagmaReport check_magma(std::vector<std::string>, IndexTable);
  MagmaTable() = default;

  AlphabetPtr alphabet_;
  std::vector<Permutation> rows_;
  std::vector<Permutation> inverse_rows_;
  Permutation lambda_;
  Permutation lambda_inv_;
};

struct MagmaReport {
  std::vector<ValidationIssue> issues;
  std::optional<MagmaTable> magma;  // set iff issues is empty
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

inline std::string MagmaReport::summary() const {
  if (ok()) return "diagonal left-regular: OK";
  std::string s;
  for (const auto& issue : issues) {
    if (!s.empty()) s += '\n';
    s += issue.message;
  }
  return s;
}

// Exhaustive O(n^2) validation. Every failing row is listed; the diagonality
// check runs only when all rows are bijections.
inline MagmaReport check_magma(std::vector<std::string> elements, IndexTable triangle) {
  MagmaReport report;
  auto alphabet = make_alphabet(std::move(elements));
  const std::size_t n = alphabet->size();
  if (triangle.size() != n) {
    report.issues.push_back({ErrorKind::kShape, "triangle has " + std::to_string(triangle.size()) +
                                                    " rows, expected " + std::to_string(n)});
    return report;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (triangle[i].size() != n) {
      report.issues.push_back({ErrorKind::kShape, "row " + alphabet->name(i) + " has " +
                                                      std::to_string(triangle[i].size()) +
                                                      " entries, expected " + std::to_string(n)});
    }
    for (auto v : triangle[i]) {
      if (v >= n) {
        report.issues.push_back({ErrorKind::kOutOfRange,
                                 "row " + alphabet->name(i) + " has out-of-range entry " +
                                     std::to_string(v)});
        break;
      }
    }
  }
  if (!report.ok()) return report;

  for (std::uint32_t m = 0; m < n; ++m) {
    if (auto w = bijection_witness(triangle[m])) {
      const auto& name = alphabet->name(m);
      report.issues.push_back(
          {ErrorKind::kLeftRegularity,
           "left-regularity fails: L_" + name + " is not bijective (" + name + " |> " +
               alphabet->name(w->first) + " = " + name + " |> " + alphabet->name(w->second) +
               " = " + alphabet->name(triangle[m][w->first]) + ")"});
    }
  }
  if (!report.ok()) return report;

  MagmaTable magma;
  magma.alphabet_ = alphabet;
  for (auto& row : triangle) {
    magma.rows_.emplace_back(std::move(row));
    magma.inverse_rows_.push_back(magma.rows_.back().inverse());
  }
  std::vector<std::uint32_t> lambda(n);
  for (std::uint32_t m = 0; m < n; ++m) lambda[m] = magma.inverse_rows_[m](m);
  if (auto w = bijection_witness(lambda)) {
    report.issues.push_back(
        {ErrorKind::kDiagonality,
         "diagonality fails: Lambda(" + alphabet->name(w->first) + ") = Lambda(" +
             alphabet->name(w->second) + ") = " + alphabet->name(lambda[w->first])});
    return report;
  }
  magma.lambda_ = Permutation(std::move(lambda));
  magma.lambda_inv_ = magma.lambda_.inverse();
  report.magma = std::move(magma);
  return report;
}

inline MagmaTable validate_magma(std::vector<std::string> elements, IndexTable triangle) {
  auto report = check_magma(std::move(elements), std::move(triangle));
  if (!report.ok()) throw Error(report.issues.front().kind, report.summary());
  return std::move(*report.magma);
}

inline std::uint32_t lambda_map(const MagmaTable& magma, std::uint32_t m) { return magma.lambda(m); }
inline Letter psi(const MagmaTable& magma, const Letter& a) { return magma.psi(a); }
inline const Permutation& generator_perm(const MagmaTable& magma, const Letter& a) {
  return magma.generator_perm(a);
}

// Common magmas on names x0..x{n-1}.
inline std::vector<std::string> indexed_names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

// a |> b = b.
inline MagmaTable trivial_magma(std::size_t n) {
  IndexTable t(n, std::vector<std::uint32_t>(n));
  for (auto& row : t)
    for (std::uint32_t b = 0; b < n; ++b) row[b] = b;
  return validate_magma(indexed_names("x", n), std::move(t));
}

// a |> b = b + shift mod n.
inline MagmaTable cyclic_shift_magma(std::size_t n, std::uint32_t shift = 1) {
  IndexTable t(n, std::vector<std::uint32_t>(n));
  for (auto& row : t)
    for (std::uint32_t b = 0; b < n; ++b) row[b] = (b + shift) % n;
  return validate_magma(indexed_names("x", n), std::move(t));
}

}  // namespace postgroup
