#pragma once

// The acceptance suite, shared by `postgroup-lab selftest` and the
// acceptance test binary. Every check is exact; each criterion also carries
// a wall-clock budget that is part of its pass condition.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "postgroup/corpus.hpp"
#include "postgroup/finite_postgroup.hpp"
#include "postgroup/free_postgroup.hpp"
#include "postgroup/magma.hpp"
#include "postgroup/magnus.hpp"
#include "postgroup/random.hpp"
#include "postgroup/tensor.hpp"
#include "postgroup/tensor_text.hpp"

namespace postgroup::selftest {

enum class Level { kQuick, kFull };

struct Config {
  std::uint64_t seed = 0;
  Level level = Level::kQuick;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool identities_hold = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;

  bool passed() const { return identities_hold && (budget_seconds <= 0 || seconds < budget_seconds); }
  std::string line() const {
    std::ostringstream s;
    s << (passed() ? "[PASS] " : "[FAIL] ") << "AC" << id << " " << title << ": " << detail;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << " (" << seconds << "s";
    if (budget_seconds > 0) s << " / budget " << budget_seconds << "s";
    s << ")";
    return s.str();
  }
};

namespace detail {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t failures = 0;
  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
    ++failures;
  }
};

inline CriterionResult timed(int id, std::string title, double budget, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.identities_hold = o.ok;
  r.detail = o.detail;
  if (o.failures > 1) r.detail += " (" + std::to_string(o.failures - 1) + " further failures)";
  r.seconds = std::chrono::duration<double>(stop - start).count();
  r.budget_seconds = budget;
  return r;
}

inline TensorPoly word_poly(const TensorWord& w) { return TensorPoly(w); }

}  // namespace detail

// AC1: post-group axioms of the free post-group on random triples.
inline CriterionResult free_postgroup_axioms(const Config& cfg) {
  const std::size_t samples = cfg.level == Level::kFull ? 10000 : 2000;
  return detail::timed(1, "free post-group axioms", 5.0, [&] {
    detail::Outcome o;
    std::mt19937_64 rng(cfg.seed);
    std::size_t checked = 0;
    for (const auto& [label, magma] : {std::pair{"cyclic-shift", cyclic_shift_magma(3)},
                                       std::pair{"trivial", trivial_magma(3)}}) {
      for (std::size_t i = 0; i < samples; ++i) {
        const auto u = random_reduced_word(magma.alphabet(), 10, rng);
        const auto v = random_reduced_word(magma.alphabet(), 10, rng);
        const auto w = random_reduced_word(magma.alphabet(), 10, rng);
        const std::string where = std::string(label) + " u=" + print(u) + " v=" + print(v) + " w=" + print(w);
        if (act(magma, gl_product(magma, u, v), w) != act(magma, u, act(magma, v, w)))
          o.fail("(u*v)|>w != u|>(v|>w) for " + where);
        if (act(magma, u, dot(v, w)) != dot(act(magma, u, v), act(magma, u, w)))
          o.fail("automorphism law fails for " + where);
        if (act_perm(magma, gl_product(magma, u, v)) != compose(act_perm(magma, u), act_perm(magma, v)))
          o.fail("pi(u*v) != pi(u) o pi(v) for " + where);
        ++checked;
      }
    }
    if (o.ok) o.detail = std::to_string(checked) + " triples, 3 identities each";
    return o;
  });
}

// AC2: J and K are mutually inverse and J is a morphism into (F_M, *).
inline CriterionResult jk_isomorphism(const Config& cfg) {
  const std::size_t samples = cfg.level == Level::kFull ? 5000 : 1000;
  return detail::timed(2, "J/K isomorphism", 5.0, [&] {
    detail::Outcome o;
    std::mt19937_64 rng(cfg.seed + 1);
    std::size_t checked = 0;
    for (const auto& [label, magma] : {std::pair{"cyclic-shift", cyclic_shift_magma(3)},
                                       std::pair{"trivial", trivial_magma(3)}}) {
      for (std::size_t i = 0; i < samples; ++i) {
        const auto u = random_reduced_word(magma.alphabet(), 12, rng);
        const auto v = random_reduced_word(magma.alphabet(), 12, rng);
        const std::string where = std::string(label) + " u=" + print(u) + " v=" + print(v);
        if (kmap(magma, jmap(magma, u)) != u) o.fail("K(J(u)) != u for " + where);
        if (jmap(magma, kmap(magma, u)) != u) o.fail("J(K(u)) != u for " + where);
        if (jmap(magma, dot(u, v)) != gl_product(magma, jmap(magma, u), jmap(magma, v)))
          o.fail("J(u.v) != J(u)*J(v) for " + where);
        ++checked;
      }
    }
    if (o.ok) o.detail = std::to_string(checked) + " words";
    return o;
  });
}

struct Check {
  std::string name;
  std::optional<std::string> failure;
};

// Exhaustive structural checks of one finite post-group, one entry per property.
inline std::vector<Check> postgroup_checks(const PostGroupTable& pg) {
  std::vector<Check> out;
  auto run = [&](std::string name, const std::function<std::optional<std::string>()>& body) {
    try {
      out.push_back({std::move(name), body()});
    } catch (const std::exception& e) {
      out.push_back({std::move(name), std::string(e.what())});
    }
  };
  const auto& names = pg.names();
  run("post-group axioms", [&]() -> std::optional<std::string> {
    validate_postgroup(pg.dot_group(), pg.triangle_table());
    return std::nullopt;
  });
  run("Grossman-Larson group", [&]() -> std::optional<std::string> {
    gl_group(pg);
    return std::nullopt;
  });
  run("braided group", [&] { return braided_group_violation(gl_group(pg), braiding(pg)); });
  run("braid equation", [&]() -> std::optional<std::string> {
    if (auto w = braid_equation_witness(braiding(pg))) return "fails at " + triple_names(names, *w);
    return std::nullopt;
  });
  run("Yang-Baxter equation", [&]() -> std::optional<std::string> {
    if (auto w = ybe_witness(braiding(pg))) return "fails at " + triple_names(names, *w);
    return std::nullopt;
  });
  run("skew-brace identity", [&]() -> std::optional<std::string> {
    const SkewBrace sb = to_skew_brace(pg);
    if (auto w = skew_brace_witness(sb.dot_group(), sb.star_group())) return "fails at " + triple_names(names, *w);
    return std::nullopt;
  });
  run("skew-brace round trip", [&]() -> std::optional<std::string> {
    const SkewBrace sb = to_skew_brace(pg);
    const PostGroupTable back = skew_brace_to_postgroup(sb);
    if (!(back == pg)) return "brace -> post-group differs";
    if (!(to_skew_brace(back) == sb)) return "post-group -> brace differs";
    return std::nullopt;
  });
  run("braided group round trip", [&]() -> std::optional<std::string> {
    const BraidMap sigma = braiding(pg);
    const PostGroupTable back = postgroup_from_braided(gl_group(pg), sigma);
    if (!(back == pg)) return "braided -> post-group differs";
    if (!(braiding(back) == sigma)) return "post-group -> braided differs";
    return std::nullopt;
  });
  run("braiding of the opposite is the inverse braiding", [&]() -> std::optional<std::string> {
    if (!(braiding(opposite(pg)) == inverse(braiding(pg)))) return "tables differ";
    return std::nullopt;
  });
  run("opposite has the same Grossman-Larson group", [&]() -> std::optional<std::string> {
    if (!(gl_group(opposite(pg)) == gl_group(pg))) return "tables differ";
    return std::nullopt;
  });
  if (is_pregroup(pg)) {
    run("pre-group braiding is involutive", [&]() -> std::optional<std::string> {
      if (!is_involutive(braiding(pg))) return "sigma o sigma != id";
      return std::nullopt;
    });
  }
  return out;
}

// AC3: the finite post-group corpus.
inline CriterionResult finite_corpus() {
  return detail::timed(3, "finite post-group corpus", 10.0, [&] {
    detail::Outcome o;
    const auto corpus = postgroup_corpus();
    std::size_t built = 0;
    for (const auto& entry : corpus) {
      const std::string& name = entry.name;
      auto fail = [&](const std::string& what) { o.fail(name + ": " + what); };
      if (!entry.table) {
        fail("not a post-group: " + entry.build_error);
        continue;
      }
      ++built;
      const PostGroupTable& pg = *entry.table;
      for (const auto& check : postgroup_checks(pg))
        if (check.failure) fail(check.name + ": " + *check.failure);
    }
    if (o.ok) o.detail = std::to_string(built) + " post-groups, all checks exhaustive";
    else o.detail += " [" + std::to_string(built) + " of " + std::to_string(corpus.size()) + " entries built]";
    return o;
  });
}

// AC4: pre-group braidings are involutive.
inline CriterionResult pregroup_involutive() {
  return detail::timed(4, "pre-group braiding involutive", 0, [&] {
    detail::Outcome o;
    std::size_t pregroups = 0;
    for (const auto& entry : postgroup_corpus()) {
      if (!entry.table) {
        o.fail(entry.name + ": not a post-group: " + entry.build_error);
        continue;
      }
      if (!is_pregroup(*entry.table)) continue;
      ++pregroups;
      if (!is_involutive(braiding(*entry.table))) o.fail(entry.name + ": sigma o sigma != id");
    }
    if (pregroups == 0) o.fail("corpus has no pre-groups");
    if (o.ok) o.detail = std::to_string(pregroups) + " pre-groups";
    return o;
  });
}

// AC5: the displayed expansions of K on words of length 2 and 3.
inline CriterionResult gavrilov_golden() {
  return detail::timed(5, "Gavrilov K golden values", 0, [&] {
    detail::Outcome o;
    const auto names = tensor_generator_names(3);
    const auto x1 = generator_poly(0), x2 = generator_poly(1), x3 = generator_poly(2);
    const auto tr = [](const TensorPoly& a, const TensorPoly& b) { return triangle(a, b); };
    const TensorPoly k2 = concat(x1, x2) - tr(x1, x2);
    const TensorPoly k3 = concat(concat(x1, x2), x3) - concat(x1, tr(x2, x3)) - concat(tr(x1, x2), x3) -
                          concat(x2, tr(x1, x3)) + tr(x2, tr(x1, x3)) + tr(tr(x1, x2), x3);
    const TensorPoly got2 = kmap_tensor(concat(x1, x2));
    const TensorPoly got3 = kmap_tensor(concat(concat(x1, x2), x3));
    if (got2 != k2) o.fail("K(x1.x2) = " + to_text(got2, names));
    if (got3 != k3) o.fail("K(x1.x2.x3) = " + to_text(got3, names));
    if (k3.size() != 6) o.fail("expected six distinct terms, got " + std::to_string(k3.size()));
    for (const auto& [w, c] : k3)
      if (c != 1 && c != -1) o.fail("coefficient " + to_string(c) + " is not +-1");
    if (o.ok) o.detail = "K(x1.x2) = " + to_text(got2, names) + "; K(x1.x2.x3) = " + to_text(got3, names);
    return o;
  });
}

// AC6: K is a Hopf algebra isomorphism (T(M),*) -> (T(M),.).
inline CriterionResult k_hopf_isomorphism(std::uint32_t generators, std::uint32_t degree) {
  return detail::timed(6, "K Hopf isomorphism", 60.0, [=] {
    detail::Outcome o;
    const auto names = tensor_generator_names(generators);
    const auto basis = words_up_to_degree(generators, degree);
    std::map<TensorWord, TensorPoly> k;
    for (const auto& w : basis) k.emplace(w, kmap_tensor_word(w));
    auto kmap_cached = [&](const TensorPoly& a) {
      return linear(a, [&](const TensorWord& w) { return k.at(w); });
    };
    std::size_t pairs = 0;
    for (const auto& a : basis)
      for (const auto& b : basis) {
        if (a.degree() + b.degree() > degree) continue;
        ++pairs;
        if (kmap_cached(gl_star_word(a, b)) != concat(k.at(a), k.at(b)))
          o.fail("K(A*B) != K(A).K(B) for A=" + to_text(a, names) + ", B=" + to_text(b, names));
      }
    for (const auto& w : basis) {
      const TensorPolyPair lhs = unshuffle(k.at(w));
      const TensorPolyPair rhs = tensor_map(unshuffle(detail::word_poly(w)), kmap_cached, kmap_cached);
      if (lhs != rhs) o.fail("Delta o K != (K x K) o Delta on " + to_text(w, names));
    }
    if (o.ok)
      o.detail = std::to_string(pairs) + " pairs and " + std::to_string(basis.size()) + " words up to degree " +
                 std::to_string(degree);
    return o;
  });
}

// AC7: post-Hopf axioms, post-Lie axioms, GL bracket and the remark identity.
inline CriterionResult posthopf_postlie(std::uint32_t generators, std::uint32_t degree) {
  return detail::timed(7, "post-Hopf and post-Lie axioms", 0, [=] {
    detail::Outcome o;
    const auto names = tensor_generator_names(generators);
    const auto basis = words_up_to_degree(generators, degree);
    std::size_t triples = 0, pairs = 0;
    for (const auto& a : basis)
      for (const auto& b : basis) {
        if (a.degree() + b.degree() > degree) continue;
        ++pairs;
        const TensorPoly A(a), B(b);
        // x.y = sum x_1 * (S_*(x_2) |> y)
        TensorPoly remark;
        for (const auto& [a1, a2] : unshuffle_splits(a))
          remark += gl_star(TensorPoly(a1), triangle(antipode_star_word(a2), B));
        if (remark != concat(A, B))
          o.fail("x.y != sum x1*(S*(x2)|>y) for x=" + to_text(a, names) + ", y=" + to_text(b, names));
        for (const auto& c : basis) {
          if (a.degree() + b.degree() + c.degree() > degree) continue;
          ++triples;
          const TensorPoly C(c);
          TensorPoly axiom1;
          for (const auto& [a1, a2] : unshuffle_splits(a))
            axiom1 += concat(triangle_word(a1, b), triangle_word(a2, c));
          if (triangle(A, concat(B, C)) != axiom1)
            o.fail("A|>(B.C) != sum (A1|>B).(A2|>C) for " + to_text(a, names) + ", " + to_text(b, names) +
                   ", " + to_text(c, names));
          if (triangle(A, triangle(B, C)) != triangle(gl_star(A, B), C))
            o.fail("A|>(B|>C) != (A*B)|>C for " + to_text(a, names) + ", " + to_text(b, names) + ", " +
                   to_text(c, names));
        }
      }
    // Primitive elements: trees and brackets of trees.
    std::vector<TensorPoly> primitives;
    std::vector<std::uint32_t> prim_degree;
    std::vector<MagmaTree> trees;
    for (std::uint32_t d = 1; d < degree; ++d)
      for (const auto& t : trees_of_degree(generators, d)) trees.push_back(t);
    for (const auto& t : trees) {
      primitives.push_back(tree_poly(t));
      prim_degree.push_back(t.degree());
    }
    for (std::size_t i = 0; i < trees.size(); ++i)
      for (std::size_t j = i + 1; j < trees.size(); ++j)
        if (trees[i].degree() + trees[j].degree() < degree) {
          primitives.push_back(lie_bracket(tree_poly(trees[i]), tree_poly(trees[j])));
          prim_degree.push_back(trees[i].degree() + trees[j].degree());
        }
    std::size_t lie_triples = 0, lie_pairs = 0;
    for (std::size_t i = 0; i < primitives.size(); ++i) {
      const auto& x = primitives[i];
      if (!is_primitive(x)) o.fail("not primitive: " + to_text(x, names));
      for (std::size_t j = 0; j < primitives.size(); ++j) {
        if (prim_degree[i] + prim_degree[j] > degree) continue;
        const auto& y = primitives[j];
        ++lie_pairs;
        if (gl_lie_bracket(x, y) != gl_star(x, y) - gl_star(y, x))
          o.fail("[[X,Y]] != X*Y - Y*X for X=" + to_text(x, names) + ", Y=" + to_text(y, names));
        for (std::size_t k = 0; k < primitives.size(); ++k) {
          if (prim_degree[i] + prim_degree[j] + prim_degree[k] > degree) continue;
          ++lie_triples;
          auto report = check_postlie_axioms(x, y, primitives[k]);
          if (!report.ok()) o.fail(report.failures.front());
        }
      }
    }
    if (o.ok)
      o.detail = std::to_string(triples) + " post-Hopf triples, " + std::to_string(pairs) + " remark pairs, " +
                 std::to_string(lie_triples) + " post-Lie triples, " + std::to_string(lie_pairs) +
                 " bracket pairs up to degree " + std::to_string(degree);
    return o;
  });
}

// AC8: flow and Magnus identities with one generator.
inline CriterionResult magnus_identities(std::size_t order) {
  return detail::timed(8, "Magnus and flow identities", 120.0, [=] {
    detail::Outcome o;
    const MagmaTree x = MagmaTree::leaf(0);
    const TruncatedSeries alpha = alpha_series(x, order);
    if (auto r = check_alpha_ode(alpha); !r.ok()) o.fail("alpha' != -alpha|>alpha at order " + std::to_string(*r.first_failure));
    const TruncatedSeries flow = solve_right_flow(alpha);
    const TruncatedSeries k_exp = coefficientwise(exp_dot_series(x, order), kmap_tensor);
    for (std::size_t k = 0; k <= order; ++k)
      if (flow[k] != k_exp[k]) o.fail("flow != K(exp(tx)) at order " + std::to_string(k));
    if (auto r = check_primitivity_of_log(flow); !r.ok())
      o.fail("log of the flow is not primitive at order " + std::to_string(*r.first_failure));
    const TruncatedSeries lhs = exp_star_series(magnus_gl(alpha), order);
    const TruncatedSeries rhs = exp_dot_series(x, order);
    for (std::size_t k = 0; k <= order; ++k)
      if (lhs[k] != rhs[k]) o.fail("exp*(Omega*) != exp(tx) at order " + std::to_string(k));
    const std::vector<Rational> listed = {1, Rational(1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42)};
    for (std::size_t n = 0; n < listed.size(); ++n)
      if (bernoulli_modified(n) != listed[n]) o.fail("B~" + std::to_string(n) + " = " + to_string(bernoulli_modified(n)));
    if (o.ok) o.detail = "all identities exact through t^" + std::to_string(order);
    return o;
  });
}

// AC9: negative controls must be rejected.
inline CriterionResult negative_controls() {
  return detail::timed(9, "negative controls", 0, [&] {
    detail::Outcome o;
    std::vector<std::string> notes;

    const auto additive = check_magma({"x0", "x1"}, {{0, 1}, {1, 0}});
    if (additive.ok() || additive.issues.front().kind != ErrorKind::kDiagonality)
      o.fail("additive Z/2 magma not rejected for diagonality");
    else
      notes.push_back("additive Z/2 magma: " + additive.summary());

    const PostGroupTable s3 = make_conjugation(symmetric_group(3));
    BraidMap sigma = braiding(s3);
    std::swap(sigma.left[1][2], sigma.left[2][1]);
    std::swap(sigma.right[1][2], sigma.right[2][1]);
    if (auto w = braid_equation_witness(sigma))
      notes.push_back("corrupted sigma fails the braid equation at " + triple_names(sigma.names, *w));
    else
      o.fail("corrupted sigma passed the braid equation");

    const MagmaTree x = MagmaTree::leaf(0);
    TruncatedSeries alpha = alpha_series(x, 5);
    alpha[2] += tree_poly(magma_product(x, magma_product(x, x)));
    const auto report = check_alpha_ode(alpha);
    if (report.first_failure != std::optional<std::size_t>(1))
      o.fail("corrupted alpha_2 not detected at order 1");
    else
      notes.push_back("corrupted alpha_2 fails at order 1");

    if (o.ok) {
      for (const auto& n : notes) o.detail += (o.detail.empty() ? "" : "; ") + n;
    }
    return o;
  });
}

inline std::vector<CriterionResult> run_all(const Config& cfg) {
  const bool full = cfg.level == Level::kFull;
  const std::uint32_t degree = full ? 5 : 4;
  return {free_postgroup_axioms(cfg),
          jk_isomorphism(cfg),
          finite_corpus(),
          pregroup_involutive(),
          gavrilov_golden(),
          k_hopf_isomorphism(2, degree),
          posthopf_postlie(2, degree),
          magnus_identities(full ? 6 : 5),
          negative_controls()};
}

}  // namespace postgroup::selftest
