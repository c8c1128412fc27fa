#pragma once

// Finite post-groups as tables, with the derived Grossman-Larson group, the
// opposite post-group, braidings (braided groups, Yang-Baxter) and skew
// braces. Every check is an exhaustive scan.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "postgroup/error.hpp"
#include "postgroup/group_table.hpp"
#include "postgroup/magma.hpp"

namespace postgroup {

using Triple = std::array<std::uint32_t, 3>;

// Largest table the CLI verifies exhaustively.
inline constexpr std::size_t kMaxExhaustiveOrder = 64;

class PostGroupTable {
 public:
  std::size_t size() const { return dot_.size(); }
  const std::vector<std::string>& names() const { return dot_.names(); }
  const std::string& name(std::uint32_t a) const { return dot_.name(a); }
  const GroupTable& dot_group() const { return dot_; }
  const IndexTable& triangle_table() const { return tri_; }

  std::uint32_t dot(std::uint32_t a, std::uint32_t b) const { return dot_.mul(a, b); }
  std::uint32_t triangle(std::uint32_t a, std::uint32_t b) const { return tri_[a][b]; }
  std::uint32_t star(std::uint32_t a, std::uint32_t b) const { return dot_.mul(a, tri_[a][b]); }
  std::uint32_t unit() const { return dot_.unit(); }
  std::uint32_t dot_inv(std::uint32_t a) const { return dot_.inv(a); }

  // (L_a)^{-1}(b)
  std::uint32_t triangle_inverse(std::uint32_t a, std::uint32_t b) const {
    for (std::uint32_t x = 0; x < size(); ++x)
      if (tri_[a][x] == b) return x;
    throw Error(ErrorKind::kAutomorphism, "L_" + name(a) + " is not bijective");
  }

  friend bool operator==(const PostGroupTable& a, const PostGroupTable& b) {
    return a.dot_ == b.dot_ && a.tri_ == b.tri_;
  }

  friend PostGroupTable validate_postgroup(const GroupTable& dot, IndexTable triangle);

 private:
  PostGroupTable(GroupTable dot, IndexTable tri) : dot_(std::move(dot)), tri_(std::move(tri)) {}

  GroupTable dot_;
  IndexTable tri_;
};

// Checks that every L_a is an automorphism of (G,.) and that
// (a*b) |> c = a |> (b |> c) for all triples.
inline PostGroupTable validate_postgroup(const GroupTable& dot, IndexTable triangle) {
  const auto& names = dot.names();
  check_square(names, triangle, "triangle table");
  const auto n = static_cast<std::uint32_t>(dot.size());
  for (std::uint32_t a = 0; a < n; ++a) {
    if (auto w = bijection_witness(triangle[a])) {
      throw Error(ErrorKind::kAutomorphism, "L_" + names[a] + " is not bijective: " + names[a] +
                                                " |> " + names[w->first] + " = " + names[a] +
                                                " |> " + names[w->second]);
    }
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (triangle[a][dot.mul(b, c)] != dot.mul(triangle[a][b], triangle[a][c]))
          throw Error(ErrorKind::kAutomorphism,
                      "L_" + names[a] + " is not an automorphism: " + names[a] + " |> (" +
                          names[b] + "." + names[c] + ") != (" + names[a] + " |> " + names[b] +
                          ").(" + names[a] + " |> " + names[c] + ")");
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto ab = dot.mul(a, triangle[a][b]);
      for (std::uint32_t c = 0; c < n; ++c)
        if (triangle[ab][c] != triangle[a][triangle[b][c]])
          throw Error(ErrorKind::kPostGroupAxiom, "(a*b) |> c != a |> (b |> c) at (" + names[a] +
                                                      ", " + names[b] + ", " + names[c] + ")");
    }
  return PostGroupTable(dot, std::move(triangle));
}

inline PostGroupTable validate_postgroup(std::vector<std::string> names, IndexTable dot,
                                         IndexTable triangle) {
  return validate_postgroup(validate_group(std::move(names), std::move(dot)), std::move(triangle));
}

// The Grossman-Larson group (G,*), a*b = a.(a |> b). The result is
// re-validated as a group, and its inverses are checked against
// a^{*-1} = (L_a)^{-1}(a^{.-1}).
inline GroupTable gl_group(const PostGroupTable& pg) {
  const auto n = static_cast<std::uint32_t>(pg.size());
  IndexTable star(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) star[a][b] = pg.star(a, b);
  GroupTable gl = validate_group(pg.names(), std::move(star));
  if (gl.unit() != pg.unit()) throw Error(ErrorKind::kGroupAxiom, "GL group has a different unit");
  for (std::uint32_t a = 0; a < n; ++a)
    if (gl.inv(a) != pg.triangle_inverse(a, pg.dot_inv(a)))
      throw Error(ErrorKind::kGroupAxiom, "GL inverse mismatch at " + pg.name(a));
  return gl;
}

// a .op b = b.a and a |>> b = a.(a |> b).a^{.-1}
inline PostGroupTable opposite(const PostGroupTable& pg) {
  const auto n = static_cast<std::uint32_t>(pg.size());
  IndexTable dot(n, std::vector<std::uint32_t>(n)), tri = dot;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      dot[a][b] = pg.dot(b, a);
      tri[a][b] = pg.dot(pg.star(a, b), pg.dot_inv(a));
    }
  return validate_postgroup(pg.names(), std::move(dot), std::move(tri));
}

inline bool is_pregroup(const PostGroupTable& pg) { return pg.dot_group().is_abelian(); }

inline PostGroupTable make_trivial(const GroupTable& group) {
  const auto n = static_cast<std::uint32_t>(group.size());
  IndexTable tri(n, std::vector<std::uint32_t>(n));
  for (auto& row : tri)
    for (std::uint32_t b = 0; b < n; ++b) row[b] = b;
  return validate_postgroup(group, std::move(tri));
}

inline PostGroupTable make_conjugation(const GroupTable& group) { return opposite(make_trivial(group)); }

// ---------------------------------------------------------------------------
// Braided groups

// sigma(g,h) = (g -> h, g <- h). Plain data; the braided-group axioms are
// checked by check_braided_group.
struct BraidMap {
  std::vector<std::string> names;
  IndexTable left;   // g -> h
  IndexTable right;  // g <- h

  std::size_t size() const { return names.size(); }
  std::pair<std::uint32_t, std::uint32_t> operator()(std::uint32_t g, std::uint32_t h) const {
    return {left[g][h], right[g][h]};
  }
  friend bool operator==(const BraidMap&, const BraidMap&) = default;
};

// sigma(g,h) = (g |> h, (g |> h)^{*-1} * g * h)
inline BraidMap braiding(const PostGroupTable& pg) {
  const GroupTable gl = gl_group(pg);
  const auto n = static_cast<std::uint32_t>(pg.size());
  BraidMap s{pg.names(), IndexTable(n, std::vector<std::uint32_t>(n)),
             IndexTable(n, std::vector<std::uint32_t>(n))};
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h) {
      const auto l = pg.triangle(g, h);
      s.left[g][h] = l;
      s.right[g][h] = gl.mul(gl.inv(l), gl.mul(g, h));
    }
  return s;
}

inline std::string triple_names(const std::vector<std::string>& names, const Triple& t) {
  return "(" + names[t[0]] + ", " + names[t[1]] + ", " + names[t[2]] + ")";
}

// Inverse table of a bijective braid map.
inline BraidMap inverse(const BraidMap& s) {
  const auto n = static_cast<std::uint32_t>(s.size());
  BraidMap inv{s.names, IndexTable(n, std::vector<std::uint32_t>(n, n)),
               IndexTable(n, std::vector<std::uint32_t>(n, n))};
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h) {
      auto [a, b] = s(g, h);
      if (inv.left[a][b] != n) throw Error(ErrorKind::kBraidedGroup, "sigma is not bijective");
      inv.left[a][b] = g;
      inv.right[a][b] = h;
    }
  return inv;
}

// (s o t)(g,h) = s(t(g,h))
inline BraidMap compose(const BraidMap& s, const BraidMap& t) {
  const auto n = static_cast<std::uint32_t>(s.size());
  BraidMap out{s.names, IndexTable(n, std::vector<std::uint32_t>(n)),
               IndexTable(n, std::vector<std::uint32_t>(n))};
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h) {
      auto [a, b] = t(g, h);
      std::tie(out.left[g][h], out.right[g][h]) = s(a, b);
    }
  return out;
}

inline bool is_involutive(const BraidMap& s) {
  for (std::uint32_t g = 0; g < s.size(); ++g)
    for (std::uint32_t h = 0; h < s.size(); ++h) {
      auto [a, b] = s(g, h);
      if (s(a, b) != std::pair{g, h}) return false;
    }
  return true;
}

// The flip P(g,h) = (h,g).
inline BraidMap flip_map(const std::vector<std::string>& names) {
  const auto n = static_cast<std::uint32_t>(names.size());
  BraidMap p{names, IndexTable(n, std::vector<std::uint32_t>(n)),
             IndexTable(n, std::vector<std::uint32_t>(n))};
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h) {
      p.left[g][h] = h;
      p.right[g][h] = g;
    }
  return p;
}

// Braided-group axioms relative to (G,*): sigma bijective, m o sigma = m,
// -> a left action and <- a right action of (G,*) on itself. Returns a
// description of the first failure.
inline std::optional<std::string> braided_group_violation(const GroupTable& star, const BraidMap& s) {
  const auto n = static_cast<std::uint32_t>(star.size());
  const auto& names = star.names();
  if (s.size() != n || s.left.size() != n || s.right.size() != n) return "sigma has the wrong shape";
  for (std::uint32_t g = 0; g < n; ++g) {
    if (s.left[g].size() != n || s.right[g].size() != n) return "sigma has the wrong shape";
    for (std::uint32_t h = 0; h < n; ++h)
      if (s.left[g][h] >= n || s.right[g][h] >= n) return "sigma has an out-of-range entry";
  }
  std::vector<bool> hit(static_cast<std::size_t>(n) * n, false);
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h) {
      auto [a, b] = s(g, h);
      if (hit[a * n + b]) return "sigma is not bijective: (" + names[a] + ", " + names[b] + ") hit twice";
      hit[a * n + b] = true;
      if (star.mul(a, b) != star.mul(g, h))
        return "m o sigma != m at (" + names[g] + ", " + names[h] + ")";
    }
  const auto e = star.unit();
  for (std::uint32_t h = 0; h < n; ++h) {
    if (s.left[e][h] != h) return "e -> " + names[h] + " != " + names[h];
    if (s.right[h][e] != h) return names[h] + " <- e != " + names[h];
  }
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h)
      for (std::uint32_t k = 0; k < n; ++k) {
        if (s.left[g][s.left[h][k]] != s.left[star.mul(g, h)][k])
          return "-> is not a left action at " + triple_names(names, {g, h, k});
        if (s.right[s.right[g][h]][k] != s.right[g][star.mul(h, k)])
          return "<- is not a right action at " + triple_names(names, {g, h, k});
      }
  return std::nullopt;
}

// g |> h := g -> h, g.h := g * (g^{*-1} -> h)
inline PostGroupTable postgroup_from_braided(const GroupTable& star, const BraidMap& s) {
  if (auto v = braided_group_violation(star, s)) throw Error(ErrorKind::kBraidedGroup, *v);
  const auto n = static_cast<std::uint32_t>(star.size());
  IndexTable dot(n, std::vector<std::uint32_t>(n)), tri = dot;
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h) {
      tri[g][h] = s.left[g][h];
      dot[g][h] = star.mul(g, s.left[star.inv(g)][h]);
    }
  return validate_postgroup(star.names(), std::move(dot), std::move(tri));
}

// (sigma x id)(id x sigma)(sigma x id) = (id x sigma)(sigma x id)(id x sigma)
// on G^3. Returns the first failing triple.
inline std::optional<Triple> braid_equation_witness(const BraidMap& s) {
  const auto n = static_cast<std::uint32_t>(s.size());
  auto s12 = [&](Triple t) {
    auto [a, b] = s(t[0], t[1]);
    return Triple{a, b, t[2]};
  };
  auto s23 = [&](Triple t) {
    auto [a, b] = s(t[1], t[2]);
    return Triple{t[0], a, b};
  };
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z) {
        const Triple t{x, y, z};
        if (s12(s23(s12(t))) != s23(s12(s23(t)))) return t;
      }
  return std::nullopt;
}

// R12 o R13 o R23 = R23 o R13 o R12 for R = P o sigma on G^3.
inline std::optional<Triple> ybe_witness(const BraidMap& s) {
  const auto n = static_cast<std::uint32_t>(s.size());
  auto r = [&](std::uint32_t x, std::uint32_t y) {
    auto [a, b] = s(x, y);
    return std::pair{b, a};
  };
  auto r12 = [&](Triple t) {
    auto [a, b] = r(t[0], t[1]);
    return Triple{a, b, t[2]};
  };
  auto r23 = [&](Triple t) {
    auto [a, b] = r(t[1], t[2]);
    return Triple{t[0], a, b};
  };
  auto r13 = [&](Triple t) {
    auto [a, b] = r(t[0], t[2]);
    return Triple{a, t[1], b};
  };
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z) {
        const Triple t{x, y, z};
        if (r12(r13(r23(t))) != r23(r13(r12(t)))) return t;
      }
  return std::nullopt;
}

inline bool check_braid_equation(const BraidMap& s) { return !braid_equation_witness(s); }
inline bool check_ybe(const BraidMap& s) { return !ybe_witness(s); }

// ---------------------------------------------------------------------------
// Skew braces

class SkewBrace {
 public:
  const std::vector<std::string>& names() const { return dot_.names(); }
  std::size_t size() const { return dot_.size(); }
  const GroupTable& dot_group() const { return dot_; }
  const GroupTable& star_group() const { return star_; }

  friend bool operator==(const SkewBrace& a, const SkewBrace& b) {
    return a.dot_ == b.dot_ && a.star_ == b.star_;
  }

  friend SkewBrace validate_skew_brace(GroupTable dot, GroupTable star);

 private:
  SkewBrace(GroupTable dot, GroupTable star) : dot_(std::move(dot)), star_(std::move(star)) {}
  GroupTable dot_;
  GroupTable star_;
};

// g*(h.k) = (g*h).g^{.-1}.(g*k), exhaustively.
inline std::optional<Triple> skew_brace_witness(const GroupTable& dot, const GroupTable& star) {
  const auto n = static_cast<std::uint32_t>(dot.size());
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h)
      for (std::uint32_t k = 0; k < n; ++k) {
        const auto lhs = star.mul(g, dot.mul(h, k));
        const auto rhs = dot.mul(dot.mul(star.mul(g, h), dot.inv(g)), star.mul(g, k));
        if (lhs != rhs) return Triple{g, h, k};
      }
  return std::nullopt;
}

inline SkewBrace validate_skew_brace(GroupTable dot, GroupTable star) {
  if (dot.names() != star.names())
    throw Error(ErrorKind::kSkewBrace, "dot and star tables use different element lists");
  if (dot.unit() != star.unit()) throw Error(ErrorKind::kSkewBrace, "dot and star units differ");
  if (auto w = skew_brace_witness(dot, star))
    throw Error(ErrorKind::kSkewBrace,
                "skew-brace identity fails at " + triple_names(dot.names(), *w));
  return SkewBrace(std::move(dot), std::move(star));
}

inline SkewBrace to_skew_brace(const PostGroupTable& pg) {
  return validate_skew_brace(pg.dot_group(), gl_group(pg));
}

// g |> h := g^{.-1}.(g*h)
inline PostGroupTable skew_brace_to_postgroup(const SkewBrace& sb) {
  const auto& dot = sb.dot_group();
  const auto& star = sb.star_group();
  const auto n = static_cast<std::uint32_t>(sb.size());
  IndexTable tri(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h) tri[g][h] = dot.mul(dot.inv(g), star.mul(g, h));
  return validate_postgroup(dot, std::move(tri));
}

}  // namespace postgroup
