#pragma once

// JSON documents for magmas, groups, post-groups, skew braces, braidings and
// right actions. Tables are written with element names, never indices.
// Unknown keys are rejected.

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "postgroup/action_postgroup.hpp"
#include "postgroup/error.hpp"
#include "postgroup/finite_postgroup.hpp"
#include "postgroup/group_table.hpp"
#include "postgroup/magma.hpp"

namespace postgroup::io {

using nlohmann::json;

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kParse, "cannot write " + path);
  out << text;
}

namespace detail {

inline void require_keys(const json& j, std::initializer_list<const char*> keys, const std::string& what) {
  if (!j.is_object()) throw Error(ErrorKind::kParse, what + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw Error(ErrorKind::kParse, what + ": unknown key '" + key + "'");
  }
  for (const char* k : keys)
    if (!j.contains(k)) throw Error(ErrorKind::kParse, what + ": missing key '" + std::string(k) + "'");
}

inline std::vector<std::string> names(const json& j, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorKind::kParse, what + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw Error(ErrorKind::kParse, what + " must contain strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline std::uint32_t index_of(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<std::uint32_t>(i);
  throw Error(ErrorKind::kUnknownName, "unknown element '" + name + "'");
}

inline IndexTable table(const json& j, const std::vector<std::string>& elems, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorKind::kParse, what + " must be an array of rows");
  IndexTable t;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorKind::kParse, what + " rows must be arrays");
    std::vector<std::uint32_t> r;
    for (const auto& v : row) {
      if (!v.is_string()) throw Error(ErrorKind::kParse, what + " entries must be element names");
      r.push_back(index_of(elems, v.get<std::string>()));
    }
    t.push_back(std::move(r));
  }
  return t;
}

inline json table_json(const IndexTable& t, const std::vector<std::string>& elems) {
  json rows = json::array();
  for (const auto& row : t) {
    json r = json::array();
    for (auto v : row) r.push_back(elems[v]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace detail

// --- magma ------------------------------------------------------------------

inline MagmaReport check_magma_json(const json& j) {
  detail::require_keys(j, {"elements", "triangle"}, "magma");
  auto elems = detail::names(j["elements"], "elements");
  auto tri = detail::table(j["triangle"], elems, "triangle");
  return check_magma(std::move(elems), std::move(tri));
}

inline MagmaTable magma_from_json(const json& j) {
  auto report = check_magma_json(j);
  if (!report.ok()) throw Error(report.issues.front().kind, report.summary());
  return std::move(*report.magma);
}

inline json to_json(const MagmaTable& m) {
  return {{"elements", m.alphabet()->names()}, {"triangle", detail::table_json(m.table(), m.alphabet()->names())}};
}

// --- group ------------------------------------------------------------------

inline GroupTable group_from_json(const json& j) {
  detail::require_keys(j, {"elements", "table"}, "group");
  auto elems = detail::names(j["elements"], "elements");
  auto t = detail::table(j["table"], elems, "table");
  return validate_group(std::move(elems), std::move(t));
}

inline json to_json(const GroupTable& g) {
  return {{"elements", g.names()}, {"table", detail::table_json(g.table(), g.names())}};
}

// --- post-group ---------------------------------------------------------------

inline PostGroupTable postgroup_from_json(const json& j) {
  detail::require_keys(j, {"elements", "dot", "triangle"}, "post-group");
  auto elems = detail::names(j["elements"], "elements");
  auto dot = detail::table(j["dot"], elems, "dot");
  auto tri = detail::table(j["triangle"], elems, "triangle");
  return validate_postgroup(std::move(elems), std::move(dot), std::move(tri));
}

inline json to_json(const PostGroupTable& pg) {
  return {{"elements", pg.names()},
          {"dot", detail::table_json(pg.dot_group().table(), pg.names())},
          {"triangle", detail::table_json(pg.triangle_table(), pg.names())}};
}

// --- skew brace -----------------------------------------------------------------

inline SkewBrace skew_brace_from_json(const json& j) {
  detail::require_keys(j, {"elements", "dot", "star"}, "skew brace");
  auto elems = detail::names(j["elements"], "elements");
  auto dot = detail::table(j["dot"], elems, "dot");
  auto star = detail::table(j["star"], elems, "star");
  return validate_skew_brace(validate_group(elems, std::move(dot)), validate_group(elems, std::move(star)));
}

inline json to_json(const SkewBrace& sb) {
  return {{"elements", sb.names()},
          {"dot", detail::table_json(sb.dot_group().table(), sb.names())},
          {"star", detail::table_json(sb.star_group().table(), sb.names())}};
}

// --- braiding ---------------------------------------------------------------------
// { "elements": [...], "star": [[...]], "sigma": [[[l, r], ...], ...] }

struct BraidedGroupDoc {
  GroupTable star;
  BraidMap sigma;
};

inline BraidedGroupDoc braided_from_json(const json& j) {
  detail::require_keys(j, {"elements", "star", "sigma"}, "braided group");
  auto elems = detail::names(j["elements"], "elements");
  GroupTable star = validate_group(elems, detail::table(j["star"], elems, "star"));
  const auto n = elems.size();
  BraidMap s{elems, IndexTable(n, std::vector<std::uint32_t>(n)), IndexTable(n, std::vector<std::uint32_t>(n))};
  const json& rows = j["sigma"];
  if (!rows.is_array() || rows.size() != n) throw Error(ErrorKind::kShape, "sigma must have one row per element");
  for (std::size_t g = 0; g < n; ++g) {
    if (!rows[g].is_array() || rows[g].size() != n) throw Error(ErrorKind::kShape, "sigma row has the wrong length");
    for (std::size_t h = 0; h < n; ++h) {
      const json& pair = rows[g][h];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        throw Error(ErrorKind::kParse, "sigma entries must be [left, right] name pairs");
      s.left[g][h] = detail::index_of(elems, pair[0].get<std::string>());
      s.right[g][h] = detail::index_of(elems, pair[1].get<std::string>());
    }
  }
  return {std::move(star), std::move(s)};
}

inline json to_json(const GroupTable& star, const BraidMap& s) {
  json rows = json::array();
  for (std::size_t g = 0; g < s.size(); ++g) {
    json r = json::array();
    for (std::size_t h = 0; h < s.size(); ++h)
      r.push_back(json::array({s.names[s.left[g][h]], s.names[s.right[g][h]]}));
    rows.push_back(std::move(r));
  }
  return {{"elements", s.names}, {"star", detail::table_json(star.table(), star.names())}, {"sigma", rows}};
}

// --- right action --------------------------------------------------------------

inline RightAction action_from_json(const json& j) {
  detail::require_keys(j, {"group", "set", "action"}, "action");
  GroupTable group = group_from_json(j["group"]);
  auto points = detail::names(j["set"], "set");
  const json& act = j["action"];
  if (!act.is_object()) throw Error(ErrorKind::kParse, "action must be an object keyed by point");
  IndexTable t(points.size(), std::vector<std::uint32_t>(group.size()));
  for (const auto& [point, row] : act.items()) detail::index_of(points, point);
  for (std::size_t m = 0; m < points.size(); ++m) {
    if (!act.contains(points[m])) throw Error(ErrorKind::kShape, "action has no row for point " + points[m]);
    const json& row = act[points[m]];
    if (!row.is_object()) throw Error(ErrorKind::kParse, "action rows must be objects");
    for (const auto& [g, target] : row.items()) detail::index_of(group.names(), g);
    for (std::size_t g = 0; g < group.size(); ++g) {
      const auto& gname = group.name(static_cast<std::uint32_t>(g));
      if (!row.contains(gname) || !row[gname].is_string())
        throw Error(ErrorKind::kShape, "action row " + points[m] + " lacks element " + gname);
      t[m][g] = detail::index_of(points, row[gname].get<std::string>());
    }
  }
  return validate_action(std::move(group), std::move(points), std::move(t));
}

inline json to_json(const RightAction& a) {
  json act = json::object();
  for (std::size_t m = 0; m < a.num_points(); ++m) {
    json row = json::object();
    for (std::uint32_t g = 0; g < a.group().size(); ++g)
      row[a.group().name(g)] = a.points()[a.act(static_cast<std::uint32_t>(m), g)];
    act[a.points()[m]] = row;
  }
  return {{"group", to_json(a.group())}, {"set", a.points()}, {"action", act}};
}

}  // namespace postgroup::io
