#pragma once

// Gauge post-groups G^M built from a right action of a finite group G on a
// finite set M:
//
//   (f.g)(m)  = f(m).g(m)
//   (f|>g)(m) = g(m f(m))
//   (f*g)(m)  = f(m).g(m f(m))

#include <cstdint>
#include <string>
#include <vector>

#include "postgroup/error.hpp"
#include "postgroup/finite_postgroup.hpp"
#include "postgroup/group_table.hpp"

namespace postgroup {

class RightAction {
 public:
  const GroupTable& group() const { return group_; }
  const std::vector<std::string>& points() const { return points_; }
  std::size_t num_points() const { return points_.size(); }

  // m g
  std::uint32_t act(std::uint32_t m, std::uint32_t g) const { return table_[m][g]; }
  const IndexTable& table() const { return table_; }

  friend bool operator==(const RightAction& a, const RightAction& b) {
    return a.group_ == b.group_ && a.points_ == b.points_ && a.table_ == b.table_;
  }

  friend RightAction validate_action(GroupTable, std::vector<std::string>, IndexTable);

 private:
  RightAction(GroupTable group, std::vector<std::string> points, IndexTable table)
      : group_(std::move(group)), points_(std::move(points)), table_(std::move(table)) {}

  GroupTable group_;
  std::vector<std::string> points_;
  IndexTable table_;  // points x group elements -> points
};

// Checks m e = m and (m g) h = m (g.h).
inline RightAction validate_action(GroupTable group, std::vector<std::string> points,
                                   IndexTable table) {
  const auto np = static_cast<std::uint32_t>(points.size());
  const auto ng = static_cast<std::uint32_t>(group.size());
  if (table.size() != np) throw Error(ErrorKind::kShape, "action table has wrong number of points");
  for (std::uint32_t m = 0; m < np; ++m) {
    if (table[m].size() != ng)
      throw Error(ErrorKind::kShape, "action row " + points[m] + " has the wrong length");
    for (auto v : table[m])
      if (v >= np) throw Error(ErrorKind::kOutOfRange, "action row " + points[m] + " out of range");
  }
  const auto& gn = group.names();
  for (std::uint32_t m = 0; m < np; ++m)
    if (table[m][group.unit()] != m)
      throw Error(ErrorKind::kActionLaw, "unit law fails: " + points[m] + " e = " +
                                             points[table[m][group.unit()]]);
  for (std::uint32_t m = 0; m < np; ++m)
    for (std::uint32_t g = 0; g < ng; ++g)
      for (std::uint32_t h = 0; h < ng; ++h)
        if (table[table[m][g]][h] != table[m][group.mul(g, h)])
          throw Error(ErrorKind::kActionLaw, "composition law fails: (" + points[m] + " " + gn[g] +
                                                 ") " + gn[h] + " != " + points[m] + " (" + gn[g] +
                                                 "." + gn[h] + ")");
  return RightAction(std::move(group), std::move(points), std::move(table));
}

inline RightAction trivial_action(const GroupTable& group, std::vector<std::string> points) {
  IndexTable t(points.size(), std::vector<std::uint32_t>(group.size()));
  for (std::uint32_t m = 0; m < points.size(); ++m)
    for (auto& v : t[m]) v = m;
  return validate_action(group, std::move(points), std::move(t));
}

// A map M -> G, one group element per point.
struct GaugeMap {
  std::vector<std::uint32_t> values;
  friend bool operator==(const GaugeMap&, const GaugeMap&) = default;
};

inline void require_gauge(const RightAction& action, const GaugeMap& f) {
  if (f.values.size() != action.num_points())
    throw Error(ErrorKind::kAlphabetMismatch, "gauge map does not match the action's point set");
  for (auto v : f.values)
    if (v >= action.group().size())
      throw Error(ErrorKind::kOutOfRange, "gauge map value out of range");
}

inline GaugeMap gauge_unit(const RightAction& action) {
  return {std::vector<std::uint32_t>(action.num_points(), action.group().unit())};
}

inline GaugeMap gauge_dot(const RightAction& action, const GaugeMap& f, const GaugeMap& g) {
  require_gauge(action, f);
  require_gauge(action, g);
  GaugeMap out{std::vector<std::uint32_t>(f.values.size())};
  for (std::uint32_t m = 0; m < f.values.size(); ++m)
    out.values[m] = action.group().mul(f.values[m], g.values[m]);
  return out;
}

inline GaugeMap gauge_act(const RightAction& action, const GaugeMap& f, const GaugeMap& g) {
  require_gauge(action, f);
  require_gauge(action, g);
  GaugeMap out{std::vector<std::uint32_t>(f.values.size())};
  for (std::uint32_t m = 0; m < f.values.size(); ++m)
    out.values[m] = g.values[action.act(m, f.values[m])];
  return out;
}

inline GaugeMap gauge_gl(const RightAction& action, const GaugeMap& f, const GaugeMap& g) {
  require_gauge(action, f);
  require_gauge(action, g);
  GaugeMap out{std::vector<std::uint32_t>(f.values.size())};
  for (std::uint32_t m = 0; m < f.values.size(); ++m)
    out.values[m] = action.group().mul(f.values[m], g.values[action.act(m, f.values[m])]);
  return out;
}

inline constexpr std::size_t kDefaultGaugeCap = 4096;

// Number of gauge maps |G|^|M|, or cap + 1 once it exceeds cap.
inline std::size_t gauge_count(const RightAction& action, std::size_t cap) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < action.num_points(); ++i) {
    count *= action.group().size();
    if (count > cap) return cap + 1;
  }
  return count;
}

// All gauge maps, lexicographic with the first point most significant.
inline std::vector<GaugeMap> enumerate_gauge_maps(const RightAction& action,
                                                  std::size_t cap = kDefaultGaugeCap) {
  const std::size_t count = gauge_count(action, cap);
  if (count > cap)
    throw Error(ErrorKind::kSizeCap, "|G|^|M| exceeds the gauge size cap of " + std::to_string(cap));
  const std::size_t np = action.num_points();
  const std::size_t ng = action.group().size();
  std::vector<GaugeMap> maps;
  maps.reserve(count);
  GaugeMap f{std::vector<std::uint32_t>(np, 0)};
  for (std::size_t i = 0; i < count; ++i) {
    maps.push_back(f);
    for (std::size_t m = np; m-- > 0;) {
      if (++f.values[m] < ng) break;
      f.values[m] = 0;
    }
  }
  return maps;
}

inline std::size_t gauge_index(const RightAction& action, const GaugeMap& f) {
  std::size_t index = 0;
  for (auto v : f.values) index = index * action.group().size() + v;
  return index;
}

// "(s,e)"-style tuple of group element names in point order.
inline std::string gauge_name(const RightAction& action, const GaugeMap& f) {
  std::string s = "(";
  for (std::size_t m = 0; m < f.values.size(); ++m) {
    if (m) s += ',';
    s += action.group().name(f.values[m]);
  }
  return s + ")";
}

inline PostGroupTable build_gauge_postgroup(const RightAction& action,
                                            std::size_t cap = kDefaultGaugeCap) {
  const auto maps = enumerate_gauge_maps(action, cap);
  const auto n = maps.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& f : maps) names.push_back(gauge_name(action, f));
  IndexTable dot(n, std::vector<std::uint32_t>(n)), tri = dot;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dot[i][j] = static_cast<std::uint32_t>(gauge_index(action, gauge_dot(action, maps[i], maps[j])));
      tri[i][j] = static_cast<std::uint32_t>(gauge_index(action, gauge_act(action, maps[i], maps[j])));
    }
  return validate_postgroup(std::move(names), std::move(dot), std::move(tri));
}

}  // namespace postgroup
