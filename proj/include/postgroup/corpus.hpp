#pragma once

// Small named post-groups used by the self-test and the test suites.

#include <optional>
#include <string>
#include <vector>

#include "postgroup/action_postgroup.hpp"
#include "postgroup/finite_postgroup.hpp"
#include "postgroup/group_table.hpp"

namespace postgroup {

// An entry whose construction failed keeps the error instead of a table.
struct CorpusEntry {
  std::string name;
  std::optional<PostGroupTable> table;
  std::string build_error;
};

// Z/2 = {e, s} acting on {p, q}, s swapping the points.
inline RightAction z2_swap_action() {
  auto z2 = validate_group({"e", "s"}, {{0, 1}, {1, 0}});
  return validate_action(z2, {"p", "q"}, {{0, 1}, {1, 0}});
}

inline RightAction z2_fixed_action() {
  auto z2 = validate_group({"e", "s"}, {{0, 1}, {1, 0}});
  return trivial_action(z2, {"p", "q"});
}

// Trivial and conjugation post-groups on Z/2, Z/3, Z/4, S_3 and the gauge
// post-groups of Z/2 acting on {p, q} by swapping and trivially.
inline std::vector<CorpusEntry> postgroup_corpus() {
  std::vector<CorpusEntry> out;
  const std::vector<std::pair<std::string, GroupTable>> groups = {
      {"Z2", cyclic_group(2)}, {"Z3", cyclic_group(3)}, {"Z4", cyclic_group(4)}, {"S3", symmetric_group(3)}};
  for (const auto& [name, g] : groups) {
    out.push_back({"trivial(" + name + ")", make_trivial(g), {}});
    out.push_back({"conjugation(" + name + ")", make_conjugation(g), {}});
  }
  for (const auto& [name, action] : {std::pair{"gauge(Z2 swapping {p,q})", z2_swap_action()},
                                     std::pair{"gauge(Z2 fixing {p,q})", z2_fixed_action()}}) {
    try {
      out.push_back({name, build_gauge_postgroup(action), {}});
    } catch (const Error& e) {
      out.push_back({name, std::nullopt, e.what()});
    }
  }
  return out;
}

}  // namespace postgroup
