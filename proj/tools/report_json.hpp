#pragma once

// JSON views of library results. Text and TSV output are rendered from these
// documents so every format reports the same numbers.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzsg/fuzzsg.hpp"

namespace fuzzsg::cli {

using nlohmann::json;

/// Integer when it fits in 64 bits, decimal string otherwise.
inline json big(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

inline json subgroup_json(const SubgroupLattice& lat, std::size_t index) {
  json members = json::array();
  lat[index].members.for_each([&](Elem x) { members.push_back(lat.group().label(x)); });
  return members;
}

inline json chain_json(const SubgroupLattice& lat, const Chain& c) {
  json out = json::array();
  for (auto i : c.subgroups) out.push_back(subgroup_json(lat, i));
  return out;
}

inline std::string subgroup_text(const SubgroupLattice& lat, std::size_t index) {
  std::string s = "{";
  bool first = true;
  lat[index].members.for_each([&](Elem x) {
    s += (first ? "" : ",") + lat.group().label(x);
    first = false;
  });
  return s + "}";
}

inline std::string chain_text(const SubgroupLattice& lat, const Chain& c) {
  std::string s;
  for (std::size_t i = 0; i < c.subgroups.size(); ++i) s += (i ? " < " : "") + subgroup_text(lat, c.subgroups[i]);
  return s;
}

inline json fix_table_json(const Classification& c) {
  json rows = json::array();
  for (std::size_t i = 0; i < c.aut.size(); ++i)
    rows.push_back({{"automorphism", c.report.aut_labels[i]},
                    {"fixed_subgroups", c.report.fixed_subgroups[i]},
                    {"fixed_chains", big(c.report.fix_counts[i])}});
  return rows;
}

inline json orbits_json(const SubgroupLattice& lat, const std::vector<Orbit>& orbits) {
  json out = json::array();
  for (const auto& o : orbits)
    out.push_back({{"representative", chain_json(lat, o.representative)}, {"size", o.members.size()}});
  return out;
}

inline json lattice_json(const GroupSpec& spec, const SubgroupLattice& lat) {
  json subs = json::array();
  for (std::size_t i = 0; i < lat.size(); ++i)
    subs.push_back({{"index", i}, {"order", lat[i].order()}, {"elements", subgroup_json(lat, i)}});
  json hasse = json::array();
  for (std::size_t j = 0; j < lat.size(); ++j)
    for (auto i : lat.lower_covers(j)) hasse.push_back(json::array({i, j}));
  return {{"command", "lattice"},
          {"group", spec.to_string()},
          {"order", lat.group().order()},
          {"subgroups", std::move(subs)},
          {"hasse", std::move(hasse)}};
}

}  // namespace fuzzsg::cli
