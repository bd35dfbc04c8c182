#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fintop/error.hpp"
#include "fintop/set_family.hpp"
#include "fintop/subset_mask.hpp"

namespace fintop {

/// Default point-count limit for build_space. Family scans are 2^n.
inline constexpr std::size_t kDefaultPointLimit = 20;

/// A validated finite topology. Immutable after construction.
///
/// Every finite space is Alexandrov, so each point has a smallest open
/// neighborhood; it is precomputed and drives interior and closure.
class FiniteSpace {
public:
  std::size_t size() const { return names_.size(); }
  SubsetMask universe() const { return SubsetMask::full(size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t point) const { return names_[point]; }
  const SetFamily& opens() const { return opens_; }
  std::span<const SubsetMask> min_neighborhoods() const { return min_nbhd_; }

  SubsetMask complement(SubsetMask a) const { return a.complement(universe()); }
  bool is_open(SubsetMask a) const { return opens_.contains(a); }
  bool is_closed(SubsetMask a) const { return opens_.contains(complement(a)); }

  std::optional<std::size_t> index_of(const std::string& label) const {
    auto it = std::find(names_.begin(), names_.end(), label);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  bool operator==(const FiniteSpace& other) const {
    return names_ == other.names_ && opens_ == other.opens_;
  }

private:
  friend FiniteSpace build_space_from_masks(std::vector<std::string>, std::vector<SubsetMask>,
                                            std::size_t);

  std::vector<std::string> names_;
  SetFamily opens_;
  std::vector<SubsetMask> min_nbhd_;
};

namespace detail {

inline void check_labels(const std::vector<std::string>& names, std::size_t limit) {
  if (names.empty()) throw TopologyError(ErrorKind::NoPoints, "a space needs at least one point");
  const std::size_t cap = std::min(limit, kMaskBits);
  if (names.size() > cap) {
    throw TopologyError(ErrorKind::TooManyPoints, std::to_string(names.size()) +
                                                      " points exceeds the limit of " +
                                                      std::to_string(cap));
  }
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw TopologyError(ErrorKind::UnknownLabel, "empty point label");
    if (!seen.emplace(names[i], i).second) {
      throw TopologyError(ErrorKind::DuplicateLabel, "label '" + names[i] + "' appears twice");
    }
  }
}

inline std::string render_plain(const std::vector<std::string>& names, SubsetMask s) {
  std::string out = "{";
  bool first = true;
  s.for_each_point([&](std::size_t p) {
    if (!first) out += ",";
    out += names[p];
    first = false;
  });
  return out + "}";
}

inline bool is_upset_family(const SetFamily& family, const std::vector<SubsetMask>& nbhd) {
  auto is_upset = [&](SubsetMask a) {
    bool ok = true;
    a.for_each_point([&](std::size_t p) { ok = ok && nbhd[p].subset_of(a); });
    return ok;
  };
  for (auto o : family) {
    if (!is_upset(o)) return false;
  }
  std::size_t upsets = 0;
  for_each_subset(nbhd.size(), [&](SubsetMask a) { upsets += is_upset(a) ? 1 : 0; });
  return upsets == family.size();
}

[[noreturn]] inline void throw_closure_witness(const std::vector<std::string>& names,
                                               const SetFamily& family) {
  const auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!family.contains(members[i] | members[j])) {
        throw TopologyError(ErrorKind::NotClosedUnderUnion,
                            "union of " + render_plain(names, members[i]) + " and " +
                                render_plain(names, members[j]) + " is not open",
                            {members[i], members[j]});
      }
      if (!family.contains(members[i] & members[j])) {
        throw TopologyError(ErrorKind::NotClosedUnderIntersection,
                            "intersection of " + render_plain(names, members[i]) + " and " +
                                render_plain(names, members[j]) + " is not open",
                            {members[i], members[j]});
      }
    }
  }
  throw TopologyError(ErrorKind::NotClosedUnderUnion, "family is not a topology");
}

}  // namespace detail

/// Validates a topology given as masks over the labelled points.
/// Pairwise closure under union and intersection is accepted as full closure.
inline FiniteSpace build_space_from_masks(std::vector<std::string> names,
                                          std::vector<SubsetMask> opens,
                                          std::size_t point_limit = kDefaultPointLimit) {
  detail::check_labels(names, point_limit);
  const std::size_t n = names.size();
  const SubsetMask full = SubsetMask::full(n);
  for (auto o : opens) {
    if (!o.subset_of(full)) {
      throw TopologyError(ErrorKind::UnknownLabel, "open set references a point index >= " +
                                                       std::to_string(n));
    }
  }
  SetFamily family(n, std::move(opens));
  if (!family.contains(SubsetMask{}) || !family.contains(full)) {
    throw TopologyError(ErrorKind::MissingEmptyOrUniverse,
                        "the empty set and the whole carrier must both be open");
  }
  const auto members = family.members();
  std::vector<SubsetMask> nbhd(n, full);
  for (auto o : members) {
    o.for_each_point([&](std::size_t p) { nbhd[p] &= o; });
  }
  // A finite family is a topology iff it equals the up-sets of its neighborhood table.
  // The pairwise scan only runs to name a witness once that test fails.
  if (!detail::is_upset_family(family, nbhd)) detail::throw_closure_witness(names, family);

  FiniteSpace space;
  space.min_nbhd_ = std::move(nbhd);
  space.names_ = std::move(names);
  space.opens_ = std::move(family);
  return space;
}

/// Validates a topology given as label lists.
inline FiniteSpace build_space(std::vector<std::string> names,
                               const std::vector<std::vector<std::string>>& opens,
                               std::size_t point_limit = kDefaultPointLimit) {
  detail::check_labels(names, point_limit);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  std::vector<SubsetMask> masks;
  masks.reserve(opens.size());
  for (const auto& labels : opens) {
    SubsetMask m;
    for (const auto& label : labels) {
      auto it = index.find(label);
      if (it == index.end()) {
        throw TopologyError(ErrorKind::UnknownLabel, "label '" + label + "' is not a point");
      }
      m = m.with(it->second);
    }
    masks.push_back(m);
  }
  return build_space_from_masks(std::move(names), std::move(masks), point_limit);
}

/// Largest open subset of a: the points whose minimal neighborhood lies inside a.
inline SubsetMask interior(const FiniteSpace& space, SubsetMask a) {
  SubsetMask out;
  const auto nbhd = space.min_neighborhoods();
  for (std::size_t p = 0; p < nbhd.size(); ++p) {
    if (nbhd[p].subset_of(a)) out = out.with(p);
  }
  return out;
}

/// Smallest closed superset of a: the points whose minimal neighborhood meets a.
inline SubsetMask closure(const FiniteSpace& space, SubsetMask a) {
  return space.complement(interior(space, space.complement(a)));
}

inline SubsetMask minimal_neighborhood(const FiniteSpace& space, std::size_t point) {
  return space.min_neighborhoods()[point];
}

/// Relative topology on the points of carrier, keeping their labels and order.
inline FiniteSpace subspace(const FiniteSpace& space, SubsetMask carrier) {
  carrier &= space.universe();
  if (carrier.empty()) throw TopologyError(ErrorKind::EmptyCarrier, "subspace carrier is empty");
  const auto kept = carrier.points();
  std::vector<std::string> names;
  names.reserve(kept.size());
  for (auto p : kept) names.push_back(space.name(p));

  auto reindex = [&](SubsetMask s) {
    SubsetMask out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (s.contains(kept[i])) out = out.with(i);
    }
    return out;
  };
  std::vector<SubsetMask> opens;
  opens.reserve(space.opens().size());
  for (auto o : space.opens()) opens.push_back(reindex(o & carrier));
  return build_space_from_masks(std::move(names), std::move(opens), kMaskBits);
}

}  // namespace fintop
