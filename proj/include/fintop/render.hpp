#pragma once

#include <string>
#include <vector>

#include "fintop/set_family.hpp"
#include "fintop/space.hpp"

namespace fintop {

/// Text form of a set: ∅, X, or braces listing labels in point order, e.g. {a,c}.
inline std::string render_set(const FiniteSpace& space, SubsetMask s) {
  if (s.empty()) return "∅";
  if (s == space.universe()) return "X";
  return detail::render_plain(space.names(), s);
}

inline std::string render_family(const FiniteSpace& space, const SetFamily& family) {
  std::string out = "{";
  bool first = true;
  for (auto m : family) {
    if (!first) out += ",";
    out += render_set(space, m);
    first = false;
  }
  return out + "}";
}

inline std::string render_point(const FiniteSpace& space, std::size_t point) {
  return space.name(point);
}

/// Labels of s in point order (machine-readable form).
inline std::vector<std::string> set_labels(const FiniteSpace& space, SubsetMask s) {
  std::vector<std::string> out;
  s.for_each_point([&](std::size_t p) { out.push_back(space.name(p)); });
  return out;
}

}  // namespace fintop
