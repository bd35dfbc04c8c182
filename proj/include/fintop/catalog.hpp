#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/error.hpp"
#include "fintop/space.hpp"

namespace fintop {

struct CatalogEntry {
  std::string id;
  std::string description;
  FiniteSpace space;
};

/// Labels a, b, c, ... for small anonymous spaces.
inline std::vector<std::string> letter_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i));
  }
  return out;
}

/// Builds the Alexandrov topology whose minimal neighborhoods are nbhd: the opens are
/// exactly the sets containing the neighborhood of each of their points.
inline FiniteSpace space_from_neighborhoods(std::vector<std::string> names,
                                            const std::vector<SubsetMask>& nbhd,
                                            std::size_t point_limit = kDefaultPointLimit) {
  detail::check_labels(names, point_limit);
  const std::size_t n = names.size();
  if (nbhd.size() != n) {
    throw TopologyError(ErrorKind::InvalidNeighborhoods, "one neighborhood per point required");
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (!nbhd[p].contains(p) || !nbhd[p].subset_of(SubsetMask::full(n))) {
      throw TopologyError(ErrorKind::InvalidNeighborhoods,
                          "neighborhood of '" + names[p] + "' must contain it");
    }
    nbhd[p].for_each_point([&](std::size_t q) {
      if (!nbhd[q].subset_of(nbhd[p])) {
        throw TopologyError(ErrorKind::InvalidNeighborhoods,
                            "neighborhoods of '" + names[p] + "' and '" + names[q] +
                                "' are not nested");
      }
    });
  }
  std::vector<SubsetMask> opens;
  for_each_subset(n, [&](SubsetMask a) {
    bool up = true;
    a.for_each_point([&](std::size_t p) { up = up && nbhd[p].subset_of(a); });
    if (up) opens.push_back(a);
  });
  return build_space_from_masks(std::move(names), std::move(opens), point_limit);
}

inline FiniteSpace discrete_space(std::size_t n) {
  std::vector<SubsetMask> nbhd;
  for (std::size_t p = 0; p < n; ++p) nbhd.push_back(SubsetMask::singleton(p));
  return space_from_neighborhoods(letter_labels(n), nbhd);
}

inline FiniteSpace indiscrete_space(std::size_t n) {
  return build_space_from_masks(letter_labels(n), {SubsetMask{}, SubsetMask::full(n)});
}

/// A finite window [lo, hi] of the digital line, as a subspace of the line.
struct KhalimskyWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  FiniteSpace space;
  /// Set when an endpoint is even: its three-point cell is cut off by the window.
  bool boundary_warning = false;

  std::int64_t value(std::size_t point) const { return lo + static_cast<std::int64_t>(point); }
};

inline bool is_even(std::int64_t v) { return v % 2 == 0; }

/// Window of the digital line whose topology is generated by the cells {2k-1, 2k, 2k+1}.
/// Odd points have neighborhood {x}; even points {x-1, x, x+1} cut to the window.
inline KhalimskyWindow khalimsky_window(std::int64_t lo, std::int64_t hi,
                                        std::size_t point_limit = kDefaultPointLimit) {
  if (lo > hi) {
    throw TopologyError(ErrorKind::EmptyWindow,
                        "window [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is empty");
  }
  const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
  if (width > std::min(point_limit, kMaskBits)) {
    throw TopologyError(ErrorKind::TooManyPoints, "window has " + std::to_string(width) +
                                                      " points; limit is " +
                                                      std::to_string(std::min(point_limit, kMaskBits)));
  }
  const auto n = static_cast<std::size_t>(width);
  std::vector<std::string> names;
  std::vector<SubsetMask> nbhd(n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::int64_t v = lo + static_cast<std::int64_t>(p);
    names.push_back(std::to_string(v));
    SubsetMask cell = SubsetMask::singleton(p);
    if (is_even(v)) {
      if (p > 0) cell = cell.with(p - 1);
      if (p + 1 < n) cell = cell.with(p + 1);
    }
    nbhd[p] = cell;
  }
  KhalimskyWindow w;
  w.lo = lo;
  w.hi = hi;
  w.space = space_from_neighborhoods(std::move(names), nbhd, point_limit);
  w.boundary_warning = is_even(lo) || is_even(hi);
  return w;
}

namespace detail {

inline bool parse_int(std::string_view text, std::int64_t& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

inline std::size_t parse_count(std::string_view id, std::string_view text) {
  std::int64_t n = 0;
  if (!parse_int(text, n) || n < 1) {
    throw TopologyError(ErrorKind::UnknownId, "bad point count in '" + std::string(id) + "'");
  }
  if (static_cast<std::uint64_t>(n) > kDefaultPointLimit) {
    throw TopologyError(ErrorKind::TooManyPoints, "'" + std::string(id) + "' is too large");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace detail

inline std::vector<FiniteSpace> enumerate_topologies(std::size_t n);

/// Resolves a catalog id: e1, e33, e3a, sierpinski, discrete:N, indiscrete:N, khalimsky:LO:HI,
/// or top:N:K (the K-th enumerated topology on N points).
inline CatalogEntry named_entry(std::string_view id) {
  const std::string key(id);
  auto abc = letter_labels(3);
  auto m = [](std::uint32_t bits) { return SubsetMask{bits}; };
  if (id == "e1") {
    return {key, "{a,b,c} with opens {}, {a}, {b,c}, X",
            build_space_from_masks(abc, {m(0), m(0b001), m(0b110), m(0b111)})};
  }
  if (id == "e33") {
    return {key, "{a,b,c} with opens {}, {a,b}, X",
            build_space_from_masks(abc, {m(0), m(0b011), m(0b111)})};
  }
  if (id == "e3a") {
    return {key, "{a,b,c} with opens {}, {a}, {b}, {a,b}, X",
            build_space_from_masks(abc, {m(0), m(0b001), m(0b010), m(0b011), m(0b111)})};
  }
  if (id == "sierpinski") {
    return {key, "Sierpinski space {a,b} with opens {}, {a}, X",
            build_space_from_masks(letter_labels(2), {m(0), m(0b01), m(0b11)})};
  }
  if (id.starts_with("discrete:")) {
    const auto n = detail::parse_count(id, id.substr(9));
    return {key, "discrete space on " + std::to_string(n) + " points", discrete_space(n)};
  }
  if (id.starts_with("indiscrete:")) {
    const auto n = detail::parse_count(id, id.substr(11));
    return {key, "indiscrete space on " + std::to_string(n) + " points", indiscrete_space(n)};
  }
  if (id.starts_with("khalimsky:")) {
    const auto rest = id.substr(10);
    const auto colon = rest.find(':', 1);
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    if (colon == std::string_view::npos || !detail::parse_int(rest.substr(0, colon), lo) ||
        !detail::parse_int(rest.substr(colon + 1), hi)) {
      throw TopologyError(ErrorKind::UnknownId, "expected khalimsky:LO:HI, got '" + key + "'");
    }
    return {key, "digital line window [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
            khalimsky_window(lo, hi).space};
  }
  if (id.starts_with("top:")) {
    const auto rest = id.substr(4);
    const auto colon = rest.find(':');
    std::int64_t n = 0;
    std::int64_t k = 0;
    if (colon == std::string_view::npos || !detail::parse_int(rest.substr(0, colon), n) ||
        !detail::parse_int(rest.substr(colon + 1), k) || n < 1 || n > 5 || k < 0) {
      throw TopologyError(ErrorKind::UnknownId, "expected top:N:K, got '" + key + "'");
    }
    auto all = enumerate_topologies(static_cast<std::size_t>(n));
    if (static_cast<std::size_t>(k) >= all.size()) {
      throw TopologyError(ErrorKind::UnknownId, "'" + key + "': only " +
                                                    std::to_string(all.size()) + " topologies");
    }
    return {key, "labelled topology on " + std::to_string(n) + " points",
            std::move(all[static_cast<std::size_t>(k)])};
  }
  throw TopologyError(ErrorKind::UnknownId, "no catalog space named '" + key + "'");
}

inline FiniteSpace named_space(std::string_view id) { return named_entry(id).space; }

/// True if id resolves through named_entry (without building the space).
inline bool is_catalog_id(std::string_view id) {
  for (std::string_view fixed : {"e1", "e33", "e3a", "sierpinski"}) {
    if (id == fixed) return true;
  }
  return id.starts_with("discrete:") || id.starts_with("indiscrete:") ||
         id.starts_with("khalimsky:") || id.starts_with("top:");
}

/// The fixed spaces the law suite always examines alongside the enumerated ones.
inline std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> out;
  for (const char* id : {"e1", "e33", "e3a", "sierpinski", "discrete:2", "indiscrete:2",
                         "khalimsky:-3:3", "khalimsky:-2:2"}) {
    out.push_back(named_entry(id));
  }
  return out;
}

/// Enumeration bound; labelled topologies on 6 points already number 209527.
inline constexpr std::size_t kMaxEnumerationPoints = 5;

namespace detail {

inline bool opens_less(const FiniteSpace& a, const FiniteSpace& b) {
  const auto x = a.opens().members();
  const auto y = b.opens().members();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

inline void check_enumeration_size(std::size_t n, std::size_t cap) {
  if (n < 1) throw TopologyError(ErrorKind::NoPoints, "enumeration needs at least one point");
  if (n > cap) {
    throw TopologyError(ErrorKind::TooManyPoints, "enumeration is limited to " +
                                                      std::to_string(cap) + " points");
  }
}

}  // namespace detail

/// Every topology on n labelled points, found by testing all 2^(2^n - 2) candidate
/// families for closure under union and intersection. Feasible for n <= 4.
inline std::vector<FiniteSpace> enumerate_topologies_naive(std::size_t n) {
  detail::check_enumeration_size(n, 4);
  const auto full = SubsetMask::full(n);
  const std::size_t middle = static_cast<std::size_t>(subset_count(n)) - 2;
  std::vector<FiniteSpace> out;
  std::vector<SubsetMask> family;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << middle); ++choice) {
    family.assign({SubsetMask{}, full});
    for (std::size_t i = 0; i < middle; ++i) {
      if ((choice >> i) & 1u) family.push_back(SubsetMask{static_cast<std::uint32_t>(i + 1)});
    }
    // Membership by mask value: bit k of `has` is set iff subset k is in the family.
    std::uint64_t has = 1u | (std::uint64_t{1} << full.bits()) | (choice << 1);
    bool closed = true;
    for (std::size_t i = 0; closed && i < family.size(); ++i) {
      for (std::size_t j = i + 1; closed && j < family.size(); ++j) {
        closed = ((has >> (family[i] | family[j]).bits()) & 1u) &&
                 ((has >> (family[i] & family[j]).bits()) & 1u);
      }
    }
    if (closed) out.push_back(build_space_from_masks(letter_labels(n), family));
  }
  std::sort(out.begin(), out.end(), detail::opens_less);
  return out;
}

/// Every topology on n labelled points, generated from the preorders on the points
/// (each finite topology is the up-set lattice of its specialization preorder).
inline std::vector<FiniteSpace> enumerate_topologies_by_preorder(std::size_t n) {
  detail::check_enumeration_size(n, kMaxEnumerationPoints);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) cells.emplace_back(x, y);
    }
  }
  std::vector<FiniteSpace> out;
  std::vector<SubsetMask> up(n);
  const auto labels = letter_labels(n);
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << cells.size()); ++choice) {
    for (std::size_t x = 0; x < n; ++x) up[x] = SubsetMask::singleton(x);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if ((choice >> i) & 1u) up[cells[i].first] = up[cells[i].first].with(cells[i].second);
    }
    bool transitive = true;
    for (std::size_t x = 0; transitive && x < n; ++x) {
      up[x].for_each_point([&](std::size_t y) { transitive = transitive && up[y].subset_of(up[x]); });
    }
    if (transitive) out.push_back(space_from_neighborhoods(labels, up));
  }
  std::sort(out.begin(), out.end(), detail::opens_less);
  return out;
}

/// Every topology on n labelled points (1 <= n <= 5) in canonical order: sorted by the
/// ascending list of open-set masks.
inline std::vector<FiniteSpace> enumerate_topologies(std::size_t n) {
  detail::check_enumeration_size(n, kMaxEnumerationPoints);
  return n <= 3 ? enumerate_topologies_naive(n) : enumerate_topologies_by_preorder(n);
}

/// Catalog entries for enumerate_topologies(n), with ids "top:N:K" (K is 0-based).
inline std::vector<CatalogEntry> enumerated_entries(std::size_t n) {
  std::vector<CatalogEntry> out;
  std::size_t k = 0;
  for (auto& space : enumerate_topologies(n)) {
    const std::string id = "top:" + std::to_string(n) + ":" + std::to_string(k++);
    out.push_back({id, "labelled topology on " + std::to_string(n) + " points", std::move(space)});
  }
  return out;
}

}  // namespace fintop
