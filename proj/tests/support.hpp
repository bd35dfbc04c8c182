#pragma once

#include <random>
#include <string>
#include <vector>

#include "fintop/catalog.hpp"
#include "fintop/space.hpp"

namespace testing_support {

using fintop::SubsetMask;

/// Random topology on n points: a random relation closed reflexively and transitively,
/// read as the specialization preorder.
inline fintop::FiniteSpace random_topology(std::size_t n, std::mt19937_64& rng, double density = 0.25) {
  std::bernoulli_distribution edge(density);
  std::vector<SubsetMask> up(n);
  for (std::size_t x = 0; x < n; ++x) {
    up[x] = SubsetMask::singleton(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && edge(rng)) up[x] = up[x].with(y);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      if (up[x].contains(k)) up[x] |= up[k];
    }
  }
  return fintop::space_from_neighborhoods(fintop::letter_labels(n), up);
}

inline SubsetMask random_subset(std::size_t n, std::mt19937_64& rng) {
  return SubsetMask{static_cast<SubsetMask::value_type>(rng() & SubsetMask::full(n).bits())};
}

/// Spaces used by the exhaustive tests: every topology on 1..max_points points.
inline std::vector<fintop::FiniteSpace> all_small_spaces(std::size_t max_points = 4) {
  std::vector<fintop::FiniteSpace> out;
  for (std::size_t n = 1; n <= max_points; ++n) {
    for (auto& s : fintop::enumerate_topologies(n)) out.push_back(std::move(s));
  }
  return out;
}

inline SubsetMask labels(const fintop::FiniteSpace& space, std::initializer_list<const char*> names) {
  SubsetMask m;
  for (const char* n : names) m = m.with(*space.index_of(n));
  return m;
}

}  // namespace testing_support
