#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fintop/generalized.hpp"
#include "fintop/semi.hpp"
#include "fintop/space.hpp"

namespace fintop {

/// Why an axiom failed: the first offending point and/or set in canonical order.
struct AxiomWitness {
  std::optional<std::size_t> point;
  std::optional<SubsetMask> set;

  bool operator==(const AxiomWitness&) const = default;
};

/// Outcome of one axiom check; the witness is set exactly when the axiom fails.
struct AxiomResult {
  bool holds = true;
  std::optional<AxiomWitness> witness;

  explicit operator bool() const { return holds; }

  static AxiomResult pass() { return {}; }
  static AxiomResult fail(AxiomWitness w) { return {false, w}; }
};

struct AxiomProfile {
  AxiomResult t1;
  AxiomResult r0;
  AxiomResult semi_t1;
  AxiomResult semi_r0;
  AxiomResult semi_t_half;
};

/// Every singleton is closed.
inline AxiomResult check_t1(const FiniteSpace& space) {
  for (std::size_t p = 0; p < space.size(); ++p) {
    if (closure(space, SubsetMask::singleton(p)) != SubsetMask::singleton(p)) {
      return AxiomResult::fail({p, std::nullopt});
    }
  }
  return AxiomResult::pass();
}

/// Every open set contains the closures of its points.
inline AxiomResult check_r0(const FiniteSpace& space) {
  for (auto o : space.opens()) {
    std::optional<std::size_t> bad;
    o.for_each_point([&](std::size_t p) {
      if (!bad && !closure(space, SubsetMask::singleton(p)).subset_of(o)) bad = p;
    });
    if (bad) return AxiomResult::fail({bad, o});
  }
  return AxiomResult::pass();
}

/// Every singleton is semi-closed.
inline AxiomResult check_semi_t1(const SemiAnalysis& analysis) {
  for (std::size_t p = 0; p < analysis.space().size(); ++p) {
    if (!analysis.is_semi_closed(SubsetMask::singleton(p))) return AxiomResult::fail({p, std::nullopt});
  }
  return AxiomResult::pass();
}

/// Every semi-open set contains the semi-closures of its points.
inline AxiomResult check_semi_r0(const SemiAnalysis& analysis) {
  std::vector<SubsetMask> point_closures;
  for (std::size_t p = 0; p < analysis.space().size(); ++p) {
    point_closures.push_back(semi_closure(analysis, SubsetMask::singleton(p)));
  }
  for (auto o : analysis.semi_open()) {
    std::optional<std::size_t> bad;
    o.for_each_point([&](std::size_t p) {
      if (!bad && !point_closures[p].subset_of(o)) bad = p;
    });
    if (bad) return AxiomResult::fail({bad, o});
  }
  return AxiomResult::pass();
}

/// Every sg-closed set is semi-closed.
inline AxiomResult check_semi_t_half(const SemiAnalysis& analysis,
                                     const GeneralizedFamilies& families) {
  for (auto b : families.sg_closed) {
    if (!analysis.is_semi_closed(b)) return AxiomResult::fail({std::nullopt, b});
  }
  return AxiomResult::pass();
}

inline bool is_t1(const FiniteSpace& space) { return check_t1(space).holds; }
inline bool is_r0(const FiniteSpace& space) { return check_r0(space).holds; }
inline bool is_semi_t1(const SemiAnalysis& analysis) { return check_semi_t1(analysis).holds; }
inline bool is_semi_r0(const SemiAnalysis& analysis) { return check_semi_r0(analysis).holds; }
inline bool is_semi_t_half(const SemiAnalysis& analysis, const GeneralizedFamilies& families) {
  return check_semi_t_half(analysis, families).holds;
}

inline AxiomProfile axiom_profile(const SemiAnalysis& analysis,
                                  const GeneralizedFamilies& families) {
  return {check_t1(analysis.space()), check_r0(analysis.space()), check_semi_t1(analysis),
          check_semi_r0(analysis), check_semi_t_half(analysis, families)};
}

inline AxiomProfile axiom_profile(const FiniteSpace& space) {
  const SemiAnalysis analysis(space);
  return axiom_profile(analysis, generalized_families(analysis));
}

}  // namespace fintop
