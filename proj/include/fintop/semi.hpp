#pragma once

#include <cstddef>
#include <vector>

#include "fintop/set_family.hpp"
#include "fintop/space.hpp"
#include "fintop/subset_mask.hpp"

namespace fintop {

/// SO(X): every A with A ⊆ Cl(Int(A)).
inline SetFamily semi_open_family(const FiniteSpace& space) {
  return SetFamily::filter(space.size(), [&](SubsetMask a) {
    return a.subset_of(closure(space, interior(space, a)));
  });
}

/// Semi-open and semi-closed families of one space, plus the kernel of every singleton.
///
/// Holds a pointer to the space; the space must outlive the analysis.
class SemiAnalysis {
public:
  explicit SemiAnalysis(const FiniteSpace& space)
      : space_(&space), semi_open_(semi_open_family(space)) {
    std::vector<SubsetMask> closed;
    closed.reserve(semi_open_.size());
    for (auto o : semi_open_) closed.push_back(space.complement(o));
    semi_closed_ = SetFamily(space.size(), std::move(closed));

    point_kernels_.assign(space.size(), space.universe());
    for (auto o : semi_open_) {
      o.for_each_point([&](std::size_t p) { point_kernels_[p] &= o; });
    }
  }
  explicit SemiAnalysis(FiniteSpace&&) = delete;

  const FiniteSpace& space() const { return *space_; }
  const SetFamily& semi_open() const { return semi_open_; }
  const SetFamily& semi_closed() const { return semi_closed_; }
  SubsetMask point_kernel(std::size_t point) const { return point_kernels_[point]; }

  bool is_semi_open(SubsetMask a) const { return semi_open_.contains(a); }
  bool is_semi_closed(SubsetMask a) const { return semi_closed_.contains(a); }

private:
  const FiniteSpace* space_;
  SetFamily semi_open_;
  SetFamily semi_closed_;
  std::vector<SubsetMask> point_kernels_;
};

/// sCl(B): intersection of the semi-closed supersets of B.
inline SubsetMask semi_closure(const SemiAnalysis& analysis, SubsetMask b) {
  SubsetMask out = analysis.space().universe();
  for (auto f : analysis.semi_closed()) {
    if (b.subset_of(f)) out &= f;
  }
  return out;
}

/// Λ_s(B): intersection of the semi-open supersets of B. The kernel distributes over
/// unions, so it is assembled from the cached singleton kernels.
inline SubsetMask semi_kernel(const SemiAnalysis& analysis, SubsetMask b) {
  SubsetMask out;
  b.for_each_point([&](std::size_t p) { out |= analysis.point_kernel(p); });
  return out;
}

/// V_s(B): union of the semi-closed subsets of B.
inline SubsetMask v_s(const SemiAnalysis& analysis, SubsetMask b) {
  SubsetMask out;
  for (auto f : analysis.semi_closed()) {
    if (f.subset_of(b)) out |= f;
  }
  return out;
}

inline bool is_lambda_s_set(const SemiAnalysis& analysis, SubsetMask b) {
  return semi_kernel(analysis, b) == b;
}

inline bool is_v_s_set(const SemiAnalysis& analysis, SubsetMask b) {
  return v_s(analysis, b) == b;
}

inline SetFamily lambda_s_sets(const SemiAnalysis& analysis) {
  return SetFamily::filter(analysis.space().size(),
                           [&](SubsetMask b) { return is_lambda_s_set(analysis, b); });
}

inline SetFamily v_s_sets(const SemiAnalysis& analysis) {
  return SetFamily::filter(analysis.space().size(),
                           [&](SubsetMask b) { return is_v_s_set(analysis, b); });
}

struct SetClass {
  bool preopen = false;
  bool beta_open = false;
  bool nowhere_dense = false;
  bool regular_open = false;
  bool simply_open = false;
};

inline bool is_nowhere_dense(const FiniteSpace& space, SubsetMask a) {
  return interior(space, closure(space, a)).empty();
}

// Simply-open is also called locally semi-closed; no separate predicate exists for it.
inline SetClass set_class(const FiniteSpace& space, SubsetMask a) {
  const SubsetMask cl = closure(space, a);
  const SubsetMask int_cl = interior(space, cl);
  SetClass c;
  c.preopen = a.subset_of(int_cl);
  c.beta_open = a.subset_of(closure(space, int_cl));
  c.nowhere_dense = int_cl.empty();
  c.regular_open = a == int_cl;
  c.simply_open = is_nowhere_dense(space, a - interior(space, a));
  return c;
}

}  // namespace fintop
