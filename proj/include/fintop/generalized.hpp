#pragma once

#include <cstddef>
#include <stdexcept>

#include "fintop/semi.hpp"

namespace fintop {

/// sg-closed: sCl(B) ⊆ O for every semi-open O ⊇ B.
inline bool is_sg_closed(const SemiAnalysis& analysis, SubsetMask b) {
  const SubsetMask scl = semi_closure(analysis, b);
  for (auto o : analysis.semi_open()) {
    if (b.subset_of(o) && !scl.subset_of(o)) return false;
  }
  return true;
}

/// g.Λ_s: Λ_s(B) ⊆ F for every semi-closed F ⊇ B.
inline bool is_g_lambda_s(const SemiAnalysis& analysis, SubsetMask b) {
  const SubsetMask kernel = semi_kernel(analysis, b);
  for (auto f : analysis.semi_closed()) {
    if (b.subset_of(f) && !kernel.subset_of(f)) return false;
  }
  return true;
}

/// g.V_s by definition: the complement is g.Λ_s.
inline bool is_g_v_s_by_complement(const SemiAnalysis& analysis, SubsetMask b) {
  return is_g_lambda_s(analysis, analysis.space().complement(b));
}

/// g.V_s through V_s: every semi-open U ⊆ B lies inside V_s(B).
inline bool is_g_v_s_by_semi_open_subsets(const SemiAnalysis& analysis, SubsetMask b) {
  const SubsetMask inner = v_s(analysis, b);
  for (auto u : analysis.semi_open()) {
    if (u.subset_of(b) && !u.subset_of(inner)) return false;
  }
  return true;
}

/// Evaluates both characterizations and throws std::logic_error if they disagree.
inline bool is_g_v_s(const SemiAnalysis& analysis, SubsetMask b) {
  const bool by_complement = is_g_v_s_by_complement(analysis, b);
  if (by_complement != is_g_v_s_by_semi_open_subsets(analysis, b)) {
    throw std::logic_error("g.V_s characterizations disagree on mask " +
                           std::to_string(b.bits()));
  }
  return by_complement;
}

struct GeneralizedFamilies {
  SetFamily d_lambda;
  SetFamily d_v;
  SetFamily sg_closed;
};

inline GeneralizedFamilies generalized_families(const SemiAnalysis& analysis) {
  const std::size_t n = analysis.space().size();
  GeneralizedFamilies out;
  out.d_lambda = SetFamily::filter(n, [&](SubsetMask b) { return is_g_lambda_s(analysis, b); });
  out.d_v = SetFamily::filter(n, [&](SubsetMask b) { return is_g_v_s(analysis, b); });
  out.sg_closed = SetFamily::filter(n, [&](SubsetMask b) { return is_sg_closed(analysis, b); });
  return out;
}

/// Cantor-Bendixson derivative: the non-isolated points, {x : x ∈ Cl(X \ {x})}.
inline SubsetMask derived_set(const FiniteSpace& space) {
  SubsetMask out;
  for (std::size_t p = 0; p < space.size(); ++p) {
    if (closure(space, space.universe().without(p)).contains(p)) out = out.with(p);
  }
  return out;
}

inline SubsetMask g_v_s_singletons(const SemiAnalysis& analysis) {
  SubsetMask out;
  for (std::size_t p = 0; p < analysis.space().size(); ++p) {
    if (is_g_v_s(analysis, SubsetMask::singleton(p))) out = out.with(p);
  }
  return out;
}

}  // namespace fintop
