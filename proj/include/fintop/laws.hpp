#pragma once

// Executable claims about semi-open sets, the Λ_s/V_s operators, their generalized
// classes and the low separation axioms, each checked extensionally on one finite space.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fintop/axioms.hpp"
#include "fintop/catalog.hpp"
#include "fintop/generalized.hpp"
#include "fintop/render.hpp"
#include "fintop/semi.hpp"
#include "fintop/space.hpp"

namespace fintop {

enum class LawStatus { ExpectedHolds, Disputed };

inline const char* to_string(LawStatus s) {
  return s == LawStatus::ExpectedHolds ? "expected-holds" : "disputed";
}

/// What a failing check found: offending sets and points plus a sentence about them.
struct Failure {
  std::vector<SubsetMask> sets;
  std::vector<std::size_t> points;
  std::string explanation;
};

using CheckResult = std::optional<Failure>;

/// Lazily computed per-space data shared by all laws run on that space.
/// Not thread-safe; each worker builds its own.
class LawContext {
public:
  explicit LawContext(const CatalogEntry& entry)
      : entry_(&entry), semi_(entry.space) {
    const auto total = static_cast<std::size_t>(subset_count(n()));
    kernel_.resize(total);
    vs_.resize(total);
    for_each_subset(n(), [&](SubsetMask b) {
      kernel_[b.bits()] = semi_kernel(semi_, b);
      vs_[b.bits()] = v_s(semi_, b);
    });
  }

  const std::string& id() const { return entry_->id; }
  const FiniteSpace& space() const { return entry_->space; }
  const SemiAnalysis& semi() const { return semi_; }
  std::size_t n() const { return space().size(); }
  SubsetMask universe() const { return space().universe(); }
  SubsetMask complement(SubsetMask b) const { return space().complement(b); }

  SubsetMask kernel(SubsetMask b) const { return kernel_[b.bits()]; }
  SubsetMask vs(SubsetMask b) const { return vs_[b.bits()]; }
  bool lambda_set(SubsetMask b) const { return kernel(b) == b; }
  bool v_set(SubsetMask b) const { return vs(b) == b; }

  const GeneralizedFamilies& families() const {
    if (!families_) families_ = generalized_families(semi_);
    return *families_;
  }
  bool g_lambda(SubsetMask b) const { return families().d_lambda.contains(b); }
  bool g_v(SubsetMask b) const { return families().d_v.contains(b); }

  std::string show(SubsetMask b) const { return render_set(space(), b); }
  std::string show_point(std::size_t p) const { return space().name(p); }

private:
  const CatalogEntry* entry_;
  SemiAnalysis semi_;
  std::vector<SubsetMask> kernel_;
  std::vector<SubsetMask> vs_;
  mutable std::optional<GeneralizedFamilies> families_;
};

struct Law {
  std::string id;
  std::string section;
  /// Verbatim fragment of the source statement.
  std::string quote;
  LawStatus status = LawStatus::ExpectedHolds;
  /// For disputed laws: a catalog id on which the law is known to fail.
  std::string counterexample_space;
  /// Library operations the check relies on.
  std::vector<std::string> exercises;
  /// Spaces the law speaks about; empty means every space.
  std::function<bool(const CatalogEntry&)> applies;
  std::function<CheckResult(const LawContext&)> check;

  bool applies_to(const CatalogEntry& entry) const { return !applies || applies(entry); }
};

namespace laws_detail {

inline Failure fail(std::vector<SubsetMask> sets, std::string why) {
  return {std::move(sets), {}, std::move(why)};
}

inline Failure fail_point(std::size_t p, std::vector<SubsetMask> sets, std::string why) {
  return {std::move(sets), {p}, std::move(why)};
}

inline Failure fail_space(std::string why) { return {{}, {}, std::move(why)}; }

template <class Fn>
CheckResult all_subsets(const LawContext& c, Fn&& fn) {
  const auto total = subset_count(c.n());
  for (std::uint64_t b = 0; b < total; ++b) {
    if (auto f = fn(SubsetMask{static_cast<std::uint32_t>(b)})) return f;
  }
  return std::nullopt;
}

template <class Fn>
CheckResult all_pairs(const LawContext& c, Fn&& fn) {
  const auto total = subset_count(c.n());
  for (std::uint64_t a = 0; a < total; ++a) {
    for (std::uint64_t b = 0; b < total; ++b) {
      if (auto f = fn(SubsetMask{static_cast<std::uint32_t>(a)},
                      SubsetMask{static_cast<std::uint32_t>(b)})) {
        return f;
      }
    }
  }
  return std::nullopt;
}

template <class Fn>
CheckResult all_points(const LawContext& c, Fn&& fn) {
  for (std::size_t p = 0; p < c.n(); ++p) {
    if (auto f = fn(p)) return f;
  }
  return std::nullopt;
}

/// A stated property P(X) versus the axiom it should coincide with.
inline CheckResult same_truth(const LawContext& c, const std::string& lhs_name, bool lhs,
                              const std::string& rhs_name, bool rhs) {
  if (lhs == rhs) return std::nullopt;
  return fail_space(c.id() + ": " + lhs_name + " is " + (lhs ? "true" : "false") + " but " +
                    rhs_name + " is " + (rhs ? "true" : "false"));
}

/// Every member of the subsets selected by `in_class` is a V_s-set.
template <class Pred>
bool every_is_v_set(const LawContext& c, Pred&& in_class) {
  bool ok = true;
  for_each_subset(c.n(), [&](SubsetMask b) { ok = ok && (!in_class(b) || c.v_set(b)); });
  return ok;
}

/// Levine's form: some open O with O ⊆ A ⊆ Cl(O).
inline bool semi_open_by_witness(const FiniteSpace& space, SubsetMask a) {
  for (auto o : space.opens()) {
    if (o.subset_of(a) && a.subset_of(closure(space, o))) return true;
  }
  return false;
}

/// Dense in some regular closed subspace R: A ⊆ R ⊆ Cl(A) with R = Cl(Int(R)).
inline bool beta_open_by_witness(const FiniteSpace& space, SubsetMask a) {
  const SubsetMask cl = closure(space, a);
  bool found = false;
  for_each_between(a, cl, [&](SubsetMask r) {
    found = found || closure(space, interior(space, r)) == r;
  });
  return found;
}

/// A = U ∪ N for some open U and nowhere dense N.
inline bool simply_open_by_witness(const FiniteSpace& space, SubsetMask a) {
  for (auto u : space.opens()) {
    if (!u.subset_of(a)) continue;
    bool found = false;
    for_each_between(a - u, a, [&](SubsetMask nd) {
      found = found || is_nowhere_dense(space, nd);
    });
    if (found) return true;
  }
  return false;
}

inline bool odd_khalimsky_window(std::string_view id, std::int64_t& lo, std::int64_t& hi) {
  if (!id.starts_with("khalimsky:")) return false;
  id.remove_prefix(10);
  const auto colon = id.find(':', 1);
  if (colon == std::string_view::npos) return false;
  if (!detail::parse_int(id.substr(0, colon), lo) || !detail::parse_int(id.substr(colon + 1), hi)) {
    return false;
  }
  return !is_even(lo) && !is_even(hi) && lo < hi;
}

inline std::function<bool(const CatalogEntry&)> only(std::string id) {
  return [id = std::move(id)](const CatalogEntry& e) { return e.id == id; };
}

}  // namespace laws_detail

/// The complete claim registry, in a fixed order.
inline std::vector<Law> register_laws() {
  using namespace laws_detail;
  using C = const LawContext&;
  std::vector<Law> laws;
  auto add = [&](Law law) { laws.push_back(std::move(law)); };

  // Operator properties of the semi-kernel and its dual.

  add({"prop-3.2a", "§3 Prop. 3.2(a)", R"q((a) $B \subseteq B^{\Lambda_s}$;)q", LawStatus::ExpectedHolds, {},
       {"semi_kernel"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask b) -> CheckResult {
           if (b.subset_of(c.kernel(b))) return std::nullopt;
           return fail({b}, "B=" + c.show(b) + " is not inside its kernel " + c.show(c.kernel(b)));
         });
       }});

  add({"prop-3.2b", "§3 Prop. 3.2(b)", R"q((b) If $A \subseteq B$, then $A^{\Lambda_s} \subseteq B^{\Lambda)q",
       LawStatus::ExpectedHolds, {}, {"semi_kernel"}, {}, [](C c) {
         return all_pairs(c, [&](SubsetMask a, SubsetMask b) -> CheckResult {
           if (!a.subset_of(b) || c.kernel(a).subset_of(c.kernel(b))) return std::nullopt;
           return fail({a, b}, "A=" + c.show(a) + " ⊆ B=" + c.show(b) + " but Λ_s(A)=" +
                                   c.show(c.kernel(a)) + " ⊄ Λ_s(B)=" + c.show(c.kernel(b)));
         });
       }});

  add({"prop-3.2c", "§3 Prop. 3.2(c)", R"q((c) $B_{}^{\Lambda_s\Lambda_s} = B^{\Lambda_s}$;)q",
       LawStatus::ExpectedHolds, {}, {"semi_kernel"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask b) -> CheckResult {
           if (c.kernel(c.kernel(b)) == c.kernel(b)) return std::nullopt;
           return fail({b}, "Λ_s is not idempotent at B=" + c.show(b));
         });
       }});

  // Family laws are checked on all pairs plus the family of all subsets.
  add({"prop-3.2d", "§3 Prop. 3.2(d)", R"q((d) $[\bigcup \limits_{\lambda \in)q", LawStatus::ExpectedHolds, {},
       {"semi_kernel"}, {}, [](C c) -> CheckResult {
         if (auto f = all_pairs(c, [&](SubsetMask a, SubsetMask b) -> CheckResult {
               if (c.kernel(a | b) == (c.kernel(a) | c.kernel(b))) return std::nullopt;
               return fail({a, b}, "Λ_s(A∪B)=" + c.show(c.kernel(a | b)) + " differs from Λ_s(A)∪Λ_s(B)=" +
                                       c.show(c.kernel(a) | c.kernel(b)) + " for A=" + c.show(a) +
                                       ", B=" + c.show(b));
             })) {
           return f;
         }
         SubsetMask joined;
         for_each_subset(c.n(), [&](SubsetMask b) { joined |= c.kernel(b); });
         if (joined != c.kernel(c.universe())) return fail_space("union over the family of all subsets fails");
         return std::nullopt;
       }});

  add({"prop-3.2e", "§3 Prop. 3.2(e)", R"q((e) If $A\in SO(X,\tau)$, then $A = A^{\Lambda_s}$;)q",
       LawStatus::ExpectedHolds, {}, {"semi_open_family", "semi_kernel"}, {}, [](C c) -> CheckResult {
         for (auto a : c.semi().semi_open()) {
           if (c.kernel(a) != a) return fail({a}, "semi-open " + c.show(a) + " has kernel " + c.show(c.kernel(a)));
         }
         return std::nullopt;
       }});

  add({"prop-3.2f", "§3 Prop. 3.2(f)", R"q($(B^c)^{\Lambda_s}=(B^{V_s})^c$)q", LawStatus::ExpectedHolds, {},
       {"semi_kernel", "v_s"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask b) -> CheckResult {
           if (c.kernel(c.complement(b)) == c.complement(c.vs(b))) return std::nullopt;
           return fail({b}, "Λ_s(Bᶜ)=" + c.show(c.kernel(c.complement(b))) + " but V_s(B)ᶜ=" +
                                c.show(c.complement(c.vs(b))) + " for B=" + c.show(b));
         });
       }});

  add({"prop-3.2g", "§3 Prop. 3.2(g)", R"q((g) $B^{V_s} \subseteq B$;)q", LawStatus::ExpectedHolds, {}, {"v_s"}, {},
       [](C c) {
         return all_subsets(c, [&](SubsetMask b) -> CheckResult {
           if (c.vs(b).subset_of(b)) return std::nullopt;
           return fail({b}, "V_s(B)=" + c.show(c.vs(b)) + " escapes B=" + c.show(b));
         });
       }});

  add({"prop-3.2h", "§3 Prop. 3.2(h)", R"q((h) If $B \in SC(X,\tau)$, then $B=B^{V_s}$;)q", LawStatus::ExpectedHolds,
       {}, {"semi_open_family", "v_s"}, {}, [](C c) -> CheckResult {
         for (auto b : c.semi().semi_closed()) {
           if (c.vs(b) != b) return fail({b}, "semi-closed " + c.show(b) + " has V_s " + c.show(c.vs(b)));
         }
         return std::nullopt;
       }});

  add({"prop-3.2i", "§3 Prop. 3.2(i)", R"q((i) $[\bigcap\limits_{\lambda \in \Omega }B_\lambda ]^{\Lambda)q",
       LawStatus::ExpectedHolds, {}, {"semi_kernel"}, {}, [](C c) -> CheckResult {
         if (auto f = all_pairs(c, [&](SubsetMask a, SubsetMask b) -> CheckResult {
               if (c.kernel(a & b).subset_of(c.kernel(a) & c.kernel(b))) return std::nullopt;
               return fail({a, b}, "Λ_s(A∩B) ⊄ Λ_s(A)∩Λ_s(B) for A=" + c.show(a) + ", B=" + c.show(b));
             })) {
           return f;
         }
         SubsetMask met = c.universe();
         for_each_subset(c.n(), [&](SubsetMask b) { met &= c.kernel(b); });
         if (!c.kernel(SubsetMask{}).subset_of(met)) return fail_space("intersection over all subsets fails");
         return std::nullopt;
       }});

  add({"prop-3.2j", "§3 Prop. 3.2(j)", R"q((j) $[\bigcup\limits_{\lambda \in \Omega }B_\lambda ]^{V_s})q",
       LawStatus::ExpectedHolds, {}, {"v_s"}, {}, [](C c) -> CheckResult {
         if (auto f = all_pairs(c, [&](SubsetMask a, SubsetMask b) -> CheckResult {
               if ((c.vs(a) | c.vs(b)).subset_of(c.vs(a | b))) return std::nullopt;
               return fail({a, b}, "V_s(A∪B) ⊉ V_s(A)∪V_s(B) for A=" + c.show(a) + ", B=" + c.show(b));
             })) {
           return f;
         }
         SubsetMask joined;
         for_each_subset(c.n(), [&](SubsetMask b) { joined |= c.vs(b); });
         if (!joined.subset_of(c.vs(c.universe()))) return fail_space("union over all subsets fails");
         return std::nullopt;
       }});

  add({"remark-3.3-strictness", "§3 Remark and Example (intersection)",
       R"q(In general $(B_1\bigcap B_2)^{\Lambda _s}\neq B_1^{\Lambda)q", LawStatus::ExpectedHolds, {},
       {"semi_kernel"}, only("e1"), [](C c) -> CheckResult {
         const SubsetMask b1 = SubsetMask::singleton(1);
         const SubsetMask b2 = SubsetMask::singleton(2);
         const SubsetMask lhs = c.kernel(b1 & b2);
         const SubsetMask rhs = c.kernel(b1) & c.kernel(b2);
         if (lhs.empty() && rhs == (b1 | b2)) return std::nullopt;
         return fail({b1, b2}, "expected Λ_s(B1∩B2)=∅ and Λ_s(B1)∩Λ_s(B2)={b,c}, got " + c.show(lhs) +
                                   " and " + c.show(rhs));
       }});

  add({"remark-3.6", "§3 Remark after the Λ_s-set definition",
       R"q((b) If $B$ is a $V$-set or if $B\in SC(X,\tau )$, then $B$ is a)q", LawStatus::ExpectedHolds, {},
       {"is_lambda_s_set", "is_v_s_set"}, {}, [](C c) {
         // In a finite space the Λ-sets are the open sets and the V-sets the closed sets.
         return all_subsets(c, [&](SubsetMask b) -> CheckResult {
           if (c.space().is_open(b) && !c.lambda_set(b)) return fail({b}, "open " + c.show(b) + " is not a Λ_s-set");
           if (c.space().is_closed(b) && !c.v_set(b)) return fail({b}, "closed " + c.show(b) + " is not a V_s-set");
           if (c.semi().is_semi_open(b) && !c.lambda_set(b)) return fail({b}, "semi-open " + c.show(b) + " is not a Λ_s-set");
           if (c.semi().is_semi_closed(b) && !c.v_set(b)) return fail({b}, "semi-closed " + c.show(b) + " is not a V_s-set");
           return std::nullopt;
         });
       }});

  // Λ_s-sets and V_s-sets as families.

  add({"prop-3.7a", "§3 Prop. 3.7(a)", R"q((a) The subsets $\emptyset$ and $X$ are $\Lambda_s$-sets and)q",
       LawStatus::ExpectedHolds, {}, {"is_lambda_s_set", "is_v_s_set"}, {}, [](C c) -> CheckResult {
         for (auto b : {SubsetMask{}, c.universe()}) {
           if (!c.lambda_set(b) || !c.v_set(b)) return fail({b}, c.show(b) + " is not both a Λ_s-set and a V_s-set");
         }
         return std::nullopt;
       }});

  add({"prop-3.7b", "§3 Prop. 3.7(b)", R"q((b) Every union of $\Lambda_s$-sets (resp.\ $V_s$-sets) is a)q",
       LawStatus::ExpectedHolds, {}, {"is_lambda_s_set", "is_v_s_set"}, {}, [](C c) -> CheckResult {
         if (auto f = all_pairs(c, [&](SubsetMask a, SubsetMask b) -> CheckResult {
               if (c.lambda_set(a) && c.lambda_set(b) && !c.lambda_set(a | b)) {
                 return fail({a, b}, "union of Λ_s-sets " + c.show(a) + ", " + c.show(b) + " is not one");
               }
               if (c.v_set(a) && c.v_set(b) && !c.v_set(a | b)) {
                 return fail({a, b}, "union of V_s-sets " + c.show(a) + ", " + c.show(b) + " is not one");
               }
               return std::nullopt;
             })) {
           return f;
         }
         SubsetMask all_lambda;
         SubsetMask all_v;
         for_each_subset(c.n(), [&](SubsetMask b) {
           if (c.lambda_set(b)) all_lambda |= b;
           if (c.v_set(b)) all_v |= b;
         });
         if (!c.lambda_set(all_lambda) || !c.v_set(all_v)) return fail_space("union of the whole family fails");
         return std::nullopt;
       }});

  add({"prop-3.7c", "§3 Prop. 3.7(c)", R"q((c) Every intersection of $\Lambda_s$-sets (resp.\ $V_s$-sets))q",
       LawStatus::ExpectedHolds, {}, {"is_lambda_s_set", "is_v_s_set"}, {}, [](C c) -> CheckResult {
         if (auto f = all_pairs(c, [&](SubsetMask a, SubsetMask b) -> CheckResult {
               if (c.lambda_set(a) && c.lambda_set(b) && !c.lambda_set(a & b)) {
                 return fail({a, b}, "intersection of Λ_s-sets " + c.show(a) + ", " + c.show(b) + " is not one");
               }
               if (c.v_set(a) && c.v_set(b) && !c.v_set(a & b)) {
                 return fail({a, b}, "intersection of V_s-sets " + c.show(a) + ", " + c.show(b) + " is not one");
               }
               return std::nullopt;
             })) {
           return f;
         }
         SubsetMask all_lambda = c.universe();
         SubsetMask all_v = c.universe();
         for_each_subset(c.n(), [&](SubsetMask b) {
           if (c.lambda_set(b)) all_lambda &= b;
           if (c.v_set(b)) all_v &= b;
         });
         if (!c.lambda_set(all_lambda) || !c.v_set(all_v)) return fail_space("intersection of the whole family fails");
         return std::nullopt;
       }});

  add({"prop-3.7d", "§3 Prop. 3.7(d)", R"q((d) A subset $B$ is a $\Lambda_s$-set if and only if $B^c$ is a)q",
       LawStatus::ExpectedHolds, {}, {"is_lambda_s_set", "is_v_s_set"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask b) -> CheckResult {
           if (c.lambda_set(b) == c.v_set(c.complement(b))) return std::nullopt;
           return fail({b}, "B=" + c.show(b) + " and its complement disagree");
         });
       }});

  // Separation axioms and their characterizations.

  add({"prop-3.8", "§3 Prop. 3.8", R"q(if every subset is a $\Lambda_s$-set (or equivalently a)q",
       LawStatus::ExpectedHolds, {}, {"is_semi_t1", "is_lambda_s_set", "is_v_s_set"}, {}, [](C c) -> CheckResult {
         bool all_lambda = true;
         bool all_v = true;
         for_each_subset(c.n(), [&](SubsetMask b) {
           all_lambda = all_lambda && c.lambda_set(b);
           all_v = all_v && c.v_set(b);
         });
         const bool t1 = is_semi_t1(c.semi());
         if (auto f = same_truth(c, "semi-T1", t1, "every subset is a Λ_s-set", all_lambda)) return f;
         return same_truth(c, "semi-T1", t1, "every subset is a V_s-set", all_v);
       }});

  add({"cor-3-semi-t1-semi-r0", "§3 Corollary", R"q(Every semi-$T_1$-space is a semi-$R_0$-space.)q",
       LawStatus::ExpectedHolds, {}, {"is_semi_t1", "is_semi_r0"}, {}, [](C c) -> CheckResult {
         if (!is_semi_t1(c.semi()) || is_semi_r0(c.semi())) return std::nullopt;
         return fail_space(c.id() + " is semi-T1 but not semi-R0");
       }});

  add({"thm-3-semi-t1", "§3 Theorem (semi-T1)", R"q((2) Every locally dense (= preopen) subspace is a $V_s$-set;)q",
       LawStatus::ExpectedHolds, {}, {"is_semi_t1", "set_class", "is_v_s_set"}, {}, [](C c) -> CheckResult {
         const bool t1 = is_semi_t1(c.semi());
         const bool pre = every_is_v_set(c, [&](SubsetMask b) { return set_class(c.space(), b).preopen; });
         const bool beta = every_is_v_set(c, [&](SubsetMask b) { return set_class(c.space(), b).beta_open; });
         if (auto f = same_truth(c, "semi-T1", t1, "every preopen set is a V_s-set", pre)) return f;
         return same_truth(c, "semi-T1", t1, "every β-open set is a V_s-set", beta);
       }});

  add({"thm-3-semi-r0", "§3 Theorem (semi-R0)", R"q((3) Every open subspace is a $V_s$-set.)q",
       LawStatus::ExpectedHolds, {}, {"is_semi_r0", "set_class", "is_v_s_set"}, {}, [](C c) -> CheckResult {
         const bool r0 = is_semi_r0(c.semi());
         const bool so = every_is_v_set(c, [&](SubsetMask b) { return c.semi().is_semi_open(b); });
         const bool op = every_is_v_set(c, [&](SubsetMask b) { return c.space().is_open(b); });
         const bool simply = every_is_v_set(c, [&](SubsetMask b) { return set_class(c.space(), b).simply_open; });
         if (auto f = same_truth(c, "semi-R0", r0, "every semi-open set is a V_s-set", so)) return f;
         if (auto f = same_truth(c, "semi-R0", r0, "every open set is a V_s-set", op)) return f;
         return same_truth(c, "semi-R0", r0, "every simply-open set is a V_s-set", simply);
       }});

  add({"sec2-semi-r0-union", "§2 semi-R0 characterization",
       R"q(and only if every semi-open set is union of semi-closed sets.)q", LawStatus::ExpectedHolds, {},
       {"is_semi_r0", "semi_open_family"}, {}, [](C c) -> CheckResult {
         bool unions = true;
         for (auto o : c.semi().semi_open()) {
           SubsetMask joined;
           for (auto f : c.semi().semi_closed()) {
             if (f.subset_of(o)) joined |= f;
           }
           unions = unions && joined == o;
         }
         return same_truth(c, "semi-R0", is_semi_r0(c.semi()), "every semi-open set is a union of semi-closed sets",
                           unions);
       }});

  add({"sec2-r0-semi-r0", "§2", R"q($R_0$-space is a semi-$R_0$-space \cite{JR1} but not vice versa.)q",
       LawStatus::ExpectedHolds, {}, {"is_r0", "is_semi_r0"}, {}, [](C c) -> CheckResult {
         if (!is_r0(c.space()) || is_semi_r0(c.semi())) return std::nullopt;
         return fail_space(c.id() + " is R0 but not semi-R0");
       }});

  add({"sec3-singleton-dichotomy", "§3 Theorem proof", R"q(singleton is either locally dense or nowhere dense)q",
       LawStatus::ExpectedHolds, {}, {"set_class"}, {}, [](C c) {
         return all_points(c, [&](std::size_t p) -> CheckResult {
           const auto cls = set_class(c.space(), SubsetMask::singleton(p));
           if (cls.preopen || cls.nowhere_dense) return std::nullopt;
           return fail_point(p, {SubsetMask::singleton(p)}, "{" + c.show_point(p) + "} is neither preopen nor nowhere dense");
         });
       }});

  // Operational forms of the set classes against their defining forms.

  add({"def-semi-open", "§2 semi-open definition", R"q(semi-open} \cite{L1} if there exists $O \in \tau$ such that $O)q",
       LawStatus::ExpectedHolds, {}, {"semi_open_family"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask a) -> CheckResult {
           if (c.semi().is_semi_open(a) == semi_open_by_witness(c.space(), a)) return std::nullopt;
           return fail({a}, "A ⊆ Cl(Int(A)) and the open-witness form disagree on " + c.show(a));
         });
       }});

  add({"def-semi-closure", "§2 semi-closure definition", R"q(all semi-closed sets containing $A$)q", LawStatus::ExpectedHolds, {}, {"semi_closure"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask b) -> CheckResult {
           const SubsetMask s = semi_closure(c.semi(), b);
           if (b.subset_of(s) && c.semi().is_semi_closed(s) && semi_closure(c.semi(), s) == s) return std::nullopt;
           return fail({b}, "sCl(" + c.show(b) + ")=" + c.show(s) + " is not the least semi-closed superset");
         });
       }});

  add({"def-beta-open", "§3 β-open definition", R"q(Sets which are dense in some regular closed)q",
       LawStatus::ExpectedHolds, {}, {"set_class"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask a) -> CheckResult {
           if (set_class(c.space(), a).beta_open == beta_open_by_witness(c.space(), a)) return std::nullopt;
           return fail({a}, "A ⊆ Cl(Int(Cl(A))) and the regular-closed form disagree on " + c.show(a));
         });
       }});

  add({"beta-open-containment", "§3 Theorem proof", R"q((3) $\Rightarrow$ (2) Obvious, since every locally dense set is)q",
       LawStatus::ExpectedHolds, {}, {"set_class", "semi_open_family"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask a) -> CheckResult {
           const auto cls = set_class(c.space(), a);
           if (!cls.beta_open && (cls.preopen || c.semi().is_semi_open(a))) {
             return fail({a}, c.show(a) + " is preopen or semi-open but not β-open");
           }
           return std::nullopt;
         });
       }});

  add({"def-simply-open", "§3 simply-open definition", R"q(union of an open and a nowhere dense set.)q",
       LawStatus::ExpectedHolds, {}, {"set_class"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask a) -> CheckResult {
           if (set_class(c.space(), a).simply_open == simply_open_by_witness(c.space(), a)) return std::nullopt;
           return fail({a}, "A∖Int(A) nowhere dense and the U∪N form disagree on " + c.show(a));
         });
       }});

  // Generalized classes.

  add({"def-4-duality", "§4 g.V_s definition", R"q(a {\em $g.V_s$-set} of $(X,\tau)$ if $B^c$\ is a)q",
       LawStatus::ExpectedHolds, {}, {"generalized_families", "is_g_lambda_s", "is_g_v_s"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask b) -> CheckResult {
           if (c.g_lambda(b) == c.g_v(c.complement(b))) return std::nullopt;
           return fail({b}, "B=" + c.show(b) + " in D^Λs disagrees with Bᶜ in D^Vs");
         });
       }});

  add({"prop-4.5a", "§4 Prop. 4.5(a)", R"q((a) Every $\Lambda_s$-set is a $g.\Lambda_s$-set.)q", LawStatus::ExpectedHolds,
       {}, {"is_lambda_s_set", "is_g_lambda_s"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask b) -> CheckResult {
           if (!c.lambda_set(b) || c.g_lambda(b)) return std::nullopt;
           return fail({b}, "Λ_s-set " + c.show(b) + " is not g.Λ_s");
         });
       }});

  add({"prop-4.5b", "§4 Prop. 4.5(b)", R"q((b) Every $V_s$-set is a $g.V_s$-set.)q", LawStatus::ExpectedHolds, {},
       {"is_v_s_set", "is_g_v_s"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask b) -> CheckResult {
           if (!c.v_set(b) || c.g_v(b)) return std::nullopt;
           return fail({b}, "V_s-set " + c.show(b) + " is not g.V_s");
         });
       }});

  add({"prop-4.5c", "§4 Prop. 4.5(c)", R"q((c) If $B_\lambda \in D^{\Lambda _s}$ for all $\lambda \in)q",
       LawStatus::ExpectedHolds, {}, {"generalized_families"}, {}, [](C c) -> CheckResult {
         const auto& d = c.families().d_lambda;
         for (auto a : d) {
           for (auto b : d) {
             if (!d.contains(a | b)) return fail({a, b}, "union of g.Λ_s-sets " + c.show(a) + ", " + c.show(b) + " is not one");
           }
         }
         SubsetMask all;
         for (auto a : d) all |= a;
         if (!d.contains(all)) return fail_space("union of all g.Λ_s-sets is not one");
         return std::nullopt;
       }});

  add({"prop-4.5d", "§4 Prop. 4.5(d)", R"q((d) If $B_\lambda \in D^{V_s}$ for all $\lambda \in \Omega$, then)q",
       LawStatus::ExpectedHolds, {}, {"generalized_families"}, {}, [](C c) -> CheckResult {
         const auto& d = c.families().d_v;
         for (auto a : d) {
           for (auto b : d) {
             if (!d.contains(a & b)) return fail({a, b}, "intersection of g.V_s-sets " + c.show(a) + ", " + c.show(b) + " is not one");
           }
         }
         SubsetMask all = c.universe();
         for (auto a : d) all &= a;
         if (!d.contains(all)) return fail_space("intersection of all g.V_s-sets is not one");
         return std::nullopt;
       }});

  add({"remark-4-semi-open-g", "§4 Remark", R"q((i) If $A \in SO(X,\tau)$, then $A$ is a $g.\Lambda_s$-set;)q",
       LawStatus::ExpectedHolds, {}, {"is_g_lambda_s", "is_g_v_s"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask a) -> CheckResult {
           if (c.semi().is_semi_open(a) && !c.g_lambda(a)) return fail({a}, "semi-open " + c.show(a) + " is not g.Λ_s");
           if (c.semi().is_semi_closed(a) && !c.g_v(a)) return fail({a}, "semi-closed " + c.show(a) + " is not g.V_s");
           return std::nullopt;
         });
       }});

  add({"example-4-intersection", "§4 Example", R"q(\bigcap B = \{c\}$ is not a $g.\Lambda_s$-set.)q",
       LawStatus::ExpectedHolds, {}, {"is_g_lambda_s"}, only("e33"), [](C c) -> CheckResult {
         const SubsetMask a{0b101};
         const SubsetMask b{0b110};
         if (c.g_lambda(a) && c.g_lambda(b) && !c.g_lambda(a & b)) return std::nullopt;
         return fail({a, b}, "{a,c} and {b,c} should be g.Λ_s with {c} not");
       }});

  add({"example-4-families", "§4 Example", R"q($D^{\Lambda_s} = \{\emptyset, \{a\}, \{b\}, \{a,b\}, \{a,c\},)q",
       LawStatus::ExpectedHolds, {}, {"generalized_families"}, only("e33"), [](C c) -> CheckResult {
         const SetFamily want_lambda(3, {SubsetMask{0}, SubsetMask{1}, SubsetMask{2}, SubsetMask{3}, SubsetMask{5},
                                         SubsetMask{6}, SubsetMask{7}});
         const SetFamily want_v(3, {SubsetMask{0}, SubsetMask{1}, SubsetMask{2}, SubsetMask{4}, SubsetMask{5},
                                    SubsetMask{6}, SubsetMask{7}});
         if (c.families().d_lambda == want_lambda && c.families().d_v == want_v) return std::nullopt;
         return fail_space("D^Λs=" + render_family(c.space(), c.families().d_lambda) +
                           " D^Vs=" + render_family(c.space(), c.families().d_v));
       }});

  add({"example-4-converse", "§4 Example", R"q(subset $A = \{a,c\}$ is a $g.\Lambda_s$-set but it is not a)q",
       LawStatus::ExpectedHolds, {}, {"is_g_lambda_s", "is_lambda_s_set"}, only("e33"), [](C c) -> CheckResult {
         const SubsetMask a{0b101};
         if (c.g_lambda(a) && !is_lambda_s_set(c.semi(), a)) return std::nullopt;
         return fail({a}, "{a,c} should be g.Λ_s but not Λ_s");
       }});

  add({"prop-4.8a", "§4 Prop. 4.8(a)", R"q((a) For each $x \in X$, $\{x\}$ is a semi-open set or $\{x\}^c$)q",
       LawStatus::ExpectedHolds, {}, {"is_g_lambda_s", "semi_open_family"}, {}, [](C c) {
         return all_points(c, [&](std::size_t p) -> CheckResult {
           const SubsetMask x = SubsetMask::singleton(p);
           if (c.semi().is_semi_open(x) || c.g_lambda(c.complement(x))) return std::nullopt;
           return fail_point(p, {x}, "{" + c.show_point(p) + "} is not semi-open and its complement is not g.Λ_s");
         });
       }});

  add({"prop-4.8b", "§4 Prop. 4.8(b)", R"q((b) For each $x \in X$, $\{x\}$ is a semi-open set or $\{x\}$ is)q",
       LawStatus::ExpectedHolds, {}, {"is_g_v_s", "semi_open_family"}, {}, [](C c) {
         return all_points(c, [&](std::size_t p) -> CheckResult {
           const SubsetMask x = SubsetMask::singleton(p);
           if (c.semi().is_semi_open(x) || c.g_v(x)) return std::nullopt;
           return fail_point(p, {x}, "{" + c.show_point(p) + "} is neither semi-open nor g.V_s");
         });
       }});

  add({"cor-4-cantor-bendixson", "§4 Corollary", R"q(derivative $D(X)$ is the set of all $g.V_s$-singletons of)q",
       LawStatus::Disputed, "discrete:2", {"derived_set", "g_v_s_singletons"}, {}, [](C c) -> CheckResult {
         const SubsetMask derived = derived_set(c.space());
         const SubsetMask singles = g_v_s_singletons(c.semi());
         for (std::size_t p = 0; p < c.n(); ++p) {
           if (singles.contains(p) && !derived.contains(p)) {
             return fail_point(p, {derived, singles},
                               "point " + c.show_point(p) + " is a g.V_s singleton but isolated; D(X)=" +
                                   c.show(derived) + ", g.V_s singletons=" + c.show(singles));
           }
           if (derived.contains(p) && !singles.contains(p)) {
             return fail_point(p, {derived, singles},
                               "point " + c.show_point(p) + " is in D(X) but not a g.V_s singleton; D(X)=" +
                                   c.show(derived) + ", g.V_s singletons=" + c.show(singles));
           }
         }
         return std::nullopt;
       }});

  add({"prop-4.9", "§4 Prop. 4.9", R"q(and $A \subseteq B \subseteq A^{\Lambda_s}$, then $B$ is a)q", LawStatus::ExpectedHolds,
       {}, {"is_g_lambda_s", "semi_kernel"}, {}, [](C c) -> CheckResult {
         for (auto a : c.families().d_lambda) {
           CheckResult found;
           for_each_between(a, c.kernel(a), [&](SubsetMask b) {
             if (!found && !c.g_lambda(b)) {
               found = fail({a, b}, "A=" + c.show(a) + " is g.Λ_s, A ⊆ B ⊆ Λ_s(A), but B=" + c.show(b) + " is not");
             }
           });
           if (found) return found;
         }
         return std::nullopt;
       }});

  add({"prop-4.10", "§4 Prop. 4.10", R"q(if and only if $U \subseteq B^{V_s}$ whenever $U \subseteq B$ and)q",
       LawStatus::ExpectedHolds, {}, {"is_g_v_s", "v_s"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask b) -> CheckResult {
           if (is_g_v_s_by_complement(c.semi(), b) == is_g_v_s_by_semi_open_subsets(c.semi(), b)) return std::nullopt;
           return fail({b}, "the two g.V_s characterizations disagree on " + c.show(b));
         });
       }});

  add({"cor-4.11", "§4 Cor. 4.11", R"q(\subseteq F$, $F=X$ holds.)q", LawStatus::ExpectedHolds, {},
       {"is_g_v_s", "v_s"}, {}, [](C c) -> CheckResult {
         for (auto b : c.families().d_v) {
           const SubsetMask cover = c.vs(b) | c.complement(b);
           for (auto f : c.semi().semi_closed()) {
             if (cover.subset_of(f) && f != c.universe()) {
               return fail({b, f}, "B=" + c.show(b) + " is g.V_s yet semi-closed F=" + c.show(f) + " ⊇ V_s(B)∪Bᶜ");
             }
           }
         }
         return std::nullopt;
       }});

  add({"cor-4.12", "§4 Cor. 4.12", R"q(B^c$ is a semi-closed set if and only if $B$ is a $V_s$-set.)q",
       LawStatus::ExpectedHolds, {}, {"is_g_v_s", "is_v_s_set", "v_s"}, {}, [](C c) -> CheckResult {
         for (auto b : c.families().d_v) {
           const bool closed = c.semi().is_semi_closed(c.vs(b) | c.complement(b));
           if (closed != c.v_set(b)) {
             return fail({b}, "B=" + c.show(b) + ": V_s(B)∪Bᶜ semi-closed is " + (closed ? "true" : "false") +
                                  " but B is " + (c.v_set(b) ? "" : "not ") + "a V_s-set");
           }
         }
         return std::nullopt;
       }});

  add({"prop-4.13", "§4 Prop. 4.13", R"q(subset $F$ such that $F \supseteq B^{V_s} \bigcup B^c$, then $B$)q",
       LawStatus::ExpectedHolds, {}, {"is_g_v_s", "v_s"}, {}, [](C c) {
         return all_subsets(c, [&](SubsetMask b) -> CheckResult {
           if (!c.semi().is_semi_closed(c.vs(b))) return std::nullopt;
           const SubsetMask cover = c.vs(b) | c.complement(b);
           for (auto f : c.semi().semi_closed()) {
             if (cover.subset_of(f) && f != c.universe()) return std::nullopt;
           }
           if (c.g_v(b)) return std::nullopt;
           return fail({b}, "B=" + c.show(b) + " meets the hypotheses but is not g.V_s");
         });
       }});

  // sg-closed sets and semi-T1/2.

  add({"remark-5-sg", "§5 sg-closed definition", R"q(sets is sg-closed but the converse is not always true)q",
       LawStatus::ExpectedHolds, {}, {"is_sg_closed"}, {}, [](C c) -> CheckResult {
         for (auto f : c.semi().semi_closed()) {
           if (!c.families().sg_closed.contains(f)) return fail({f}, "semi-closed " + c.show(f) + " is not sg-closed");
         }
         return std::nullopt;
       }});

  add({"thm-5.3", "§5 Theorem 5.3", R"q((b) Every $g.V_s$-set is a $V_s$-set.)q", LawStatus::ExpectedHolds, {},
       {"is_semi_t_half", "is_g_v_s", "is_v_s_set"}, {}, [](C c) -> CheckResult {
         bool every = true;
         for (auto b : c.families().d_v) every = every && c.v_set(b);
         return same_truth(c, "semi-T1/2", is_semi_t_half(c.semi(), c.families()),
                           "every g.V_s-set is a V_s-set", every);
       }});

  // Worked examples about specific spaces.

  add({"example-3-e3a", "§3 Example", R"q(Observe that $X$ is semi-$T_1$ and that the closed subspace $A)q",
       LawStatus::ExpectedHolds, {}, {"is_semi_t1", "is_r0", "is_semi_r0"}, only("e3a"), [](C c) -> CheckResult {
         if (!is_semi_t1(c.semi())) return fail_space("X is not semi-T1");
         if (is_r0(c.space())) return fail_space("X is R0");
         const SubsetMask ac{0b101};
         if (!c.space().is_closed(ac)) return fail({ac}, "{a,c} is not closed");
         const FiniteSpace sub = subspace(c.space(), ac);
         if (is_semi_r0(SemiAnalysis(sub))) return fail({ac}, "subspace {a,c} is semi-R0");
         return std::nullopt;
       }});

  add({"example-3-indiscrete", "§3 Example", R"q(Since indiscrete spaces (with at least two points) are)q",
       LawStatus::ExpectedHolds, {}, {"is_semi_r0", "is_semi_t1"},
       [](const CatalogEntry& e) {
         return e.id.starts_with("indiscrete:") && e.space.size() >= 2;
       },
       [](C c) -> CheckResult {
         if (is_semi_r0(c.semi()) && !is_semi_t1(c.semi())) return std::nullopt;
         return fail_space(c.id() + " should be semi-R0 and not semi-T1");
       }});

  add({"sec2-sierpinski", "§2", R"q((the easiest example is probably a Sierpinski space))q", LawStatus::ExpectedHolds,
       {}, {"is_semi_r0"}, only("sierpinski"), [](C c) -> CheckResult {
         if (!is_semi_r0(c.semi())) return std::nullopt;
         return fail_space("Sierpinski space is semi-R0");
       }});

  add({"example-3-digital-line", "§3 Example", R"q(Since all even singletons are closed, they are)q",
       LawStatus::ExpectedHolds, {}, {"is_semi_t1", "is_semi_r0", "is_t1", "is_r0", "set_class"},
       [](const CatalogEntry& e) {
         std::int64_t lo = 0;
         std::int64_t hi = 0;
         return laws_detail::odd_khalimsky_window(e.id, lo, hi);
       },
       [](C c) -> CheckResult {
         std::int64_t lo = 0;
         std::int64_t hi = 0;
         odd_khalimsky_window(c.id(), lo, hi);
         if (!is_semi_t1(c.semi())) return fail_space(c.id() + " is not semi-T1");
         if (!is_semi_r0(c.semi())) return fail_space(c.id() + " is not semi-R0");
         if (is_t1(c.space())) return fail_space(c.id() + " is T1");
         if (is_r0(c.space())) return fail_space(c.id() + " is R0");
         return all_points(c, [&](std::size_t p) -> CheckResult {
           const SubsetMask x = SubsetMask::singleton(p);
           if (is_even(lo + static_cast<std::int64_t>(p))) {
             if (c.space().is_closed(x)) return std::nullopt;
             return fail_point(p, {x}, "even singleton {" + c.show_point(p) + "} is not closed");
           }
           if (set_class(c.space(), x).regular_open) return std::nullopt;
           return fail_point(p, {x}, "odd singleton {" + c.show_point(p) + "} is not regular open");
         });
       }});

  return laws;
}

}  // namespace fintop
