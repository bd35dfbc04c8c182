#include <catch_amalgamated.hpp>

#include "fintop/catalog.hpp"
#include "fintop/semi.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace fintop;
using testing_support::labels;

namespace {

SetFamily family_of(const FiniteSpace& s, std::initializer_list<std::initializer_list<const char*>> sets) {
  std::vector<SubsetMask> out;
  for (auto set : sets) out.push_back(labels(s, set));
  return SetFamily(s.size(), out);
}

}  // namespace

TEST_CASE("semi-open families of the named spaces", "[semi]") {
  const auto e33 = named_space("e33");
  CHECK(semi_open_family(e33) == family_of(e33, {{}, {"a", "b"}, {"a", "b", "c"}}));
  const auto e1 = named_space("e1");
  CHECK(semi_open_family(e1) == family_of(e1, {{}, {"a"}, {"b", "c"}, {"a", "b", "c"}}));
  CHECK(semi_open_family(discrete_space(2)).size() == 4);
}

TEST_CASE("semi-closure, kernel and V_s examples", "[semi]") {
  const auto e33 = named_space("e33");
  const SemiAnalysis s33(e33);
  CHECK(semi_closure(s33, labels(e33, {"a"})) == e33.universe());
  CHECK(v_s(s33, labels(e33, {"a", "c"})) == labels(e33, {"c"}));
  CHECK(v_s(s33, labels(e33, {"a"})).empty());
  CHECK_FALSE(is_lambda_s_set(s33, labels(e33, {"a", "c"})));
  CHECK(is_lambda_s_set(s33, labels(e33, {"a", "b"})));

  const auto e1 = named_space("e1");
  const SemiAnalysis s1(e1);
  const SubsetMask b = labels(e1, {"b"});
  const SubsetMask c = labels(e1, {"c"});
  CHECK(semi_closure(s1, b) == labels(e1, {"b", "c"}));
  CHECK(semi_kernel(s1, b & c).empty());
  CHECK(semi_kernel(s1, b) == labels(e1, {"b", "c"}));
  CHECK(semi_kernel(s1, c) == labels(e1, {"b", "c"}));
  CHECK(semi_kernel(s1, e1.universe()) == e1.universe());

  const auto e3a = named_space("e3a");
  const SemiAnalysis s3a(e3a);
  for_each_subset(3, [&](SubsetMask m) { CHECK(is_lambda_s_set(s3a, m)); });

  for (auto f : s1.semi_closed()) {
    CHECK(semi_closure(s1, f) == f);
    CHECK(v_s(s1, f) == f);
  }
}

TEST_CASE("set classes", "[semi]") {
  const auto k = khalimsky_window(-3, 3).space;
  CHECK(set_class(k, labels(k, {"1"})).regular_open);
  CHECK_FALSE(set_class(k, labels(k, {"0"})).regular_open);

  const auto e33 = named_space("e33");
  CHECK(set_class(e33, labels(e33, {"c"})).nowhere_dense);
  CHECK_FALSE(set_class(e33, labels(e33, {"a"})).nowhere_dense);
  CHECK(set_class(e33, labels(e33, {"a"})).preopen);

  for (const auto& s : testing_support::all_small_spaces(3)) {
    for (auto o : s.opens()) CHECK(set_class(s, o).simply_open);
  }
}

TEST_CASE("semi operators agree with the definitional oracle", "[semi][oracle]") {
  for (const auto& s : testing_support::all_small_spaces(4)) {
    const auto ref = oracle::from(s);
    const SemiAnalysis a(s);
    std::vector<SubsetMask> so;
    for (const auto& set : oracle::semi_open_family(ref)) so.push_back(oracle::to_mask(set));
    REQUIRE(a.semi_open() == SetFamily(s.size(), so));
    for (std::size_t x = 0; x < s.size(); ++x) {
      REQUIRE(oracle::from_mask(a.point_kernel(x)) == oracle::kernel(ref, {static_cast<int>(x)}));
    }
    for_each_subset(s.size(), [&](SubsetMask b) {
      const auto sb = oracle::from_mask(b);
      REQUIRE(a.is_semi_closed(b) == oracle::contains(oracle::semi_closed_family(ref), sb));
      REQUIRE(oracle::from_mask(semi_kernel(a, b)) == oracle::kernel(ref, sb));
      REQUIRE(oracle::from_mask(v_s(a, b)) == oracle::v_s(ref, sb));
      REQUIRE(oracle::from_mask(semi_closure(a, b)) == oracle::semi_closure(ref, sb));
    });
  }
}

TEST_CASE("semi analysis invariants", "[semi][property]") {
  for (const auto& s : testing_support::all_small_spaces(4)) {
    const SemiAnalysis a(s);
    REQUIRE(s.opens().subset_of(a.semi_open()));
    for (auto o : s.opens()) REQUIRE(a.is_semi_closed(s.complement(o)));
    for (auto f : a.semi_closed()) REQUIRE(a.is_semi_open(s.complement(f)));
    REQUIRE(lambda_s_sets(a).contains(SubsetMask{}));
    REQUIRE(v_s_sets(a).contains(s.universe()));
    for_each_subset(s.size(), [&](SubsetMask b) {
      const SubsetMask scl = semi_closure(a, b);
      REQUIRE(b.subset_of(scl));
      REQUIRE(semi_closure(a, scl) == scl);
      REQUIRE(a.is_semi_closed(scl));
      REQUIRE(v_s(a, b) == s.complement(semi_kernel(a, s.complement(b))));
      REQUIRE(is_lambda_s_set(a, b) == is_v_s_set(a, s.complement(b)));
    });
  }
}

TEST_CASE("nowhere dense agrees with set_class", "[semi]") {
  for (const auto& s : testing_support::all_small_spaces(3)) {
    for_each_subset(s.size(), [&](SubsetMask b) {
      REQUIRE(is_nowhere_dense(s, b) == set_class(s, b).nowhere_dense);
      const auto ref = oracle::from(s);
      const auto sb = oracle::from_mask(b);
      REQUIRE(set_class(s, b).preopen ==
              oracle::subset(sb, oracle::interior(ref, oracle::closure(ref, sb))));
    });
  }
}
