#include <catch_amalgamated.hpp>

#include "fintop/axioms.hpp"
#include "fintop/catalog.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace fintop;
using testing_support::labels;

TEST_CASE("axiom examples", "[axioms]") {
  CHECK(is_t1(discrete_space(3)));
  CHECK_FALSE(is_t1(khalimsky_window(-3, 3).space));
  CHECK_FALSE(is_r0(khalimsky_window(-3, 3).space));

  const auto e3a = named_space("e3a");
  const SemiAnalysis a3a(e3a);
  CHECK_FALSE(is_t1(e3a));
  CHECK_FALSE(is_r0(e3a));
  CHECK(is_semi_t1(a3a));
  CHECK(is_semi_r0(a3a));

  CHECK(is_r0(indiscrete_space(2)));
  const auto e1 = named_space("e1");
  CHECK(is_r0(e1));
  CHECK(is_semi_r0(SemiAnalysis(e1)));

  const auto e33 = named_space("e33");
  const SemiAnalysis a33(e33);
  CHECK_FALSE(is_semi_t1(a33));
  CHECK_FALSE(is_semi_t_half(a33, generalized_families(a33)));

  const auto k = khalimsky_window(-3, 3).space;
  const SemiAnalysis ak(k);
  CHECK(is_semi_t1(ak));

  const auto sp = named_space("sierpinski");
  const SemiAnalysis asp(sp);
  CHECK_FALSE(is_semi_r0(asp));
  CHECK(is_semi_t_half(asp, generalized_families(asp)));

  const auto sub = subspace(e3a, labels(e3a, {"a", "c"}));
  const SemiAnalysis asub(sub);
  CHECK_FALSE(is_semi_r0(asub));

  const auto d2 = discrete_space(2);
  const SemiAnalysis ad2(d2);
  CHECK(is_semi_t_half(ad2, generalized_families(ad2)));
}

TEST_CASE("axiom profiles", "[axioms]") {
  const auto k = axiom_profile(khalimsky_window(-7, 7).space);
  CHECK_FALSE(k.t1.holds);
  CHECK_FALSE(k.r0.holds);
  CHECK(k.semi_t1.holds);
  CHECK(k.semi_r0.holds);

  const auto ind = axiom_profile(indiscrete_space(2));
  CHECK_FALSE(ind.t1.holds);
  CHECK(ind.r0.holds);
  CHECK_FALSE(ind.semi_t1.holds);
  CHECK(ind.semi_r0.holds);

  const auto d = axiom_profile(discrete_space(2));
  CHECK((d.t1.holds && d.r0.holds && d.semi_t1.holds && d.semi_r0.holds && d.semi_t_half.holds));
}

TEST_CASE("failed axioms carry a witness and passed ones do not", "[axioms]") {
  const auto e3a = named_space("e3a");
  const auto p = axiom_profile(e3a);
  REQUIRE(p.t1.witness);
  CHECK(p.t1.witness->point == std::optional<std::size_t>{0});
  CHECK_FALSE(p.semi_t1.witness);

  const auto sp = axiom_profile(named_space("sierpinski"));
  REQUIRE(sp.semi_r0.witness);
  CHECK(sp.semi_r0.witness->point.has_value());
  CHECK(sp.semi_r0.witness->set.has_value());
}

TEST_CASE("axioms agree with the definitional oracle", "[axioms][oracle]") {
  for (const auto& s : testing_support::all_small_spaces(4)) {
    const auto ref = oracle::from(s);
    const auto p = axiom_profile(s);
    REQUIRE(p.t1.holds == oracle::t1(ref));
    REQUIRE(p.r0.holds == oracle::r0(ref));
    REQUIRE(p.semi_t1.holds == oracle::semi_t1(ref));
    REQUIRE(p.semi_r0.holds == oracle::semi_r0(ref));
    REQUIRE(p.semi_t_half.holds == oracle::semi_t_half(ref));
    if (p.t1.holds) REQUIRE(p.semi_t1.holds);
    if (p.r0.holds) REQUIRE(p.semi_r0.holds);
    if (p.semi_t1.holds) REQUIRE(p.semi_r0.holds);
  }
}
