#include <catch_amalgamated.hpp>

#include <random>

#include "fintop/catalog.hpp"
#include "fintop/io.hpp"
#include "support.hpp"

using namespace fintop;

TEST_CASE("parse a topology document", "[io]") {
  const auto doc = parse_topology("name: e33\npoints: [a, b, c]\nopens: [[], [a, b], [a, b, c]]\n");
  CHECK(doc.name == "e33");
  CHECK(doc.space == named_space("e33"));

  const auto block = parse_topology("points:\n  - x\n  - y\nopens:\n  - []\n  - [y]\n  - [x, y]\n");
  CHECK(block.name.empty());
  CHECK(block.space.names() == std::vector<std::string>{"x", "y"});
  CHECK(block.space.is_open(SubsetMask{0b10}));
}

TEST_CASE("several documents in one stream", "[io]") {
  const auto docs = parse_topologies(
      "points: [a]\nopens: [[], [a]]\n---\npoints: [a, b]\nopens: [[], [a, b]]\n");
  REQUIRE(docs.size() == 2);
  CHECK(docs[1].space == indiscrete_space(2));
  CHECK_THROWS_AS(parse_topology("points: [a]\nopens: [[], [a]]\n---\npoints: [a]\nopens: [[], [a]]\n"),
                  TopologyError);
}

TEST_CASE("parse errors carry source, line and field", "[io]") {
  auto message = [](const std::string& text) -> std::string {
    try {
      parse_topology(text, "t.yaml");
    } catch (const TopologyError& e) {
      return e.what();
    }
    return "";
  };
  auto kind = [](const std::string& text) {
    try {
      parse_topology(text, "t.yaml");
    } catch (const TopologyError& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };

  const std::string unknown = "points: [a, b]\nopens:\n  - []\n  - [a, b]\n  - [c]\n";
  CHECK(kind(unknown) == ErrorKind::UnknownLabel);
  CHECK_THAT(message(unknown), Catch::Matchers::ContainsSubstring("t.yaml:5"));
  CHECK_THAT(message(unknown), Catch::Matchers::ContainsSubstring("opens[2]"));

  const std::string union_gap = "points: [a, b, c]\nopens: [[], [a], [b], [a, b, c]]\n";
  CHECK(kind(union_gap) == ErrorKind::NotClosedUnderUnion);
  CHECK_THAT(message(union_gap), Catch::Matchers::ContainsSubstring("t.yaml:2"));

  CHECK(kind("points: [a, b]\n") == ErrorKind::Parse);
  CHECK_THAT(message("points: [a, b]\n"), Catch::Matchers::ContainsSubstring("'opens'"));
  CHECK_THAT(message("points: [a]\nopens: [[], [a]\n"), Catch::Matchers::ContainsSubstring("t.yaml:"));
  CHECK_THAT(message("points: [a]\nopens: [[], a]\n"), Catch::Matchers::ContainsSubstring("opens[1]"));
  CHECK(kind("points: [a, a]\nopens: [[], [a]]\n") == ErrorKind::DuplicateLabel);
  CHECK(kind("points: [a, b]\nopens: [[a], [a, b]]\n") == ErrorKind::MissingEmptyOrUniverse);
  CHECK(kind("") == ErrorKind::Parse);
}

TEST_CASE("write then parse reproduces the space", "[io][property]") {
  std::vector<FiniteSpace> spaces = testing_support::all_small_spaces(3);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) spaces.push_back(testing_support::random_topology(8, rng));
  spaces.push_back(khalimsky_window(-3, 3).space);
  for (const auto& s : spaces) {
    const auto text = write_topology(s, "sample");
    const auto doc = parse_topology(text);
    REQUIRE(doc.name == "sample");
    REQUIRE(doc.space == s);
  }
  CHECK(write_topology(named_space("e33")) == "points: [a, b, c]\nopens: [[], [a, b], [a, b, c]]\n");
}
