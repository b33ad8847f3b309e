#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "onevertex/types.hpp"

using namespace onevertex;

TEST_CASE("type codes parse and print as inverses") {
  const char* codes[] = {"sdg", "Sdg", "sDg", "SDg",
                         "sdG", "SdG", "sDG", "SDG"};
  std::set<std::string> seen;
  for (const char* c : codes) {
    CHECK(type_code(parse_type_code(c)) == c);
    seen.insert(c);
  }
  CHECK(seen.size() == 8);

  CHECK(parse_type_code("sdg") == MapType{false, false, false});
  CHECK(parse_type_code("SDG") == MapType{true, true, true});
}

TEST_CASE("malformed type codes are rejected") {
  CHECK_THROWS_AS(parse_type_code("xdg"), std::invalid_argument);
  CHECK_THROWS_WITH(parse_type_code("xdg"),
                    Catch::Matchers::ContainsSubstring("'x'"));
  CHECK_THROWS_AS(parse_type_code("sxg"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type_code("sdx"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type_code("sd"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type_code("sdgg"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type_code("dsg"), std::invalid_argument);
}

TEST_CASE("parameter table") {
  auto triple = [](const char* code) {
    TypeParams p = params(parse_type_code(code));
    return std::array<int, 3>{p.s, p.t, p.m};
  };
  // one column per type, in table order
  CHECK(triple("sdg") == std::array<int, 3>{2, 1, 2});
  CHECK(triple("Sdg") == std::array<int, 3>{3, 2, 3});
  CHECK(triple("sDg") == std::array<int, 3>{1, 2, 3});
  CHECK(triple("SDg") == std::array<int, 3>{1, 4, 5});
  CHECK(triple("sdG") == std::array<int, 3>{1, 1, 1});
  CHECK(triple("SdG") == std::array<int, 3>{2, 2, 2});
  CHECK(triple("sDG") == std::array<int, 3>{0, 2, 2});
  CHECK(triple("SDG") == std::array<int, 3>{0, 4, 4});
}

TEST_CASE("decoration count doubles per flag") {
  for (MapType t : all_types()) {
    const int flags = int(t.signed_edges) + int(t.directed);
    CHECK(params(t).t == 1 << flags);
  }
}

TEST_CASE("type lists are consistent") {
  CHECK(all_types().size() == 8);
  for (MapType t : premap_types()) CHECK_FALSE(t.graph_only);
  for (MapType t : map_types()) CHECK(t.graph_only);
  // all_types is premap columns then map columns
  for (int i = 0; i < 4; ++i) {
    CHECK(all_types()[i] == premap_types()[i]);
    CHECK(all_types()[i + 4] == map_types()[i]);
  }
}
