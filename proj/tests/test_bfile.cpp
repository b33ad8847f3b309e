#include <catch2/catch_amalgamated.hpp>

#include "onevertex/bfile.hpp"

using namespace onevertex;

TEST_CASE("b-file parsing") {
  const BFile b = parse_bfile("# A000898\n0 1\n1 2\n2 6\n");
  REQUIRE(b.entries.size() == 3);
  CHECK(b.entries[0] == BFileEntry{0, Count(1)});
  CHECK(b.entries[1] == BFileEntry{1, Count(2)});
  CHECK(b.entries[2] == BFileEntry{2, Count(6)});
}

TEST_CASE("b-file oddities") {
  CHECK(parse_bfile("").entries.empty());
  CHECK(parse_bfile("# only a comment\n\n   \n").entries.empty());
  // inline comments and negative-looking indices are fine
  const BFile b = parse_bfile("-1 7 # starts below zero\n0 9\n");
  REQUIRE(b.entries.size() == 2);
  CHECK(b.entries[0].index == -1);
  // huge values do not truncate
  const BFile big = parse_bfile("0 110531845060209836110531845060209836\n");
  CHECK(big.entries[0].value == Count("110531845060209836110531845060209836"));
}

TEST_CASE("b-file errors name the line") {
  CHECK_THROWS_AS(parse_bfile("0 1\n0 2\n"), bfile_parse_error);
  CHECK_THROWS_AS(parse_bfile("1 1\n0 2\n"), bfile_parse_error);
  CHECK_THROWS_WITH(parse_bfile("0 1\nx y\n"),
                    Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THROWS_AS(parse_bfile("x y\n"), bfile_parse_error);
  CHECK_THROWS_AS(parse_bfile("0\n"), bfile_parse_error);
  CHECK_THROWS_AS(parse_bfile("0 1 2\n"), bfile_parse_error);
  CHECK_THROWS_AS(parse_bfile("0 -5\n"), bfile_parse_error);
  CHECK_THROWS_AS(parse_bfile("1x 2\n"), bfile_parse_error);
}

TEST_CASE("b-file round trip") {
  BFile b;
  Count v = 1;
  for (long long i = -2; i <= 40; ++i) {
    b.entries.push_back({i, v});
    v = v * 1000003 + 17;
  }
  CHECK(parse_bfile(print_bfile(b)) == b);
}
