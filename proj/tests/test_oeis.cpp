#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "onevertex/oeis.hpp"

using namespace onevertex;

namespace {

BFile load(const std::string& name) {
  std::ifstream in(std::string(ONEVERTEX_DATA_DIR "/oeis/") + name);
  REQUIRE(in.good());
  return parse_bfile(in);
}

}  // namespace

TEST_CASE("sequence values") {
  CHECK(sequence_value("A000898", 4) == 76);
  CHECK(sequence_value("A047974", 3) == 7);
  CHECK(sequence_value("A052714", 3) == 48);
  CHECK(sequence_value("A054499", 3) == 5);  // valence 6
  CHECK_THROWS_AS(sequence_value("A054499", 0), std::domain_error);
  CHECK_THROWS_AS(sequence_value("A000001", 0), std::domain_error);
  CHECK_THROWS_WITH(sequence_value("A000001", 0),
                    Catch::Matchers::ContainsSubstring("unmapped sequence"));
}

TEST_CASE("vendored b-files all match") {
  const std::pair<const char*, const char*> files[] = {
      {"A000898", "b000898.txt"}, {"A115329", "b115329.txt"},
      {"A047974", "b047974.txt"}, {"A052714", "b052714.txt"},
      {"A052734", "b052734.txt"}, {"A054499", "b054499.txt"},
  };
  for (const auto& [id, name] : files) {
    const BFileCheckResult r = check_bfile(id, load(name));
    INFO(r.summary());
    CHECK(r.ok());
    CHECK(r.checked >= 10);
  }
}

TEST_CASE("entries below the supported range are skipped and reported") {
  const BFileCheckResult r = check_bfile("A054499", load("b054499.txt"));
  CHECK(r.skipped_below_range == 1);  // the valence-0 entry
  CHECK(r.first_checked_index == 1);
  CHECK_THAT(r.summary(), Catch::Matchers::ContainsSubstring("skipped"));
}

TEST_CASE("mismatches are located") {
  BFile doctored = load("b000898.txt");
  doctored.entries[3].value += 1;
  const BFileCheckResult r = check_bfile("A000898", doctored);
  CHECK_FALSE(r.ok());
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0].index == doctored.entries[3].index);
  CHECK(r.mismatches[0].found == doctored.entries[3].value);
}

TEST_CASE("unknown id is rejected") {
  CHECK_THROWS_AS(check_bfile("A000001", BFile{}), std::domain_error);
}
