#pragma once

// Mapping between the OEIS IDs this library's sequences carry and the
// internal counting functions, plus b-file verification against them.
//
//   A000898  mirror-fixed counts, plain pre-graph type ("sdg"), n >= 0
//   A115329  mirror-fixed counts, directed pre-graph type ("sDg"), n >= 0
//   A047974  mirror-fixed counts, plain graph type ("sdG"), n >= 0
//   A052714  even-index mirror-fixed counts, "sDG": a(n) = f(2n-2), n >= 1
//   A052734  even-index mirror-fixed counts, "SDG": a(n) = f(2n-2), n >= 1
//   A054499  map counts of even valence, "sdG": a(n) = count(2n), n >= 1
//
// b-file entries below a sequence's supported range (e.g. the OEIS value at
// n = 0 of A054499, where valence 0 is not defined here) are skipped and
// reported rather than checked.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "onevertex/bfile.hpp"
#include "onevertex/formulas.hpp"
#include "onevertex/types.hpp"

namespace onevertex {

inline const std::vector<std::string>& known_sequence_ids() {
  static const std::vector<std::string> ids = {"A000898", "A047974", "A052714",
                                               "A052734", "A054499", "A115329"};
  return ids;
}

// First index at which the sequence is computable here.
inline long long sequence_first_index(const std::string& id) {
  if (id == "A000898" || id == "A115329" || id == "A047974") return 0;
  if (id == "A052714" || id == "A052734" || id == "A054499") return 1;
  throw std::domain_error("unmapped sequence: " + id);
}

inline Count sequence_value(const std::string& id, long long n) {
  if (n < sequence_first_index(id))
    throw std::domain_error("sequence " + id + " not defined at index " +
                            std::to_string(n));
  const unsigned un = static_cast<unsigned>(n);
  if (id == "A000898") return mirror_fixed_count(parse_type_code("sdg"), un);
  if (id == "A115329") return mirror_fixed_count(parse_type_code("sDg"), un);
  if (id == "A047974") return mirror_fixed_count(parse_type_code("sdG"), un);
  if (id == "A052714")
    return mirror_fixed_count(parse_type_code("sDG"), 2 * un - 2);
  if (id == "A052734")
    return mirror_fixed_count(parse_type_code("SDG"), 2 * un - 2);
  if (id == "A054499") return premap_count(parse_type_code("sdG"), 2 * un);
  throw std::domain_error("unmapped sequence: " + id);
}

struct SequenceMismatch {
  long long index = 0;
  Count expected;  // computed here
  Count found;     // from the b-file
};

struct BFileCheckResult {
  std::string id;
  std::size_t checked = 0;
  std::size_t skipped_below_range = 0;
  long long first_checked_index = 0;
  std::vector<SequenceMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }

  std::string summary() const {
    std::ostringstream os;
    os << id << ": " << (checked - mismatches.size()) << "/" << checked
       << " match";
    if (checked > 0) os << " (from index " << first_checked_index << ")";
    if (skipped_below_range > 0)
      os << ", " << skipped_below_range
         << " entry(ies) below supported range skipped";
    return os.str();
  }
};

inline BFileCheckResult check_bfile(const std::string& id, const BFile& b) {
  BFileCheckResult result;
  result.id = id;
  const long long first = sequence_first_index(id);  // throws on unknown id
  bool any_checked = false;
  for (const BFileEntry& e : b.entries) {
    if (e.index < first) {
      ++result.skipped_below_range;
      continue;
    }
    const Count expected = sequence_value(id, e.index);
    if (!any_checked) {
      result.first_checked_index = e.index;
      any_checked = true;
    }
    ++result.checked;
    if (expected != e.value)
      result.mismatches.push_back({e.index, expected, e.value});
  }
  return result;
}

}  // namespace onevertex
