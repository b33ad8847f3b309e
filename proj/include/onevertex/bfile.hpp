#pragma once

// OEIS b-file format: one "index value" pair per line, '#' starts a
// comment, blank lines are ignored, indices strictly increasing.

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "onevertex/arith.hpp"

namespace onevertex {

struct BFileEntry {
  long long index = 0;
  Count value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

struct BFile {
  std::vector<BFileEntry> entries;

  friend bool operator==(const BFile&, const BFile&) = default;
};

struct bfile_parse_error : std::runtime_error {
  long long line = 0;
  bfile_parse_error(long long line_, const std::string& what_)
      : std::runtime_error("b-file line " + std::to_string(line_) + ": " +
                           what_),
        line(line_) {}
};

inline BFile parse_bfile(std::istream& in) {
  BFile out;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string index_tok, value_tok, extra;
    if (!(fields >> index_tok)) continue;  // blank or comment-only
    if (!(fields >> value_tok))
      throw bfile_parse_error(line_no, "expected 'index value'");
    if (fields >> extra)
      throw bfile_parse_error(line_no, "trailing token '" + extra + "'");
    BFileEntry entry;
    try {
      std::size_t consumed = 0;
      entry.index = std::stoll(index_tok, &consumed);
      if (consumed != index_tok.size()) throw std::invalid_argument(index_tok);
      entry.value = Count(value_tok);
    } catch (const std::exception&) {
      throw bfile_parse_error(line_no, "non-integer token in '" + index_tok +
                                           " " + value_tok + "'");
    }
    if (entry.value < 0)
      throw bfile_parse_error(line_no, "negative value");
    if (!out.entries.empty() && entry.index <= out.entries.back().index)
      throw bfile_parse_error(line_no, "index " + index_tok +
                                           " not strictly increasing");
    out.entries.push_back(std::move(entry));
  }
  return out;
}

inline BFile parse_bfile(const std::string& text) {
  std::istringstream in(text);
  return parse_bfile(in);
}

inline std::string print_bfile(const BFile& b) {
  std::ostringstream out;
  for (const BFileEntry& e : b.entries)
    out << e.index << ' ' << e.value << '\n';
  return out.str();
}

}  // namespace onevertex
