// Command-line front end for the one-vertex map counting library.
//
//   onevertex count --type sdg --valence 5
//   onevertex table --family maps --d-max 24 --format tsv
//   onevertex sequence --kind f --type sdg --n-max 10
//   onevertex verify --d-max 5
//   onevertex oeis-check A000898 data/oeis/b000898.txt
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "onevertex/onevertex.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

bool expensive_env_set() {
  const char* v = std::getenv("ONEVERTEX_EXPENSIVE");
  return v != nullptr && std::string(v) == "1";
}

int run_count(const std::string& code, unsigned valence) {
  std::cout << onevertex::premap_count(onevertex::parse_type_code(code),
                                       valence)
            << '\n';
  return kExitOk;
}

int run_table(const std::string& family, unsigned d_max,
              const std::string& format) {
  onevertex::TableSpec spec;
  spec.family = family == "premaps" ? onevertex::TableFamily::premaps
                                    : onevertex::TableFamily::maps;
  spec.d_max = d_max;
  if (format == "tsv") spec.format = onevertex::TableFormat::tsv;
  else if (format == "csv") spec.format = onevertex::TableFormat::csv;
  else if (format == "json") spec.format = onevertex::TableFormat::json;
  else spec.format = onevertex::TableFormat::latex;
  std::cout << onevertex::render_table(spec);
  return kExitOk;
}

int run_sequence(const std::string& kind, const std::string& code,
                 unsigned n_max) {
  using namespace onevertex;
  const bool needs_type =
      kind == "pi" || kind == "f" || kind == "F" || kind == "R";
  if (needs_type && code.empty())
    throw CLI::ValidationError("--type is required for kind '" + kind + "'");
  const MapType type = needs_type ? parse_type_code(code) : MapType{};
  // f and i are indexed from 0, the valence-indexed kinds from 1
  if (kind == "f") {
    for (unsigned n = 0; n <= n_max; ++n)
      std::cout << mirror_fixed_count(type, n) << '\n';
  } else if (kind == "i") {
    for (unsigned n = 0; n <= n_max; ++n)
      std::cout << involution_count(n) << '\n';
  } else if (n_max < 1) {
    throw CLI::ValidationError("--n-max must be >= 1 for kind '" + kind + "'");
  } else {
    for (unsigned d = 1; d <= n_max; ++d) {
      if (kind == "pi") std::cout << premap_count(type, d) << '\n';
      else if (kind == "F") std::cout << reflection_total(type, d) << '\n';
      else if (kind == "R") std::cout << rotation_total(type, d) << '\n';
      else if (kind == "p") std::cout << pregraph_count(d) << '\n';
      else std::cout << graph_count(d) << '\n';
    }
  }
  return kExitOk;
}

int run_verify(unsigned d_max, bool expensive) {
  using namespace onevertex;
  const unsigned limit = expensive ? 10 : 8;
  if (d_max < 1 || d_max > limit)
    throw CLI::ValidationError(
        "--d-max must be in 1.." + std::to_string(limit) +
        (expensive ? "" : " (10 with --expensive)"));
  unsigned failures = 0;
  unsigned comparisons = 0;
  for (const OrbitComparison& c : compare_orbit_counts(d_max)) {
    ++comparisons;
    if (c.consistent()) {
      std::cout << "OK   " << type_code(c.type) << " d=" << c.degree
                << " count=" << c.formula << '\n';
    } else {
      ++failures;
      std::cout << "FAIL " << type_code(c.type) << " d=" << c.degree
                << " burnside=" << c.burnside << " canonical=" << c.canonical
                << " formula=" << c.formula << '\n';
    }
  }
  std::string detail;
  auto report = [&](bool ok, const std::string& name) {
    ++comparisons;
    if (ok) {
      std::cout << "OK   " << name << '\n';
    } else {
      ++failures;
      std::cout << "FAIL " << name << ": " << detail << '\n';
    }
  };
  report(mirror_count_agreement(60, &detail),
         "four-way mirror-count agreement (n <= 60)");
  report(reflection_structure_check(d_max, &detail),
         "reflection fixed-count structure (even d <= " +
             std::to_string(d_max) + ")");
  report(rotation_structure_check(d_max, &detail),
         "rotation fixed-count structure (d <= " + std::to_string(d_max) +
             ")");
  if (failures == 0) {
    std::cout << "all " << comparisons << " checks passed\n";
    return kExitOk;
  }
  std::cout << failures << " of " << comparisons << " checks FAILED\n";
  return kExitVerifyFailure;
}

int run_oeis_check(const std::string& id, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kExitUsage;
  }
  const onevertex::BFile bfile = onevertex::parse_bfile(in);
  const onevertex::BFileCheckResult result = onevertex::check_bfile(id, bfile);
  std::cout << result.summary() << '\n';
  for (const onevertex::SequenceMismatch& m : result.mismatches)
    std::cout << "MISMATCH at index " << m.index << ": file has " << m.found
              << ", computed " << m.expected << '\n';
  return result.ok() ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts of non-isomorphic one-vertex maps and pre-maps"};
  app.require_subcommand(1);

  std::string type_code_arg, family = "premaps", format = "tsv", kind;
  std::string oeis_id, bfile_path;
  unsigned valence = 1, d_max = 20, n_max = 10, verify_d_max = 5;
  bool expensive = expensive_env_set();

  auto* count = app.add_subcommand("count", "one table cell");
  count->add_option("--type", type_code_arg, "3-letter type code, e.g. sdg")
      ->required();
  count->add_option("--valence", valence, "valence d >= 1")
      ->required()
      ->check(CLI::Range(1u, 1000000u));

  auto* table = app.add_subcommand("table", "full count table");
  table->add_option("--family", family, "premaps (d = 1..) or maps (even d)")
      ->check(CLI::IsMember({"premaps", "maps"}));
  table->add_option("--d-max", d_max, "largest valence")
      ->check(CLI::Range(1u, onevertex::kTableMaxValence));
  table->add_option("--format", format, "tsv, csv, json or latex")
      ->check(CLI::IsMember({"tsv", "csv", "json", "latex"}));

  auto* sequence = app.add_subcommand("sequence", "one counting sequence");
  sequence
      ->add_option("--kind", kind,
                   "pi, f, F, R (need --type), i, p or g")
      ->required()
      ->check(CLI::IsMember({"pi", "f", "F", "R", "i", "p", "g"}));
  sequence->add_option("--type", type_code_arg, "3-letter type code");
  sequence->add_option("--n-max", n_max, "last index")->required();

  auto* verify =
      app.add_subcommand("verify", "brute force vs formulas, all types");
  verify->add_option("--d-max", verify_d_max, "largest valence (<= 8, or 10)");
  verify->add_flag("--expensive", expensive,
                   "allow d-max up to 10 (also ONEVERTEX_EXPENSIVE=1)");

  auto* oeis = app.add_subcommand("oeis-check", "compare against a b-file");
  oeis->add_option("id", oeis_id, "OEIS sequence id, e.g. A000898")
      ->required();
  oeis->add_option("bfile", bfile_path, "path to the b-file")->required();

  try {
    app.parse(argc, argv);
    if (*count) return run_count(type_code_arg, valence);
    if (*table) return run_table(family, d_max, format);
    if (*sequence) return run_sequence(kind, type_code_arg, n_max);
    if (*verify) return run_verify(verify_d_max, expensive);
    return run_oeis_check(oeis_id, bfile_path);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const onevertex::bfile_parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerifyFailure;
  }
}
