// Assertion-level verification reports: every entry carries a verdict, a
// dimension ledger, and a stable citation tag naming the golden display or
// check it reproduces, so failures are audit-ready.  Text and structured
// renderings are deterministic for a fixed corpus and seed.
#pragma once

#include <string>
#include <vector>

#include "qrep/corpus.hpp"

namespace qrep {

struct Assertion {
  std::string name;    // the claim, e.g. "Ω²(M) ≅ σM"
  std::string tag;     // citation tag, e.g. "check:s6/omega2-twist"
  bool pass = false;
  std::string dims;    // dimension ledger
  std::string detail;  // what contradicted what, on failure
};

struct Report {
  std::string title;
  std::vector<Assertion> entries;

  void add(std::string name, std::string tag, bool pass, std::string dims = "",
           std::string detail = "");
  void add_checklist(const std::string& name_prefix, const std::string& tag_prefix,
                     const CheckList& cl);
  void append(const Report& other);
  bool all_pass() const;
  unsigned fail_count() const;

  // "  <name>: PASS" lines; ledgers shown when verbose or on failure.
  std::string to_text(bool verbose = false) const;
  // Deterministic structured form (schema qrep-report/1).
  std::string to_json(int indent = 2) const;
};

// Golden tables for a built-in bundle ("toys", "s6", "s8"): dimensions,
// Loewy series, permutation actions, cover shapes, and the corner
// realization's generator-matching map.  Mismatches become failed entries,
// never exceptions.
Report golden_check(const Corpus& c, const std::string& bundle);

// The full verification suites behind `verify s6` / `verify s8`: goldens,
// differential identities, chain exactness, collapsed sequences, syzygy
// periodicity, strong periodicity on both sides, and the corner splittings.
Report verify_s6(const Corpus& c);
Report verify_s8(const Corpus& c);

}  // namespace qrep
