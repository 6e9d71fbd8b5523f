#ifndef KCRANK_CATALOG_HPP
#define KCRANK_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcrank/action.hpp"
#include "kcrank/json_io.hpp"
#include "kcrank/oracle.hpp"

namespace kcrank {

// --- action documents -----------------------------------------------------
//
// {"n": 2, "m": 6, "matrix": [[1, -1], [1, 0]], "name": "hexagonal"}
//
// "name" is optional; n must match the matrix shape (E_DIMENSION) and the
// pair must pass validate_action.

ActionSpec parse_spec(const JsonValue& doc);
ActionSpec parse_spec_text(const std::string& text);
JsonValue spec_to_json(const ActionSpec& spec);

// --- catalogs -------------------------------------------------------------
//
// {"schema": 1, "entries": [{"name": ..., "spec": {...},
//   "expected": {"rank0": r, "rank1": r, "provenance": "..."},
//   "notes": "..."}]}
//
// Expected values are optional, but when present they must say where
// they come from: one of "trivial", "derived-oracle", "derived-assembly"
// (E_PROVENANCE otherwise).  Entry names must be unique.

struct ExpectedRanks {
  mpz_class rank0;
  mpz_class rank1;
  std::string provenance;
};

struct CatalogEntry {
  std::string name;
  ActionSpec spec;
  std::optional<ExpectedRanks> expected;
  std::string notes;
};

std::vector<CatalogEntry> parse_catalog_text(const std::string& text);

// --- generator families ---------------------------------------------------

struct FamilyRequest {
  // "cyclotomic": numbers = {p}, the companion matrix of the p-th
  //   cyclotomic polynomial with m = p;
  // "permutation": numbers = cycle lengths, coordinate permutation with
  //   m = lcm of the lengths (must be square-free);
  // "direct-sum": specs = summands, block diagonal with m = lcm;
  // "conjugate": specs = {base}, conjugation by a seeded random
  //   unimodular matrix (same m; the seed is recorded in the name).
  std::string family;
  std::vector<unsigned long> numbers;
  std::vector<ActionSpec> specs;
  std::uint64_t seed = 0;
};

ActionSpec generate_family(const FamilyRequest& request);

// --- reports and batch runs ----------------------------------------------

JsonValue report_to_json(const RankReport& report);
JsonValue consistency_to_json(const ConsistencyReport& report);

struct BatchOptions {
  bool strict = false;
  CrossCheckOptions check;
};

struct BatchEntryOutcome {
  std::string name;
  std::string status;  // "ok", "mismatch" or "error"
  std::vector<std::string> flags;
  std::optional<ConsistencyReport> check;
  std::string error_code;  // set when status == "error"
  std::string error_message;
};

struct BatchOutcome {
  std::vector<BatchEntryOutcome> entries;
  std::size_t matched = 0;
  std::size_t mismatched = 0;
  std::size_t errors = 0;
  // 0 all expectations met (flags may still note divergences);
  // 2 some entry failed validation;
  // 3 strict mode and a mismatch or divergence occurred.
  int exit_code = 0;
};

BatchOutcome run_batch(const std::vector<CatalogEntry>& entries,
                       const BatchOptions& options);
JsonValue batch_to_json(const BatchOutcome& outcome);

}  // namespace kcrank

#endif  // KCRANK_CATALOG_HPP
