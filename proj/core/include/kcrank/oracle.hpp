#ifndef KCRANK_ORACLE_HPP
#define KCRANK_ORACLE_HPP

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kcrank/action.hpp"
#include "kcrank/rank_formulas.hpp"
#include "kcrank/report.hpp"

namespace kcrank {

// Independent rank computation by the delocalized fixed-point character
// on the dual torus: for each group element g^t, take the fixed
// submanifold of the dual action (a saturated sublattice V_t together
// with the component count, the torsion of the relevant cokernel), and
// average the invariant part of its exterior character over the group.
// Every per-t average must itself be a nonnegative integer; a violation
// is a hard internal error, never a reportable result.  This route uses
// no prime splitting, no class-set analysis and no closed formula, so
// agreement with the other modes is evidence rather than tautology.
RankReport delocalized_rank(const ActionSpec& spec);

// One pairwise rank comparison; deltas are left minus right.
struct Divergence {
  std::string left;
  std::string right;
  mpz_class delta0;
  mpz_class delta1;
};

// Outcome of running every requested mode against the oracle.  Each
// computed non-oracle cell appears exactly once: in `agreements` (as a
// pair cell/reference) when it matches the oracle, otherwise in
// `divergences`.  `cross_prime` holds the extra same-mode comparisons
// between different primes, recorded whenever both ends already diverge
// from the oracle; it never rehomes a cell.
struct ConsistencyReport {
  ActionSpec spec;
  std::vector<RankReport> cells;  // oracle first
  std::vector<std::pair<std::string, std::string>> agreements;
  std::vector<Divergence> divergences;
  std::vector<Divergence> cross_prime;
  std::string verdict;  // "all-agree" or "divergent"
};

struct CrossCheckOptions {
  bool include_assembled = true;
  bool include_pure_p = true;  // tabulated only when m is prime
  bool include_literal = true;
  std::vector<LiteralVariant> variants = all_literal_variants();
};

ConsistencyReport cross_check(const ActionSpec& spec,
                              const CrossCheckOptions& options = {});

// Batch equivalence check between the two independent evaluations of
// the coinvariant rank, over all exterior degrees of each corpus entry.
struct LemmaEquivalenceResult {
  std::size_t matrices = 0;
  std::size_t comparisons = 0;
  std::vector<std::string> failures;  // human-readable witnesses
};
LemmaEquivalenceResult lemma_equivalence_suite(
    const std::vector<std::pair<IntMatrix, unsigned long>>& corpus);

}  // namespace kcrank

#endif  // KCRANK_ORACLE_HPP
