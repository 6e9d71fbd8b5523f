#ifndef KCRANK_REPORT_HPP
#define KCRANK_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace kcrank {

// Result of one rank computation.  Every number in `breakdown` is an
// actual summand: the entries labelled "k0.*" add up to rank0 and the
// "k1.*" entries to rank1, so a report can always be audited term by
// term.  Auxiliary quantities (multiplicities, fixed-point counts,
// component counts) travel in `flags` instead.
struct RankReport {
  std::string mode;     // "literal", "assembled", "pure-p" or "oracle"
  std::string variant;  // literal readings only; empty otherwise
  std::optional<unsigned long> prime;  // set by the split-based modes

  mpz_class rank0;
  mpz_class rank1;
  std::vector<std::pair<std::string, mpz_class>> breakdown;
  std::vector<std::string> flags;

  // Rendered isomorphism classes; filled by package_groups.
  std::string groups;

  const mpz_class& rank(int alpha) const { return alpha % 2 == 0 ? rank0 : rank1; }
  bool has_flag(const std::string& flag) const;
  void add_flag(const std::string& flag);

  // Stable identifier of this report inside a consistency table, e.g.
  // "oracle", "assembled:p=3", "literal:p=2:full-tuple-multiplier".
  std::string cell_key() const;
};

// "0" for rank 0, "Z" for rank 1, "Z^r" otherwise.
std::string render_free_abelian(const mpz_class& rank);

// Renders the groups line ("K_0 = Z^6, K_1 = 0") and attaches the
// justification flag.  Both class groups are finitely generated and
// torsion free, so the rank determines each group completely and no
// torsion summand can ever appear here.
RankReport& package_groups(RankReport& report);

}  // namespace kcrank

#endif  // KCRANK_REPORT_HPP
