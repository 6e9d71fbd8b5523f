#ifndef KCRANK_RANK_FORMULAS_HPP
#define KCRANK_RANK_FORMULAS_HPP

#include <vector>

#include <gmpxx.h>

#include "kcrank/action.hpp"
#include "kcrank/prime_split.hpp"
#include "kcrank/report.hpp"

namespace kcrank {

// Rank of the coinvariants of the s-th exterior power of the lattice
// under the cyclic group generated by M (which must satisfy M^d = 1):
//     (1/d) * sum_{t=1..d} e_s(eigenvalues of M^t),
// evaluated exactly through characteristic polynomials.  Throws
// E_NOT_ORDER_D when M^d != 1 and E_NONINTEGRAL if the averaged sum
// fails to be an integer (which the order condition rules out).
mpz_class lemma_rank(const IntMatrix& m, unsigned long d, std::size_t s);

// All s at once; index s of the result is lemma_rank(m, d, s).
std::vector<mpz_class> lemma_rank_all(const IntMatrix& m, unsigned long d);

// Independent evaluation of the same rank as the rank of the averaged
// projector (1/d) * sum_t Lambda^s(M^t) acting on the exterior power,
// computed from explicit compound matrices and fraction-free elimination
// (no characteristic polynomial involved).
std::size_t coinvariant_rank_kernel(const IntMatrix& m, unsigned long d,
                                    std::size_t s);

// The four defensible readings of the closed rank formula: the first
// factor may average over the full eigenvalue tuple of a^(p t) or only
// the part restricted to the fixed lattice F, and the multiplicity k_l
// may scale the factor or exponentiate it.
enum class LiteralVariant {
  full_tuple_multiplier,
  full_tuple_exponent,
  restricted_tuple_multiplier,
  restricted_tuple_exponent,
};
const char* variant_name(LiteralVariant variant);
const std::vector<LiteralVariant>& all_literal_variants();

// Evaluates the closed formula exactly as printed, under the chosen
// reading, for both parities.  Requires the multiplicity k_l to exist
// for the split at p (E_KL_UNDEFINED otherwise).  The result is the
// formula's value, not a verified rank: every literal report carries a
// flag saying so, and cross_check measures it against the oracle.
RankReport literal_rank(const ActionSpec& spec, unsigned long p,
                        LiteralVariant variant);

// K-theory ranks of the prime-order building block Z^l x| Z/p attached
// to the split (quotient lattice, quotient action):
//   rank0 = |classes| * (p-1) + sum_{s even} lemma_rank(tau_quot, p, s)
//   rank1 =                     sum_{s odd}  lemma_rank(tau_quot, p, s)
// where |classes| = det(1 - tau_quot) = p^(l/(p-1)) counts the finite
// subgroup classes, each contributing the reduced representation rank
// p-1.  This is the group the exact-sequence route computes directly.
RankReport pure_p_ranks(const PrimeSplit& split);

// The pure-p ranks lifted through the torus factor B(F) of rank n-l
// (tensor with the K-theory of an (n-l)-torus, which contributes
// 2^(n-l-1) in each parity when n > l).  For l = n this is
// pure_p_ranks unchanged; it is the exact-sequence route's answer for
// the full group and the value cross_check tabulates under "pure-p".
RankReport pure_p_full_ranks(const ActionSpec& spec, const PrimeSplit& split);

// Step-by-step evaluation of the proof pipeline at p: the class term
// (p-1 per fixed class, averaged over the quotient group action on the
// classes, weighted by the exterior character of a on F) plus the
// lattice coinvariants term.  The class permutation module is computed,
// not assumed free: when its character differs from the free model
// k_l * (regular representation), the report says so in a flag.
RankReport assembled_rank(const ActionSpec& spec, unsigned long p);

}  // namespace kcrank

#endif  // KCRANK_RANK_FORMULAS_HPP
