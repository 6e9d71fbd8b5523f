#ifndef KCRANK_PRIME_SPLIT_HPP
#define KCRANK_PRIME_SPLIT_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kcrank/action.hpp"

namespace kcrank {

// Decomposition of a lattice action at a fixed prime factor p of m.
// Writing tau for the distinguished order-p element a^(m/p):
//   - f_basis spans the saturated fixed lattice F of tau (a direct
//     summand of rank n-l),
//   - a_on_f is the action of the generator on F in the f_basis
//     coordinates (a * f_basis = f_basis * a_on_f),
//   - a_quot and tau_quot are the induced actions on the rank-l quotient
//     lattice; tau_quot has order p with no nonzero fixed vector, so
//     1 + tau_quot + ... + tau_quot^(p-1) vanishes identically and
//     det(1 - tau_quot) = p^(l/(p-1)) counts the quotient classes.
struct PrimeSplit {
  unsigned long p = 0;
  IntMatrix tau;       // a^(m/p)
  IntMatrix f_basis;   // n x (n-l), primitive
  std::size_t l = 0;   // rank of the quotient lattice
  IntMatrix a_on_f;    // (n-l) x (n-l)
  IntMatrix a_quot;    // l x l
  IntMatrix tau_quot;  // l x l

  // Multiplicity p * (p^(l/(p-1)) - 1) / m.  Present only when l is a
  // multiple of p-1 *and* the division by m is exact; the declared m can
  // make the quotient too small for the multiplicity to exist, in which
  // case the flag "k-l-undefined" is set instead.
  std::optional<mpz_class> k_l;

  // "degenerate-split" (l = 0), "free-outside-origin-at-p" (l = n),
  // "k-l-undefined".
  std::vector<std::string> flags;

  bool has_flag(const std::string& flag) const;
};

// Splits the action at p, which must be a prime factor of m.
PrimeSplit prime_split(const ActionSpec& spec, unsigned long p);

}  // namespace kcrank

#endif  // KCRANK_PRIME_SPLIT_HPP
