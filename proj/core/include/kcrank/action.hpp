#ifndef KCRANK_ACTION_HPP
#define KCRANK_ACTION_HPP

#include <string>
#include <vector>

#include "kcrank/int_matrix.hpp"

namespace kcrank {

// A validated action of the cyclic group of order m on the rank-n integer
// lattice, given by the matrix of a distinguished generator.  Instances
// are only produced by validate_action, so holding an ActionSpec means:
// m >= 2 is square-free, the matrix is n x n with determinant +-1, and
// its multiplicative order divides m (the action need not be faithful;
// the exact order is recorded separately and every formula uses m as
// declared).
struct ActionSpec {
  std::size_t n = 0;                  // rank of the lattice
  unsigned long m = 0;                // declared order of the acting group
  std::vector<unsigned long> primes;  // prime factors of m, ascending
  unsigned long order = 0;            // exact multiplicative order of `a`
  IntMatrix a;                        // matrix of the generator
  std::string name;                   // optional label carried into reports
};

// Checks a raw matrix/order pair and assembles the spec.  Failures:
//   E_DIMENSION  - matrix not square
//   E_SQUAREFREE - m < 2 or m has a repeated prime factor
//   E_UNIMODULAR - determinant is not +1 or -1
//   E_ORDER      - a^m != identity
ActionSpec validate_action(const IntMatrix& a, unsigned long m,
                           const std::string& name = "");

// True when every nontrivial group element fixes only the origin of the
// lattice; it is enough to test the elements of prime order.
bool free_outside_origin(const ActionSpec& spec);

}  // namespace kcrank

#endif  // KCRANK_ACTION_HPP
