#ifndef KCRANK_COMPOUND_HPP
#define KCRANK_COMPOUND_HPP

#include <cstddef>
#include <vector>

#include "kcrank/int_matrix.hpp"

namespace kcrank {

// All size-s subsets of {0, .., n-1} in lexicographic order.  This fixed
// enumeration is the row/column indexing contract of exterior_power.
std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n,
                                                  std::size_t s);

// Determinant of the square submatrix picked out by `rows` x `cols`.
mpz_class minor_det(const IntMatrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols);

// s-th compound matrix (the action of M on the s-th exterior power of
// the column lattice): entry (I, J) is the s x s minor with rows I and
// columns J, subsets ordered lexicographically.  The trace of the result
// equals e_s of the eigenvalues of M, and the construction is functorial:
// exterior_power(A*B, s) = exterior_power(A, s) * exterior_power(B, s).
IntMatrix exterior_power(const IntMatrix& m, std::size_t s);

}  // namespace kcrank

#endif  // KCRANK_COMPOUND_HPP
