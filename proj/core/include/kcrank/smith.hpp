#ifndef KCRANK_SMITH_HPP
#define KCRANK_SMITH_HPP

#include <vector>

#include <gmpxx.h>

#include "kcrank/int_matrix.hpp"

namespace kcrank {

// Smith normal form U * M * V = D of an integer matrix.  U and V are
// invertible over the integers, D is diagonal with nonnegative entries
// d_1 | d_2 | ... and zeros trailing.  `divisors` lists the full diagonal
// of D (length min(rows, cols)), zeros included.
struct SnfDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::vector<mpz_class> divisors;
};

// Deterministic Smith reduction: each round selects the nonzero entry of
// the working submatrix with the smallest absolute value, ties broken by
// lowest row index then lowest column index, and clears its row and
// column by exact Euclidean steps.  Identical input always yields
// identical U, D, V.
SnfDecomposition smith_normal_form(const IntMatrix& m);

// Basis of the saturated kernel {v : M v = 0} as the columns of an
// n x f matrix, f = n - rank(M).  The basis is primitive: it extends to
// a basis of the ambient lattice (the span is a direct summand), so the
// returned matrix has all Smith divisors equal to 1.
IntMatrix saturated_kernel(const IntMatrix& m);

// Extension of a primitive basis (n x f, all Smith divisors 1) to a basis
// of the whole lattice.  The first f columns of w span the same sublattice
// as the input; w_inv * w = identity.
struct BasisCompletion {
  IntMatrix w;      // n x n, invertible over the integers
  IntMatrix w_inv;  // w_inv * x = coordinates of x in the completed basis
};
BasisCompletion complete_basis(const IntMatrix& primitive_basis);

// Diagonal blocks of an endomorphism that preserves the sublattice
// spanned by the first f columns of the completion: on_sub is its action
// there, on_quot the induced action on the quotient lattice.  Throws an
// internal error when the sublattice is not actually preserved.
struct SplitBlocks {
  IntMatrix on_sub;
  IntMatrix on_quot;
};
SplitBlocks split_endomorphism(const IntMatrix& endo,
                               const BasisCompletion& completion,
                               std::size_t f);

}  // namespace kcrank

#endif  // KCRANK_SMITH_HPP
