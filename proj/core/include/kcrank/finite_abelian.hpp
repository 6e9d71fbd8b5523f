#ifndef KCRANK_FINITE_ABELIAN_HPP
#define KCRANK_FINITE_ABELIAN_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "kcrank/int_matrix.hpp"

namespace kcrank {

// Cokernel of an integer matrix M, i.e. Z^rows / M Z^cols, presented in
// Smith coordinates: a torsion part (cyclic factors of the listed orders,
// a divisibility chain with every entry >= 2) plus a free part.
struct FiniteAbelianPresentation {
  std::vector<mpz_class> divisors;  // nontrivial torsion orders
  mpz_class order = 1;              // product of the divisors
  std::size_t free_rank = 0;        // rank of the free summand
  IntMatrix to_coords;              // U: ambient -> Smith coordinates
  IntMatrix from_coords;            // U^{-1}
  // Rows of U that carry the torsion coordinates, then the free ones.
  std::vector<std::size_t> torsion_positions;
  std::vector<std::size_t> free_positions;
};

FiniteAbelianPresentation coker_presentation(const IntMatrix& m);

// An endomorphism of the torsion part of a cokernel, in the Smith
// coordinates of its presentation.  Row i of the matrix is only
// meaningful modulo divisors[i] and is kept reduced to [0, divisors[i]).
struct InducedEndomorphism {
  std::vector<mpz_class> divisors;
  IntMatrix matrix;
};

// Endomorphism of coker(M) induced by B, restricted to the torsion
// subgroup (which is characteristic, so the restriction is automatic).
// B must commute with M: E_NONCOMMUTING otherwise.
InducedEndomorphism induce_on_coker(const IntMatrix& m, const IntMatrix& b);

// Number of elements of the torsion group fixed by the j-th power of the
// endomorphism.  Always >= 1 (the zero class is fixed).
mpz_class fixed_count(const InducedEndomorphism& endo, unsigned long j);

}  // namespace kcrank

#endif  // KCRANK_FINITE_ABELIAN_HPP
