#ifndef KCRANK_CHARPOLY_HPP
#define KCRANK_CHARPOLY_HPP

#include <vector>

#include <gmpxx.h>

#include "kcrank/int_matrix.hpp"

namespace kcrank {

// Characteristic polynomial det(x*I - M) of a square integer matrix,
// computed division-free with the Berkowitz method (O(n^4) multiplies,
// no fraction ever appears).  The result is monic with integer
// coefficients; coeffs[k] is the coefficient of x^k, coeffs[n] = 1.
std::vector<mpz_class> char_poly(const IntMatrix& m);

// s-th elementary symmetric function of the eigenvalues of M, read off
// the characteristic polynomial: e_s = (-1)^s * coeff of x^(n-s).
// e_0 = 1; s > n yields 0.
mpz_class elementary_symmetric(const IntMatrix& m, std::size_t s);

// All of e_0 .. e_n at once (one characteristic polynomial pass); the
// callers that sum over a parity class use this form.
std::vector<mpz_class> elementary_symmetric_all(const IntMatrix& m);

}  // namespace kcrank

#endif  // KCRANK_CHARPOLY_HPP
