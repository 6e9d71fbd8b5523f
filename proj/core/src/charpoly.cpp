#include "kcrank/charpoly.hpp"

namespace kcrank {

// Berkowitz iteration.  Let Q_r hold the characteristic polynomial of the
// leading r x r principal submatrix, stored leading-coefficient-first.
// Q_r is obtained from Q_{r-1} by multiplying with a lower-triangular
// Toeplitz matrix whose first column is
//   [1, -a_rr, -(R S), -(R B S), -(R B^2 S), ...]
// where B is the leading (r-1) x (r-1) block, R the row to its left of
// a_rr and S the column above it.  No division occurs anywhere.
std::vector<mpz_class> char_poly(const IntMatrix& m) {
  if (!m.is_square()) {
    throw kcrank_error(errc::dimension, "char_poly requires a square matrix");
  }
  const std::size_t n = m.rows();
  std::vector<mpz_class> q{1};  // char poly of the 0x0 block
  for (std::size_t r = 1; r <= n; ++r) {
    // Toeplitz column t_0 .. t_r.
    std::vector<mpz_class> t(r + 1);
    t[0] = 1;
    t[1] = -m(r - 1, r - 1);
    if (r >= 2) {
      // w starts as S and is advanced by w := B w; t_{k+2} = -(R . w).
      std::vector<mpz_class> w(r - 1);
      for (std::size_t i = 0; i < r - 1; ++i) w[i] = m(i, r - 1);
      for (std::size_t k = 0; k + 2 <= r; ++k) {
        mpz_class dot = 0;
        for (std::size_t i = 0; i < r - 1; ++i) {
          mpz_addmul(dot.get_mpz_t(), m(r - 1, i).get_mpz_t(),
                     w[i].get_mpz_t());
        }
        t[k + 2] = -dot;
        if (k + 3 <= r) {
          std::vector<mpz_class> next(r - 1);
          for (std::size_t i = 0; i < r - 1; ++i) {
            for (std::size_t j = 0; j < r - 1; ++j) {
              mpz_addmul(next[i].get_mpz_t(), m(i, j).get_mpz_t(),
                         w[j].get_mpz_t());
            }
          }
          w.swap(next);
        }
      }
    }
    // q := Toeplitz(t) * q  (lower-triangular convolution).
    std::vector<mpz_class> next(r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
      for (std::size_t k = 0; k <= i && k < q.size(); ++k) {
        mpz_addmul(next[i].get_mpz_t(), t[i - k].get_mpz_t(),
                   q[k].get_mpz_t());
      }
    }
    q.swap(next);
  }
  // q[i] is the coefficient of x^(n-i); flip to coefficient-of-x^k order.
  std::vector<mpz_class> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) coeffs[n - i] = q[i];
  return coeffs;
}

mpz_class elementary_symmetric(const IntMatrix& m, std::size_t s) {
  const std::size_t n = m.rows();
  if (s > n) return 0;
  std::vector<mpz_class> coeffs = char_poly(m);
  mpz_class e = coeffs[n - s];
  if (s % 2 == 1) e = -e;
  return e;
}

std::vector<mpz_class> elementary_symmetric_all(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<mpz_class> coeffs = char_poly(m);
  std::vector<mpz_class> e(n + 1);
  for (std::size_t s = 0; s <= n; ++s) {
    e[s] = (s % 2 == 0) ? coeffs[n - s] : mpz_class(-coeffs[n - s]);
  }
  return e;
}

}  // namespace kcrank
