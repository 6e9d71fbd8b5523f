#ifndef KCRANK_INT_MATRIX_HPP
#define KCRANK_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include <gmpxx.h>

#include "kcrank/errors.hpp"

namespace kcrank {

// Dense matrix over the integers with arbitrary-precision entries.
// Row-major storage; all arithmetic is exact.  Matrices with zero rows
// and/or zero columns are legal values everywhere (the unique 0x0 matrix
// acts as the identity of the empty lattice).
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const mpz_class& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& other) const = default;

  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator-() const;
  IntMatrix operator*(const mpz_class& scalar) const;

  IntMatrix transposed() const;
  mpz_class trace() const;
  bool is_zero() const;
  bool is_identity() const;

  // Keeps rows whose index appears in `rows` and columns whose index
  // appears in `cols`, in the order given.
  IntMatrix submatrix(const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) const;
  IntMatrix block(std::size_t row0, std::size_t col0, std::size_t rows,
                  std::size_t cols) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpz_class> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// M^exponent for exponent >= 0 by binary powering; M must be square.
IntMatrix matrix_power(const IntMatrix& m, unsigned long exponent);

// Smallest k in [1, bound] with M^k = I.  Throws errc::order when no such
// k exists within the bound (in particular when M has infinite order).
unsigned long multiplicative_order(const IntMatrix& m, unsigned long bound);

// Exact determinant by Bareiss fraction-free elimination, O(n^3) exact
// divisions.  det of the 0x0 matrix is 1.
mpz_class determinant(const IntMatrix& m);

// Rank over the rationals of an integer matrix (Bareiss elimination with
// row/column pivot search; no fractions are ever formed).
std::size_t integer_matrix_rank(const IntMatrix& m);

// Inverse of a matrix that is invertible over the integers (determinant
// +1 or -1).  Throws errc::unimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace kcrank

#endif  // KCRANK_INT_MATRIX_HPP
