#ifndef KCRANK_RAT_MATRIX_HPP
#define KCRANK_RAT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "kcrank/int_matrix.hpp"

namespace kcrank {

// Dense matrix over the rationals.  Entries are kept canonical (lowest
// terms, positive denominator), which mpq arithmetic maintains for us.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  // Promotes an integer matrix, optionally scaling every entry by
  // 1/denominator (used for averaged projectors).
  explicit RatMatrix(const IntMatrix& m, const mpz_class& denominator = 1);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpq_class& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const mpq_class& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const RatMatrix& other) const = default;

  RatMatrix operator*(const RatMatrix& other) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpq_class> data_;
};

// Rank over the rationals.  Each row is scaled by the lcm of its
// denominators (rank preserving) and the resulting integer matrix goes
// through fraction-free elimination, so no rounding can occur anywhere.
std::size_t rational_rank(const RatMatrix& m);

}  // namespace kcrank

#endif  // KCRANK_RAT_MATRIX_HPP
