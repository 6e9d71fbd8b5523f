#include "kcrank/rat_matrix.hpp"

namespace kcrank {

RatMatrix::RatMatrix(const IntMatrix& m, const mpz_class& denominator)
    : rows_(m.rows()), cols_(m.cols()), data_(m.rows() * m.cols()) {
  if (denominator == 0) {
    throw kcrank_error(errc::dimension, "zero denominator");
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      mpq_class q(m(i, j), denominator);
      q.canonicalize();
      (*this)(i, j) = q;
    }
  }
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) {
    throw kcrank_error(errc::dimension, "matrix product shape mismatch");
  }
  RatMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out(i, j) += aik * other(k, j);
      }
    }
  }
  return out;
}

std::size_t rational_rank(const RatMatrix& m) {
  IntMatrix scaled(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class den = m(i, j).get_den();
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m(i, j);
      scaled(i, j) = q.get_num() * (scale / q.get_den());
    }
  }
  return integer_matrix_rank(scaled);
}

}  // namespace kcrank
