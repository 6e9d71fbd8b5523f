#include "kcrank/int_matrix.hpp"

#include <ostream>
#include <sstream>

namespace kcrank {

namespace {

void require_same_shape(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw kcrank_error(errc::dimension, "matrix shapes differ");
  }
}

void require_square(const IntMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw kcrank_error(errc::dimension, std::string(what) +
                                             " requires a square matrix");
  }
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(0) {
  for (const auto& row : rows) {
    if (cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) {
      throw kcrank_error(errc::dimension, "ragged initializer rows");
    }
  }
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  require_same_shape(*this, other);
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = data_[i] + other.data_[i];
  }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  require_same_shape(*this, other);
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = data_[i] - other.data_[i];
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) {
    throw kcrank_error(errc::dimension, "matrix product shape mismatch");
  }
  IntMatrix out(rows_, other.cols_);
  mpz_class acc;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        // out(i,j) += aik * other(k,j) without temporaries.
        mpz_addmul(out(i, j).get_mpz_t(), aik.get_mpz_t(),
                   other(k, j).get_mpz_t());
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

IntMatrix IntMatrix::operator*(const mpz_class& scalar) const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = data_[i] * scalar;
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

mpz_class IntMatrix::trace() const {
  require_square(*this, "trace");
  mpz_class t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) const {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(i, j) = (*this)(rows[i], cols[j]);
    }
  }
  return out;
}

IntMatrix IntMatrix::block(std::size_t row0, std::size_t col0,
                           std::size_t rows, std::size_t cols) const {
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out(i, j) = (*this)(row0 + i, col0 + j);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

IntMatrix matrix_power(const IntMatrix& m, unsigned long exponent) {
  require_square(m, "matrix_power");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

unsigned long multiplicative_order(const IntMatrix& m, unsigned long bound) {
  require_square(m, "multiplicative_order");
  IntMatrix power = IntMatrix::identity(m.rows());
  for (unsigned long k = 1; k <= bound; ++k) {
    power = power * m;
    if (power.is_identity()) return k;
  }
  std::ostringstream msg;
  msg << "no multiplicative order within bound " << bound;
  throw kcrank_error(errc::order, msg.str());
}

// Bareiss elimination on a working copy.  Returns the rank; when `det` is
// non-null the matrix must be square and on full rank *det receives the
// exact determinant (0 otherwise).  Row swaps flip the determinant sign;
// column pivot search keeps the reduction rank-correct for singular input.
namespace {

std::size_t bareiss(IntMatrix work, mpz_class* det) {
  const std::size_t rows = work.rows();
  const std::size_t cols = work.cols();
  mpz_class prev_pivot = 1;
  int sign = 1;
  std::size_t rank = 0;
  std::size_t lead = 0;  // current pivot column
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    // Find a nonzero pivot at or below (r, lead), scanning columns left to
    // right so the elimination order is deterministic.
    std::size_t pr = rows, pc = cols;
    for (std::size_t j = lead; j < cols && pr == rows; ++j) {
      for (std::size_t i = r; i < rows; ++i) {
        if (work(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == rows) break;  // remaining block is zero
    if (pr != r) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::swap(work(r, j), work(pr, j));
      }
      sign = -sign;
    }
    const mpz_class pivot = work(r, pc);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = pc + 1; j < cols; ++j) {
        work(i, j) = work(i, j) * pivot - work(i, pc) * work(r, j);
        // Exact by the Bareiss identity: prev_pivot divides the update.
        mpz_divexact(work(i, j).get_mpz_t(), work(i, j).get_mpz_t(),
                     prev_pivot.get_mpz_t());
      }
      work(i, pc) = 0;
    }
    prev_pivot = pivot;
    ++rank;
    lead = pc + 1;
  }
  if (det) {
    *det = (rank == rows && rank == cols) ? mpz_class(sign * prev_pivot)
                                          : mpz_class(0);
  }
  return rank;
}

}  // namespace

mpz_class determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  if (m.rows() == 0) return 1;
  mpz_class det;
  bareiss(m, &det);
  return det;
}

std::size_t integer_matrix_rank(const IntMatrix& m) {
  return bareiss(m, nullptr);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  require_square(m, "unimodular_inverse");
  const std::size_t n = m.rows();
  const mpz_class det = determinant(m);
  if (det != 1 && det != -1) {
    throw kcrank_error(errc::unimodular,
                       "matrix is not invertible over the integers");
  }
  // Gauss-Jordan over the integers is possible here because every pivot of
  // a unimodular matrix can be driven to +-1, but plain cofactor expansion
  // via Bareiss minors is simpler and fast at the sizes we use:
  // inverse = adjugate / det with det = +-1.
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> rows;
    rows.reserve(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i) rows.push_back(k);
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> cols;
      cols.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) cols.push_back(k);
      }
      mpz_class cof = determinant(m.submatrix(rows, cols));
      if ((i + j) % 2 == 1) cof = -cof;
      // adj(m)(j,i) = cofactor(i,j); divide by det (= +-1).
      inv(j, i) = det == 1 ? cof : mpz_class(-cof);
    }
  }
  return inv;
}

}  // namespace kcrank
