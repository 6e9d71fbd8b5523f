#include "kcrank/smith.hpp"

#include <cstdlib>

namespace kcrank {

namespace {

// Elementary row/column operations applied in lockstep to the working
// matrix and the accumulated transform.  Row operations on D are row
// operations on U (U tracks the left transform); column operations on D
// are column operations on V.

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row a -= q * row b
void submul_row(IntMatrix& m, std::size_t a, std::size_t b,
                const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpz_submul(m(a, j).get_mpz_t(), q.get_mpz_t(), m(b, j).get_mpz_t());
  }
}

// col a -= q * col b
void submul_col(IntMatrix& m, std::size_t a, std::size_t b,
                const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_submul(m(i, a).get_mpz_t(), q.get_mpz_t(), m(i, b).get_mpz_t());
  }
}

void negate_row(IntMatrix& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

void add_row(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) += m(b, j);
}

// Smallest-absolute-value nonzero entry of the submatrix D[r.., r..];
// ties resolved by lowest row index, then lowest column index.  Returns
// false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t r, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = r; i < d.rows(); ++i) {
    for (std::size_t j = r; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      mpz_class a = abs(d(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SnfDecomposition snf;
  snf.u = IntMatrix::identity(rows);
  snf.v = IntMatrix::identity(cols);
  snf.d = m;
  IntMatrix& d = snf.d;

  const std::size_t diag = rows < cols ? rows : cols;
  for (std::size_t r = 0; r < diag; ++r) {
    std::size_t pi, pj;
    if (!find_pivot(d, r, pi, pj)) break;  // rest of the matrix is zero
    swap_rows(d, r, pi);
    swap_rows(snf.u, r, pi);
    swap_cols(d, r, pj);
    swap_cols(snf.v, r, pj);

    // Clear row r and column r.  Truncated division leaves residues
    // strictly smaller than the pivot, so promoting a nonzero residue to
    // the pivot position makes the pivot shrink: this terminates.
    for (;;) {
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (d(i, r) == 0) continue;
        mpz_class q = d(i, r) / d(r, r);  // truncated quotient
        submul_row(d, i, r, q);
        submul_row(snf.u, i, r, q);
        if (d(i, r) != 0) {
          swap_rows(d, r, i);
          swap_rows(snf.u, r, i);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      for (std::size_t j = r + 1; j < cols; ++j) {
        if (d(r, j) == 0) continue;
        mpz_class q = d(r, j) / d(r, r);
        submul_col(d, j, r, q);
        submul_col(snf.v, j, r, q);
        if (d(r, j) != 0) {
          swap_cols(d, r, j);
          swap_cols(snf.v, r, j);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      // Row and column are clear.  Enforce the divisibility chain: the
      // pivot must divide every entry of the remaining submatrix.
      bool divides_all = true;
      for (std::size_t i = r + 1; i < rows && divides_all; ++i) {
        for (std::size_t j = r + 1; j < cols; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(r, r).get_mpz_t())) {
            add_row(d, r, i);
            add_row(snf.u, r, i);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (d(r, r) < 0) {
      negate_row(d, r);
      negate_row(snf.u, r);
    }
  }

  snf.divisors.resize(diag);
  for (std::size_t i = 0; i < diag; ++i) snf.divisors[i] = d(i, i);
  return snf;
}

IntMatrix saturated_kernel(const IntMatrix& m) {
  SnfDecomposition snf = smith_normal_form(m);
  std::size_t rank = 0;
  for (const auto& div : snf.divisors) {
    if (div != 0) ++rank;
  }
  // M * V has columns U^{-1} * D * e_j; the columns of V whose divisor is
  // zero (or which lie beyond the diagonal) are annihilated by M, and
  // being part of the unimodular V they form a primitive basis.
  const std::size_t n = m.cols();
  IntMatrix basis(n, n - rank);
  for (std::size_t j = rank; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      basis(i, j - rank) = snf.v(i, j);
    }
  }
  return basis;
}

BasisCompletion complete_basis(const IntMatrix& primitive_basis) {
  SnfDecomposition snf = smith_normal_form(primitive_basis);
  for (const auto& div : snf.divisors) {
    if (div != 1) {
      throw internal_error("complete_basis requires a primitive basis");
    }
  }
  // U * B * V = [I_f; 0], so B * V equals the first f columns of U^{-1}:
  // U^{-1} is a completion whose leading columns span the sublattice.
  BasisCompletion out;
  out.w = unimodular_inverse(snf.u);
  out.w_inv = snf.u;
  return out;
}

SplitBlocks split_endomorphism(const IntMatrix& endo,
                               const BasisCompletion& completion,
                               std::size_t f) {
  const std::size_t n = endo.rows();
  IntMatrix conj = completion.w_inv * endo * completion.w;
  for (std::size_t i = f; i < n; ++i) {
    for (std::size_t j = 0; j < f; ++j) {
      if (conj(i, j) != 0) {
        throw internal_error(
            "endomorphism does not preserve the sublattice");
      }
    }
  }
  SplitBlocks blocks;
  blocks.on_sub = conj.block(0, 0, f, f);
  blocks.on_quot = conj.block(f, f, n - f, n - f);
  return blocks;
}

}  // namespace kcrank
