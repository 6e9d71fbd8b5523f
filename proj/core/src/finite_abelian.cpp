#include "kcrank/finite_abelian.hpp"

#include "kcrank/smith.hpp"

namespace kcrank {

FiniteAbelianPresentation coker_presentation(const IntMatrix& m) {
  SnfDecomposition snf = smith_normal_form(m);
  FiniteAbelianPresentation pres;
  pres.to_coords = std::move(snf.u);
  pres.from_coords = unimodular_inverse(pres.to_coords);
  const std::size_t rows = m.rows();
  for (std::size_t i = 0; i < rows; ++i) {
    const mpz_class& d = i < snf.divisors.size() ? snf.divisors[i]
                                                 : mpz_class(0);
    if (d == 0) {
      pres.free_positions.push_back(i);
    } else if (d >= 2) {
      pres.torsion_positions.push_back(i);
      pres.divisors.push_back(d);
      pres.order *= d;
    }
    // d == 1 contributes nothing to the cokernel.
  }
  pres.free_rank = pres.free_positions.size();
  return pres;
}

namespace {

// Reduce row i of the matrix modulo divisors[i] into [0, divisors[i]).
void reduce_rows(IntMatrix& m, const std::vector<mpz_class>& divisors) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(),
                 divisors[i].get_mpz_t());
    }
  }
}

}  // namespace

InducedEndomorphism induce_on_coker(const IntMatrix& m, const IntMatrix& b) {
  if (!m.is_square() || !b.is_square() || m.rows() != b.rows()) {
    throw kcrank_error(errc::dimension,
                       "induce_on_coker requires square matrices of equal "
                       "size");
  }
  if (m * b != b * m) {
    throw kcrank_error(errc::noncommuting,
                       "endomorphism does not commute with the "
                       "presentation matrix");
  }

  FiniteAbelianPresentation pres = coker_presentation(m);
  // B in Smith coordinates of the cokernel.
  IntMatrix c = pres.to_coords * b * pres.from_coords;

  const std::size_t k = pres.torsion_positions.size();
  InducedEndomorphism endo;
  endo.divisors = pres.divisors;
  endo.matrix = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      endo.matrix(i, j) = c(pres.torsion_positions[i],
                            pres.torsion_positions[j]);
    }
  }
  reduce_rows(endo.matrix, endo.divisors);

  // Sanity of the restriction: a torsion class cannot acquire a free
  // component, and the matrix must be compatible with the row orders
  // (divisors[i] | entry * divisors[j]).  Both are automatic for a
  // commuting B; failure means the reduction above is broken.
  for (std::size_t fp : pres.free_positions) {
    for (std::size_t j = 0; j < k; ++j) {
      if (c(fp, pres.torsion_positions[j]) != 0) {
        throw internal_error("torsion class mapped to a free coordinate");
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      mpz_class prod = endo.matrix(i, j) * endo.divisors[j];
      if (!mpz_divisible_p(prod.get_mpz_t(), endo.divisors[i].get_mpz_t())) {
        throw internal_error("induced endomorphism is not well defined");
      }
    }
  }
  return endo;
}

mpz_class fixed_count(const InducedEndomorphism& endo, unsigned long j) {
  const std::size_t k = endo.divisors.size();
  if (k == 0) return 1;

  // j-th power of the endomorphism, rows reduced at every step (reducing
  // row i modulo divisors[i] changes the product by row multiples of the
  // divisors, which is invisible in the quotient).
  IntMatrix power = IntMatrix::identity(k);
  for (unsigned long step = 0; step < j; ++step) {
    power = power * endo.matrix;
    reduce_rows(power, endo.divisors);
  }

  // Fixed classes of an endomorphism phi of a finite group satisfy
  // |ker phi - id| = |coker phi - id|.  The cokernel of (power - id) on
  // the torsion group is presented by the k x 2k block [power - id | D],
  // D = diag(divisors); its order is the product of the Smith divisors.
  IntMatrix presentation(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      presentation(i, c) = power(i, c) - (i == c ? 1 : 0);
    }
    presentation(i, k + i) = endo.divisors[i];
  }
  SnfDecomposition snf = smith_normal_form(presentation);
  mpz_class count = 1;
  for (const auto& d : snf.divisors) {
    if (d == 0) {
      throw internal_error("fixed subgroup of a finite group is infinite");
    }
    count *= d;
  }
  return count;
}

}  // namespace kcrank
