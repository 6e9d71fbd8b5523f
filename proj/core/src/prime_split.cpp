#include "kcrank/prime_split.hpp"

#include <algorithm>
#include <sstream>

#include "kcrank/smith.hpp"

namespace kcrank {

bool PrimeSplit::has_flag(const std::string& flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

namespace {

// p^(l/(p-1)) with small exponents; exact.
mpz_class class_count_for(unsigned long p, std::size_t l) {
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), p, l / (p - 1));
  return count;
}

}  // namespace

PrimeSplit prime_split(const ActionSpec& spec, unsigned long p) {
  if (p < 2 || spec.m % p != 0) {
    std::ostringstream msg;
    msg << p << " is not a prime factor of " << spec.m;
    throw kcrank_error(errc::order, msg.str());
  }

  PrimeSplit split;
  split.p = p;
  split.tau = matrix_power(spec.a, spec.m / p);

  const std::size_t n = spec.n;
  const IntMatrix eye = IntMatrix::identity(n);
  IntMatrix kernel = saturated_kernel(split.tau - eye);
  const std::size_t f = kernel.cols();
  split.l = n - f;

  if (f == n) {
    // tau acts trivially; everything is "fixed part".
    split.f_basis = std::move(kernel);
    split.a_on_f = spec.a;
    split.a_quot = IntMatrix(0, 0);
    split.tau_quot = IntMatrix(0, 0);
  } else if (f == 0) {
    split.f_basis = IntMatrix(n, 0);
    split.a_on_f = IntMatrix(0, 0);
    split.a_quot = spec.a;
    split.tau_quot = split.tau;
  } else {
    BasisCompletion completion = complete_basis(kernel);
    split.f_basis = completion.w.block(0, 0, n, f);
    SplitBlocks a_blocks = split_endomorphism(spec.a, completion, f);
    SplitBlocks tau_blocks = split_endomorphism(split.tau, completion, f);
    split.a_on_f = std::move(a_blocks.on_sub);
    split.a_quot = std::move(a_blocks.on_quot);
    if (!tau_blocks.on_sub.is_identity()) {
      throw internal_error("tau must act trivially on its fixed lattice");
    }
    split.tau_quot = std::move(tau_blocks.on_quot);
  }

  const std::size_t l = split.l;
  if (l > 0) {
    const IntMatrix eye_l = IntMatrix::identity(l);
    // The quotient was built from the *saturated* fixed lattice, so
    // tau_quot fixes no nonzero vector and its norm element vanishes.
    if (integer_matrix_rank(split.tau_quot - eye_l) != l) {
      throw internal_error("tau_quot has a nonzero fixed vector");
    }
    IntMatrix norm(l, l);
    IntMatrix power = eye_l;
    for (unsigned long i = 0; i < p; ++i) {
      norm = norm + power;
      if (i + 1 < p) power = power * split.tau_quot;
    }
    if (!norm.is_zero()) {
      throw internal_error("norm of tau_quot does not vanish");
    }
    if (l % (p - 1) != 0) {
      throw internal_error("quotient rank is not a multiple of p-1");
    }
    mpz_class det = determinant(eye_l - split.tau_quot);
    if (abs(det) != class_count_for(p, l)) {
      throw internal_error("class count does not match p^(l/(p-1))");
    }
  }

  if (l == 0) split.flags.push_back("degenerate-split");
  if (l == n) split.flags.push_back("free-outside-origin-at-p");

  // k_l = p * (p^(l/(p-1)) - 1) / m, when that is an integer.
  mpz_class numerator = (class_count_for(p, l) - 1) * p;
  if (mpz_divisible_ui_p(numerator.get_mpz_t(), spec.m)) {
    split.k_l = numerator / spec.m;
  } else {
    split.flags.push_back("k-l-undefined");
  }
  return split;
}

}  // namespace kcrank
