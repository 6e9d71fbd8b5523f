#include "kcrank/action.hpp"

#include <sstream>

namespace kcrank {

namespace {

// Trial division; returns the ascending prime factors when m is
// square-free and >= 2, otherwise throws E_SQUAREFREE.
std::vector<unsigned long> squarefree_factors(unsigned long m) {
  if (m < 2) {
    throw kcrank_error(errc::squarefree,
                       "group order must be at least 2");
  }
  std::vector<unsigned long> primes;
  unsigned long rest = m;
  for (unsigned long d = 2; d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    rest /= d;
    if (rest % d == 0) {
      std::ostringstream msg;
      msg << "group order " << m << " is divisible by " << d * d;
      throw kcrank_error(errc::squarefree, msg.str());
    }
    primes.push_back(d);
  }
  if (rest > 1) primes.push_back(rest);
  return primes;
}

}  // namespace

ActionSpec validate_action(const IntMatrix& a, unsigned long m,
                           const std::string& name) {
  if (!a.is_square()) {
    throw kcrank_error(errc::dimension, "action matrix must be square");
  }
  ActionSpec spec;
  spec.n = a.rows();
  spec.m = m;
  spec.primes = squarefree_factors(m);
  spec.a = a;
  spec.name = name;

  const mpz_class det = determinant(a);
  if (det != 1 && det != -1) {
    std::ostringstream msg;
    msg << "action matrix has determinant " << det
        << ", not a lattice automorphism";
    throw kcrank_error(errc::unimodular, msg.str());
  }

  // The order of a lattice automorphism of finite order is found within
  // m steps when a^m = 1; if the scan fails, a^m != 1.
  try {
    spec.order = multiplicative_order(a, m);
  } catch (const kcrank_error&) {
    std::ostringstream msg;
    msg << "matrix order does not divide " << m;
    throw kcrank_error(errc::order, msg.str());
  }
  if (m % spec.order != 0) {
    // multiplicative_order returns the smallest exponent; a^m = 1 forces
    // it to divide m, so this cannot happen.
    throw internal_error("order found but does not divide m");
  }
  return spec;
}

bool free_outside_origin(const ActionSpec& spec) {
  // fixed(g^t) is contained in fixed(h) for any power h of g^t; every
  // nontrivial subgroup contains an element of prime order, so checking
  // a^(m/p) for each prime factor p covers all nontrivial elements.
  for (unsigned long p : spec.primes) {
    IntMatrix tau = matrix_power(spec.a, spec.m / p);
    if (integer_matrix_rank(tau - IntMatrix::identity(spec.n)) < spec.n) {
      return false;
    }
  }
  return true;
}

}  // namespace kcrank
