#include "doctest.h"

#include "kcrank/errors.hpp"
#include "kcrank/prime_split.hpp"
#include "support.hpp"

using namespace kcrank;
namespace ts = kcrank::testsupport;

namespace {

// Structural checks every split must satisfy, independent of the
// example: basis invariance, quotient order, fixed-vector freeness,
// norm vanishing and the class count.
void check_split_invariants(const ActionSpec& spec, const PrimeSplit& split) {
  const std::size_t n = spec.n;
  const std::size_t f = n - split.l;
  CHECK(split.tau == matrix_power(spec.a, spec.m / split.p));
  CHECK(split.f_basis.rows() == n);
  CHECK(split.f_basis.cols() == f);
  CHECK(split.a_on_f.rows() == f);
  CHECK(split.a_quot.rows() == split.l);
  CHECK(split.tau_quot.rows() == split.l);

  // tau fixes F pointwise and a preserves it: a * F = F * a_on_f.
  CHECK(split.tau * split.f_basis == split.f_basis);
  CHECK(spec.a * split.f_basis == split.f_basis * split.a_on_f);

  // The quotient action has exact order p with no nonzero fixed vector.
  if (split.l > 0) {
    CHECK(multiplicative_order(split.tau_quot, split.p) == split.p);
    CHECK(integer_matrix_rank(split.tau_quot - IntMatrix::identity(split.l)) ==
          split.l);
    // Norm vanishing: 1 + tau + ... + tau^(p-1) = 0 on the quotient.
    IntMatrix norm(split.l, split.l);
    for (unsigned long t = 0; t < split.p; ++t) {
      norm = norm + matrix_power(split.tau_quot, t);
    }
    CHECK(norm.is_zero());
    // Class count: |det(1 - tau_quot)| = p^(l/(p-1)).
    CHECK(split.l % (split.p - 1) == 0);
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), split.p, split.l / (split.p - 1));
    mpz_class det = determinant(IntMatrix::identity(split.l) - split.tau_quot);
    CHECK(abs(det) == expected);
  }

  // tau_quot commutes with a_quot (both come from the same commutative
  // group acting on the quotient).
  CHECK(split.a_quot * split.tau_quot == split.tau_quot * split.a_quot);

  // Flag consistency.
  CHECK(split.has_flag("degenerate-split") == (split.l == 0));
  CHECK(split.has_flag("free-outside-origin-at-p") == (split.l == n));
  CHECK(split.has_flag("k-l-undefined") == !split.k_l.has_value());
  if (split.k_l) {
    // k_l * m = p * (p^(l/(p-1)) - 1).
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), split.p,
                  split.l / (split.p - 1));
    CHECK(*split.k_l * spec.m == split.p * (power - 1));
  }
}

}  // namespace

TEST_SUITE("prime_split") {

TEST_CASE("pillowcase: the flip at p = 2") {
  const ActionSpec spec = ts::example("pillowcase");
  const PrimeSplit split = prime_split(spec, 2);
  CHECK(split.p == 2);
  CHECK(split.l == 2);
  CHECK(split.tau_quot == spec.a);
  REQUIRE(split.k_l.has_value());
  // k_l = 2 * (2^2 - 1) / 2 = 3.
  CHECK(*split.k_l == 3);
  CHECK(split.has_flag("free-outside-origin-at-p"));
  check_split_invariants(spec, split);
}

TEST_CASE("hexagonal: split at both primes") {
  const ActionSpec spec = ts::example("hexagonal");

  const PrimeSplit at3 = prime_split(spec, 3);
  CHECK(at3.l == 2);
  REQUIRE(at3.k_l.has_value());
  // k_l = 3 * (3^1 - 1) / 6 = 1.
  CHECK(*at3.k_l == 1);
  check_split_invariants(spec, at3);

  const PrimeSplit at2 = prime_split(spec, 2);
  CHECK(at2.l == 2);
  REQUIRE(at2.k_l.has_value());
  // tau = a^3 = -1; k_l = 2 * (2^2 - 1) / 6 = 1.
  CHECK(at2.tau == IntMatrix{{-1, 0}, {0, -1}});
  CHECK(*at2.k_l == 1);
  check_split_invariants(spec, at2);
}

TEST_CASE("axis mirror: a one-dimensional fixed lattice") {
  const ActionSpec spec = ts::example("axis-mirror");
  const PrimeSplit split = prime_split(spec, 2);
  CHECK(split.l == 1);
  CHECK(split.a_on_f == IntMatrix{{1}});
  CHECK(split.tau_quot == IntMatrix{{-1}});
  REQUIRE(split.k_l.has_value());
  CHECK(*split.k_l == 1);
  check_split_invariants(spec, split);
}

TEST_CASE("trivial action: degenerate split") {
  const ActionSpec spec = ts::example("free-rank-one");
  const PrimeSplit split = prime_split(spec, 2);
  CHECK(split.l == 0);
  CHECK(split.has_flag("degenerate-split"));
  CHECK(split.a_on_f == spec.a);
  // l = 0 gives k_l = 2 * (2^0 - 1) / 2 = 0, an integer.
  REQUIRE(split.k_l.has_value());
  CHECK(*split.k_l == 0);
  check_split_invariants(spec, split);
}

TEST_CASE("k_l can fail to exist even though (p-1) divides l") {
  // Faithful action of order 15 on Z^6: at p = 3 the split has l = 2,
  // so p * (p^1 - 1) / m = 6/15 is not an integer.
  const IntMatrix a = ts::direct_sum(
      {ts::cyclotomic_companion(3), ts::cyclotomic_companion(5)});
  const ActionSpec spec = validate_action(a, 15, "order-15");
  const PrimeSplit split = prime_split(spec, 3);
  CHECK(split.l == 2);
  CHECK_FALSE(split.k_l.has_value());
  CHECK(split.has_flag("k-l-undefined"));
  check_split_invariants(spec, split);

  // Same at p = 5: l = 4, l/(p-1) = 1, and 5 * (5 - 1) / 15 is not an
  // integer either.
  const PrimeSplit at5 = prime_split(spec, 5);
  CHECK(at5.l == 4);
  CHECK_FALSE(at5.k_l.has_value());
  check_split_invariants(spec, at5);
}

TEST_CASE("split invariants across the example set and corpus primes") {
  for (const std::string& name : ts::example_names()) {
    const ActionSpec spec = ts::example(name);
    for (unsigned long p : spec.primes) {
      check_split_invariants(spec, prime_split(spec, p));
    }
  }
}

TEST_CASE("conjugation does not change the split shape") {
  const ActionSpec hex = ts::example("hexagonal");
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    const IntMatrix u = ts::random_unimodular(2, rng);
    const ActionSpec conj =
        validate_action(u * hex.a * unimodular_inverse(u), 6, "conj");
    for (unsigned long p : conj.primes) {
      const PrimeSplit a = prime_split(hex, p);
      const PrimeSplit b = prime_split(conj, p);
      CHECK(a.l == b.l);
      CHECK(a.k_l.has_value() == b.k_l.has_value());
      if (a.k_l && b.k_l) CHECK(*a.k_l == *b.k_l);
    }
  }
}

TEST_CASE("rejects a prime not dividing m") {
  const ActionSpec spec = ts::example("pillowcase");
  CHECK_THROWS_AS(prime_split(spec, 3), kcrank_error);
}

}  // TEST_SUITE
