#ifndef KCRANK_TESTS_SUPPORT_HPP
#define KCRANK_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kcrank/action.hpp"
#include "kcrank/int_matrix.hpp"

namespace kcrank::testsupport {

// Coefficients of the d-th cyclotomic polynomial, index = degree.
std::vector<mpz_class> cyclotomic_poly(unsigned long d);

// Companion matrix of a monic polynomial (subdiagonal ones, negated
// coefficients in the last column).
IntMatrix companion(const std::vector<mpz_class>& monic);

// Companion matrix of the d-th cyclotomic polynomial; multiplicative
// order exactly d.
IntMatrix cyclotomic_companion(unsigned long d);

// Block-diagonal sum.
IntMatrix direct_sum(const std::vector<IntMatrix>& blocks);

// A deterministic unimodular matrix built from `steps` elementary row
// operations drawn from the generator.
IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng,
                            int steps = 12);

// Deterministic corpus of finite-order integer matrices together with
// their exact multiplicative orders: block sums of cyclotomic
// companions (n <= 6, orders among 1,2,3,5,6,7,10,15,30) plus seeded
// unimodular conjugates of each.  Size >= 200.
const std::vector<std::pair<IntMatrix, unsigned long>>& finite_order_corpus();

// Deterministic stream of unstructured integer matrices (entries in
// [-9, 9], all shapes up to max_rows x max_cols including rectangular),
// prefixed with a few structured edge cases.
std::vector<IntMatrix> random_matrices(std::size_t count,
                                       std::size_t max_rows,
                                       std::size_t max_cols,
                                       std::uint64_t seed);

// The bundled desk examples; see example_names() for the list.
ActionSpec example(const std::string& name);
const std::vector<std::string>& example_names();

// The n = 10, m = 30 spec used by the performance gate: direct sum of
// cyclotomic companions for the orders 2, 3, 5, 6, 2.
ActionSpec performance_spec();

}  // namespace kcrank::testsupport

#endif  // KCRANK_TESTS_SUPPORT_HPP
