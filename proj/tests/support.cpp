#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "kcrank/errors.hpp"

namespace kcrank::testsupport {

namespace {

using Poly = std::vector<mpz_class>;

// Exact polynomial long division by a monic divisor; the remainder must
// vanish.
Poly poly_div_exact(Poly numerator, const Poly& divisor) {
  const std::size_t deg_n = numerator.size() - 1;
  const std::size_t deg_d = divisor.size() - 1;
  if (deg_n < deg_d) throw std::logic_error("polynomial division underflow");
  Poly quotient(deg_n - deg_d + 1, 0);
  for (std::size_t k = deg_n - deg_d + 1; k-- > 0;) {
    const mpz_class lead = numerator[k + deg_d];
    quotient[k] = lead;
    for (std::size_t i = 0; i <= deg_d; ++i) {
      numerator[k + i] -= lead * divisor[i];
    }
  }
  for (const mpz_class& c : numerator) {
    if (c != 0) throw std::logic_error("polynomial division not exact");
  }
  return quotient;
}

}  // namespace

std::vector<mpz_class> cyclotomic_poly(unsigned long d) {
  static std::map<unsigned long, Poly> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // x^d - 1 divided by the cyclotomic polynomials of all proper divisors.
  Poly result(d + 1, 0);
  result[0] = -1;
  result[d] = 1;
  for (unsigned long e = 1; e < d; ++e) {
    if (d % e == 0) result = poly_div_exact(result, cyclotomic_poly(e));
  }
  cache[d] = result;
  return result;
}

IntMatrix companion(const std::vector<mpz_class>& monic) {
  const std::size_t k = monic.size() - 1;
  if (monic[k] != 1) throw std::logic_error("companion needs a monic polynomial");
  IntMatrix c(k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) c(i + 1, i) = 1;
  for (std::size_t i = 0; i < k; ++i) c(i, k - 1) = -monic[i];
  return c;
}

IntMatrix cyclotomic_companion(unsigned long d) {
  return companion(cyclotomic_poly(d));
}

IntMatrix direct_sum(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const IntMatrix& block : blocks) n += block.rows();
  IntMatrix sum(n, n);
  std::size_t base = 0;
  for (const IntMatrix& block : blocks) {
    for (std::size_t i = 0; i < block.rows(); ++i) {
      for (std::size_t j = 0; j < block.cols(); ++j) {
        sum(base + i, base + j) = block(i, j);
      }
    }
    base += block.rows();
  }
  return sum;
}

IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (int step = 0; step < steps; ++step) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % (n - 1);
    if (j >= i) ++j;
    switch (rng() % 4) {
      case 0:
      case 1: {
        const long sign = (rng() % 2 == 0) ? 1 : -1;
        for (std::size_t c = 0; c < n; ++c) u(i, c) += sign * u(j, c);
        break;
      }
      case 2:
        for (std::size_t c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
        break;
      case 3:
        for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
        break;
    }
  }
  return u;
}

namespace {

// Multisets of block orders whose companion dimensions fit in n <= 6 and
// whose lcm stays in the allowed order set.
void enumerate_blocks(const std::vector<unsigned long>& choices,
                      std::size_t first, std::size_t budget,
                      std::vector<unsigned long>& current,
                      std::vector<std::vector<unsigned long>>& out) {
  if (!current.empty()) out.push_back(current);
  for (std::size_t i = first; i < choices.size(); ++i) {
    const unsigned long d = choices[i];
    const std::size_t dim = cyclotomic_poly(d).size() - 1;
    if (dim > budget) continue;
    current.push_back(d);
    enumerate_blocks(choices, i, budget - dim, current, out);
    current.pop_back();
  }
}

}  // namespace

const std::vector<std::pair<IntMatrix, unsigned long>>& finite_order_corpus() {
  static const std::vector<std::pair<IntMatrix, unsigned long>> corpus = [] {
    const std::vector<unsigned long> block_orders = {1, 2, 3, 5, 6, 7, 10};
    const std::vector<unsigned long> allowed = {1, 2,  3,  5, 6,
                                                7, 10, 15, 30};
    std::vector<std::vector<unsigned long>> multisets;
    std::vector<unsigned long> current;
    enumerate_blocks(block_orders, 0, 6, current, multisets);

    std::vector<std::pair<IntMatrix, unsigned long>> result;
    for (const std::vector<unsigned long>& blocks : multisets) {
      unsigned long order = 1;
      std::vector<IntMatrix> parts;
      for (unsigned long d : blocks) {
        order = std::lcm(order, d);
        parts.push_back(cyclotomic_companion(d));
      }
      if (std::find(allowed.begin(), allowed.end(), order) == allowed.end()) {
        continue;
      }
      result.emplace_back(direct_sum(parts), order);
    }

    // Seeded conjugates preserve the order and keep n <= 6; two rounds
    // push the corpus well past the 200 mark.
    const std::size_t bases = result.size();
    for (std::uint64_t round = 1; round <= 2; ++round) {
      for (std::size_t i = 0; i < bases; ++i) {
        const auto& [base, order] = result[i];
        if (base.rows() < 2) continue;
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull * round + i);
        const IntMatrix u = random_unimodular(base.rows(), rng);
        result.emplace_back(u * base * unimodular_inverse(u), order);
      }
    }
    return result;
  }();
  return corpus;
}

std::vector<IntMatrix> random_matrices(std::size_t count,
                                       std::size_t max_rows,
                                       std::size_t max_cols,
                                       std::uint64_t seed) {
  std::vector<IntMatrix> out;
  out.reserve(count);
  // Structured edge cases first: empty-ish shapes, zero, identity,
  // repeated diagonal entries.
  out.push_back(IntMatrix(0, 0));
  out.push_back(IntMatrix(1, 1));
  out.push_back(IntMatrix::identity(3));
  out.push_back(IntMatrix(2, 5));
  out.push_back(IntMatrix(5, 2));
  {
    IntMatrix diag(4, 4);
    diag(0, 0) = 2;
    diag(1, 1) = 2;
    diag(2, 2) = 6;
    diag(3, 3) = 0;
    out.push_back(diag);
  }
  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    const std::size_t rows = 1 + rng() % max_rows;
    const std::size_t cols = 1 + rng() % max_cols;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = static_cast<long>(rng() % 19) - 9;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

ActionSpec example(const std::string& name) {
  if (name == "dihedral") {
    return validate_action(IntMatrix{{-1}}, 2, name);
  }
  if (name == "pillowcase") {
    return validate_action(IntMatrix{{-1, 0}, {0, -1}}, 2, name);
  }
  if (name == "cyclotomic3") {
    return validate_action(cyclotomic_companion(3), 3, name);
  }
  if (name == "hexagonal") {
    return validate_action(IntMatrix{{1, -1}, {1, 0}}, 6, name);
  }
  if (name == "diagonal-mirror") {
    return validate_action(IntMatrix{{0, 1}, {1, 0}}, 2, name);
  }
  if (name == "axis-mirror") {
    return validate_action(IntMatrix{{1, 0}, {0, -1}}, 2, name);
  }
  if (name == "free-rank-one") {
    return validate_action(IntMatrix{{1}}, 2, name);
  }
  if (name == "cyclotomic5") {
    return validate_action(cyclotomic_companion(5), 5, name);
  }
  if (name == "pillowcase-cylinder") {
    return validate_action(IntMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}, 2,
                           name);
  }
  throw std::logic_error("unknown example '" + name + "'");
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {
      "dihedral",      "pillowcase",   "cyclotomic3",
      "hexagonal",     "diagonal-mirror", "axis-mirror",
      "free-rank-one", "cyclotomic5",  "pillowcase-cylinder",
  };
  return names;
}

ActionSpec performance_spec() {
  const IntMatrix a = direct_sum({cyclotomic_companion(2),
                                  cyclotomic_companion(3),
                                  cyclotomic_companion(5),
                                  cyclotomic_companion(6),
                                  cyclotomic_companion(2)});
  return validate_action(a, 30, "performance-30");
}

}  // namespace kcrank::testsupport
