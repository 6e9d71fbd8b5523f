#include "kcrank/compound.hpp"

namespace kcrank {

std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n,
                                                  std::size_t s) {
  std::vector<std::vector<std::size_t>> subsets;
  if (s > n) return subsets;
  std::vector<std::size_t> current(s);
  for (std::size_t i = 0; i < s; ++i) current[i] = i;
  while (true) {
    subsets.push_back(current);
    // Advance to the next combination in lexicographic order.
    std::size_t i = s;
    while (i > 0) {
      --i;
      if (current[i] != i + n - s) {
        ++current[i];
        for (std::size_t j = i + 1; j < s; ++j) current[j] = current[j - 1] + 1;
        break;
      }
      if (i == 0) return subsets;
    }
    if (s == 0) return subsets;  // the single empty subset
  }
}

mpz_class minor_det(const IntMatrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) {
    throw kcrank_error(errc::dimension, "minor_det needs square selection");
  }
  return determinant(m.submatrix(rows, cols));
}

IntMatrix exterior_power(const IntMatrix& m, std::size_t s) {
  if (!m.is_square()) {
    throw kcrank_error(errc::dimension,
                       "exterior_power requires a square matrix");
  }
  const auto subsets = lex_subsets(m.rows(), s);
  IntMatrix out(subsets.size(), subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      out(i, j) = minor_det(m, subsets[i], subsets[j]);
    }
  }
  return out;
}

}  // namespace kcrank
