#include "kcrank/oracle.hpp"

#include <array>
#include <map>
#include <sstream>

#include "kcrank/charpoly.hpp"
#include "kcrank/finite_abelian.hpp"
#include "kcrank/smith.hpp"

namespace kcrank {

RankReport delocalized_rank(const ActionSpec& spec) {
  const std::size_t n = spec.n;
  const unsigned long m = spec.m;
  const IntMatrix eye = IntMatrix::identity(n);

  // The action on the dual torus is by the inverse transpose of the
  // generator (exact: the inverse is a^(order-1)).
  const IntMatrix b = matrix_power(spec.a, spec.order - 1).transposed();

  // Powers of b, reused across sectors.
  std::vector<IntMatrix> b_pow(m);
  b_pow[0] = eye;
  for (unsigned long t = 1; t < m; ++t) b_pow[t] = b_pow[t - 1] * b;

  RankReport report;
  report.mode = "oracle";
  report.rank0 = 0;
  report.rank1 = 0;

  for (unsigned long t = 0; t < m; ++t) {
    // Fixed submanifold of the sector element b^t: its tangent lattice
    // is the saturated kernel of b^t - 1 and its component group is the
    // torsion of coker(b^t - 1), permuted by b.
    const IntMatrix difference = b_pow[t] - eye;
    const IntMatrix basis = saturated_kernel(difference);
    const std::size_t dim = basis.cols();

    IntMatrix restriction;
    if (dim == n) {
      restriction = b;
    } else if (dim == 0) {
      restriction = IntMatrix(0, 0);
    } else {
      BasisCompletion completion = complete_basis(basis);
      restriction = split_endomorphism(b, completion, dim).on_sub;
    }

    const InducedEndomorphism components = induce_on_coker(difference, b);

    std::array<mpz_class, 2> sector_sums{};
    IntMatrix power = IntMatrix::identity(dim);
    for (unsigned long j = 0; j < m; ++j) {
      const mpz_class fix = fixed_count(components, j);
      const std::vector<mpz_class> e = elementary_symmetric_all(power);
      for (std::size_t q = 0; q < e.size(); ++q) {
        sector_sums[q % 2] += fix * e[q];
      }
      if (j + 1 < m) power = power * restriction;
    }
    for (int alpha = 0; alpha < 2; ++alpha) {
      if (!mpz_divisible_ui_p(sector_sums[alpha].get_mpz_t(), m) ||
          sector_sums[alpha] < 0) {
        std::ostringstream msg;
        msg << "sector t=" << t << " parity " << alpha
            << " average is not a nonnegative integer: " << sector_sums[alpha]
            << "/" << m;
        throw internal_error(msg.str());
      }
      mpz_class contribution = sector_sums[alpha] / m;
      (alpha == 0 ? report.rank0 : report.rank1) += contribution;
      std::ostringstream label;
      label << 'k' << alpha << ".sector" << t;
      report.breakdown.emplace_back(label.str(), contribution);
    }
    std::ostringstream comp_flag;
    mpz_class comp_count = 1;
    for (const auto& d : components.divisors) comp_count *= d;
    comp_flag << "components.t" << t << '=' << comp_count;
    report.add_flag(comp_flag.str());
  }
  return package_groups(report);
}

namespace {

void classify_cell(ConsistencyReport& out, const RankReport& oracle,
                   const RankReport& cell) {
  if (cell.rank0 == oracle.rank0 && cell.rank1 == oracle.rank1) {
    out.agreements.emplace_back(cell.cell_key(), oracle.cell_key());
  } else {
    Divergence div;
    div.left = cell.cell_key();
    div.right = oracle.cell_key();
    div.delta0 = cell.rank0 - oracle.rank0;
    div.delta1 = cell.rank1 - oracle.rank1;
    out.divergences.push_back(std::move(div));
  }
}

}  // namespace

ConsistencyReport cross_check(const ActionSpec& spec,
                              const CrossCheckOptions& options) {
  ConsistencyReport out;
  out.spec = spec;
  out.cells.push_back(delocalized_rank(spec));

  if (options.include_assembled) {
    for (unsigned long p : spec.primes) {
      out.cells.push_back(assembled_rank(spec, p));
    }
  }
  if (options.include_pure_p && spec.primes.size() == 1) {
    PrimeSplit split = prime_split(spec, spec.primes.front());
    out.cells.push_back(pure_p_full_ranks(spec, split));
  }
  if (options.include_literal) {
    for (unsigned long p : spec.primes) {
      for (LiteralVariant variant : options.variants) {
        try {
          out.cells.push_back(literal_rank(spec, p, variant));
        } catch (const kcrank_error& err) {
          if (err.code() != errc::kl_undefined) throw;
          // The closed formula has no value here; note it once per prime
          // on the oracle cell and move on.
          std::ostringstream note;
          note << "literal:p=" << p << " skipped: " << err.what();
          out.cells.front().add_flag(note.str());
          break;
        }
      }
    }
  }

  const RankReport& oracle = out.cells.front();
  for (std::size_t i = 1; i < out.cells.size(); ++i) {
    classify_cell(out, oracle, out.cells[i]);
  }

  // Same-mode comparisons across primes, for cells that already diverge
  // from the oracle: these record whether the failure is itself
  // p-dependent (a sharper inconsistency than a single divergence).
  std::map<std::string, std::vector<const RankReport*>> divergent_by_kind;
  for (const auto& cell : out.cells) {
    bool diverged = false;
    for (const auto& div : out.divergences) {
      if (div.left == cell.cell_key()) {
        diverged = true;
        break;
      }
    }
    if (!diverged) continue;
    divergent_by_kind[cell.mode + (cell.variant.empty() ? "" : ":" + cell.variant)]
        .push_back(&cell);
  }
  for (const auto& [kind, cells] : divergent_by_kind) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        if (cells[i]->rank0 == cells[j]->rank0 &&
            cells[i]->rank1 == cells[j]->rank1) {
          continue;
        }
        Divergence div;
        div.left = cells[i]->cell_key();
        div.right = cells[j]->cell_key();
        div.delta0 = cells[i]->rank0 - cells[j]->rank0;
        div.delta1 = cells[i]->rank1 - cells[j]->rank1;
        out.cross_prime.push_back(std::move(div));
      }
    }
  }

  out.verdict = out.divergences.empty() ? "all-agree" : "divergent";
  return out;
}

LemmaEquivalenceResult lemma_equivalence_suite(
    const std::vector<std::pair<IntMatrix, unsigned long>>& corpus) {
  LemmaEquivalenceResult result;
  for (const auto& [matrix, d] : corpus) {
    ++result.matrices;
    std::vector<mpz_class> by_lemma = lemma_rank_all(matrix, d);
    for (std::size_t s = 0; s <= matrix.rows(); ++s) {
      ++result.comparisons;
      const std::size_t by_kernel = coinvariant_rank_kernel(matrix, d, s);
      if (by_lemma[s] != static_cast<long>(by_kernel)) {
        std::ostringstream witness;
        witness << "order " << d << " matrix " << matrix << " degree " << s
                << ": lemma " << by_lemma[s] << " vs kernel " << by_kernel;
        result.failures.push_back(witness.str());
      }
    }
  }
  return result;
}

}  // namespace kcrank
