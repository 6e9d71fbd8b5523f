#include "kcrank/report.hpp"

#include <algorithm>
#include <sstream>

namespace kcrank {

namespace {

const char kTorsionFreeJustification[] =
    "both class groups are finitely generated and torsion free, so the "
    "rank determines each group up to isomorphism";

}  // namespace

bool RankReport::has_flag(const std::string& flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

void RankReport::add_flag(const std::string& flag) {
  if (!has_flag(flag)) flags.push_back(flag);
}

std::string RankReport::cell_key() const {
  std::ostringstream key;
  key << mode;
  if (prime) key << ":p=" << *prime;
  if (!variant.empty()) key << ':' << variant;
  return key.str();
}

std::string render_free_abelian(const mpz_class& rank) {
  if (rank == 0) return "0";
  if (rank == 1) return "Z";
  std::ostringstream out;
  out << "Z^" << rank;
  return out.str();
}

RankReport& package_groups(RankReport& report) {
  std::ostringstream groups;
  groups << "K_0 = " << render_free_abelian(report.rank0) << ", K_1 = "
         << render_free_abelian(report.rank1);
  report.groups = groups.str();
  report.add_flag(kTorsionFreeJustification);
  return report;
}

}  // namespace kcrank
