#include "inns/equising/zariski.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace inns::equising {

EquisingType zariski_type(const std::vector<branch::Branch>& branches) {
  const std::size_t n = branches.size();
  if (n == 0) throw std::invalid_argument("a curve needs at least one branch");
  if (n > kMaxBranches) throw std::invalid_argument("too many branches for canonicalization");
  std::vector<branch::PuiseuxPairs> types;
  for (const auto& b : branches) types.push_back(branch::puiseux_pairs(b));
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m[i][j] = m[j][i] = branch::intersection_multiplicity_branches(branches[i], branches[j]);
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<EquisingType> best;
  do {
    EquisingType cand;
    for (std::size_t i : perm) cand.branch_types.push_back(types[i]);
    cand.intersection_matrix.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) cand.intersection_matrix[i][j] = m[perm[i]][perm[j]];
    }
    if (!best || std::tie(cand.branch_types, cand.intersection_matrix) <
                     std::tie(best->branch_types, best->intersection_matrix)) {
      best = std::move(cand);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

bool zariski_equivalent(const std::vector<branch::Branch>& a, const std::vector<branch::Branch>& b) {
  if (a.size() != b.size()) return false;
  return zariski_type(a) == zariski_type(b);
}

}  // namespace inns::equising
