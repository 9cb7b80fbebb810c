#ifndef INNS_EQUISING_ZARISKI_HPP
#define INNS_EQUISING_ZARISKI_HPP

#include <cstdint>
#include <vector>

#include "inns/branch/branch.hpp"

namespace inns::equising {

inline constexpr std::size_t kMaxBranches = 8;

/// Puiseux pairs of each branch together with the pairwise intersection
/// multiplicities, in the branch order minimizing (types, matrix)
/// lexicographically. Diagonal entries are 0.
struct EquisingType {
  std::vector<branch::PuiseuxPairs> branch_types;
  std::vector<std::vector<std::int64_t>> intersection_matrix;

  friend bool operator==(const EquisingType&, const EquisingType&) = default;
};

EquisingType zariski_type(const std::vector<branch::Branch>& branches);

bool zariski_equivalent(const std::vector<branch::Branch>& a, const std::vector<branch::Branch>& b);

}  // namespace inns::equising

#endif  // INNS_EQUISING_ZARISKI_HPP
