#ifndef INNS_KERNEL_ORDERING_HPP
#define INNS_KERNEL_ORDERING_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "inns/kernel/monomial.hpp"

namespace inns::kernel {

/// ds: negative degree reverse lexicographic (1 is the largest monomial).
/// dp: degree reverse lexicographic (a well-ordering).
enum class BlockKind { Local, Global };

struct OrderingBlock {
  BlockKind kind;
  std::size_t size;

  friend bool operator==(const OrderingBlock&, const OrderingBlock&) = default;
};

/// A product of ds/dp blocks over consecutive variable ranges.
class MonomialOrdering {
 public:
  static MonomialOrdering local(std::size_t var_count);
  static MonomialOrdering global(std::size_t var_count);
  // Blocks must have nonzero size. Adjacent blocks are kept distinct.
  static MonomialOrdering block(std::vector<OrderingBlock> blocks);

  std::size_t var_count() const { return var_count_; }
  const std::vector<OrderingBlock>& blocks() const { return blocks_; }

  /// Throws std::invalid_argument on length mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  bool is_global() const;
  bool is_local() const;

  /// "ds", "dp", or "(dp(1),ds(3))" for blocks.
  std::string name() const;

  /// This ordering with a new block of `count` variables prepended.
  MonomialOrdering with_leading_block(BlockKind kind, std::size_t count) const;

  friend bool operator==(const MonomialOrdering&,
                         const MonomialOrdering&) = default;

 private:
  explicit MonomialOrdering(std::vector<OrderingBlock> blocks);

  std::vector<OrderingBlock> blocks_;
  std::size_t var_count_ = 0;
};

std::strong_ordering cmp_monomials(const MonomialOrdering& ord,
                                   const Monomial& a, const Monomial& b);

}  // namespace inns::kernel

#endif  // INNS_KERNEL_ORDERING_HPP
