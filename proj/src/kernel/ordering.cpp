#include "inns/kernel/ordering.hpp"

#include <stdexcept>

namespace inns::kernel {

MonomialOrdering::MonomialOrdering(std::vector<OrderingBlock> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    if (b.size == 0) throw std::invalid_argument("empty ordering block");
    var_count_ += b.size;
  }
}

MonomialOrdering MonomialOrdering::local(std::size_t var_count) {
  if (var_count == 0) return MonomialOrdering({});
  return MonomialOrdering({{BlockKind::Local, var_count}});
}

MonomialOrdering MonomialOrdering::global(std::size_t var_count) {
  if (var_count == 0) return MonomialOrdering({});
  return MonomialOrdering({{BlockKind::Global, var_count}});
}

MonomialOrdering MonomialOrdering::block(std::vector<OrderingBlock> blocks) {
  return MonomialOrdering(std::move(blocks));
}

std::strong_ordering MonomialOrdering::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != var_count_ || b.size() != var_count_) {
    throw std::invalid_argument("monomial length does not match ordering");
  }
  std::size_t start = 0;
  for (const auto& blk : blocks_) {
    const std::size_t end = start + blk.size;
    int da = 0;
    int db = 0;
    for (std::size_t i = start; i < end; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) {
      if (blk.kind == BlockKind::Global) return da <=> db;
      return db <=> da;
    }
    // Reverse lexicographic tie-break: the last differing exponent decides,
    // smaller exponent wins.
    for (std::size_t i = end; i-- > start;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    start = end;
  }
  return std::strong_ordering::equal;
}

bool MonomialOrdering::is_global() const {
  for (const auto& b : blocks_) {
    if (b.kind != BlockKind::Global) return false;
  }
  return true;
}

bool MonomialOrdering::is_local() const {
  for (const auto& b : blocks_) {
    if (b.kind != BlockKind::Local) return false;
  }
  return true;
}

std::string MonomialOrdering::name() const {
  if (blocks_.size() == 1) return blocks_[0].kind == BlockKind::Local ? "ds" : "dp";
  std::string out = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ",";
    out += blocks_[i].kind == BlockKind::Local ? "ds(" : "dp(";
    out += std::to_string(blocks_[i].size) + ")";
  }
  return out + ")";
}

MonomialOrdering MonomialOrdering::with_leading_block(BlockKind kind, std::size_t count) const {
  std::vector<OrderingBlock> blocks;
  blocks.push_back({kind, count});
  blocks.insert(blocks.end(), blocks_.begin(), blocks_.end());
  return MonomialOrdering(std::move(blocks));
}

std::strong_ordering cmp_monomials(const MonomialOrdering& ord, const Monomial& a,
                                   const Monomial& b) {
  return ord.compare(a, b);
}

}  // namespace inns::kernel
