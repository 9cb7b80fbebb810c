#include "inns/kernel/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace inns::kernel {

Ring::Ring(std::vector<std::string> variables, MonomialOrdering ordering)
    : vars_(std::move(variables)), ord_(std::move(ordering)) {
  if (ord_.var_count() != vars_.size()) {
    throw std::invalid_argument("ordering does not cover the ring variables");
  }
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size()) throw std::invalid_argument("duplicate ring variable");
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

RingPtr make_ring(std::vector<std::string> variables, MonomialOrdering ordering) {
  return std::make_shared<const Ring>(std::move(variables), std::move(ordering));
}

RingPtr make_local_ring(std::vector<std::string> variables) {
  auto n = variables.size();
  return make_ring(std::move(variables), MonomialOrdering::local(n));
}

RingPtr make_global_ring(std::vector<std::string> variables) {
  auto n = variables.size();
  return make_ring(std::move(variables), MonomialOrdering::global(n));
}

RingPtr with_ordering(const RingPtr& ring, MonomialOrdering ordering) {
  return make_ring(ring->variables(), std::move(ordering));
}

RingPtr without_variable(const RingPtr& ring, const std::string& name) {
  auto idx = ring->index_of(name);
  if (!idx) throw std::invalid_argument("no variable named " + name);
  std::vector<std::string> vars = ring->variables();
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(*idx));
  std::vector<OrderingBlock> blocks;
  std::size_t start = 0;
  for (auto b : ring->ordering().blocks()) {
    if (*idx >= start && *idx < start + b.size) {
      start += b.size;
      if (--b.size == 0) continue;
    } else {
      start += b.size;
    }
    blocks.push_back(b);
  }
  if (blocks.empty()) return make_ring(std::move(vars), MonomialOrdering::local(0));
  return make_ring(std::move(vars), MonomialOrdering::block(std::move(blocks)));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace inns::kernel
