#ifndef INNS_KERNEL_RING_HPP
#define INNS_KERNEL_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "inns/kernel/ordering.hpp"

namespace inns::kernel {

/// Polynomial ring over Q: variable names plus a monomial ordering.
class Ring {
 public:
  Ring(std::vector<std::string> variables, MonomialOrdering ordering);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t var_count() const { return vars_.size(); }
  const MonomialOrdering& ordering() const { return ord_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> vars_;
  MonomialOrdering ord_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables, MonomialOrdering ordering);
RingPtr make_local_ring(std::vector<std::string> variables);
RingPtr make_global_ring(std::vector<std::string> variables);

/// Same variables, different ordering.
RingPtr with_ordering(const RingPtr& ring, MonomialOrdering ordering);

/// Ring with `name` removed; ordering becomes a single block of the kind of
/// the block that contained it.
RingPtr without_variable(const RingPtr& ring, const std::string& name);

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace inns::kernel

#endif  // INNS_KERNEL_RING_HPP
