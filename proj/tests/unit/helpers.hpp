#ifndef INNS_TESTS_HELPERS_HPP
#define INNS_TESTS_HELPERS_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "inns/io/expression.hpp"
#include "inns/kernel/ideal.hpp"

namespace testing_support {

inline inns::kernel::Polynomial P(const inns::kernel::RingPtr& r, const std::string& s) {
  return inns::io::parse_polynomial(s, r);
}

inline inns::kernel::Ideal I(const inns::kernel::RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<inns::kernel::Polynomial> g;
  for (const char* s : gens) g.push_back(P(r, s));
  return inns::kernel::Ideal(r, std::move(g));
}

}  // namespace testing_support

#endif
