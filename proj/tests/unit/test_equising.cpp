#include "doctest.h"
#include "helpers.hpp"
#include "inns/equising/zariski.hpp"

using namespace inns::equising;
using inns::branch::Branch;
using inns::branch::PuiseuxPairs;

namespace {

Branch param(std::initializer_list<const char*> comps) {
  auto t = inns::kernel::make_local_ring({"t"});
  std::vector<inns::kernel::Polynomial> p;
  for (const char* c : comps) p.push_back(testing_support::P(t, c));
  return Branch::from_polynomials(p);
}

}  // namespace

TEST_CASE("Zariski types") {
  auto node = zariski_type({param({"t", "0"}), param({"0", "t"})});
  CHECK(node.branch_types == std::vector<PuiseuxPairs>{{}, {}});
  CHECK(node.intersection_matrix[0][1] == 1);
  auto tac = zariski_type({param({"t", "t^2"}), param({"t", "-t^2"})});
  CHECK(tac.intersection_matrix[0][1] == 2);
  auto cusp = zariski_type({param({"t^2", "t^3"})});
  CHECK(cusp.branch_types == std::vector<PuiseuxPairs>{{{2, 3}}});
}

TEST_CASE("Zariski equivalence") {
  std::vector<Branch> node{param({"t", "0"}), param({"0", "t"})};
  std::vector<Branch> swapped{param({"0", "t"}), param({"t", "t"})};
  std::vector<Branch> tac{param({"t", "t^2"}), param({"t", "-t^2"})};
  std::vector<Branch> cusp{param({"t^2", "t^3"})};
  CHECK(zariski_equivalent(node, swapped));
  CHECK_FALSE(zariski_equivalent(node, tac));
  CHECK_FALSE(zariski_equivalent(cusp, node));
  // Mixed types: canonical form must not depend on branch order.
  std::vector<Branch> mixed1{param({"t^2", "t^3"}), param({"t", "0"}), param({"0", "t"})};
  std::vector<Branch> mixed2{param({"0", "t"}), param({"t^2", "t^3"}), param({"t", "0"})};
  CHECK(zariski_equivalent(mixed1, mixed2));
  CHECK(zariski_equivalent(mixed1, mixed1));
}
