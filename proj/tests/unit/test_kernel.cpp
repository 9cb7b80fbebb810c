#include "doctest.h"
#include "helpers.hpp"

using namespace inns::kernel;
using testing_support::I;
using testing_support::P;

namespace {

RingPtr xyz() { return make_local_ring({"x", "y", "z"}); }

}  // namespace

TEST_CASE("monomial orderings") {
  auto ds = MonomialOrdering::local(2);
  auto dp = MonomialOrdering::global(2);
  CHECK(ds.compare(Monomial{0, 0}, Monomial{1, 0}) == std::strong_ordering::greater);
  CHECK(ds.compare(Monomial{2, 0}, Monomial{0, 3}) == std::strong_ordering::greater);
  CHECK(dp.compare(Monomial{2, 0}, Monomial{0, 3}) == std::strong_ordering::less);
  CHECK(dp.compare(Monomial{1, 1}, Monomial{2, 0}) == std::strong_ordering::less);
  CHECK_THROWS(ds.compare(Monomial{1}, Monomial{1, 0}));
}

TEST_CASE("polynomial arithmetic and printing") {
  auto r = make_local_ring({"x", "y"});
  auto f = P(r, "x^2 - y^3 - 1/3*x*y");
  CHECK(P(r, f.to_string()) == f);
  CHECK((f - f).is_zero());
  CHECK(P(r, "(x+y)^2") == P(r, "x^2+2*x*y+y^2"));
  CHECK(f.lead_monomial() == Monomial{2, 0});
  CHECK(P(r, "0").is_zero());
}

TEST_CASE("substitution") {
  auto r = make_local_ring({"x", "y"});
  auto t = make_local_ring({"t"});
  auto f = P(r, "x^2-y^3");
  CHECK(substitute(f, {{"x", P(t, "t^3")}, {"y", P(t, "t^2")}}, t).is_zero());
  auto rs = make_local_ring({"x", "y", "s"});
  auto g = substitute(P(rs, "x^2-y^3-s*y^2"), {{"s", P(r, "1")}}, r);
  CHECK(g == P(r, "x^2-y^3-y^2"));
  auto r4 = make_local_ring({"y", "z", "t"});
  auto r3 = make_local_ring({"y", "z"});
  CHECK(substitute(P(r4, "y*z+z*t"), {{"t", P(r3, "1/3")}}, r3) == P(r3, "y*z+1/3*z"));
  CHECK_THROWS(substitute(P(r4, "t"), {}, r3));
}

TEST_CASE("Mora normal form") {
  auto r = make_local_ring({"x"});
  std::vector<Polynomial> G{P(r, "x+x^2")};
  CHECK(mora_normal_form(P(r, "x"), G).is_zero());
  std::vector<Polynomial> G2{P(r, "x^2")};
  CHECK(mora_normal_form(P(r, "x^3"), G2).is_zero());
  auto R = xyz();
  auto J = I(R, {"z", "x^2-y^4"});
  CHECK(contains(J, P(R, "y^4-x^2")));
  CHECK_FALSE(contains(J, P(R, "y^4")));
}

TEST_CASE("standard bases and vdim") {
  auto R = xyz();
  auto unit = I(R, {"x+x^2"});
  auto rx = make_local_ring({"x"});
  CHECK(I(rx, {"x+x^2"}).standard_basis().lead_ideal() == std::vector<Monomial>{Monomial{1}});
  (void)unit;
  CHECK(vdim(I(R, {"z", "x^3", "y^5"})) == 15);
  auto A = I(R, {"z", "x^2-y^4", "x*y^4", "y^5"});
  CHECK(vdim(A) == 9);
  auto lead = A.standard_basis().lead_ideal();
  std::sort(lead.begin(), lead.end());
  std::vector<Monomial> want{Monomial{0, 0, 1}, Monomial{0, 5, 0}, Monomial{1, 4, 0}, Monomial{2, 0, 0}};
  std::sort(want.begin(), want.end());
  CHECK(lead == want);
  CHECK(vdim(I(R, {"x", "y", "z"})) == 1);
  CHECK_FALSE(vdim(I(R, {"x", "y"})).has_value());
  CHECK(vdim(I(R, {"1+x"})) == 0);
}

TEST_CASE("standard bases of zero-dimensional ideals are truncated") {
  auto R = make_local_ring({"x", "y"});
  // Jacobian of a product of three branches; mu = 40.
  auto J = I(R, {"5*x^4*y-2*x*y^6+18*x^8-12*x^2*y^6-12*x^5*y^5-56*x^6*y^5+32*x^3*y^10",
                 "x^5-6*x^2*y^5-24*x^3*y^5-10*x^6*y^4+44*y^10-40*x^7*y^4+80*x^4*y^9"});
  CHECK(vdim(J) == 40);
  int top = 0;
  for (const auto& g : J.standard_basis().elements()) top = std::max(top, g.degree());
  CHECK(top <= 16);
  CHECK(contains(J, P(R, "y^16")));
  CHECK_FALSE(contains(J, P(R, "y^15")));
  CHECK(contains(J, P(R, "x^5-6*x^2*y^5-24*x^3*y^5-10*x^6*y^4+44*y^10-40*x^7*y^4+80*x^4*y^9+x*y^20")));
  CHECK_FALSE(contains(J, P(R, "x^4")));
  CHECK(P(R, "1+x+x*y^2").truncated(2) == P(R, "1+x"));
}

TEST_CASE("Krull dimension") {
  auto R = xyz();
  CHECK(krull_dim(Ideal(R)) == 3);
  CHECK(krull_dim(I(make_local_ring({"x", "y"}), {"x", "y"})) == 0);
  auto R4 = make_local_ring({"x", "y", "z", "t"});
  CHECK(krull_dim(I(R4, {"x*z", "x*y", "y*z+z*t"})) == 2);
  CHECK(krull_dim(I(R, {"1-x"})) == -1);
}

TEST_CASE("intersection and quotient dimension") {
  auto R = xyz();
  auto I1 = I(R, {"z", "x^2-y^4"});
  auto I2 = I(R, {"x", "y"});
  auto II = ideal_intersection(I1, I2);
  CHECK(equal(II, I(R, {"x*z", "y*z", "x^2-y^4"})));
  CHECK(equal(ideal_intersection(I1, I1), I1));
  auto r2 = make_local_ring({"x", "y"});
  CHECK(equal(ideal_intersection(I(r2, {"x"}), I(r2, {"y"})), I(r2, {"x*y"})));

  auto Q = I(R, {"z", "x^3", "y^5"});
  auto full = ideal_intersection(II, Q);
  CHECK(vdim_quotient(II, full) == 6);
  CHECK(vdim_quotient(full, full) == 0);
  auto r1 = make_local_ring({"x"});
  CHECK(vdim_quotient(I(r1, {"x"}), I(r1, {"x^2"})) == 1);
  CHECK_THROWS_AS(vdim_quotient(I(r2, {"x"}), I(r2, {"x*y"})), QuotientError);
  CHECK_THROWS_AS(vdim_quotient(I(r2, {"x^2"}), I(r2, {"x"})), QuotientError);
  // Truncation at the maximal lead degree alone would undercount here.
  CHECK(vdim_quotient(I(r2, {"x", "y"}), I(r2, {"x^3", "y^3"})) == 8);
}

TEST_CASE("local versus global") {
  auto rl = make_local_ring({"x", "y"});
  auto rg = make_global_ring({"x", "y"});
  // (x - x^2) has the unit 1 - x locally.
  CHECK(vdim(I(rl, {"x-x^2", "y"})) == 1);
  CHECK(vdim(I(rg, {"x-x^2", "y"})) == 2);
  CHECK(krull_dim(I(rg, {"x*(x-1)"})) == 1);
}

TEST_CASE("saturation") {
  auto r = make_global_ring({"x", "t"});
  auto sat = saturation(I(r, {"x*t", "t^2"}), P(r, "t"));
  CHECK(equal(sat, I(r, {"1"})));
  auto sat2 = saturation(I(r, {"x*t"}), P(r, "t"));
  CHECK(equal(sat2, I(r, {"x"})));
}

TEST_CASE("Jacobian and multiplicity") {
  auto r = make_local_ring({"x", "y"});
  CHECK(equal(jacobian_ideal(P(r, "x^2-y^3")), I(r, {"2*x", "-3*y^2"})));
  CHECK(vdim(jacobian_ideal(P(r, "x^2*y+x*y^2"))) == 4);
  CHECK(vdim(tjurina_ideal(P(r, "x^2-y^3"))) == 2);
  CHECK(multiplicity(I(r, {"x^2-y^3"})) == 2);
  CHECK(multiplicity(I(r, {"x*y*(x-y)"})) == 3);
  CHECK(multiplicity(I(xyz(), {"z", "x^3", "y^5"})) == 15);
  auto R = xyz();
  CHECK(multiplicity(I(R, {"x*y", "y*z", "x*z"})) == 3);
}
