#include "inns/branch/branch.hpp"

#include <algorithm>
#include <numeric>

namespace inns::branch {

namespace {

constexpr int kMaxSteps = 4096;

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

}  // namespace

Branch::Branch(std::vector<Series> components, bool declared_injective)
    : comps_(std::move(components)), injective_(declared_injective) {
  if (comps_.empty()) throw BranchError("branch without components");
  for (const auto& s : comps_) {
    if (s[0] != 0) throw BranchError("branch component has a nonzero constant term");
  }
}

Branch Branch::from_polynomials(const std::vector<kernel::Polynomial>& components, int precision) {
  std::vector<Series> out;
  for (const auto& p : components) {
    std::vector<Rational> c;
    for (const auto& t : p.terms()) {
      if (t.mono.size() != 1) throw BranchError("branch components must be univariate");
      std::size_t e = static_cast<std::size_t>(t.mono[0]);
      if (c.size() <= e) c.resize(e + 1, 0);
      c[e] += t.coef;
    }
    out.emplace_back(std::move(c), precision, true);
  }
  return Branch(std::move(out));
}

Branch Branch::monomial(const std::vector<int>& exponents, const std::vector<Rational>& coefficients,
                        int precision) {
  std::vector<Series> out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) {
      out.push_back(Series::zero(precision));
      continue;
    }
    Rational c = i < coefficients.size() ? coefficients[i] : Rational(1);
    out.push_back(Series::monomial(c, exponents[i], precision));
  }
  return Branch(std::move(out));
}

int Branch::precision() const {
  int p = 1 << 28;
  bool any_inexact = false;
  int exact_max = 0;
  for (const auto& s : comps_) {
    if (s.exact()) {
      exact_max = std::max(exact_max, s.precision());
    } else {
      any_inexact = true;
      p = std::min(p, s.precision());
    }
  }
  return any_inexact ? p : exact_max;
}

bool Branch::exact() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Series& s) { return s.exact(); });
}

Branch Branch::with_precision(int precision) const {
  std::vector<Series> out;
  for (const auto& s : comps_) out.push_back(s.with_precision(precision));
  return Branch(std::move(out), injective_);
}

std::vector<std::size_t> Branch::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (!comps_[i].is_identically_zero()) s.push_back(i);
  }
  return s;
}

int branch_multiplicity(const Branch& b) {
  std::optional<int> m;
  for (const auto& s : b.components()) {
    if (auto o = s.order()) m = m ? std::min(*m, *o) : *o;
  }
  if (!m) {
    if (b.support().empty()) throw BranchError("all branch components are zero");
    throw PrecisionError("branch is zero up to the available precision");
  }
  for (const auto& s : b.components()) {
    if (!s.order() && !s.exact() && s.precision() < *m) {
      throw PrecisionError("component order not determined at the available precision");
    }
  }
  return *m;
}

std::vector<Rational> tangent_direction(const Branch& b) {
  const int m = branch_multiplicity(b);
  std::vector<Rational> d;
  for (const auto& s : b.components()) d.push_back(s[m]);
  return d;
}

BlowupResult blowup_branch(const Branch& b) {
  const int m = branch_multiplicity(b);
  std::size_t k = 0;
  while (b[k].order() != m) ++k;
  const int n = b.precision() - m;
  if (n < 1) throw PrecisionError("precision exhausted during blowup");
  Series u = b[k].shift_down(m);
  Series inv;
  if (u.exact() && u.coefficients().size() == 1) {
    inv = Series({1 / u.coefficients()[0]}, 0, true);
  } else {
    inv = u.with_precision(n).inverse();
  }
  std::vector<Series> comps;
  std::vector<Rational> center;
  for (std::size_t j = 0; j < b.dimension(); ++j) {
    if (j == k) {
      comps.push_back(b[j]);
      center.push_back(0);
      continue;
    }
    Series q = b[j].shift_down(m).with_precision(n) * inv;
    Rational c = q[0];
    center.push_back(c);
    if (c != 0) q = q - Series({c}, 0, true);
    comps.push_back(std::move(q));
  }
  return {Branch(std::move(comps), b.declared_injective()), k, std::move(center)};
}

namespace {

void check_exact_injective(const Branch& b) {
  if (!b.exact()) return;
  int g = 0;
  for (const auto& s : b.components()) {
    for (int e : s.support()) g = std::gcd(g, e);
  }
  if (g > 1) {
    throw BranchError("parametrization is not injective: all exponents divisible by " +
                      std::to_string(g));
  }
}

}  // namespace

MultSequence multiplicity_sequence(const Branch& b) {
  check_exact_injective(b);
  MultSequence seq;
  Branch cur = b;
  for (int step = 0; step < kMaxSteps; ++step) {
    const int m = branch_multiplicity(cur);
    if (m == 1) {
      seq.resolved = true;
      while (!seq.entries.empty() && seq.entries.back() == 1) seq.entries.pop_back();
      return seq;
    }
    if (cur.support().size() == 1) throw BranchError("parametrization is not injective");
    seq.entries.push_back(m);
    cur = blowup_branch(cur).strict_transform;
  }
  throw PrecisionError("branch did not resolve");
}

bool is_plane(const Branch& b) { return b.support().size() <= 2; }

bool is_monomial(const Branch& b) {
  for (std::size_t i : b.support()) {
    if (!b[i].exact() || b[i].support().size() != 1) return false;
  }
  return true;
}

std::vector<int> characteristic_exponents(const Branch& b) {
  if (!is_plane(b)) throw BranchError("Puiseux pairs need a plane branch");
  check_exact_injective(b);
  const int m = branch_multiplicity(b);
  auto sup = b.support();
  if (m == 1) return {1};
  if (sup.size() < 2) throw BranchError("parametrization is not injective");
  std::size_t xi = sup[0];
  std::size_t yi = sup[1];
  if (b[xi].order() != m) std::swap(xi, yi);
  const Series& X = b[xi];
  Series Y = b[yi];
  if (!(X.exact() && X.support().size() == 1)) {
    // Reparametrize so that X = c * tau^m.
    const int n = b.precision() - m;
    if (n < 1) throw PrecisionError("precision exhausted in reparametrization");
    Series unit = X.shift_down(m).with_precision(n) * (1 / X[m]);
    Series v = unit.rational_power(Rational(1, m));        // tau = t * v(t)
    Series vinv = v.inverse();
    Series t_of_tau({0, 1}, n + 1, false);                // t = tau * vinv(t)
    Series tau({0, 1}, 1, true);
    for (int it = 0; it <= n + 1; ++it) {
      t_of_tau = tau * vinv.compose(t_of_tau);
    }
    Y = Y.compose(t_of_tau);
  }
  std::vector<int> beta{m};
  int e = m;
  for (int a : Y.support()) {
    if (a % e == 0) continue;
    beta.push_back(a);
    e = std::gcd(e, a);
    if (e == 1) return beta;
  }
  if (Y.exact()) throw BranchError("parametrization is not injective");
  throw PrecisionError("characteristic exponents not determined at the available precision");
}

PuiseuxPairs puiseux_pairs(const Branch& b) {
  auto beta = characteristic_exponents(b);
  PuiseuxPairs pairs;
  int e_prev = beta[0];
  for (std::size_t k = 1; k < beta.size(); ++k) {
    int e = std::gcd(e_prev, beta[k]);
    pairs.emplace_back(e_prev / e, beta[k] / e);
    e_prev = e;
  }
  return pairs;
}

std::int64_t semigroup_gaps(const std::vector<int>& generators) {
  int g = 0;
  int lo = 0;
  for (int a : generators) {
    if (a <= 0) throw std::invalid_argument("semigroup generators must be positive");
    g = std::gcd(g, a);
    lo = lo == 0 ? a : std::min(lo, a);
  }
  if (g != 1) throw BranchError("semigroup generators have gcd > 1: infinitely many gaps");
  std::vector<char> in{1};
  std::int64_t gaps = 0;
  int run = 0;
  for (int n = 1; run < lo; ++n) {
    bool member = false;
    for (int a : generators) {
      if (a <= n && in[static_cast<std::size_t>(n - a)]) {
        member = true;
        break;
      }
    }
    in.push_back(member ? 1 : 0);
    if (member) {
      ++run;
    } else {
      run = 0;
      ++gaps;
    }
  }
  return gaps;
}

std::int64_t delta_branch(const Branch& b) {
  if (branch_multiplicity(b) == 1) return 0;
  if (is_plane(b)) {
    std::int64_t d = 0;
    for (int m : multiplicity_sequence(b).entries) d += static_cast<std::int64_t>(m) * (m - 1) / 2;
    return d;
  }
  if (is_monomial(b)) {
    std::vector<int> gens;
    for (std::size_t i : b.support()) gens.push_back(*b[i].order());
    return semigroup_gaps(gens);
  }
  throw BranchError("delta of a non-plane, non-monomial branch must be declared");
}

std::int64_t intersection_multiplicity_branches(const Branch& a, const Branch& b) {
  if (a.dimension() != b.dimension()) throw BranchError("branches live in different spaces");
  auto sa = a.support();
  auto sb = b.support();
  std::vector<std::size_t> all = sa;
  all.insert(all.end(), sb.begin(), sb.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.size() > 2) throw BranchError("intersection multiplicity needs branches in a common plane");
  Branch x = a;
  Branch y = b;
  std::int64_t total = 0;
  for (int step = 0; step < kMaxSteps; ++step) {
    const int ma = branch_multiplicity(x);
    const int mb = branch_multiplicity(y);
    total += static_cast<std::int64_t>(ma) * mb;
    if (!proportional(tangent_direction(x), tangent_direction(y))) return total;
    if (ma == 1 && mb == 1 && x.support().size() == 1 && y.support().size() == 1) {
      throw BranchError("branches have the same image");
    }
    auto bx = blowup_branch(x);
    auto by = blowup_branch(y);
    if (bx.chart != by.chart || bx.center != by.center) return total;
    x = bx.strict_transform;
    y = by.strict_transform;
  }
  throw BranchError("branches did not separate");
}

}  // namespace inns::branch
