#include "inns/kernel/ideal.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

namespace inns::kernel {

namespace {

using Series = std::vector<std::int64_t>;  // coefficients of t^0, t^1, ...

void minimize_monomials(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  gens = std::move(out);
}

Series series_mul(const Series& a, const Series& b) {
  Series r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void series_sub_shifted(Series& a, const Series& b, int shift) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + shift, 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= b[j];
}

// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of Q[x]/L.
Series hilbert_numerator(std::vector<Monomial> gens) {
  minimize_monomials(gens);
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].coprime(gens[j])) {
        pairwise_coprime = false;
        break;
      }
    }
  }
  if (pairwise_coprime) {
    Series r{1};
    for (const auto& g : gens) {
      Series f(static_cast<std::size_t>(g.degree()) + 1, 0);
      f[0] = 1;
      f.back() -= 1;
      r = series_mul(r, f);
    }
    return r;
  }
  // N(L + <m>) = N(L) - t^deg(m) N(L : m), pivoting on the last generator.
  Monomial m = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) q[i] = std::max(0, g[i] - m[i]);
    colon.push_back(std::move(q));
  }
  Series r = hilbert_numerator(gens);
  series_sub_shifted(r, hilbert_numerator(std::move(colon)), m.degree());
  return r;
}

// Divide by (1-t) as long as it is exact; returns the number of divisions.
int strip_one_minus_t(Series& s, int max_times) {
  int k = 0;
  while (k < max_times) {
    std::int64_t total = 0;
    for (auto c : s) total += c;
    if (total != 0) break;
    Series q(s.size() > 1 ? s.size() - 1 : 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      acc += s[i];
      q[i] = acc;
    }
    s = std::move(q);
    ++k;
  }
  return k;
}

struct Element {
  Polynomial poly;
  int ecart;
};

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (n > 0) rec(0, d);
  return out;
}

// Under ds the lead monomial has the least degree, so L(G) containing all
// monomials of degree N forces m^N into <G>.
bool degree_local(const MonomialOrdering& ord) {
  return ord.blocks().size() == 1 && ord.blocks().front().kind == BlockKind::Local;
}

// Least N with every monomial of degree N in <leads>, or -1 if none.
int noether_bound(const std::vector<Monomial>& leads, std::size_t var_count) {
  for (std::size_t v = 0; v < var_count; ++v) {
    bool pure = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      for (std::size_t w = 0; w < var_count; ++w) {
        if (w != v && m[w] != 0) return false;
      }
      return true;
    });
    if (!pure) return -1;
  }
  Series n = hilbert_numerator(leads);
  strip_one_minus_t(n, static_cast<int>(var_count));
  int last = -1;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] != 0) last = static_cast<int>(i);
  }
  return last + 1;
}

Polynomial bounded_normal_form(const Polynomial& f, std::span<const Polynomial> G, int bound) {
  Polynomial h = bound >= 0 ? f.truncated(bound) : f;
  if (h.is_zero()) return h;
  const bool global = f.ring()->ordering().is_global();
  std::vector<Element> T;
  T.reserve(G.size() + 8);
  for (const auto& g : G) {
    if (!g.is_zero()) T.push_back({g, g.ecart()});
  }
  while (!h.is_zero()) {
    const Monomial& lm = h.lead_monomial();
    const Element* best = nullptr;
    for (const auto& e : T) {
      if (e.poly.lead_monomial().divides(lm) && (!best || e.ecart < best->ecart)) best = &e;
    }
    if (!best) break;
    const int eh = h.ecart();
    Polynomial g = best->poly;
    if (!global && best->ecart > eh) T.push_back({h, eh});
    h = h.sub_mul_term(lm / g.lead_monomial(), h.lead_coef() / g.lead_coef(), g);
    if (bound >= 0) h = h.truncated(bound);
  }
  return h;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Monomial l = Monomial::lcm(f.lead_monomial(), g.lead_monomial());
  Polynomial a = f.mul_term(l / f.lead_monomial(), 1 / f.lead_coef());
  return a.sub_mul_term(l / g.lead_monomial(), 1 / g.lead_coef(), g);
}

int lcm_degree(const Polynomial& f, const Polynomial& g) {
  return Monomial::lcm(f.lead_monomial(), g.lead_monomial()).degree();
}

}  // namespace

Polynomial mora_normal_form(const Polynomial& f, std::span<const Polynomial> G) {
  return bounded_normal_form(f, G, -1);
}

StandardBasis::StandardBasis(RingPtr ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {
  for (const auto& e : elements_) lead_.push_back(e.lead_monomial());
  minimize_monomials(lead_);
  if (degree_local(ring_->ordering())) noether_ = noether_bound(lead_, ring_->var_count());
}

bool StandardBasis::is_unit() const {
  return std::any_of(lead_.begin(), lead_.end(), [](const Monomial& m) { return m.is_one(); });
}

Polynomial StandardBasis::normal_form(const Polynomial& f) const {
  return bounded_normal_form(f, elements_, noether_);
}

bool StandardBasis::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

StandardBasis standard_basis(const Ideal& I) {
  const RingPtr& ring = I.ring();
  std::vector<Polynomial> G;
  for (const auto& g : I.generators()) {
    if (g.is_constant()) return StandardBasis(ring, {Polynomial::constant(ring, 1)});
    G.push_back(g.monic());
  }

  struct Pair {
    std::size_t i;
    std::size_t j;
    int deg;
    std::size_t seq;
  };
  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t seq = 0;
  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (G[i].lead_monomial().coprime(G[k].lead_monomial())) continue;
      queue.push_back({i, k, lcm_degree(G[i], G[k]), seq++});
      pending.insert({i, k});
    }
  };
  for (std::size_t k = 0; k < G.size(); ++k) add_pairs(k);

  // Once m^noether lies in I, terms of that degree are dropped throughout.
  const bool truncating = degree_local(ring->ordering());
  int noether = -1;
  auto update_noether = [&] {
    if (!truncating) return;
    std::vector<Monomial> leads;
    for (const auto& g : G) leads.push_back(g.lead_monomial());
    minimize_monomials(leads);
    int n = noether_bound(leads, ring->var_count());
    if (n >= 0 && (noether < 0 || n < noether)) noether = n;
  };
  update_noether();

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), [](const Pair& a, const Pair& b) {
      return a.deg != b.deg ? a.deg < b.deg : a.seq < b.seq;
    });
    Pair p = *it;
    queue.erase(it);
    pending.erase({p.i, p.j});

    // Chain criterion.
    Monomial l = Monomial::lcm(G[p.i].lead_monomial(), G[p.j].lead_monomial());
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (G[k].lead_monomial().divides(l) && !is_pending(p.i, k) && !is_pending(p.j, k)) skip = true;
    }
    if (skip) continue;

    Polynomial h = bounded_normal_form(spoly(G[p.i], G[p.j]), G, noether);
    if (h.is_zero()) continue;
    if (h.lead_monomial().is_one()) return StandardBasis(ring, {Polynomial::constant(ring, 1)});
    G.push_back(h.monic());
    add_pairs(G.size() - 1);
    update_noether();
  }

  if (noether >= 0) {
    for (auto& g : G) g = g.truncated(noether);
    std::erase_if(G, [](const Polynomial& g) { return g.is_zero(); });
    std::vector<Monomial> leads;
    for (const auto& g : G) leads.push_back(g.lead_monomial());
    for (const auto& m : monomials_of_degree(ring->var_count(), noether)) {
      bool covered = std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
      if (!covered) G.push_back(Polynomial::term(ring, m, 1));
    }
  }

  // Minimize: drop elements whose lead monomial is divisible by another's.
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !G[j].lead_monomial().divides(G[i].lead_monomial())) continue;
      redundant = G[j].lead_monomial() != G[i].lead_monomial() || j < i;
    }
    if (!redundant) out.push_back(G[i]);
  }
  return StandardBasis(ring, std::move(out));
}

struct Ideal::Cache {
  std::once_flag once;
  std::optional<StandardBasis> sb;
};

Ideal::Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("generator is not in the ideal's ring");
    gens_.push_back(std::move(g));
  }
}

const StandardBasis& Ideal::standard_basis() const {
  std::call_once(cache_->once, [this] { cache_->sb.emplace(kernel::standard_basis(*this)); });
  return *cache_->sb;
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw std::invalid_argument("ideals live in different rings");
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw std::invalid_argument("ideals live in different rings");
  std::vector<Polynomial> g;
  for (const auto& a : gens_) {
    for (const auto& b : other.gens_) g.push_back(a * b);
  }
  return Ideal(ring_, std::move(g));
}

std::string Ideal::to_string() const {
  if (gens_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].to_string();
  }
  return os.str();
}

int monomial_dimension(std::span<const Monomial> gens, std::size_t var_count) {
  for (const auto& g : gens) {
    if (g.is_one()) return -1;
  }
  int best = 0;
  const std::size_t subsets = std::size_t{1} << var_count;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    int size = __builtin_popcountll(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& g : gens) {
      bool inside = true;
      for (std::size_t v = 0; v < var_count; ++v) {
        if (g[v] > 0 && !(mask >> v & 1U)) {
          inside = false;
          break;
        }
      }
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::optional<std::int64_t> count_standard_monomials(std::span<const Monomial> gens,
                                                     std::size_t var_count) {
  int dim = monomial_dimension(gens, var_count);
  if (dim < 0) return 0;
  if (dim > 0) return std::nullopt;
  Series n = hilbert_numerator(std::vector<Monomial>(gens.begin(), gens.end()));
  int k = strip_one_minus_t(n, static_cast<int>(var_count));
  if (k != static_cast<int>(var_count)) throw std::logic_error("Hilbert series inconsistent with dimension");
  std::int64_t total = 0;
  for (auto c : n) total += c;
  return total;
}

std::vector<std::int64_t> hilbert_function(std::span<const Monomial> lead_ideal,
                                           std::size_t var_count, int max_degree) {
  Series n = hilbert_numerator(std::vector<Monomial>(lead_ideal.begin(), lead_ideal.end()));
  // Multiply by 1/(1-t)^n, truncated.
  std::vector<std::int64_t> h(static_cast<std::size_t>(max_degree) + 1, 0);
  for (std::size_t i = 0; i < n.size() && i < h.size(); ++i) h[i] = n[i];
  for (std::size_t v = 0; v < var_count; ++v) {
    for (std::size_t i = 1; i < h.size(); ++i) h[i] += h[i - 1];
  }
  return h;
}

std::optional<std::int64_t> vdim(const Ideal& I) {
  const auto& sb = I.standard_basis();
  return count_standard_monomials(sb.lead_ideal(), I.ring()->var_count());
}

int krull_dim(const Ideal& I) {
  return monomial_dimension(I.standard_basis().lead_ideal(), I.ring()->var_count());
}

std::optional<std::int64_t> multiplicity(const Ideal& I) {
  const auto& lead = I.standard_basis().lead_ideal();
  const std::size_t n = I.ring()->var_count();
  int dim = monomial_dimension(lead, n);
  if (dim < 0) return std::nullopt;
  Series num = hilbert_numerator(lead);
  int k = strip_one_minus_t(num, static_cast<int>(n));
  if (k != static_cast<int>(n) - dim) throw std::logic_error("Hilbert series inconsistent with dimension");
  std::int64_t e = 0;
  for (auto c : num) e += c;
  return e;
}

std::int64_t vdim_quotient(const Ideal& J, const Ideal& I) {
  if (!is_subset(I, J)) throw QuotientError("vdim_quotient: I is not contained in J");
  const std::size_t n = I.ring()->var_count();
  const auto& LI = I.standard_basis().lead_ideal();
  const auto& LJ = J.standard_basis().lead_ideal();
  // dim J/I = #(L(J) \ L(I)). The part above a generator m of L(J) is
  // m * (standard monomials of L(I) : m), finite iff that colon is
  // zero-dimensional.
  int bound = 0;
  for (const auto& m : LJ) {
    std::vector<Monomial> colon;
    for (const auto& g : LI) {
      Monomial q(n);
      for (std::size_t i = 0; i < n; ++i) q[i] = std::max(0, g[i] - m[i]);
      colon.push_back(std::move(q));
    }
    int d = monomial_dimension(colon, n);
    if (d > 0) throw QuotientError("vdim_quotient: J/I is not finite dimensional");
    if (d < 0) continue;
    // Standard monomials of a zero-dimensional monomial ideal have degree
    // below the sum of its pure-power exponents.
    int top = 0;
    for (std::size_t v = 0; v < n; ++v) {
      int pure = 0;
      for (const auto& c : colon) {
        bool only_v = true;
        for (std::size_t w = 0; w < n; ++w) {
          if (w != v && c[w] > 0) only_v = false;
        }
        if (only_v && c[v] > 0 && (pure == 0 || c[v] < pure)) pure = c[v];
      }
      top += pure;
    }
    bound = std::max(bound, m.degree() + top);
  }
  auto in_lead = [](std::span<const Monomial> L, const Monomial& x) {
    return std::any_of(L.begin(), L.end(), [&](const Monomial& g) { return g.divides(x); });
  };
  std::int64_t count = 0;
  Monomial x(n);
  // Enumerate all monomials of degree <= bound.
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v + 1 == n || n == 0) {
      if (n) x[v] = 0;
      for (int e = 0; e <= left; ++e) {
        if (n) x[v] = e;
        if (in_lead(LJ, x) && !in_lead(LI, x)) ++count;
        if (!n) break;
      }
      if (n) x[v] = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      x[v] = e;
      rec(v + 1, left - e);
    }
    x[v] = 0;
  };
  rec(0, bound);
  return count;
}

bool contains(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) return true;
  return I.standard_basis().contains(f.in_ring(I.ring()));
}

bool is_subset(const Ideal& I, const Ideal& J) {
  const auto& sb = J.standard_basis();
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const Polynomial& g) { return sb.contains(g); });
}

bool equal(const Ideal& I, const Ideal& J) { return is_subset(I, J) && is_subset(J, I); }

namespace {

// Ring with a fresh variable prepended in a global block of size one.
RingPtr extend_with(const RingPtr& ring, const std::string& base) {
  std::string name = base;
  while (ring->index_of(name)) name += "_";
  std::vector<std::string> vars{name};
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  return make_ring(std::move(vars), ring->ordering().with_leading_block(BlockKind::Global, 1));
}

Polynomial lift(const Polynomial& p, const RingPtr& big) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<int> e{0};
    e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
    terms.push_back({Monomial(std::move(e)), t.coef});
  }
  return Polynomial::from_terms(big, std::move(terms));
}

// Elements of the standard basis of `big` not involving the first variable.
Ideal eliminate_first(const Ideal& big, const RingPtr& small) {
  std::vector<Polynomial> out;
  for (const auto& g : big.standard_basis().elements()) {
    if (g.involves(0)) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      std::vector<int> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
      terms.push_back({Monomial(std::move(e)), t.coef});
    }
    out.push_back(Polynomial::from_terms(small, std::move(terms)));
  }
  return Ideal(small, std::move(out));
}

}  // namespace

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw std::invalid_argument("ideals live in different rings");
  const RingPtr& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal(ring);
  RingPtr big = extend_with(ring, "u");
  Polynomial u = Polynomial::variable(big, 0);
  Polynomial one_minus_u = Polynomial::constant(big, 1) - u;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(u * lift(f, big));
  for (const auto& g : J.generators()) gens.push_back(one_minus_u * lift(g, big));
  return eliminate_first(Ideal(big, std::move(gens)), ring);
}

Ideal ideal_intersection(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of no ideals");
  Ideal acc = ideals[0];
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersection(acc, ideals[i]);
  return acc;
}

Ideal saturation(const Ideal& I, const Polynomial& f) {
  const RingPtr& ring = I.ring();
  RingPtr big = extend_with(ring, "s");
  Polynomial s = Polynomial::variable(big, 0);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(lift(g, big));
  gens.push_back(Polynomial::constant(big, 1) - s * lift(f, big));
  return eliminate_first(Ideal(big, std::move(gens)), ring);
}

Ideal jacobian_ideal(const Polynomial& f) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < f.ring()->var_count(); ++i) g.push_back(f.derivative(i));
  return Ideal(f.ring(), std::move(g));
}

Ideal tjurina_ideal(const Polynomial& f) {
  Ideal J = jacobian_ideal(f);
  std::vector<Polynomial> g = J.generators();
  g.push_back(f);
  return Ideal(f.ring(), std::move(g));
}

Ideal substitute(const Ideal& I, const std::map<std::string, Polynomial>& images,
                 const RingPtr& target) {
  std::vector<Polynomial> g;
  for (const auto& p : I.generators()) g.push_back(substitute(p, images, target));
  return Ideal(target, std::move(g));
}

Ideal translate(const Ideal& I, const std::vector<Rational>& shift) {
  std::vector<Polynomial> g;
  for (const auto& p : I.generators()) g.push_back(translate(p, shift));
  return Ideal(I.ring(), std::move(g));
}

Ideal in_ring(const Ideal& I, const RingPtr& ring) {
  std::vector<Polynomial> g;
  for (const auto& p : I.generators()) g.push_back(p.in_ring(ring));
  return Ideal(ring, std::move(g));
}

Ideal maximal_ideal_power(const RingPtr& ring, int d) {
  const std::size_t n = ring->var_count();
  std::vector<Polynomial> gens;
  Monomial x(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v + 1 == n) {
      x[v] = left;
      gens.push_back(Polynomial::term(ring, x, 1));
      x[v] = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      x[v] = e;
      rec(v + 1, left - e);
    }
    x[v] = 0;
  };
  if (n == 0 || d == 0) return Ideal(ring, {Polynomial::constant(ring, 1)});
  rec(0, d);
  return Ideal(ring, std::move(gens));
}

}  // namespace inns::kernel
