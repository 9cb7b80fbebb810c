#include "inns/kernel/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace inns::kernel {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

void require_same(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("polynomials live in different rings");
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Monomial one(ring->var_count());
  return term(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->var_count());
  m[index] = 1;
  return term(std::move(ring), std::move(m), Rational(1));
}

Polynomial Polynomial::term(RingPtr ring, Monomial mono, const Rational& c) {
  if (mono.size() != ring->var_count()) throw std::invalid_argument("monomial length mismatch");
  if (c == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), std::vector<Term>{{std::move(mono), c}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& ord = ring->ordering();
  for (const auto& t : terms) {
    if (t.mono.size() != ring->var_count()) throw std::invalid_argument("monomial length mismatch");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.mono, b.mono) == std::strong_ordering::greater;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int Polynomial::order() const {
  if (terms_.empty()) return -1;
  int d = terms_[0].mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

int Polynomial::ecart() const {
  if (terms_.empty()) return 0;
  return degree() - lead_monomial().degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coef;
  }
  return Rational(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (other.is_zero()) return *this;
  if (is_zero()) return other;
  require_same(ring_, other.ring_);
  const auto& ord = ring_->ordering();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    auto c = ord.compare(terms_[i].mono, other.terms_[j].mono);
    if (c == std::strong_ordering::greater) {
      out.push_back(terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(other.terms_[j++]);
    } else {
      Rational s = terms_[i].coef + other.terms_[j].coef;
      if (s != 0) out.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) out.push_back(other.terms_[j]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial& Polynomial::operator+=(const Polynomial& other) { return *this = *this + other; }
Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this = *this - other; }

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coef *= c;
  }
  // Multiplying by a monomial preserves any monomial ordering.
  return r;
}

Polynomial Polynomial::sub_mul_term(const Monomial& m, const Rational& c,
                                    const Polynomial& g) const {
  if (c == 0 || g.is_zero()) return *this;
  require_same(ring_, g.ring_);
  const auto& ord = ring_->ordering();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial gm;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size()) gm = g.terms_[j].mono * m;
    if (j >= g.terms_.size()) {
      out.push_back(terms_[i++]);
      continue;
    }
    if (i >= terms_.size()) {
      out.push_back({gm, -c * g.terms_[j].coef});
      ++j;
      continue;
    }
    auto cmp = ord.compare(terms_[i].mono, gm);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(terms_[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({gm, -c * g.terms_[j].coef});
      ++j;
    } else {
      Rational s = terms_[i].coef - c * g.terms_[j].coef;
      if (s != 0) out.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return Polynomial(ring_ ? ring_ : other.ring_);
  require_same(ring_, other.ring_);
  std::map<Monomial, Rational> acc;
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) acc[a.mono * b.mono] += a.coef * b.coef;
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, c});
  }
  return from_terms(ring_, std::move(terms));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Term d = t;
    d.coef *= t.mono[var];
    d.mono[var] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / lead_coef();
  return *this * inv;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.degree() == d) out.push_back(t);
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::truncated(int bound) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.degree() < bound) out.push_back(t);
  }
  return Polynomial(ring_, std::move(out));
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[var] > 0; });
}

Polynomial Polynomial::in_ring(RingPtr ring) const {
  if (ring->var_count() != (ring_ ? ring_->var_count() : ring->var_count())) {
    throw std::invalid_argument("in_ring: variable count mismatch");
  }
  return from_terms(std::move(ring), terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? "-" : "+");
    }
    first = false;
    const bool one = t.mono.is_one();
    if (c != 1 || one) {
      os << c.get_str();
      if (!one) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->variables()[i];
      if (t.mono[i] > 1) os << "^" << t.mono[i];
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (!same_ring(a.ring_, b.ring_)) return false;
  return a.terms_ == b.terms_;
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(p.ring(), 1);
  Polynomial base = p;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images,
                      const RingPtr& target) {
  const auto& vars = p.ring()->variables();
  std::vector<Polynomial> img;
  img.reserve(vars.size());
  for (const auto& v : vars) {
    auto it = images.find(v);
    if (it != images.end()) {
      if (!it->second.is_zero() && !same_ring(it->second.ring(), target)) {
        throw std::invalid_argument("image of " + v + " is not in the target ring");
      }
      img.push_back(it->second.is_zero() ? Polynomial(target) : it->second);
      continue;
    }
    auto idx = target->index_of(v);
    if (!idx) throw std::invalid_argument("undeclared variable " + v + " in substitution target");
    img.push_back(Polynomial::variable(target, *idx));
  }
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(vars.size());
  auto power = [&](std::size_t v, int e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * img[v]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coef);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (t.mono[v] > 0) prod = prod * power(v, t.mono[v]);
      if (prod.is_zero()) break;
    }
    result += prod;
  }
  return result;
}

Polynomial translate(const Polynomial& p, const std::vector<Rational>& shift) {
  const auto& ring = p.ring();
  std::map<std::string, Polynomial> images;
  for (std::size_t i = 0; i < shift.size() && i < ring->var_count(); ++i) {
    if (shift[i] == 0) continue;
    images.emplace(ring->variables()[i],
                   Polynomial::variable(ring, i) + Polynomial::constant(ring, shift[i]));
  }
  if (images.empty()) return p;
  return substitute(p, images, ring);
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < t.mono.size() && v != 0; ++i) {
      for (int k = 0; k < t.mono[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

}  // namespace inns::kernel
