#include "inns/branch/series.hpp"

#include <algorithm>

namespace inns::branch {

Series::Series(std::vector<Rational> coefficients, int precision, bool exact)
    : c_(std::move(coefficients)), prec_(precision), exact_(exact) {
  if (precision < 0) throw std::invalid_argument("negative series precision");
  if (!exact_ && static_cast<int>(c_.size()) > prec_ + 1) c_.resize(static_cast<std::size_t>(prec_) + 1);
  if (exact_ && static_cast<int>(c_.size()) > prec_ + 1) prec_ = static_cast<int>(c_.size()) - 1;
  normalize();
}

void Series::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Series Series::zero(int precision, bool exact) { return Series({}, precision, exact); }

Series Series::monomial(const Rational& c, int exponent, int precision) {
  std::vector<Rational> v(static_cast<std::size_t>(exponent) + 1, 0);
  v.back() = c;
  return Series(std::move(v), std::max(precision, exponent), true);
}

Rational Series::operator[](int k) const {
  if (k < 0) return 0;
  if (k > prec_ && !exact_) {
    throw PrecisionError("coefficient of t^" + std::to_string(k) + " exceeds precision " +
                         std::to_string(prec_));
  }
  return k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Rational(0);
}

std::optional<int> Series::order() const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) return static_cast<int>(k);
  }
  return std::nullopt;
}

std::vector<int> Series::support() const {
  std::vector<int> s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) s.push_back(static_cast<int>(k));
  }
  return s;
}

Series Series::with_precision(int precision) const {
  if (exact_) return Series(c_, std::max(precision, static_cast<int>(c_.size()) - 1), true);
  return Series(c_, std::min(precision, prec_), false);
}

namespace {

constexpr int kInfinite = 1 << 28;

int effective(const Series& s) { return s.exact() ? kInfinite : s.precision(); }

// Product of coefficient vectors, truncated to degree <= cap.
std::vector<Rational> mul_trunc(const std::vector<Rational>& a, const std::vector<Rational>& b, int cap) {
  if (a.empty() || b.empty()) return {};
  std::size_t len = std::min(a.size() + b.size() - 1, static_cast<std::size_t>(cap) + 1);
  std::vector<Rational> v(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) v[i + j] += a[i] * b[j];
  }
  return v;
}

}  // namespace

Series Series::operator+(const Series& o) const {
  const bool ex = exact_ && o.exact_;
  const int p = ex ? std::max(prec_, o.prec_) : std::min(effective(*this), effective(o));
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Series(std::move(v), p, ex);
}

Series Series::operator*(const Rational& c) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= c;
  return Series(std::move(v), prec_, exact_);
}

Series Series::operator-(const Series& o) const { return *this + o * Rational(-1); }

Series Series::operator*(const Series& o) const {
  const bool ex = exact_ && o.exact_;
  if (ex) return Series(mul_trunc(c_, o.c_, kInfinite), std::max(prec_, o.prec_), true);
  // An unknown tail of a starting at t^(pa+1) contributes from t^(pa+1+ord b).
  const int oa = is_identically_zero() ? kInfinite : order().value_or(effective(*this) + 1);
  const int ob = o.is_identically_zero() ? kInfinite : o.order().value_or(effective(o) + 1);
  const int p = std::min({effective(*this) + ob, effective(o) + oa, kInfinite});
  return Series(mul_trunc(c_, o.c_, p), p, false);
}

Series Series::shift_down(int k) const {
  auto o = order();
  if (o && *o < k) throw std::invalid_argument("shift_down below the order");
  if (!o && !exact_ && prec_ < k) throw PrecisionError("series unknown at the requested order");
  std::vector<Rational> v;
  if (static_cast<int>(c_.size()) > k) v.assign(c_.begin() + k, c_.end());
  return Series(std::move(v), std::max(0, prec_ - k), exact_);
}

Series Series::inverse() const {
  Rational a0 = (*this)[0];
  if (a0 == 0) throw std::invalid_argument("inverse of a non-unit series");
  const int p = prec_;
  std::vector<Rational> v(static_cast<std::size_t>(p) + 1, 0);
  v[0] = 1 / a0;
  for (int k = 1; k <= p; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j) s += c_[j] * v[k - j];
    v[k] = -s / a0;
  }
  return Series(std::move(v), p, false);
}

Series Series::rational_power(const Rational& exponent) const {
  if ((*this)[0] != 1) throw std::invalid_argument("rational_power needs constant term 1");
  const int p = prec_;
  // Power series (1+w)^a via a' * f = a * f * (1+w)' / (1+w), solved term by term.
  std::vector<Rational> f(static_cast<std::size_t>(p) + 1, 0);
  f[0] = 1;
  auto g = [&](int k) -> Rational { return k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); };
  // (1+w) f' = a w' f  =>  k f_k = sum_{j=1..k} (a j - (k - j)) g_j f_{k-j}
  for (int k = 1; k <= p; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) {
      Rational gj = g(j);
      if (gj == 0) continue;
      s += (exponent * j - (k - j)) * gj * f[k - j];
    }
    f[k] = s / k;
  }
  return Series(std::move(f), p, false);
}

Series Series::compose(const Series& g) const {
  if (g[0] != 0) throw std::invalid_argument("compose needs an inner series without constant term");
  const bool ex = exact_ && g.exact_;
  int p = kInfinite;
  if (!ex) {
    const int og = g.is_identically_zero() ? kInfinite : g.order().value_or(effective(g) + 1);
    if (!exact_) p = std::min(p, (prec_ + 1) * og - 1);
    if (!g.exact_) p = std::min(p, g.prec_);
  }
  std::vector<Rational> acc;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = mul_trunc(acc, g.c_, p);
    if (acc.empty()) acc.resize(1, 0);
    acc[0] += c_[i];
  }
  if (ex) {
    int deg = static_cast<int>(acc.size()) - 1;
    return Series(std::move(acc), std::max({prec_, g.prec_, deg}), true);
  }
  return Series(std::move(acc), p, false);
}

}  // namespace inns::branch
