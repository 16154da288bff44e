#include "riordan/series.hpp"

#include <algorithm>
#include <ostream>

namespace riordan {

void Poly::trim() {
  while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) c_.push_back(Rat(0));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  std::vector<Rat> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.coeff(0).is_zero())
    throw std::invalid_argument("RatFunc: denominator has zero constant term");
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num() * b.num(), a.den() * b.den());
}

Series::Series(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("Series: order must be at least 1");
}

Series Series::constant(const Rat& value, int order) {
  std::vector<Rat> c(static_cast<std::size_t>(order), Rat(0));
  c.at(0) = value;
  return Series(std::move(c));
}

Series Series::x(int order) {
  std::vector<Rat> c(static_cast<std::size_t>(order), Rat(0));
  if (order >= 2) c[1] = Rat(1);
  return Series(std::move(c));
}

Series Series::truncated(int order) const {
  if (order < 1 || order > this->order())
    throw std::invalid_argument("Series::truncated: order out of range");
  return Series(std::vector<Rat>(c_.begin(), c_.begin() + order));
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.is_zero(); });
}

Series expand(const RatFunc& rf, int n) {
  if (n < 1) throw std::invalid_argument("expand: order must be at least 1");
  const Rat d0 = rf.den().coeff(0);
  std::vector<Rat> a(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Rat acc = rf.num().coeff(k);
    for (int j = 1; j <= std::min(k, rf.den().degree()); ++j) acc -= rf.den().coeff(j) * a[k - j];
    a[k] = acc / d0;
  }
  return Series(std::move(a));
}

Series add(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rat> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Series(std::move(c));
}

Series sub(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rat> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Series(std::move(c));
}

Series mul(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rat> c(static_cast<std::size_t>(n), Rat(0));
  for (int i = 0; i < n; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j < n; ++j) c[i + j] += a.coeff(i) * b.coeff(j);
  }
  return Series(std::move(c));
}

Series scale(const Rat& s, const Series& a) {
  std::vector<Rat> c(a.coeffs());
  for (auto& x : c) x *= s;
  return Series(std::move(c));
}

Series reciprocal(const Series& a) {
  if (a.coeff(0).is_zero()) throw std::domain_error("reciprocal: zero constant term");
  const int n = a.order();
  std::vector<Rat> b(static_cast<std::size_t>(n));
  b[0] = Rat(1) / a.coeff(0);
  for (int k = 1; k < n; ++k) {
    Rat acc(0);
    for (int j = 1; j <= k; ++j) acc += a.coeff(j) * b[k - j];
    b[k] = -acc / a.coeff(0);
  }
  return Series(std::move(b));
}

Series compose(const Series& outer, const Series& inner) {
  if (!inner.coeff(0).is_zero())
    throw std::domain_error("compose: inner series has nonzero constant term");
  const int n = std::min(outer.order(), inner.order());
  const Series b = inner.truncated(n);
  Series acc = Series::constant(outer.coeff(n - 1), n);
  for (int i = n - 2; i >= 0; --i) acc = add(mul(acc, b), Series::constant(outer.coeff(i), n));
  return acc;
}

Series derivative(const Series& a) {
  if (a.order() < 2) throw std::invalid_argument("derivative: order too small");
  std::vector<Rat> c(static_cast<std::size_t>(a.order() - 1));
  for (int i = 1; i < a.order(); ++i) c[i - 1] = Rat(i) * a.coeff(i);
  return Series(std::move(c));
}

Series shift_up(const Series& a) {
  std::vector<Rat> c(static_cast<std::size_t>(a.order()) + 1, Rat(0));
  for (int i = 0; i < a.order(); ++i) c[i + 1] = a.coeff(i);
  return Series(std::move(c));
}

Series shift_down(const Series& a) {
  if (!a.coeff(0).is_zero()) throw std::domain_error("shift_down: nonzero constant term");
  if (a.order() < 2) throw std::invalid_argument("shift_down: order too small");
  return Series(std::vector<Rat>(a.coeffs().begin() + 1, a.coeffs().end()));
}

Series revert(const Series& f) {
  if (!f.coeff(0).is_zero()) throw std::domain_error("revert: constant term must be zero");
  if (f.order() < 2 || f.coeff(1).is_zero())
    throw std::domain_error("revert: linear coefficient must be nonzero");
  const int n = f.order();
  const Series fp = derivative(f);
  std::vector<Rat> start(static_cast<std::size_t>(n), Rat(0));
  start[1] = Rat(1) / f.coeff(1);
  Series g(std::move(start));
  const Series id = Series::x(n);
  for (int iter = 0; iter < 64; ++iter) {
    const Series residual = sub(compose(f, g), id);
    if (residual.is_zero()) return g;
    Series w = reciprocal(compose(fp, g));
    // residual has zero constant term, so the padded top coefficient of w
    // never contributes below the truncation order
    std::vector<Rat> wc(w.coeffs());
    wc.push_back(Rat(0));
    g = sub(g, mul(residual, Series(std::move(wc))));
  }
  throw std::logic_error("revert: Newton iteration failed to converge");
}

Series sqrt(const Series& a) {
  if (a.coeff(0) != Rat(1)) throw std::domain_error("sqrt: constant term must be 1");
  const int n = a.order();
  Series s = Series::constant(Rat(1), n);
  const Rat half(1, 2);
  for (int iter = 0; iter < 64; ++iter) {
    const Series next = scale(half, add(s, mul(a, reciprocal(s))));
    if (next == s) return s;
    s = next;
  }
  throw std::logic_error("sqrt: Newton iteration failed to converge");
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
  os << "[";
  for (int i = 0; i < s.order(); ++i) {
    if (i) os << ", ";
    os << s.coeff(i);
  }
  return os << "]";
}

}  // namespace riordan
