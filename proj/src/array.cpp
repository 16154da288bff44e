#include "riordan/array.hpp"

#include <stdexcept>

#include "riordan/errors.hpp"

namespace riordan {

RiordanArray::RiordanArray(RatFunc g, RatFunc f, int order)
    : grf_(std::move(g)),
      frf_(std::move(f)),
      g_(expand(*grf_, std::max(order, 2))),
      f_(expand(*frf_, std::max(order, 2))),
      order_(order) {
  if (order < 1) throw std::invalid_argument("RiordanArray: order must be at least 1");
  validate();
}

RiordanArray::RiordanArray(Series g, Series f)
    : g_(std::move(g)), f_(std::move(f)), order_(std::min(g_.order(), f_.order())) {
  if (f_.order() < 2) throw std::invalid_argument("RiordanArray: f needs at least two terms");
  validate();
}

void RiordanArray::validate() const {
  if (g_.coeff(0) != Rat(1)) throw std::invalid_argument("RiordanArray: g(0) != 1");
  if (!f_.coeff(0).is_zero()) throw std::invalid_argument("RiordanArray: f(0) != 0");
  if (f_.coeff(1) != Rat(1)) throw std::invalid_argument("RiordanArray: f'(0) != 1");
}

Series RiordanArray::g(int n) const {
  if (n <= g_.order()) return g_.truncated(n);
  if (grf_) return expand(*grf_, n);
  throw ComputeError("RiordanArray: series-backed g cannot reach order " + std::to_string(n));
}

Series RiordanArray::f(int n) const {
  if (n <= f_.order()) return f_.truncated(n);
  if (frf_) return expand(*frf_, n);
  throw ComputeError("RiordanArray: series-backed f cannot reach order " + std::to_string(n));
}

Rat entry(const RiordanArray& r, int n, int k) {
  if (n < 0 || k < 0 || k > n || n >= r.order())
    throw std::out_of_range("entry: index out of range");
  Series col = r.g(n + 1);
  const Series f = r.f(n + 1);
  for (int i = 0; i < k; ++i) col = mul(col, f);
  return col.coeff(n);
}

Triangle triangle(const RiordanArray& r) {
  const int n = r.order();
  Triangle t;
  t.rows.resize(static_cast<std::size_t>(n));
  for (int row = 0; row < n; ++row) t.rows[row].resize(static_cast<std::size_t>(row) + 1);
  Series col = r.g(n);
  const Series f = r.f(n);
  for (int k = 0; k < n; ++k) {
    for (int row = k; row < n; ++row) t.rows[row][k] = col.coeff(row);
    if (k + 1 < n) col = mul(col, f);
  }
  return t;
}

RiordanArray mul(const RiordanArray& r1, const RiordanArray& r2) {
  const int n = std::min(r1.order(), r2.order());
  const Series f1 = r1.f(n);
  const Series g = mul(r1.g(n), compose(r2.g(n), f1));
  const Series f = compose(r2.f(n), f1);
  return RiordanArray(g, f);
}

RiordanArray inv(const RiordanArray& r) {
  const int n = r.order();
  const Series fbar = revert(r.f(n));
  const Series g = reciprocal(compose(r.g(n), fbar));
  return RiordanArray(g, fbar);
}

Series act(const RiordanArray& r, const Series& s) {
  const int n = std::min(r.order(), s.order());
  return mul(r.g(n), compose(s.truncated(n), r.f(n)));
}

std::vector<Rat> a_sequence(const RiordanArray& r, int n) {
  if (n < 1) throw std::invalid_argument("a_sequence: need at least one term");
  const Series fbar = revert(r.f(n + 1));
  return reciprocal(shift_down(fbar)).coeffs();
}

std::vector<Rat> z_sequence(const RiordanArray& r, int n) {
  if (n < 1) throw std::invalid_argument("z_sequence: need at least one term");
  const Series fbar = revert(r.f(n + 1));
  const Series g_at_fbar = compose(r.g(n + 1), fbar);
  const Series w = sub(Series::constant(Rat(1), n + 1), reciprocal(g_at_fbar));
  return mul(shift_down(w), reciprocal(shift_down(fbar))).coeffs();
}

SeqPair sequences(const RiordanArray& r, int n) { return {a_sequence(r, n), z_sequence(r, n)}; }

ProductionMatrix production_matrix_from(const std::vector<Rat>& a, const std::vector<Rat>& z) {
  const int n = static_cast<int>(z.size());
  if (a.size() < z.size()) throw std::invalid_argument("production_matrix: A-sequence too short");
  ProductionMatrix p;
  p.entries.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i) {
    p.entries[i][0] = z[i];
    for (int j = 1; j < n && j <= i + 1; ++j) p.entries[i][j] = a[i - j + 1];
  }
  return p;
}

ProductionMatrix production_matrix(const RiordanArray& r, int n) {
  return production_matrix_from(a_sequence(r, n), z_sequence(r, n));
}

RiordanArray binomial_power(const Rat& m, int order) {
  const Poly den{Rat(1), -m};
  return RiordanArray(RatFunc(Poly{Rat(1)}, den), RatFunc(Poly{Rat(0), Rat(1)}, den), order);
}

RiordanArray identity_array(int order) {
  return RiordanArray(RatFunc(), RatFunc(Poly{Rat(0), Rat(1)}, Poly{Rat(1)}), order);
}

}  // namespace riordan
