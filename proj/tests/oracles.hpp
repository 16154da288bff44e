// Independent test oracles: everything here recomputes expected values by a
// route different from the code under test.
#pragma once

#include <random>
#include <vector>

#include "riordan/array.hpp"
#include "riordan/series.hpp"

namespace oracles {

using riordan::Poly;
using riordan::Rat;
using riordan::RatFunc;
using riordan::RiordanArray;
using riordan::Series;
using riordan::Triangle;

inline Triangle matmul(const Triangle& a, const Triangle& b) {
  Triangle c;
  c.rows.resize(a.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    c.rows[i].resize(i + 1, Rat(0));
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = j; k <= i; ++k) c.rows[i][j] += a.rows[i][k] * b.rows[k][j];
  }
  return c;
}

// Inverse of a lower-triangular matrix by forward substitution.
inline Triangle gauss_inverse(const Triangle& t) {
  const std::size_t n = t.rows.size();
  Triangle inv;
  inv.rows.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv.rows[i].resize(i + 1, Rat(0));
    inv.rows[i][i] = Rat(1) / t.rows[i][i];
    for (std::size_t j = i; j-- > 0;) {
      Rat acc(0);
      for (std::size_t k = j; k < i; ++k) acc += t.rows[i][k] * inv.rows[k][j];
      inv.rows[i][j] = -acc / t.rows[i][i];
    }
  }
  return inv;
}

inline Triangle identity_triangle(int n) {
  Triangle t;
  t.rows.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    t.rows[i].assign(static_cast<std::size_t>(i) + 1, Rat(0));
    t.rows[i][static_cast<std::size_t>(i)] = Rat(1);
  }
  return t;
}

// Direct Lagrange inversion: [x^k] fbar = (1/k) [x^{k-1}] (x/f)^k.
inline Series lagrange_revert(const Series& f) {
  const int n = f.order();
  const Series u = reciprocal(shift_down(f));  // x/f, order n-1
  std::vector<Rat> out(static_cast<std::size_t>(n), Rat(0));
  Series power = u;
  for (int k = 1; k < n; ++k) {
    out[static_cast<std::size_t>(k)] = power.coeff(k - 1) / Rat(k);
    if (k + 1 < n) power = mul(power, u);
  }
  return Series(std::move(out));
}

// Coefficients of p(x + gamma) by binomial expansion.
inline std::vector<Rat> poly_shift(const std::vector<Rat>& p, const Rat& gamma) {
  std::vector<Rat> q(p.size(), Rat(0));
  for (std::size_t k = 0; k < p.size(); ++k)
    for (std::size_t j = 0; j <= k; ++j)
      q[j] += p[k] * Rat(riordan::binomial(static_cast<long>(k), static_cast<long>(j))) *
              riordan::pow(gamma, static_cast<long>(k - j));
  return q;
}

struct RatRng {
  std::mt19937 rng{20260808};

  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  }
  Rat small() { return Rat(pick(-5, 5), pick(1, 5)); }
  Rat small_nonzero() {
    for (;;) {
      Rat r = small();
      if (!r.is_zero()) return r;
    }
  }
  std::vector<Rat> coeffs(int n, bool first_nonzero = false) {
    std::vector<Rat> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = small();
    if (first_nonzero) c[0] = small_nonzero();
    return c;
  }
  // A valid random Riordan array backed by exact rational functions.
  RiordanArray array(int order) {
    const Poly g_num{Rat(1), small(), small()};
    const Poly g_den{Rat(1), small(), small()};
    const Poly f_num{Rat(0), Rat(1), small()};
    const Poly f_den{Rat(1), small(), small()};
    return RiordanArray(RatFunc(g_num, g_den), RatFunc(f_num, f_den), order);
  }
};

}  // namespace oracles
