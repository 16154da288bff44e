#include "riordan/moments.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace riordan {

MomentSeq moments(const FamilyParams& p, int n) {
  if (n < 1) throw std::invalid_argument("moments: need at least one term");
  return MomentSeq{inv(lbp_array(p, n)).g(n).coeffs()};
}

MomentSeq moments(const GenFamilyParams& p, int n) {
  if (n < 1) throw std::invalid_argument("moments: need at least one term");
  return MomentSeq{inv(gen_array(p, n)).g(n).coeffs()};
}

Rat moment_closed_form(int n, const FamilyParams& p) {
  if (n < 0) throw std::out_of_range("moment_closed_form: n must be nonnegative");
  Rat first(0);
  for (int j = 0; j <= n; ++j) {
    const Int b = binomial(n + 1, j) * binomial(2 * n - j, n - j);
    if (b == 0) continue;
    first += Rat(b) * pow(p.alpha, j) * pow(p.beta, n - j);
  }
  first /= Rat(n + 1);
  Rat compact(0);
  for (int k = 0; k <= n; ++k) {
    const Int b = binomial(n + k, 2 * k) * catalan(k);
    if (b == 0) continue;
    compact += Rat(b) * pow(p.alpha, n - k) * pow(p.beta, k);
  }
  if (first != compact)
    throw std::logic_error("moment_closed_form: the two closed forms disagree");
  return compact;
}

Series moment_gf(const FamilyParams& p, int n) {
  if (n < 1) throw std::invalid_argument("moment_gf: need at least one term");
  std::vector<Rat> bell(static_cast<std::size_t>(n));
  if (p.beta.is_zero()) {
    bell = expand(RatFunc(Poly{Rat(1)}, Poly{Rat(1), -p.alpha}), n).coeffs();
  } else {
    // radicand of the reversion quadratic: 1 - 2(alpha + 2 beta) x + alpha^2 x^2
    const Poly radicand{Rat(1), Rat(-2) * (p.alpha + Rat(2) * p.beta), p.alpha * p.alpha};
    const Series root = sqrt(expand(RatFunc(radicand, Poly{Rat(1)}), n + 2));
    const Series numer = sub(expand(RatFunc(Poly{Rat(1), -p.alpha}, Poly{Rat(1)}), n + 2), root);
    bell = scale(Rat(1) / (Rat(2) * p.beta), shift_down(numer)).truncated(n).coeffs();
  }
  if (p.variant == Variant::prop1) {
    // first column of the prop1 inverse is 1 + alpha * Rev(f) = 1 + alpha x * (Bell g.f.)
    std::vector<Rat> c(static_cast<std::size_t>(n), Rat(0));
    c[0] = Rat(1);
    for (int k = 1; k < n; ++k) c[k] = p.alpha * bell[k - 1];
    return Series(std::move(c));
  }
  return Series(std::move(bell));
}

Series tfraction_series(const TFraction& t, int n) {
  if (t.c.size() != t.d.size())
    throw std::invalid_argument("tfraction_series: coefficient lists differ in length");
  if (static_cast<int>(t.c.size()) < n)
    throw InsufficientDepthError("tfraction_series: need at least " + std::to_string(n) + " levels");
  const Series one = Series::constant(Rat(1), n);
  const Series x = Series::x(n);
  Series g = Series::constant(Rat(0), n);
  for (int i = static_cast<int>(t.c.size()) - 1; i >= 0; --i)
    g = reciprocal(sub(one, add(scale(t.c[i], x), scale(t.d[i], mul(x, g)))));
  return g;
}

Series jfraction_series(const JFraction& j, int n) {
  if (j.b.empty() || j.lam.size() != j.b.size() - 1)
    throw std::invalid_argument("jfraction_series: need len(lam) = len(b) - 1 >= 0");
  const int k = static_cast<int>(j.b.size());
  if (2 * k < n)
    throw InsufficientDepthError("jfraction_series: need at least " + std::to_string((n + 1) / 2) +
                                 " levels");
  const Series one = Series::constant(Rat(1), n);
  const Series x = Series::x(n);
  const Series x2 = mul(x, x);
  Series g = Series::constant(Rat(0), n);
  for (int i = k - 1; i >= 0; --i) {
    Series tail = i < k - 1 ? scale(j.lam[i], mul(x2, g)) : Series::constant(Rat(0), n);
    g = reciprocal(sub(one, add(scale(j.b[i], x), tail)));
  }
  return g;
}

TFraction constant_tfraction(const Rat& c, const Rat& d, int depth) {
  return TFraction{std::vector<Rat>(static_cast<std::size_t>(depth), c),
                   std::vector<Rat>(static_cast<std::size_t>(depth), d)};
}

JFraction lbp_jfraction(const FamilyParams& p, int depth) {
  if (depth < 1) throw std::invalid_argument("lbp_jfraction: depth must be at least 1");
  JFraction j;
  j.b.assign(static_cast<std::size_t>(depth), p.alpha + Rat(2) * p.beta);
  j.b[0] = p.alpha + p.beta;
  j.lam.assign(static_cast<std::size_t>(depth) - 1, p.beta * (p.alpha + p.beta));
  return j;
}

JFraction jfraction_from_moments(const MomentSeq& m) {
  const int n = static_cast<int>(m.terms.size());
  if (n < 2) throw std::invalid_argument("jfraction_from_moments: need at least two moments");
  if (m.terms[0] != Rat(1))
    throw std::invalid_argument("jfraction_from_moments: mu_0 must be 1");
  const int levels = n / 2;
  // sigma[k][l] of the Chebyshev algorithm; sigma[k][k] = h_k / h_{k-1}
  std::vector<std::vector<Rat>> sigma(static_cast<std::size_t>(levels));
  sigma[0] = m.terms;
  JFraction j;
  j.b.push_back(m.terms[1]);
  for (int k = 1; k < levels; ++k) {
    sigma[k].assign(m.terms.size(), Rat(0));
    for (int l = k; l <= 2 * levels - 1 - k; ++l) {
      Rat v = sigma[k - 1][l + 1] - j.b[k - 1] * sigma[k - 1][l];
      if (k >= 2) v -= j.lam[k - 2] * sigma[k - 2][l];
      sigma[k][l] = v;
    }
    if (sigma[k][k].is_zero()) throw HankelMinorError(k);
    j.lam.push_back(sigma[k][k] / sigma[k - 1][k - 1]);
    j.b.push_back(sigma[k][k + 1] / sigma[k][k] - sigma[k - 1][k] / sigma[k - 1][k - 1]);
  }
  return j;
}

Rat determinant(std::vector<std::vector<Rat>> m) {
  const int n = static_cast<int>(m.size());
  Rat sign(1);
  Rat prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Rat(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

HankelSeq hankel_transform(const MomentSeq& m, int n) {
  if (n < 1) throw std::invalid_argument("hankel_transform: need at least one term");
  if (static_cast<int>(m.terms.size()) < 2 * n - 1)
    throw ComputeError("hankel_transform: need " + std::to_string(2 * n - 1) + " moments for " +
                       std::to_string(n) + " terms");
  HankelSeq h;
  h.terms.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<Rat>> mat(static_cast<std::size_t>(k) + 1,
                                      std::vector<Rat>(static_cast<std::size_t>(k) + 1));
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j) mat[i][j] = m.terms[static_cast<std::size_t>(i + j)];
    h.terms.push_back(determinant(std::move(mat)));
  }
  return h;
}

std::vector<Rat> binomial_transform(const std::vector<Rat>& s, const Rat& m) {
  std::vector<Rat> t(s.size(), Rat(0));
  for (std::size_t n = 0; n < s.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const Int b = binomial(static_cast<long>(n), static_cast<long>(k));
      t[n] += Rat(b) * pow(m, static_cast<long>(n - k)) * s[k];
    }
  return t;
}

std::vector<Rat> row_sums(const Triangle& t) {
  std::vector<Rat> sums;
  sums.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    Rat acc(0);
    for (const auto& v : row) acc += v;
    sums.push_back(acc);
  }
  return sums;
}

BivariateReport bivariate_check(const FamilyParams& p, int n) {
  if (n < 2) throw std::invalid_argument("bivariate_check: n must be at least 2");
  const Triangle t = triangle(inv(lbp_array(p, n)));
  const Rat samples[] = {Rat(0), Rat(1), Rat(2), Rat(-1), Rat(1, 2)};
  const int depth = n / 2 + 1;
  for (const Rat& y : samples) {
    JFraction j = lbp_jfraction(p, depth);
    j.b[0] += y;
    const Series cf = jfraction_series(j, n);
    for (int row = 0; row < n; ++row) {
      Rat lhs(0);
      for (int k = row; k >= 0; --k) lhs = lhs * y + t.at(row, k);
      if (lhs != cf.coeff(row)) return BivariateReport{false, y, row, lhs, cf.coeff(row)};
    }
  }
  return BivariateReport{};
}

}  // namespace riordan
