#include "riordan/families.hpp"

#include <stdexcept>

namespace riordan {

namespace {

Rat cell(const std::vector<std::vector<Rat>>& rows, int n, int k) {
  if (n < 0 || k < 0 || k > n) return Rat(0);
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Triangle to_triangle(std::vector<std::vector<Rat>> rows) { return Triangle{std::move(rows)}; }

}  // namespace

RiordanArray lbp_array(const FamilyParams& p, int order) {
  const Poly den{Rat(1), p.alpha};
  const Poly g_num = p.variant == Variant::prop2 ? Poly{Rat(1), -p.beta} : Poly{Rat(1)};
  const Poly f_num{Rat(0), Rat(1), -p.beta};
  return RiordanArray(RatFunc(g_num, den), RatFunc(f_num, den), order);
}

RiordanArray assoc_array(const FamilyParams& p, int order) {
  const Rat s = p.alpha + p.beta;
  const Poly f_den = Poly{Rat(1), p.beta} * Poly{Rat(1), s};
  return RiordanArray(RatFunc(Poly{Rat(1)}, Poly{Rat(1), s}),
                      RatFunc(Poly{Rat(0), Rat(1)}, f_den), order);
}

RiordanArray gen_array(const GenFamilyParams& p, int order) {
  const Poly den{Rat(1), p.alpha, -p.beta * p.gamma};
  return RiordanArray(RatFunc(Poly{Rat(1), -p.beta}, den),
                      RatFunc(Poly{Rat(0), Rat(1), -p.beta}, den), order);
}

RiordanArray gen_assoc_array(const GenFamilyParams& p, int order) {
  if (p.alpha + p.beta == p.gamma)
    throw std::invalid_argument("gen_assoc_array: alpha + beta = gamma is the excluded degenerate case");
  const Poly den{Rat(1), p.alpha + Rat(2) * p.beta, p.beta * (p.alpha + p.beta - p.gamma)};
  return RiordanArray(RatFunc(Poly{Rat(1), p.beta}, den),
                      RatFunc(Poly{Rat(0), Rat(1)}, den), order);
}

PolyFamily lbp_triangle(const FamilyParams& p, int rows) {
  if (rows < 1) throw std::invalid_argument("lbp_triangle: need at least one row");
  std::vector<std::vector<Rat>> t(static_cast<std::size_t>(rows));
  t[0] = {Rat(1)};
  if (rows > 1) {
    const Rat c1 = p.variant == Variant::prop2 ? p.alpha + p.beta : p.alpha;
    t[1] = {-c1, Rat(1)};
  }
  for (int n = 2; n < rows; ++n) {
    t[n].resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      t[n][k] = cell(t, n - 1, k - 1) - p.alpha * cell(t, n - 1, k) - p.beta * cell(t, n - 2, k - 1);
  }
  return PolyFamily{p, to_triangle(std::move(t))};
}

Rat coeff_closed_form(int n, int k, const FamilyParams& p) {
  if (n < 0 || k < 0 || k > n) throw std::out_of_range("coeff_closed_form: index out of range");
  Rat sum(0);
  for (int j = 0; j <= k + 1 && j <= n - k; ++j) {
    const Int b = binomial(k + 1, j) * binomial(n - j, n - k - j);
    if (b == 0) continue;
    sum += Rat(b) * pow(p.alpha, n - k - j) * pow(p.beta, j);
  }
  return (n - k) % 2 == 0 ? sum : -sum;
}

PolyFamily assoc_orthogonal(const FamilyParams& p, int rows) {
  if (rows < 1) throw std::invalid_argument("assoc_orthogonal: need at least one row");
  const Rat b = p.alpha + Rat(2) * p.beta;
  const Rat lam = p.beta * (p.alpha + p.beta);
  std::vector<std::vector<Rat>> t(static_cast<std::size_t>(rows));
  t[0] = {Rat(1)};
  if (rows > 1) t[1] = {-(p.alpha + p.beta), Rat(1)};
  for (int n = 2; n < rows; ++n) {
    t[n].resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      t[n][k] = cell(t, n - 1, k - 1) - b * cell(t, n - 1, k) - lam * cell(t, n - 2, k);
  }
  return PolyFamily{p, to_triangle(std::move(t))};
}

Triangle connection(const FamilyParams& p, int rows, ConnectionDirection direction) {
  if (rows < 1) throw std::invalid_argument("connection: need at least one row");
  const Rat base = direction == ConnectionDirection::orthogonal_to_lbp ? p.beta : -p.beta;
  Triangle t;
  t.rows.resize(static_cast<std::size_t>(rows));
  for (int n = 0; n < rows; ++n) {
    t.rows[n].resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      t.rows[n][k] = Rat(binomial(n - 1, n - k)) * pow(base, n - k);
  }
  return t;
}

std::vector<Rat> family_eval(const FamilyParams& p, const Rat& t, int n) {
  const PolyFamily fam = lbp_triangle(p, n);
  std::vector<Rat> values(static_cast<std::size_t>(n));
  for (int row = 0; row < n; ++row) {
    Rat acc(0);
    const auto& coeffs = fam.coeffs.rows[static_cast<std::size_t>(row)];
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    values[row] = acc;
  }
  return values;
}

PolyFamily gen_triangle(const GenFamilyParams& p, int rows) {
  if (rows < 1) throw std::invalid_argument("gen_triangle: need at least one row");
  std::vector<std::vector<Rat>> t(static_cast<std::size_t>(rows));
  t[0] = {Rat(1)};
  if (rows > 1) t[1] = {-(p.alpha + p.beta), Rat(1)};
  const Rat bg = p.beta * p.gamma;
  for (int n = 2; n < rows; ++n) {
    t[n].resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      t[n][k] = cell(t, n - 1, k - 1) - p.alpha * cell(t, n - 1, k) - p.beta * cell(t, n - 2, k - 1) +
                bg * cell(t, n - 2, k);
  }
  return PolyFamily{p, to_triangle(std::move(t))};
}

PolyFamily gen_assoc_orthogonal(const GenFamilyParams& p, int rows) {
  return PolyFamily{p, triangle(gen_assoc_array(p, rows))};
}

FamilyParams shift_params(const GenFamilyParams& p) {
  return FamilyParams{p.alpha - p.gamma, p.beta, Variant::prop2};
}

Triangle derivative_triangle(const FamilyParams& p, int rows) {
  if (rows < 1) throw std::invalid_argument("derivative_triangle: need at least one row");
  const PolyFamily fam = lbp_triangle(p, rows + 1);
  Triangle t;
  t.rows.resize(static_cast<std::size_t>(rows));
  for (int n = 0; n < rows; ++n) {
    t.rows[n].resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      t.rows[n][k] = Rat(k + 1) * fam.coeffs.at(n + 1, k + 1);
  }
  return t;
}

std::vector<Rat> hessenberg_charpoly(const std::vector<std::vector<Rat>>& h) {
  const int n = static_cast<int>(h.size());
  // minors[m] holds det(x I_m - H_m), coefficients constant-first
  std::vector<std::vector<Rat>> minors(static_cast<std::size_t>(n) + 1);
  minors[0] = {Rat(1)};
  for (int m = 1; m <= n; ++m) {
    const auto& prev = minors[m - 1];
    std::vector<Rat> d(static_cast<std::size_t>(m) + 1, Rat(0));
    for (int i = 0; i + 1 <= m; ++i) d[i + 1] += prev[i];
    for (int i = 0; i < m; ++i) d[i] -= h[m - 1][m - 1] * prev[i];
    Rat super_prod(1);
    for (int j = m - 2; j >= 0; --j) {
      super_prod *= h[j][j + 1];
      const Rat w = h[m - 1][j] * super_prod;
      if (w.is_zero()) continue;
      for (std::size_t i = 0; i < minors[j].size(); ++i) d[i] -= w * minors[j][i];
    }
    minors[m] = std::move(d);
  }
  return minors[static_cast<std::size_t>(n)];
}

std::vector<Rat> det_representation(const FamilyParams& p, int n) {
  if (n < 1) throw std::invalid_argument("det_representation: n must be at least 1");
  // A and Z of the inverse array: A = (1 + alpha x)/(1 - beta x),
  // Z = (alpha + beta)/(1 - beta x) for prop2, alpha/(1 - beta x) for prop1.
  const Poly den{Rat(1), -p.beta};
  const Rat z0 = p.variant == Variant::prop2 ? p.alpha + p.beta : p.alpha;
  const Series a = expand(RatFunc(Poly{Rat(1), p.alpha}, den), n);
  const Series z = expand(RatFunc(Poly{z0}, den), n);
  const ProductionMatrix pm = production_matrix_from(a.coeffs(), z.coeffs());
  return hessenberg_charpoly(pm.entries);
}

}  // namespace riordan
