#pragma once

#include <vector>

#include "riordan/errors.hpp"
#include "riordan/families.hpp"

namespace riordan {

/// Moment sequence mu_0, mu_1, ... (first column of the inverse coefficient array).
struct MomentSeq {
  std::vector<Rat> terms;
  bool operator==(const MomentSeq&) const = default;
};

/// T-fraction 1/(1 - c_0 x - d_0 x/(1 - c_1 x - d_1 x/(...))).
struct TFraction {
  std::vector<Rat> c;
  std::vector<Rat> d;
};

/// J-fraction 1/(1 - b_0 x - lam_0 x^2/(1 - b_1 x - lam_1 x^2/(...))).
struct JFraction {
  std::vector<Rat> b;
  std::vector<Rat> lam;
};

/// Hankel transform h_n = det[mu_{i+j}], 0 <= i, j <= n.
struct HankelSeq {
  std::vector<Rat> terms;
  bool operator==(const HankelSeq&) const = default;
};

MomentSeq moments(const FamilyParams& p, int n);
MomentSeq moments(const GenFamilyParams& p, int n);

/// mu_n of the Variant::prop2 family by the two Lagrange-inversion closed forms
/// (both are evaluated and must agree):
///   mu_n = (1/(n+1)) sum_j C(n+1, j) C(2n-j, n-j) alpha^j beta^{n-j}
///   mu_n = sum_k C(n+k, 2k) Cat_k alpha^{n-k} beta^k
Rat moment_closed_form(int n, const FamilyParams& p);

/// Moment generating function. For Variant::prop2 with beta != 0 this is
/// (1 - alpha x - sqrt(1 - 2(alpha + 2 beta) x + alpha^2 x^2)) / (2 beta x);
/// beta = 0 degenerates to 1/(1 - alpha x).
Series moment_gf(const FamilyParams& p, int n);

Series tfraction_series(const TFraction& t, int n);
Series jfraction_series(const JFraction& j, int n);

/// Constant T-fraction with c_i = c, d_i = d at the given depth.
TFraction constant_tfraction(const Rat& c, const Rat& d, int depth);

/// The J-fraction generating the family's moments:
/// b = [alpha+beta, alpha+2beta, ...], lam = [beta(alpha+beta), ...].
JFraction lbp_jfraction(const FamilyParams& p, int depth);

/// Recover the unique J-fraction reproducing the moments (exact Chebyshev /
/// Stieltjes procedure). Produces floor(n/2) diagonal terms from n moments.
/// Throws HankelMinorError when a leading principal minor vanishes.
JFraction jfraction_from_moments(const MomentSeq& m);

HankelSeq hankel_transform(const MomentSeq& m, int n);

/// t_n = sum_k C(n, k) m^{n-k} s_k.
std::vector<Rat> binomial_transform(const std::vector<Rat>& s, const Rat& m);

std::vector<Rat> row_sums(const Triangle& t);

/// Outcome of comparing the moment matrix rows against the bivariate
/// continued fraction at sampled rational y.
struct BivariateReport {
  bool ok = true;
  Rat y;
  int row = -1;
  Rat lhs, rhs;
};

BivariateReport bivariate_check(const FamilyParams& p, int n);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Rat determinant(std::vector<std::vector<Rat>> m);

}  // namespace riordan
