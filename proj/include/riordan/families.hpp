#pragma once

#include <variant>
#include <vector>

#include "riordan/array.hpp"

namespace riordan {

/// Which first-degree polynomial starts the three-term recurrence
/// P_n = (x - alpha) P_{n-1} - beta x P_{n-2}.
enum class Variant {
  prop1,  // P_1 = x - alpha
  prop2,  // P_1 = x - (alpha + beta)
};

struct FamilyParams {
  Rat alpha;
  Rat beta;
  Variant variant = Variant::prop2;
};

/// Three-parameter recurrence P_n = (x - alpha) P_{n-1} - beta (x - gamma) P_{n-2},
/// P_1 = x - alpha - beta.
struct GenFamilyParams {
  Rat alpha;
  Rat beta;
  Rat gamma;
};

/// A monic polynomial family; row n of coeffs lists the coefficients of P_n.
struct PolyFamily {
  std::variant<FamilyParams, GenFamilyParams> params;
  Triangle coeffs;
};

// Coefficient arrays as exact Riordan arrays.
RiordanArray lbp_array(const FamilyParams& p, int order);
RiordanArray assoc_array(const FamilyParams& p, int order);
RiordanArray gen_array(const GenFamilyParams& p, int order);
RiordanArray gen_assoc_array(const GenFamilyParams& p, int order);

/// Triangle of the Laurent biorthogonal family, built from the recurrence.
PolyFamily lbp_triangle(const FamilyParams& p, int rows);

/// Closed form for the coefficient of x^k in P_n (Variant::prop2 family):
/// (-1)^{n-k} sum_j C(k+1, j) C(n-j, n-k-j) alpha^{n-k-j} beta^j.
Rat coeff_closed_form(int n, int k, const FamilyParams& p);

/// Associated orthogonal polynomials:
/// Ptilde_n = (x - (alpha + 2 beta)) Ptilde_{n-1} - beta (alpha + beta) Ptilde_{n-2},
/// Ptilde_1 = x - (alpha + beta).
PolyFamily assoc_orthogonal(const FamilyParams& p, int rows);

enum class ConnectionDirection {
  orthogonal_to_lbp,  // P_n  = sum_k C(n-1, n-k) beta^{n-k}    Ptilde_k
  lbp_to_orthogonal,  // Ptilde_n = sum_k C(n-1, n-k) (-beta)^{n-k} P_k
};

Triangle connection(const FamilyParams& p, int rows, ConnectionDirection direction);

/// [P_0(t), ..., P_{n-1}(t)] by Horner on the triangle rows.
std::vector<Rat> family_eval(const FamilyParams& p, const Rat& t, int n);

PolyFamily gen_triangle(const GenFamilyParams& p, int rows);

/// Triangle of the orthogonal family sharing the generalized family's moments.
/// Requires alpha + beta != gamma.
PolyFamily gen_assoc_orthogonal(const GenFamilyParams& p, int rows);

/// The substitution x -> x + gamma turns the generalized family into the plain
/// family with these parameters.
FamilyParams shift_params(const GenFamilyParams& p);

/// Coefficients e_{n,k} of R_n = d/dx P_{n+1}; rows 0..rows-1.
Triangle derivative_triangle(const FamilyParams& p, int rows);

/// Coefficient list of P_n as det(x I_n - P_n) where P_n is the order-n
/// principal submatrix of the production matrix of the inverse array.
std::vector<Rat> det_representation(const FamilyParams& p, int n);

/// Characteristic polynomial det(x I - H) of a lower-Hessenberg matrix,
/// expanded by the O(n^2) minor recurrence. Returns coefficients, constant first.
std::vector<Rat> hessenberg_charpoly(const std::vector<std::vector<Rat>>& h);

}  // namespace riordan
