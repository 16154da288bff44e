#pragma once

#include <optional>
#include <vector>

#include "riordan/series.hpp"

namespace riordan {

/// Dense lower-triangular matrix; rows[n] has n + 1 entries.
struct Triangle {
  std::vector<std::vector<Rat>> rows;

  int size() const { return static_cast<int>(rows.size()); }
  const Rat& at(int n, int k) const { return rows.at(n).at(k); }
  bool operator==(const Triangle&) const = default;
};

/// A- and Z-sequence characterizing a Riordan array through its row recurrences.
struct SeqPair {
  std::vector<Rat> a;
  std::vector<Rat> z;
};

/// Lower-Hessenberg production matrix, stored dense n x n. Column 0 carries the
/// Z-sequence, the band above the diagonal carries a_0 = 1, and entry (i, j)
/// for 1 <= j <= i carries a_{i-j+1}.
struct ProductionMatrix {
  std::vector<std::vector<Rat>> entries;

  int size() const { return static_cast<int>(entries.size()); }
  bool operator==(const ProductionMatrix&) const = default;
};

/// A proper Riordan array (g, f) with g(0) = 1, f(0) = 0, f'(0) = 1, truncated
/// to a fixed number of rows. Arrays built from rational functions keep the
/// closed form and expand it lazily to whatever order a computation needs;
/// arrays built from raw series are capped at the order of those series.
class RiordanArray {
 public:
  RiordanArray(RatFunc g, RatFunc f, int order);
  RiordanArray(Series g, Series f);

  int order() const { return order_; }

  /// First n coefficients of the generators.
  Series g(int n) const;
  Series f(int n) const;
  Series g() const { return g(order_); }
  Series f() const { return f(order_); }

  const std::optional<RatFunc>& g_closed_form() const { return grf_; }
  const std::optional<RatFunc>& f_closed_form() const { return frf_; }

 private:
  void validate() const;
  std::optional<RatFunc> grf_, frf_;
  Series g_, f_;
  int order_;
};

/// [x^n] g f^k.
Rat entry(const RiordanArray& r, int n, int k);

/// All entries with n, k < order.
Triangle triangle(const RiordanArray& r);

/// Group law (g, f)(h, l) = (g (h o f), l o f); order is the smaller operand order.
RiordanArray mul(const RiordanArray& r1, const RiordanArray& r2);

/// Group inverse (1/(g o fbar), fbar).
RiordanArray inv(const RiordanArray& r);

/// Action on power series: g(x) s(f(x)).
Series act(const RiordanArray& r, const Series& s);

/// First n terms of the A-sequence A(x) = x / fbar(x).
std::vector<Rat> a_sequence(const RiordanArray& r, int n);

/// First n terms of the Z-sequence Z(x) = (1 - 1/(g o fbar)) / fbar.
std::vector<Rat> z_sequence(const RiordanArray& r, int n);

SeqPair sequences(const RiordanArray& r, int n);

ProductionMatrix production_matrix(const RiordanArray& r, int n);

/// Ones-row production matrix assembled directly from A- and Z-sequences.
ProductionMatrix production_matrix_from(const std::vector<Rat>& a, const std::vector<Rat>& z);

/// B^m = (1/(1-mx), x/(1-mx)); m = 1 is Pascal's triangle, m = 0 the identity.
RiordanArray binomial_power(const Rat& m, int order);

/// The identity array (1, x).
RiordanArray identity_array(int order);

}  // namespace riordan
