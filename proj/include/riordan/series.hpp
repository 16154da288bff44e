#pragma once

#include <initializer_list>
#include <vector>

#include "riordan/rat.hpp"

namespace riordan {

/// Dense univariate polynomial over Rat. Trailing zeros are trimmed; the zero
/// polynomial has a single zero coefficient.
class Poly {
 public:
  Poly() : c_{Rat(0)} {}
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
  Rat eval(const Rat& x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  bool operator==(const Poly&) const = default;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Exact rational function num/den. The denominator keeps a nonzero constant
/// term so Taylor expansion at 0 is always defined.
class RatFunc {
 public:
  RatFunc() : num_{Rat(1)}, den_{Rat(1)} {}
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  bool operator==(const RatFunc&) const = default;

 private:
  Poly num_, den_;
};

/// Truncated formal power series over Rat. coeff(i) is exact for i < order();
/// nothing is claimed at or beyond the truncation order. Binary operations
/// truncate to the smaller operand order. Values are immutable.
class Series {
 public:
  explicit Series(std::vector<Rat> coeffs);
  Series(std::initializer_list<Rat> coeffs) : Series(std::vector<Rat>(coeffs)) {}

  static Series constant(const Rat& value, int order);
  static Series x(int order);

  int order() const { return static_cast<int>(c_.size()); }
  const Rat& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Series truncated(int order) const;
  bool is_zero() const;

  bool operator==(const Series&) const = default;

 private:
  std::vector<Rat> c_;
};

/// First n Taylor coefficients of num/den, exact.
Series expand(const RatFunc& rf, int n);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Rat& s, const Series& a);

/// Multiplicative inverse: mul(a, reciprocal(a)) = 1 to the truncation order.
/// Requires a(0) != 0.
Series reciprocal(const Series& a);

/// outer(inner(x)); requires inner(0) = 0.
Series compose(const Series& outer, const Series& inner);

/// Compositional inverse by Newton iteration on the composition equation.
/// Requires f(0) = 0 and f'(0) != 0.
Series revert(const Series& f);

/// Square root with sqrt(a)(0) = 1, by Newton iteration. Requires a(0) = 1.
Series sqrt(const Series& a);

Series derivative(const Series& a);

/// Multiply by x (order grows by one) / divide by x (requires a(0) = 0).
Series shift_up(const Series& a);
Series shift_down(const Series& a);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

std::ostream& operator<<(std::ostream& os, const Series& s);

}  // namespace riordan
