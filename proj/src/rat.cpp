#include "riordan/rat.hpp"

#include <cctype>
#include <ostream>

namespace riordan {

Rat Rat::from_string(const std::string& text) {
  std::size_t i = 0;
  const auto bad = [&](const char* why) {
    throw std::invalid_argument("invalid rational literal \"" + text + "\": " + why);
  };
  if (text.empty()) bad("empty");
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) bad("expected digits");
  Int num(text.substr(num_start, i - num_start));
  Int den(1);
  if (i < text.size()) {
    if (text[i] != '/') bad("unexpected character");
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size()) bad("expected denominator digits");
    den = Int(text.substr(den_start));
    if (den == 0) bad("denominator must be positive");
  }
  if (neg) num = -num;
  return Rat(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Rat pow(const Rat& r, long e) {
  if (e < 0) {
    if (r.is_zero()) throw std::domain_error("pow: zero to a negative power");
    return Rat(1) / pow(r, -e);
  }
  Rat result(1);
  Rat base = r;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Int binomial(long n, long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < 0 || k > n) return 0;
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Int catalan(long n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace riordan
