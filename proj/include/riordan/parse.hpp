#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "riordan/series.hpp"

namespace riordan {

/// Syntax error with the byte offset of the offending position in the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

/// Parses a rational-function literal such as "(1-x)/(1+x)" or
/// "x*(1-2*x)/(1+3*x)". Integer coefficients; at most one top-level "/"
/// separating numerator and denominator; whitespace is insignificant.
/// Throws ParseError on bad syntax and std::invalid_argument when the
/// denominator has a zero constant term.
RatFunc parse_ratfunc(std::string_view text);

/// Printable forms that parse_ratfunc accepts back (for integer coefficients).
std::string to_string(const Poly& p);
std::string to_string(const RatFunc& rf);

}  // namespace riordan
