#ifndef NILORBIT_RATIONAL_HPP
#define NILORBIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nilorbit/errors.hpp"

namespace nilorbit {

/// Exact arbitrary-precision rational scalar. GMP keeps values canonical:
/// lowest terms, denominator > 0. Every computation in this library is
/// exact; there is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or "p" (optional sign, arbitrary precision). Rejects zero
/// denominators and malformed input with ParseError.
Rational rat_parse(const std::string& text);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rational& q);

inline bool rat_is_integer(const Rational& q) { return q.get_den() == 1; }

using RatVec = std::vector<Rational>;

std::string ratvec_str(const RatVec& v);

} // namespace nilorbit

#endif
