#pragma once

#include <gmpxx.h>

#include <string>

namespace lieslice {

/// Exact rational number backed by GMP. Results of arithmetic are always
/// canonical (lowest terms, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace lieslice
