#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace nashkit {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "p/q", optional sign on either part (ASCII '-' or U+2212).
// Throws ParseError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when q == 1, else "p/q" with q > 0 and gcd 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline double to_double(const Rational& r) { return r.get_d(); }

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
};

template <>
struct scalar_traits<std::complex<double>> {
  static bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0, 0.0); }
};

}  // namespace nashkit
