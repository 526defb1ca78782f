#include <nashkit/polynomial.hpp>

#include <cstdio>

namespace nashkit {

std::string coefficient_text(const Rational& c, bool& negative, bool& is_one) {
  negative = sgn(c) < 0;
  Rational a = abs(c);
  is_one = (a == 1);
  return to_string(a);
}

std::string coefficient_text(const std::complex<double>& c, bool& negative, bool& is_one) {
  negative = false;
  is_one = (c == std::complex<double>(1.0, 0.0));
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)", c.real(), c.imag());
  return buf;
}

}  // namespace nashkit
