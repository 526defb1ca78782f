#include <nashkit/errors.hpp>
#include <nashkit/rational.hpp>

#include <cctype>

namespace nashkit {
namespace {

// Replaces a leading U+2212 with '-'.
std::string normalize_sign(std::string_view s) {
  static constexpr std::string_view kMinus = "\xE2\x88\x92";
  std::string out;
  if (s.substr(0, kMinus.size()) == kMinus) {
    out = "-";
    s.remove_prefix(kMinus.size());
  }
  out.append(s);
  return out;
}

Integer parse_integer(std::string_view raw) {
  std::string s = normalize_sign(raw);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw ParseError("empty integer in rational '" + std::string(raw) + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("bad digit in rational '" + std::string(raw) + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  Integer p = parse_integer(text.substr(0, slash));
  Integer q = 1;
  if (slash != std::string_view::npos) q = parse_integer(text.substr(slash + 1));
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace nashkit
