#include "nilorbit/rational.hpp"

#include <cctype>

namespace nilorbit {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

} // namespace

Rational rat_parse(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!valid_integer_token(num))
    throw ParseError("invalid rational '" + text + "'");
  if (slash != std::string::npos) {
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(den))
      throw ParseError("invalid rational '" + text + "'");
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
  }
  return Rational(Integer(num));
}

std::string rat_str(const Rational& q) { return q.get_str(); }

std::string ratvec_str(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_str(v[i]);
  }
  return out + ")";
}

} // namespace nilorbit
