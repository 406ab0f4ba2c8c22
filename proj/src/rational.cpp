#include "leflab/rational.hpp"

#include <sstream>

#include "leflab/errors.hpp"

namespace leflab {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den)) {
    throw SyntaxError("bad rational literal '" + text + "'");
  }
  Integer n(num);
  Integer d(den);
  if (d == 0) throw SyntaxError("zero denominator in '" + text + "'");
  return Rational(n) / Rational(d);
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Integer pivot_weight(const Rational& r) {
  using boost::multiprecision::abs;
  return abs(numerator(r)) * abs(denominator(r));
}

}  // namespace leflab
