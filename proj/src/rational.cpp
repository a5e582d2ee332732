#include "invkit/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>

#include "invkit/error.hpp"

namespace invkit {

Rational::Rational(const Int& n, const Int& d) {
  require(!d.is_zero(), "rational with zero denominator");
  v_ = cpp_rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  require(!o.is_zero(), "division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  };
  if (text.empty()) bad();
  const auto slash = text.find('/');
  const auto is_int = [&](std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto to_int = [&](std::string_view s) {
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
      neg = s[0] == '-';
      s.remove_prefix(1);
    }
    Int v{std::string(s)};
    return neg ? Int(-v) : v;
  };
  if (slash == std::string_view::npos) {
    if (!is_int(text)) bad();
    return Rational(to_int(text));
  }
  const auto num_part = text.substr(0, slash);
  const auto den_part = text.substr(slash + 1);
  if (!is_int(num_part) || !is_int(den_part)) bad();
  Int d = to_int(den_part);
  if (d.is_zero()) bad();
  return Rational(to_int(num_part), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

std::string to_string(const Int& n) { return n.str(); }

}  // namespace invkit
