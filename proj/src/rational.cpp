#include "feasreg/rational.hpp"

#include "feasreg/errors.hpp"

namespace feasreg {

std::string to_string(const Rational& r) {
  return r.str();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  auto slash = s.find('/');
  auto parse_int = [](const std::string& t) {
    if (t.empty()) throw InvalidArgument("bad rational");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw InvalidArgument("bad rational: " + t);
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw InvalidArgument("bad rational: " + t);
    return Integer(t[0] == '+' ? t.substr(1) : t);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  Integer num = parse_int(s.substr(0, slash));
  Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  return Rational(num, den);
}

}  // namespace feasreg
