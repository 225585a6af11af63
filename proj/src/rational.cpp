#include "stieltjes/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace stieltjes {

namespace {

Int parse_int(const std::string& text) {
  std::string t = text;
  size_t b = t.find_first_not_of(" \t");
  size_t e = t.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("empty integer in rational literal");
  t = t.substr(b, e - b + 1);
  size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i == t.size()) throw std::invalid_argument("sign without digits in rational literal");
  for (size_t k = i; k < t.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(t[k])))
      throw std::invalid_argument("invalid character in rational literal: '" + text + "'");
  }
  Int v(t.substr(i));
  return t[0] == '-' ? Int(-v) : v;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  size_t slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  if (text.find('/', slash + 1) != std::string::npos)
    throw std::invalid_argument("multiple '/' in rational literal: '" + text + "'");
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

std::string rat_to_string(const Rat& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

Rat rat_pow(const Rat& value, unsigned exp) {
  Rat acc(1);
  Rat base = value;
  while (exp != 0) {
    if (exp & 1u) acc *= base;
    exp >>= 1u;
    if (exp != 0) base *= base;
  }
  return acc;
}

}  // namespace stieltjes
