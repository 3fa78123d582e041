#include "autrep/rational.hpp"

#include <cctype>

namespace autrep {

Rational parse_rational(const std::string& s) {
  std::string trimmed;
  trimmed.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  }
  if (trimmed.empty()) throw std::invalid_argument("empty rational literal");
  size_t pos = 0;
  if (trimmed[pos] == '+' || trimmed[pos] == '-') ++pos;
  bool saw_digit = false, saw_slash = false;
  for (; pos < trimmed.size(); ++pos) {
    char c = trimmed[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      saw_digit = true;
    } else if (c == '/' && !saw_slash && saw_digit) {
      saw_slash = true;
      saw_digit = false;
    } else {
      throw std::invalid_argument("bad rational literal '" + s + "' at offset " +
                                  std::to_string(pos));
    }
  }
  if (!saw_digit) throw std::invalid_argument("bad rational literal '" + s + "'");
  if (trimmed[0] == '+') trimmed.erase(0, 1);
  Rational r(trimmed);
  return r;
}

std::string format_rational(const Rational& a) {
  std::string out = numerator(a).str();
  if (denominator(a) != 1) {
    out += "/";
    out += denominator(a).str();
  }
  return out;
}

Rational rat_pow(const Rational& a, long long k) {
  if (k == 0) return 1;
  if (a == 0 && k < 0) throw std::domain_error("0^negative");
  Rational base = k < 0 ? Rational(1) / a : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  Rational acc(1);
  while (e > 0) {
    if (e & 1ull) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace autrep
