#include "autrep/gaussian.hpp"

#include <cctype>
#include <ostream>

namespace autrep {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

Gaussian parse_gaussian(const std::string& raw) {
  std::string s = strip_spaces(raw);
  if (s.empty()) throw std::invalid_argument("empty gaussian literal");
  if (s.back() != 'i') return Gaussian(parse_rational(s));

  // Trailing 'i': split into real + imaginary at the last top-level sign.
  std::string body = s.substr(0, s.size() - 1);
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_of = [](std::string part) -> Rational {
    if (part.empty() || part == "+") return 1;
    if (part == "-") return -1;
    return parse_rational(part);
  };
  if (split == std::string::npos) return Gaussian(Rational(0), imag_of(body));
  Rational re = parse_rational(body.substr(0, split));
  std::string im_part = body.substr(split);  // keeps the sign
  return Gaussian(re, imag_of(im_part));
}

std::string format_gaussian(const Gaussian& a) {
  if (a.im == 0) return format_rational(a.re);
  std::string im = format_rational(a.im) + "i";
  if (a.re == 0) return im;
  std::string out = format_rational(a.re);
  if (a.im > 0) out += "+";
  out += im;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Gaussian& a) {
  return os << format_gaussian(a);
}

}  // namespace autrep
