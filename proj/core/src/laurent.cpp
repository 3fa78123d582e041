#include "autrep/laurent.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace autrep {

Gaussian Laurent::constant_value() const {
  if (is_zero()) return Gaussian(0);
  if (!is_constant()) throw std::domain_error("laurent polynomial is not constant");
  return coeffs_.begin()->second;
}

Laurent Laurent::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("laurent polynomial is not a unit");
  auto [e, c] = *coeffs_.begin();
  return t(-e, Gaussian(1) / c);
}

Gaussian Laurent::coeff(long long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Gaussian(0) : it->second;
}

long long Laurent::min_exponent() const {
  if (is_zero()) throw std::domain_error("zero laurent polynomial");
  return coeffs_.begin()->first;
}

long long Laurent::max_exponent() const {
  if (is_zero()) throw std::domain_error("zero laurent polynomial");
  return coeffs_.rbegin()->first;
}

long long Laurent::spread() const {
  return is_zero() ? 0 : max_exponent() - min_exponent();
}

void Laurent::set(long long exponent, Gaussian c) {
  if (c.is_zero()) {
    coeffs_.erase(exponent);
  } else {
    coeffs_[exponent] = std::move(c);
  }
}

Gaussian Laurent::evaluate(const Gaussian& tval) const {
  if (tval.is_zero()) throw std::domain_error("laurent evaluation at t=0");
  Gaussian acc(0);
  Gaussian tinv = Gaussian(1) / tval;
  for (const auto& [e, c] : coeffs_) {
    Gaussian p(1);
    const Gaussian& base = e >= 0 ? tval : tinv;
    for (long long k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
    acc += c * p;
  }
  return acc;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent out = a;
  for (const auto& [e, c] : b.coeffs_) out.set(e, out.coeff(e) + c);
  return out;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
  Laurent out = a;
  for (const auto& [e, c] : b.coeffs_) out.set(e, out.coeff(e) - c);
  return out;
}

Laurent operator-(const Laurent& a) {
  Laurent out;
  for (const auto& [e, c] : a.coeffs_) out.set(e, -c);
  return out;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      out.set(ea + eb, out.coeff(ea + eb) + ca * cb);
    }
  }
  return out;
}

Laurent Laurent::div_int(long long k) const {
  if (k == 0) throw std::domain_error("laurent division by zero integer");
  Laurent out;
  Gaussian d{Rational(k)};
  for (const auto& [e, c] : coeffs_) out.set(e, c / d);
  return out;
}

namespace {

// One term of the grammar: [coef ['*']] ['t' ['^' exp]].
void parse_term(const std::string& term, int sign, Laurent& acc) {
  if (term.empty()) throw std::invalid_argument("empty laurent term");
  size_t tpos = std::string::npos;
  int depth = 0;
  for (size_t k = 0; k < term.size(); ++k) {
    if (term[k] == '(') ++depth;
    if (term[k] == ')') --depth;
    if (term[k] == 't' && depth == 0) {
      tpos = k;
      break;
    }
  }
  Gaussian coef(1);
  long long expo = 0;
  if (tpos == std::string::npos) {
    std::string c = term;
    if (!c.empty() && c.front() == '(' && c.back() == ')') c = c.substr(1, c.size() - 2);
    coef = parse_gaussian(c);
  } else {
    std::string head = term.substr(0, tpos);
    if (!head.empty() && head.back() == '*') head.pop_back();
    if (!head.empty()) {
      if (head.front() == '(' && head.back() == ')') head = head.substr(1, head.size() - 2);
      coef = parse_gaussian(head);
    }
    std::string tail = term.substr(tpos + 1);
    if (tail.empty()) {
      expo = 1;
    } else if (tail.front() == '^') {
      std::string e = tail.substr(1);
      if (e.empty()) throw std::invalid_argument("missing exponent in '" + term + "'");
      size_t used = 0;
      expo = std::stoll(e, &used);
      if (used != e.size()) throw std::invalid_argument("bad exponent in '" + term + "'");
    } else {
      throw std::invalid_argument("unexpected trailing text in '" + term + "'");
    }
  }
  if (sign < 0) coef = -coef;
  acc.set(expo, acc.coeff(expo) + coef);
}

}  // namespace

Laurent parse_laurent(const std::string& raw) {
  std::string s;
  s.reserve(raw.size());
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty laurent literal");

  Laurent acc;
  int depth = 0;
  int sign = 1;
  size_t start = 0;
  if (s[0] == '+') {
    start = 1;
  } else if (s[0] == '-') {
    sign = -1;
    start = 1;
  }
  size_t term_begin = start;
  for (size_t k = start; k <= s.size(); ++k) {
    bool at_end = k == s.size();
    char c = at_end ? '+' : s[k];
    if (!at_end) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
    }
    bool top_sign = !at_end && depth == 0 && (c == '+' || c == '-') && k > term_begin &&
                    s[k - 1] != '^';  // '^-1' keeps its sign
    if (at_end || top_sign) {
      parse_term(s.substr(term_begin, k - term_begin), sign, acc);
      if (!at_end) {
        sign = c == '-' ? -1 : 1;
        term_begin = k + 1;
      }
    }
  }
  return acc;
}

std::string format_laurent(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Gaussian mag = c;
    bool negative = (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0);
    if (negative) mag = -c;
    std::string cs = format_gaussian(mag);
    if (mag.im != 0 && mag.re != 0) cs = "(" + cs + ")";
    std::string term;
    if (e == 0) {
      term = cs;
    } else {
      std::string tpart = e == 1 ? "t" : "t^" + std::to_string(e);
      term = (cs == "1") ? tpart : cs + "*" + tpart;
    }
    if (first) {
      out = (negative ? "-" : "") + term;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) {
  return os << format_laurent(p);
}

}  // namespace autrep
