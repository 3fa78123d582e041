#pragma once

#include "autrep/gaussian.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace autrep {

/// Laurent polynomial in one variable t over Q(i).
/// Coefficient map never stores zeros; the zero polynomial has an empty map.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long long c) { set(0, Gaussian(c)); }        // NOLINT(google-explicit-constructor)
  Laurent(Gaussian c) { set(0, std::move(c)); }        // NOLINT(google-explicit-constructor)
  Laurent(Rational c) { set(0, Gaussian(std::move(c))); }  // NOLINT(google-explicit-constructor)

  static Laurent t(long long exponent = 1, Gaussian coeff = Gaussian(1)) {
    Laurent p;
    p.set(exponent, std::move(coeff));
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// True when the only term (if any) has exponent 0.
  bool is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
  }
  Gaussian constant_value() const;

  /// True when the polynomial is c*t^k with c != 0 (a unit of the ring).
  bool is_unit() const { return coeffs_.size() == 1; }
  Laurent unit_inverse() const;

  const std::map<long long, Gaussian>& terms() const { return coeffs_; }
  Gaussian coeff(long long exponent) const;
  long long min_exponent() const;  // requires nonzero
  long long max_exponent() const;  // requires nonzero
  /// max_exponent - min_exponent for nonzero polynomials, 0 for zero.
  long long spread() const;

  void set(long long exponent, Gaussian c);

  Gaussian evaluate(const Gaussian& tval) const;  // tval != 0

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
  Laurent& operator*=(const Laurent& b) { return *this = *this * b; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  /// Exact division by a nonzero integer (coefficient-wise).
  Laurent div_int(long long k) const;

 private:
  std::map<long long, Gaussian> coeffs_;
};

/// Parse the CLI entry grammar: "2*t^-1 + 1 - 1/3*t^2"; gaussian
/// coefficients are parenthesized: "(1+2i)*t".
Laurent parse_laurent(const std::string& s);

std::string format_laurent(const Laurent& p);

std::ostream& operator<<(std::ostream& os, const Laurent& p);

}  // namespace autrep
