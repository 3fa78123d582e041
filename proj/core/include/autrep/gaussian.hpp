#pragma once

#include "autrep/rational.hpp"

#include <iosfwd>
#include <string>

namespace autrep {

/// Element of Q(i): re + im*i with rational parts.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}            // NOLINT(google-explicit-constructor)
  Gaussian(long long r) : re(r) {}                      // NOLINT(google-explicit-constructor)
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("gaussian division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  Gaussian& operator+=(const Gaussian& b) { return *this = *this + b; }
  Gaussian& operator-=(const Gaussian& b) { return *this = *this - b; }
  Gaussian& operator*=(const Gaussian& b) { return *this = *this * b; }
  Gaussian& operator/=(const Gaussian& b) { return *this = *this / b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

  Gaussian conj() const { return {re, -im}; }
};

/// Parse the CLI entry grammar: "1/2+3/4i", "-2", "3i", "i", "-i".
Gaussian parse_gaussian(const std::string& s);

std::string format_gaussian(const Gaussian& a);

std::ostream& operator<<(std::ostream& os, const Gaussian& a);

}  // namespace autrep
