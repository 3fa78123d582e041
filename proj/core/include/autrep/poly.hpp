#pragma once

#include "autrep/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace autrep {

/// Univariate polynomial with coefficients in R, ascending degree order.
/// Trailing zero coefficients are trimmed; zero polynomial has empty storage.
template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(R v) { return Poly(std::vector<R>{std::move(v)}); }
  static Poly x() { return Poly(std::vector<R>{Ring<R>::zero(), Ring<R>::one()}); }

  long long degree() const { return static_cast<long long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Ring<R>::zero(); }
  const R& leading() const { return c_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<R> out(std::max(a.c_.size(), b.c_.size()), Ring<R>::zero());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<R> out(std::max(a.c_.size(), b.c_.size()), Ring<R>::zero());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<R> out;
    out.reserve(a.c_.size());
    for (const R& v : a.c_) out.push_back(Ring<R>::zero() - v);
    return Poly(std::move(out));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, Ring<R>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Ring<R>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(const R& s, const Poly& a) {
    std::vector<R> out;
    out.reserve(a.c_.size());
    for (const R& v : a.c_) out.push_back(s * v);
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  R evaluate(const R& x) const {
    R acc = Ring<R>::zero();
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  /// Evaluate at a square matrix (Cayley-Hamilton checks).
  Mat<R> evaluate(const Mat<R>& m) const {
    Mat<R> acc(m.dim());
    Mat<R> id = Mat<R>::identity(m.dim());
    for (std::size_t k = c_.size(); k-- > 0;) {
      acc = acc * m;
      for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
          acc.at(i, j) += c_[k] * id.at(i, j);
    }
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> out(c_.size() - 1, Ring<R>::zero());
    for (std::size_t k = 1; k < c_.size(); ++k)
      out[k - 1] = Ring<R>::from_int(static_cast<long long>(k)) * c_[k];
    return Poly(std::move(out));
  }

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && Ring<R>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
std::string Poly<R>::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (Ring<R>::is_zero(c_[k])) continue;
    std::string cs = Ring<R>::str(c_[k]);
    if (k > 0 &&
        (cs.find_first_of("+ ") != std::string::npos || cs.find('-', 1) != std::string::npos))
      cs = "(" + cs + ")";  // composite coefficients (laurent, gaussian)
    std::string term;
    if (k == 0) {
      term = cs;
    } else {
      std::string xp = k == 1 ? var : var + "^" + std::to_string(k);
      term = cs == "1" ? xp : (cs == "-1" ? "-" + xp : cs + "*" + xp);
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

/// Characteristic polynomial det(xI - m) by the Faddeev-LeVerrier
/// recurrence. Divisions are by the integers 1..d only, so the same code
/// runs over the rationals, Q(i) and the Laurent ring.
template <class R>
Poly<R> char_poly(const Mat<R>& m) {
  const std::size_t d = m.dim();
  std::vector<R> c(d + 1, Ring<R>::zero());
  c[d] = Ring<R>::one();
  Mat<R> n(d);  // N_0 = 0
  for (std::size_t k = 1; k <= d; ++k) {
    // N_k = m * (N_{k-1} + c_{d-k+1} I)
    Mat<R> shifted = n;
    for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) += c[d - k + 1];
    n = m * shifted;
    c[d - k] = Ring<R>::div_int(Ring<R>::zero() - n.trace(), static_cast<long long>(k));
  }
  return Poly<R>(std::move(c));
}

/// det(m) computed from the characteristic polynomial constant term.
template <class R>
R det(const Mat<R>& m) {
  const std::size_t d = m.dim();
  R c0 = char_poly(m).coeff(0);
  return d % 2 == 0 ? c0 : Ring<R>::zero() - c0;
}

/// (x-1)^d with coefficients in R.
template <class R>
Poly<R> unipotent_char_poly(std::size_t d) {
  Poly<R> p = Poly<R>::constant(Ring<R>::one());
  Poly<R> xm1(std::vector<R>{Ring<R>::zero() - Ring<R>::one(), Ring<R>::one()});
  for (std::size_t k = 0; k < d; ++k) p = p * xm1;
  return p;
}

// Field-only helpers.

template <class F>
Poly<F> monic(const Poly<F>& p) {
  static_assert(Ring<F>::is_field);
  if (p.is_zero()) return p;
  return Ring<F>::inverse(p.leading()) * p;
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  static_assert(Ring<F>::is_field);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<F> rem(a.coeffs());
  std::vector<F> quot;
  long long db = b.degree();
  if (a.degree() < db) return {Poly<F>(), a};
  quot.assign(static_cast<std::size_t>(a.degree() - db) + 1, Ring<F>::zero());
  F lead_inv = Ring<F>::inverse(b.leading());
  for (long long k = a.degree(); k >= db; --k) {
    F q = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (Ring<F>::is_zero(q)) continue;
    quot[static_cast<std::size_t>(k - db)] = q;
    for (long long j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeff(static_cast<std::size_t>(j));
  }
  return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  static_assert(Ring<F>::is_field);
  while (!b.is_zero()) {
    Poly<F> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// True when p has no repeated roots (over the algebraic closure).
template <class F>
bool is_squarefree(const Poly<F>& p) {
  if (p.degree() <= 1) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

}  // namespace autrep
