#pragma once

#include "autrep/gaussian.hpp"
#include "autrep/laurent.hpp"
#include "autrep/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace autrep {

/// Compile-time description of a scalar ring. All three rings are
/// commutative Q-algebras, so exact division by a nonzero integer is
/// always available (Faddeev-LeVerrier needs nothing more).
template <class R>
struct Ring;

template <>
struct Ring<Rational> {
  static constexpr bool is_field = true;
  static constexpr const char* name = "rational";
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static Rational from_int(long long v) { return v; }
  static Rational from_rational(const Rational& v) { return v; }
  static bool is_zero(const Rational& a) { return a == 0; }
  static Rational div_int(const Rational& a, long long k) { return a / Rational(k); }
  static Rational inverse(const Rational& a) {
    if (a == 0) throw std::domain_error("division by zero");
    return Rational(1) / a;
  }
  static std::string str(const Rational& a) { return format_rational(a); }
  static Rational parse(const std::string& s) { return parse_rational(s); }
};

template <>
struct Ring<Gaussian> {
  static constexpr bool is_field = true;
  static constexpr const char* name = "gaussian";
  static Gaussian zero() { return Gaussian(0); }
  static Gaussian one() { return Gaussian(1); }
  static Gaussian from_int(long long v) { return Gaussian(v); }
  static Gaussian from_rational(const Rational& v) { return Gaussian(v); }
  static bool is_zero(const Gaussian& a) { return a.is_zero(); }
  static Gaussian div_int(const Gaussian& a, long long k) { return a / Gaussian(k); }
  static Gaussian inverse(const Gaussian& a) { return Gaussian(1) / a; }
  static std::string str(const Gaussian& a) { return format_gaussian(a); }
  static Gaussian parse(const std::string& s) { return parse_gaussian(s); }
};

template <>
struct Ring<Laurent> {
  static constexpr bool is_field = false;
  static constexpr const char* name = "laurent";
  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(1); }
  static Laurent from_int(long long v) { return Laurent(v); }
  static Laurent from_rational(const Rational& v) { return Laurent(v); }
  static bool is_zero(const Laurent& a) { return a.is_zero(); }
  static Laurent div_int(const Laurent& a, long long k) { return a.div_int(k); }
  static std::string str(const Laurent& a) { return format_laurent(a); }
  static Laurent parse(const std::string& s) { return parse_laurent(s); }
};

/// Dense square matrix over an exact scalar ring, value semantics.
template <class R>
class Mat {
 public:
  Mat() = default;
  explicit Mat(std::size_t dim) : dim_(dim), e_(dim * dim, Ring<R>::zero()) {}
  Mat(std::size_t dim, std::vector<R> entries) : dim_(dim), e_(std::move(entries)) {
    if (e_.size() != dim * dim) throw std::invalid_argument("entry count != dim^2");
  }

  static Mat identity(std::size_t dim) {
    Mat m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Ring<R>::one();
    return m;
  }

  std::size_t dim() const { return dim_; }
  R& at(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
  const R& at(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
  const std::vector<R>& entries() const { return e_; }

  R trace() const {
    R t = Ring<R>::zero();
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
  }

  Mat transpose() const {
    Mat m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  bool is_zero() const {
    for (const R& v : e_)
      if (!Ring<R>::is_zero(v)) return false;
    return true;
  }

  bool is_identity() const { return *this == identity(dim_); }

  friend Mat operator+(const Mat& a, const Mat& b) {
    check_dims(a, b);
    Mat m(a.dim_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] + b.e_[k];
    return m;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    check_dims(a, b);
    Mat m(a.dim_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] - b.e_[k];
    return m;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    check_dims(a, b);
    const std::size_t d = a.dim_;
    Mat m(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        const R& aik = a.at(i, k);
        if (Ring<R>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) += aik * b.at(k, j);
      }
    }
    return m;
  }
  friend Mat operator*(const R& s, const Mat& a) {
    Mat m(a.dim_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = s * a.e_[k];
    return m;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  /// Nonnegative power by repeated squaring.
  Mat pow(unsigned long long k) const {
    Mat acc = identity(dim_);
    Mat base = *this;
    while (k > 0) {
      if (k & 1ull) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  template <class S, class F>
  Mat<S> map(F&& f) const {
    std::vector<S> out;
    out.reserve(e_.size());
    for (const R& v : e_) out.push_back(f(v));
    return Mat<S>(dim_, std::move(out));
  }

 private:
  static void check_dims(const Mat& a, const Mat& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<R> e_;
};

using RatMat = Mat<Rational>;
using GaussMat = Mat<Gaussian>;
using LaurentMat = Mat<Laurent>;

inline GaussMat to_gaussian(const RatMat& m) {
  return m.map<Gaussian>([](const Rational& v) { return Gaussian(v); });
}
inline LaurentMat to_laurent(const RatMat& m) {
  return m.map<Laurent>([](const Rational& v) { return Laurent(v); });
}
inline LaurentMat to_laurent(const GaussMat& m) {
  return m.map<Laurent>([](const Gaussian& v) { return Laurent(v); });
}
inline GaussMat evaluate_at(const LaurentMat& m, const Gaussian& t) {
  return m.map<Gaussian>([&](const Laurent& v) { return v.evaluate(t); });
}

/// Convenience literal-style builders used all over the tests.
RatMat rat_mat(std::size_t dim, std::initializer_list<long long> vals);
RatMat rat_mat_q(std::size_t dim, std::initializer_list<Rational> vals);

inline RatMat rat_mat(std::size_t dim, std::initializer_list<long long> vals) {
  if (vals.size() != dim * dim) throw std::invalid_argument("entry count != dim^2");
  std::vector<Rational> e;
  e.reserve(vals.size());
  for (long long v : vals) e.emplace_back(v);
  return RatMat(dim, std::move(e));
}

inline RatMat rat_mat_q(std::size_t dim, std::initializer_list<Rational> vals) {
  if (vals.size() != dim * dim) throw std::invalid_argument("entry count != dim^2");
  return RatMat(dim, std::vector<Rational>(vals));
}

}  // namespace autrep
