#pragma once

// Shared test utilities: independent oracles and seeded random generators.
// Everything here is deliberately separate from the library implementations
// it cross-checks.

#include "autrep/linalg.hpp"
#include "autrep/matrix.hpp"
#include "autrep/poly.hpp"
#include "autrep/rng.hpp"

#include <functional>
#include <vector>

namespace testutil {

using namespace autrep;

/// Cofactor-expansion determinant: the oracle for char_poly / det.
template <class R>
R det_cofactor(const Mat<R>& m) {
  const std::size_t d = m.dim();
  if (d == 0) return Ring<R>::one();
  if (d == 1) return m.at(0, 0);
  R acc = Ring<R>::zero();
  for (std::size_t j = 0; j < d; ++j) {
    if (Ring<R>::is_zero(m.at(0, j))) continue;
    Mat<R> minor(d - 1);
    for (std::size_t r = 1; r < d; ++r) {
      for (std::size_t c = 0, cc = 0; c < d; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    R term = m.at(0, j) * det_cofactor(minor);
    if (j % 2 == 1) term = Ring<R>::zero() - term;
    acc += term;
  }
  return acc;
}

/// char poly via cofactor expansion of xI - m over the polynomial ring,
/// done naively with Poly entries (independent of Faddeev-LeVerrier).
template <class F>
Poly<F> char_poly_cofactor(const Mat<F>& m) {
  using P = Poly<F>;
  const std::size_t d = m.dim();
  // Represent xI - m as a matrix of polynomials and expand recursively.
  struct PM {
    std::size_t dim;
    std::vector<P> e;
    P& at(std::size_t i, std::size_t j) { return e[i * dim + j]; }
    const P& at(std::size_t i, std::size_t j) const { return e[i * dim + j]; }
  };
  PM a{d, std::vector<P>(d * d)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<F> c{Ring<F>::zero() - m.at(i, j)};
      if (i == j) c.push_back(Ring<F>::one());
      a.at(i, j) = P(std::move(c));
    }
  std::function<P(const PM&)> go = [&](const PM& mm) -> P {
    if (mm.dim == 1) return mm.at(0, 0);
    P acc;
    for (std::size_t j = 0; j < mm.dim; ++j) {
      PM minor{mm.dim - 1, std::vector<P>((mm.dim - 1) * (mm.dim - 1))};
      for (std::size_t r = 1; r < mm.dim; ++r)
        for (std::size_t c = 0, cc = 0; c < mm.dim; ++c) {
          if (c == j) continue;
          minor.at(r - 1, cc++) = mm.at(r, c);
        }
      P term = mm.at(0, j) * go(minor);
      if (j % 2 == 1) term = -term;
      acc = acc + term;
    }
    return acc;
  };
  return go(a);
}

inline Rational random_rational(Rng& rng, long long num_bound = 3, long long den_bound = 3) {
  long long num = rng.int_in(-num_bound, num_bound);
  long long den = rng.int_in(1, den_bound);
  return Rational(num, den);
}

inline RatMat random_rat_mat(Rng& rng, std::size_t d, long long num_bound = 3) {
  RatMat m(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m.at(i, j) = random_rational(rng, num_bound);
  return m;
}

inline RatMat random_invertible(Rng& rng, std::size_t d) {
  for (;;) {
    RatMat m = random_rat_mat(rng, d);
    if (det_cofactor(m) != 0) return m;
  }
}

/// Random determinant-1 matrix: product of elementary shears.
inline RatMat random_sl(Rng& rng, std::size_t d, int shears = 6) {
  RatMat m = RatMat::identity(d);
  for (int s = 0; s < shears; ++s) {
    std::size_t i = static_cast<std::size_t>(rng.below(d));
    std::size_t j = static_cast<std::size_t>(rng.below(d));
    if (i == j) continue;
    RatMat e = RatMat::identity(d);
    e.at(i, j) = random_rational(rng, 2, 2);
    m = m * e;
  }
  return m;
}

/// Random upper unitriangular matrix; `regular` forces a nonzero
/// superdiagonal (a single Jordan block).
inline RatMat random_unitriangular(Rng& rng, std::size_t d, bool regular = false) {
  RatMat m = RatMat::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Rational v = random_rational(rng, 2, 2);
      if (regular && j == i + 1) {
        while (v == 0) v = random_rational(rng, 2, 2);
      }
      m.at(i, j) = v;
    }
  return m;
}

inline GaussMat random_gauss_mat(Rng& rng, std::size_t d) {
  GaussMat m(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m.at(i, j) = Gaussian(random_rational(rng), random_rational(rng));
  return m;
}

}  // namespace testutil
