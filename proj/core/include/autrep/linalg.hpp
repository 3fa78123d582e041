#pragma once

#include "autrep/matrix.hpp"
#include "autrep/poly.hpp"

#include <optional>
#include <vector>

namespace autrep {

template <class F>
using Vec = std::vector<F>;

/// Row echelon reduction of a rectangular exact matrix, in place.
/// Returns pivot column indices.
template <class F>
std::vector<std::size_t> row_reduce(std::vector<Vec<F>>& rows) {
  static_assert(Ring<F>::is_field);
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && Ring<F>::is_zero(rows[sel][c])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    F inv = Ring<F>::inverse(rows[r][c]);
    for (std::size_t j = c; j < ncols; ++j) rows[r][j] = inv * rows[r][j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || Ring<F>::is_zero(rows[i][c])) continue;
      F f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(std::vector<Vec<F>> rows) {
  return row_reduce(rows).size();
}

template <class F>
std::vector<Vec<F>> to_rows(const Mat<F>& m) {
  std::vector<Vec<F>> rows(m.dim(), Vec<F>(m.dim(), Ring<F>::zero()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

template <class F>
std::size_t rank(const Mat<F>& m) {
  return rank(to_rows(m));
}

/// Basis of the right null space {v : rows . v = 0} of a rectangular
/// system by exact elimination.
template <class F>
std::vector<Vec<F>> kernel_basis(std::vector<Vec<F>> rows, std::size_t ncols) {
  std::vector<std::size_t> pivots = row_reduce(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free_c = 0; free_c < ncols; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vec<F> v(ncols, Ring<F>::zero());
    v[free_c] = Ring<F>::one();
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      v[pivots[k]] = Ring<F>::zero() - rows[k][free_c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::vector<Vec<F>> kernel_basis(const Mat<F>& m) {
  return kernel_basis(to_rows(m), m.dim());
}

/// Inverse by Gauss-Jordan; throws on singular input.
template <class F>
Mat<F> inverse(const Mat<F>& m) {
  static_assert(Ring<F>::is_field);
  const std::size_t d = m.dim();
  std::vector<Vec<F>> aug(d, Vec<F>(2 * d, Ring<F>::zero()));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = m.at(i, j);
    aug[i][d + i] = Ring<F>::one();
  }
  std::vector<std::size_t> pivots = row_reduce(aug);
  if (pivots.size() != d || pivots.back() >= d)
    throw std::domain_error("matrix is singular");
  Mat<F> out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.at(i, j) = aug[i][d + j];
  return out;
}

/// Inverse over a commutative ring via the adjugate; requires det to be
/// a unit. Used for Laurent matrices (det a nonzero monomial).
inline LaurentMat inverse_adjugate(const LaurentMat& m) {
  const std::size_t d = m.dim();
  Laurent dm = det(m);
  if (!dm.is_unit())
    throw std::domain_error("laurent matrix determinant is not a unit");
  Laurent dinv = dm.unit_inverse();
  LaurentMat out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      LaurentMat minor(d - 1);
      for (std::size_t r = 0, rr = 0; r < d; ++r) {
        if (r == j) continue;  // adjugate transposes the cofactor matrix
        for (std::size_t c = 0, cc = 0; c < d; ++c) {
          if (c == i) continue;
          minor.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Laurent cof = d == 1 ? Laurent(1) : det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      out.at(i, j) = cof * dinv;
    }
  }
  return out;
}

/// Incrementally echelonized span of exact vectors; used by the density
/// closure, orbit spans and basis completion.
template <class F>
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t ncols) : ncols_(ncols) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<Vec<F>>& rows() const { return rows_; }

  /// Reduce v against the span; returns the residual (zero iff contained).
  Vec<F> reduce(Vec<F> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const F& c = v[pivots_[k]];
      if (Ring<F>::is_zero(c)) continue;
      F f = c;  // rows are pivot-normalized
      for (std::size_t j = 0; j < ncols_; ++j) v[j] -= f * rows_[k][j];
    }
    return v;
  }

  bool contains(Vec<F> v) const {
    v = reduce(std::move(v));
    for (const F& x : v)
      if (!Ring<F>::is_zero(x)) return false;
    return true;
  }

  /// Insert v; returns true when the dimension grew.
  bool insert(Vec<F> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < ncols_ && Ring<F>::is_zero(v[p])) ++p;
    if (p == ncols_) return false;
    F inv = Ring<F>::inverse(v[p]);
    for (std::size_t j = 0; j < ncols_; ++j) v[j] = inv * v[j];
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t ncols_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Extend the given independent columns to a full basis using standard
/// basis vectors; returns an invertible matrix whose first columns are
/// the inputs.
template <class F>
Mat<F> complete_basis(const std::vector<Vec<F>>& cols, std::size_t d) {
  SpanBasis<F> span(d);
  std::vector<Vec<F>> chosen;
  for (const Vec<F>& v : cols) {
    if (!span.insert(v)) throw std::invalid_argument("dependent columns");
    chosen.push_back(v);
  }
  for (std::size_t j = 0; j < d && chosen.size() < d; ++j) {
    Vec<F> e(d, Ring<F>::zero());
    e[j] = Ring<F>::one();
    if (span.insert(e)) chosen.push_back(std::move(e));
  }
  Mat<F> out(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) out.at(i, j) = chosen[j][i];
  return out;
}

/// Invariant factors of xI - m via Smith normal form over F[x]:
/// the nonconstant diagonal entries, monic, each dividing the next.
/// Two matrices are conjugate over F iff their lists agree.
template <class F>
std::vector<Poly<F>> invariant_factors(const Mat<F>& m) {
  static_assert(Ring<F>::is_field);
  using P = Poly<F>;
  const std::size_t d = m.dim();
  std::vector<std::vector<P>> a(d, std::vector<P>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<F> c{Ring<F>::zero() - m.at(i, j)};
      if (i == j) c.push_back(Ring<F>::one());
      a[i][j] = P(std::move(c));
    }

  for (std::size_t k = 0; k < d; ++k) {
    for (;;) {
      // Pivot: minimal-degree nonzero entry of the trailing block.
      std::size_t pi = k, pj = k;
      long long best = -1;
      for (std::size_t i = k; i < d; ++i)
        for (std::size_t j = k; j < d; ++j)
          if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
            best = a[i][j].degree();
            pi = i;
            pj = j;
          }
      if (best < 0) break;  // trailing block zero
      std::swap(a[k], a[pi]);
      for (std::size_t i = 0; i < d; ++i) std::swap(a[i][k], a[i][pj]);

      bool reduced = true;
      for (std::size_t i = k + 1; i < d; ++i) {
        if (a[i][k].is_zero()) continue;
        P q = divmod(a[i][k], a[k][k]).first;
        for (std::size_t j = k; j < d; ++j) a[i][j] = a[i][j] - q * a[k][j];
        if (!a[i][k].is_zero()) reduced = false;
      }
      for (std::size_t j = k + 1; j < d; ++j) {
        if (a[k][j].is_zero()) continue;
        P q = divmod(a[k][j], a[k][k]).first;
        for (std::size_t i = k; i < d; ++i) a[i][j] = a[i][j] - q * a[i][k];
        if (!a[k][j].is_zero()) reduced = false;
      }
      if (!reduced) continue;

      bool offdiag = false;
      for (std::size_t i = k + 1; i < d && !offdiag; ++i)
        if (!a[i][k].is_zero()) offdiag = true;
      for (std::size_t j = k + 1; j < d && !offdiag; ++j)
        if (!a[k][j].is_zero()) offdiag = true;
      if (offdiag) continue;

      // Divisibility fix-up: pivot must divide the remaining block.
      bool fixed = true;
      for (std::size_t i = k + 1; i < d && fixed; ++i) {
        for (std::size_t j = k + 1; j < d && fixed; ++j) {
          if (!divmod(a[i][j], a[k][k]).second.is_zero()) {
            for (std::size_t c = k; c < d; ++c) a[k][c] = a[k][c] + a[i][c];
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }
  }

  std::vector<Poly<F>> out;
  for (std::size_t k = 0; k < d; ++k) {
    if (a[k][k].degree() >= 1) out.push_back(monic(a[k][k]));
  }
  return out;
}

/// Generic rank of a Laurent matrix: max rank over the sample points.
/// Exceeds-spread sampling makes this the true generic rank: any minor is
/// a Laurent polynomial whose nonzero-root count is bounded by its spread,
/// itself at most the sum over rows of the largest entry spread.
inline std::size_t laurent_rank(const LaurentMat& m, const std::vector<Rational>& samples) {
  std::size_t best = 0;
  for (const Rational& s : samples) {
    if (s == 0) throw std::invalid_argument("laurent rank sample at t=0");
    best = std::max(best, rank(evaluate_at(m, Gaussian(s))));
  }
  return best;
}

/// Sample budget sufficient for the generic rank of m (spread bound + 1).
inline std::vector<Rational> laurent_rank_samples(const LaurentMat& m) {
  long long bound = 1;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    long long row_max = 0;
    for (std::size_t j = 0; j < m.dim(); ++j)
      row_max = std::max(row_max, m.at(i, j).spread());
    bound += row_max;
  }
  std::vector<Rational> samples;
  for (long long v = 1; static_cast<long long>(samples.size()) < bound; ++v)
    samples.emplace_back(v);
  return samples;
}

inline std::size_t laurent_rank(const LaurentMat& m) {
  return laurent_rank(m, laurent_rank_samples(m));
}

}  // namespace autrep
