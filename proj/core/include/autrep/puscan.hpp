#pragma once

#include "autrep/rep_tuple.hpp"
#include "autrep/spectra.hpp"
#include "autrep/words.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace autrep {

/// Outcome of evaluating enumerated primitives on a tuple. The scan order
/// is primitives sorted by (length, letters); the witness is the first
/// non-unipotent image in that order.
template <class R>
struct ScanReport {
  std::optional<ReducedWord> witness;
  Poly<R> witness_char_poly;  // set when witness is
  std::size_t tested = 0;
  bool truncated = false;        // primitive enumeration hit its budget
  bool via_nielsen_retry = false;

  bool all_unipotent() const { return !witness.has_value(); }
};

/// Shared scan-order helper: enumerate primitives and sort by (length, letters).
std::vector<ReducedWord> sorted_primitives(int rank, int max_len, std::size_t budget,
                                           bool* truncated = nullptr);

/// Scan over a precomputed sorted primitive list (see sorted_primitives);
/// lets callers share one enumeration across many tuples.
template <class R>
ScanReport<R> scan_primitives_over(const RepTuple<R>& t,
                                   const std::vector<ReducedWord>& prims,
                                   bool truncated = false) {
  ScanReport<R> report;
  report.truncated = truncated;
  TupleEvaluator<R> eval(t);
  const std::size_t d = t.dim;
  const R trace_target = Ring<R>::from_int(static_cast<long long>(d));

  // Prefix-sharing evaluation over the sorted words.
  std::vector<Mat<R>> prods{Mat<R>::identity(d)};
  std::vector<int> prefix;
  auto letter_mat = [&](int l) -> const Mat<R>& {
    return l > 0 ? t.mats[static_cast<std::size_t>(l - 1)]
                 : eval.generator_inverse(static_cast<std::size_t>(-l - 1));
  };
  for (const ReducedWord& w : prims) {
    std::size_t common = 0;
    while (common < prefix.size() && common < w.letters.size() &&
           prefix[common] == w.letters[common])
      ++common;
    prefix.resize(common);
    prods.resize(common + 1);
    for (std::size_t k = common; k < w.letters.size(); ++k) {
      prefix.push_back(w.letters[k]);
      prods.push_back(prods.back() * letter_mat(w.letters[k]));
    }
    const Mat<R>& img = prods.back();
    ++report.tested;
    if (img.trace() == trace_target && is_unipotent(img)) continue;
    report.witness = w;
    report.witness_char_poly = char_poly(img);
    return report;
  }
  return report;
}

/// Evaluate every enumerated primitive on the tuple; stop at the first
/// non-unipotent image. When the direct scan stalls, `nielsen_retries`
/// re-scans Nielsen-deformed tuples and pulls any witness back through the
/// deforming automorphism (the pullback of a primitive is primitive, and
/// the pulled-back witness is re-verified on the original tuple).
template <class R>
ScanReport<R> scan_primitives(const RepTuple<R>& t, int max_len, std::size_t budget,
                              int nielsen_retries = 0, std::uint64_t seed = 0) {
  bool truncated = false;
  std::vector<ReducedWord> prims =
      sorted_primitives(static_cast<int>(t.rank), max_len, budget, &truncated);
  ScanReport<R> report = scan_primitives_over(t, prims, truncated);
  if (report.witness) return report;

  TupleEvaluator<R> eval(t);
  for (int retry = 1; retry <= nielsen_retries; ++retry) {
    Automorphism a = random_automorphism(static_cast<int>(t.rank), 4, seed + retry);
    RepTuple<R> moved = act_on_rep(a, t);
    ScanReport<R> sub = scan_primitives_over(moved, prims, truncated);
    if (!sub.witness) continue;
    ReducedWord pulled = apply_automorphism(a.reversed(), *sub.witness);
    Mat<R> img = eval(pulled);
    if (is_unipotent(img)) continue;  // pullback must re-verify
    report.witness = pulled;
    report.witness_char_poly = char_poly(img);
    report.via_nielsen_retry = true;
    return report;
  }
  return report;
}

/// A full invariant flag certified by its basis change: conjugating every
/// tuple matrix by `basis_change` yields exactly upper unitriangular
/// matrices (machine-checked before returning).
template <class F>
struct Flag {
  Mat<F> basis_change;
  std::vector<std::size_t> signature;  // 1 < 2 < ... < d
};

template <class F>
struct KolchinResult {
  enum class Status { Triangularized, Witness, Stuck };
  Status status = Status::Stuck;
  std::optional<Flag<F>> flag;
  std::optional<ReducedWord> witness;  // short word with non-unipotent image
  std::size_t failure_stage = 0;       // stage whose common fixed space vanished

  bool ok() const { return status == Status::Triangularized; }
};

namespace detail {

/// Common fixed space of the tuple: kernel of the stacked (A_i - I).
template <class F>
std::vector<Vec<F>> common_fixed_space(const std::vector<Mat<F>>& mats) {
  const std::size_t d = mats[0].dim();
  std::vector<Vec<F>> rows;
  for (const Mat<F>& m : mats) {
    for (std::size_t i = 0; i < d; ++i) {
      Vec<F> row(d);
      for (std::size_t j = 0; j < d; ++j)
        row[j] = m.at(i, j) - (i == j ? Ring<F>::one() : Ring<F>::zero());
      rows.push_back(std::move(row));
    }
  }
  return kernel_basis(rows, d);
}

template <class F>
bool is_unitriangular(const Mat<F>& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m.at(i, i) != Ring<F>::one()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!Ring<F>::is_zero(m.at(i, j))) return false;
  }
  return true;
}

/// Recursive flag construction; returns the basis change or the failing
/// stage index.
template <class F>
std::optional<Mat<F>> kolchin_basis(std::vector<Mat<F>> mats, std::size_t stage,
                                    std::size_t* failure_stage) {
  const std::size_t d = mats[0].dim();
  if (d == 0) return Mat<F>(0);
  std::vector<Vec<F>> fixed = common_fixed_space(mats);
  if (fixed.empty()) {
    *failure_stage = stage;
    return std::nullopt;
  }
  const std::size_t k = fixed.size();
  Mat<F> p = complete_basis(fixed, d);
  Mat<F> pinv = inverse(p);
  if (k == d) return p;
  std::vector<Mat<F>> quotient;
  for (const Mat<F>& m : mats) {
    Mat<F> tm = pinv * m * p;
    Mat<F> q(d - k);
    for (std::size_t i = k; i < d; ++i)
      for (std::size_t j = k; j < d; ++j) q.at(i - k, j - k) = tm.at(i, j);
    quotient.push_back(std::move(q));
  }
  std::optional<Mat<F>> sub = kolchin_basis(std::move(quotient), stage + 1, failure_stage);
  if (!sub) return std::nullopt;
  Mat<F> block = Mat<F>::identity(d);
  for (std::size_t i = 0; i < d - k; ++i)
    for (std::size_t j = 0; j < d - k; ++j) block.at(k + i, k + j) = sub->at(i, j);
  return p * block;
}

}  // namespace detail

/// Iterated common-fixed-space triangularization. On success the flag is
/// machine-checked; on failure a bounded word search looks for a short
/// provably non-unipotent witness word (the honest `Stuck` outcome remains
/// when none exists within the bound).
template <class F>
KolchinResult<F> kolchin_triangularize(const RepTuple<F>& t, int witness_len = 3) {
  static_assert(Ring<F>::is_field);
  KolchinResult<F> result;
  std::size_t failure_stage = 0;
  std::optional<Mat<F>> basis = detail::kolchin_basis(t.mats, 0, &failure_stage);
  if (basis) {
    Mat<F> binv = inverse(*basis);
    for (const Mat<F>& m : t.mats) {
      if (!detail::is_unitriangular(binv * m * *basis))
        throw std::logic_error("kolchin flag failed verification");
    }
    Flag<F> flag;
    flag.basis_change = *basis;
    for (std::size_t k = 1; k <= t.dim; ++k) flag.signature.push_back(k);
    result.status = KolchinResult<F>::Status::Triangularized;
    result.flag = std::move(flag);
    return result;
  }

  result.failure_stage = failure_stage;
  TupleEvaluator<F> eval(t);
  std::vector<ReducedWord> queue;
  ReducedWord e;
  e.rank = static_cast<int>(t.rank);
  queue.push_back(e);
  const std::vector<int> letters = signed_letters(static_cast<int>(t.rank));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ReducedWord w = queue[head];
    if (static_cast<int>(w.length()) >= witness_len) continue;
    for (int l : letters) {
      if (!w.letters.empty() && w.letters.back() == -l) continue;
      ReducedWord next = w;
      next.letters.push_back(l);
      if (!is_unipotent(eval(next))) {
        result.status = KolchinResult<F>::Status::Witness;
        result.witness = next;
        return result;
      }
      queue.push_back(std::move(next));
    }
  }
  result.status = KolchinResult<F>::Status::Stuck;
  return result;
}

/// ker((u-I)^k): the unique u-invariant subspace of dimension k of a
/// regular unipotent u, for k = 1..d-1.
template <class F>
std::vector<Vec<F>> regular_invariant_subspace(const Mat<F>& u, std::size_t k) {
  static_assert(Ring<F>::is_field);
  if (!is_regular_unipotent(u))
    throw std::invalid_argument("input is not regular unipotent");
  if (k < 1 || k >= u.dim())
    throw std::invalid_argument("subspace dimension must be in 1..d-1");
  Mat<F> shifted = u - Mat<F>::identity(u.dim());
  std::vector<Vec<F>> basis = kernel_basis(shifted.pow(k));
  if (basis.size() != k) throw std::logic_error("regular kernel chain has wrong size");
  return basis;
}

struct GoodPositionReport {
  bool good = true;
  int i = 0;
  int j = 0;
  std::size_t k = 0;  // first violating triple when !good
};

/// Pairwise distinctness of the invariant kernel chains: for all i != j
/// and 1 <= k <= d-1, ker((a_i-I)^k) != ker((a_j-I)^k).
template <class F>
GoodPositionReport good_position_check(const RepTuple<F>& t) {
  for (const Mat<F>& m : t.mats)
    if (!is_regular_unipotent(m))
      throw std::invalid_argument("good position requires regular unipotent entries");
  const std::size_t d = t.dim;
  // chains[i][k-1] = basis of ker((a_i - I)^k)
  std::vector<std::vector<std::vector<Vec<F>>>> chains(t.rank);
  for (std::size_t i = 0; i < t.rank; ++i)
    for (std::size_t k = 1; k < d; ++k)
      chains[i].push_back(regular_invariant_subspace(t.mats[i], k));

  GoodPositionReport report;
  for (std::size_t i = 0; i < t.rank; ++i) {
    for (std::size_t j = i + 1; j < t.rank; ++j) {
      for (std::size_t k = 1; k < d; ++k) {
        std::vector<Vec<F>> stacked = chains[i][k - 1];
        for (const Vec<F>& v : chains[j][k - 1]) stacked.push_back(v);
        if (rank(std::move(stacked)) == k) {
          report.good = false;
          report.i = static_cast<int>(i + 1);
          report.j = static_cast<int>(j + 1);
          report.k = k;
          return report;
        }
      }
    }
  }
  return report;
}

template <class F>
struct OrbitSpanResult {
  std::vector<Vec<F>> basis;
  bool cap_exceeded = false;
};

/// Smallest gens-invariant subspace containing v: close span{v} under the
/// generators. Over a field invertible generators map the closed span onto
/// itself, so inverse-invariance is automatic.
template <class F>
OrbitSpanResult<F> orbit_span(const std::vector<Mat<F>>& gens, const Vec<F>& v,
                              std::size_t cap) {
  static_assert(Ring<F>::is_field);
  if (gens.empty()) throw std::invalid_argument("no generators");
  const std::size_t d = gens[0].dim();
  OrbitSpanResult<F> out;
  SpanBasis<F> span(d);
  std::vector<Vec<F>> queue;
  if (span.insert(v)) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (span.dim() > cap) {
      out.cap_exceeded = true;
      break;
    }
    Vec<F> cur = queue[head];
    for (const Mat<F>& g : gens) {
      Vec<F> img(d, Ring<F>::zero());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) img[i] += g.at(i, j) * cur[j];
      if (span.insert(img)) queue.push_back(std::move(img));
    }
  }
  out.basis = span.rows();
  if (!out.cap_exceeded) {
    for (const Vec<F>& b : out.basis) {
      for (const Mat<F>& g : gens) {
        Vec<F> img(d, Ring<F>::zero());
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) img[i] += g.at(i, j) * b[j];
        if (!span.contains(img)) throw std::logic_error("orbit span not invariant");
      }
    }
  }
  return out;
}

}  // namespace autrep
