#pragma once

#include "autrep/linalg.hpp"
#include "autrep/rep_tuple.hpp"
#include "autrep/spectra.hpp"
#include "autrep/words.hpp"

#include <optional>
#include <vector>

namespace autrep {

/// Fixed basis of the trace-zero matrices sl_d: the E_ij (i != j) in
/// row-major order followed by H_k = E_kk - E_{k+1,k+1}.
template <class F>
std::vector<Mat<F>> sl_basis(std::size_t d) {
  std::vector<Mat<F>> basis;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      Mat<F> e(d);
      e.at(i, j) = Ring<F>::one();
      basis.push_back(std::move(e));
    }
  for (std::size_t k = 0; k + 1 < d; ++k) {
    Mat<F> h(d);
    h.at(k, k) = Ring<F>::one();
    h.at(k + 1, k + 1) = Ring<F>::zero() - Ring<F>::one();
    basis.push_back(std::move(h));
  }
  return basis;
}

/// Coordinates of a trace-zero matrix in sl_basis. The diagonal part
/// diag(a_1..a_d) with sum 0 expands as sum c_k H_k with c_k = a_1+...+a_k.
template <class F>
Vec<F> expand_traceless(const Mat<F>& x) {
  const std::size_t d = x.dim();
  if (!Ring<F>::is_zero(x.trace()))
    throw std::invalid_argument("matrix has nonzero trace");
  Vec<F> out;
  out.reserve(d * d - 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i != j) out.push_back(x.at(i, j));
    }
  F partial = Ring<F>::zero();
  for (std::size_t k = 0; k + 1 < d; ++k) {
    partial += x.at(k, k);
    out.push_back(partial);
  }
  return out;
}

/// Matrix of Ad(g): X -> g X g^{-1} on sl_d in the fixed basis.
/// Requires det(g) = 1.
template <class F>
Mat<F> adjoint(const Mat<F>& g) {
  static_assert(Ring<F>::is_field);
  if (det(g) != Ring<F>::one()) throw std::invalid_argument("adjoint requires det = 1");
  const std::size_t d = g.dim();
  const std::size_t n = d * d - 1;
  Mat<F> ginv = inverse(g);
  std::vector<Mat<F>> basis = sl_basis<F>(d);
  Mat<F> out(n);
  for (std::size_t col = 0; col < n; ++col) {
    Vec<F> coords = expand_traceless(g * basis[col] * ginv);
    for (std::size_t row = 0; row < n; ++row) out.at(row, col) = coords[row];
  }
  return out;
}

enum class DensityVerdict { Dense, NotDense, Inconclusive };

/// Evidence for the verdict. Dense requires the adjoint span of group
/// words to reach full matrix-algebra dimension (d^2-1)^2 plus an
/// infinite-order witness word; NotDense requires the span to stabilize
/// strictly below it (closure under every generator adjoint is re-checked).
struct DensityCertificate {
  DensityVerdict verdict = DensityVerdict::Inconclusive;
  std::size_t dim = 0;                       // ambient d
  std::size_t achieved_dim = 0;              // adjoint span dimension reached
  std::size_t full_dim = 0;                  // (d^2-1)^2
  std::vector<ReducedWord> spanning_words;   // words whose adjoints span
  std::optional<ReducedWord> witness;        // Dense: infinite-order word
  std::size_t stable_algebra_dim = 0;        // NotDense: stabilized dimension
  bool budget_exhausted = false;

  bool dense() const { return verdict == DensityVerdict::Dense; }
};

inline const char* to_string(DensityVerdict v) {
  switch (v) {
    case DensityVerdict::Dense: return "Dense";
    case DensityVerdict::NotDense: return "NotDense";
    default: return "Inconclusive";
  }
}

/// Breadth-first closure of span{Ad(w)} under left multiplication by the
/// generator adjoints, echelonized exactly; see DensityCertificate for the
/// verdict logic. `word_budget` caps word length.
template <class F>
DensityCertificate certify_zariski_density(const std::vector<Mat<F>>& gens, int word_budget);

/// All proper sub-tuples (|S| >= 2) whose generators already certify Dense;
/// a nonempty answer certifies the representation Zariski redundant.
struct RedundantSubset {
  std::vector<int> indices;  // 1-based positions into the tuple
  DensityCertificate certificate;
};

template <class F>
std::vector<RedundantSubset> redundancy_scan(const RepTuple<F>& t, int word_budget);

// ---- implementation ----

template <class F>
DensityCertificate certify_zariski_density(const std::vector<Mat<F>>& gens, int word_budget) {
  static_assert(Ring<F>::is_field);
  if (gens.empty()) throw std::invalid_argument("no generators");
  const std::size_t d = gens[0].dim();
  for (const Mat<F>& g : gens)
    if (g.dim() != d) throw std::invalid_argument("mixed dimensions");
  const std::size_t n = d * d - 1;
  const std::size_t full = n * n;
  const int rank = static_cast<int>(gens.size());

  DensityCertificate cert;
  cert.dim = d;
  cert.full_dim = full;

  // Signed letters l in {±1..±rank} act by left multiplication with adj[l].
  std::vector<Mat<F>> adj_pos, adj_neg;
  for (const Mat<F>& g : gens) {
    adj_pos.push_back(adjoint(g));
    adj_neg.push_back(adjoint(inverse(g)));
  }
  auto adj_of = [&](int letter) -> const Mat<F>& {
    return letter > 0 ? adj_pos[static_cast<std::size_t>(letter - 1)]
                      : adj_neg[static_cast<std::size_t>(-letter - 1)];
  };

  auto flatten = [&](const Mat<F>& m) { return m.entries(); };

  SpanBasis<F> span(full);
  struct Item {
    ReducedWord word;
    Mat<F> ad;
  };
  std::vector<Item> queue;
  ReducedWord e;
  e.rank = rank;
  queue.push_back({e, Mat<F>::identity(n)});
  span.insert(flatten(queue[0].ad));
  cert.spanning_words.push_back(e);

  const std::vector<int> letters = signed_letters(rank);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (span.dim() == full) break;
    const Item item = queue[head];  // copy: queue may reallocate
    if (static_cast<int>(item.word.length()) >= word_budget) continue;
    for (int l : letters) {
      if (!item.word.letters.empty() && item.word.letters.front() == -l) continue;
      Mat<F> prod = adj_of(l) * item.ad;
      if (!span.insert(flatten(prod))) continue;
      ReducedWord w;
      w.rank = rank;
      w.letters.push_back(l);
      w.letters.insert(w.letters.end(), item.word.letters.begin(), item.word.letters.end());
      cert.spanning_words.push_back(w);
      queue.push_back({std::move(w), std::move(prod)});
    }
  }
  cert.achieved_dim = span.dim();

  // Stabilization check: one full pass over the span basis adds nothing.
  bool stable = true;
  for (const Item& item : queue) {
    for (int l : letters) {
      if (!span.contains(flatten(adj_of(l) * item.ad))) {
        stable = false;
        break;
      }
    }
    if (!stable) break;
  }

  if (!stable) {
    cert.verdict = DensityVerdict::Inconclusive;
    cert.budget_exhausted = true;
    return cert;
  }

  if (span.dim() < full) {
    // The span is the full adjoint algebra of the generated group; were the
    // group Zariski dense, irreducibility of Ad would force full dimension.
    cert.verdict = DensityVerdict::NotDense;
    cert.stable_algebra_dim = span.dim();
    return cert;
  }

  // Full algebra: certify the group infinite via an infinite-order word.
  RepTuple<F> tuple{std::vector<Mat<F>>(gens)};
  TupleEvaluator<F> eval(tuple);
  std::vector<ReducedWord> words;
  words.push_back(e);
  for (std::size_t head = 0; head < words.size(); ++head) {
    ReducedWord w = words[head];
    if (static_cast<int>(w.length()) >= word_budget) continue;
    for (int l : letters) {
      if (!w.letters.empty() && w.letters.back() == -l) continue;
      ReducedWord next = w;
      next.letters.push_back(l);
      if (!next.is_identity() && !classify_order(eval(next)).finite()) {
        cert.verdict = DensityVerdict::Dense;
        cert.witness = next;
        return cert;
      }
      words.push_back(std::move(next));
    }
  }
  cert.verdict = DensityVerdict::Inconclusive;  // full span, all sampled words finite order
  return cert;
}

template <class F>
std::vector<RedundantSubset> redundancy_scan(const RepTuple<F>& t, int word_budget) {
  if (t.rank < 3) throw std::invalid_argument("redundancy scan needs rank >= 3");
  std::vector<RedundantSubset> out;
  const std::size_t n = t.rank;
  std::vector<std::vector<int>> subsets;
  for (std::size_t size = 2; size < n; ++size) {
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (pick.size() == size) {
        subsets.push_back(pick);
        return;
      }
      for (std::size_t k = from; k <= n; ++k) {
        pick.push_back(static_cast<int>(k));
        rec(k + 1);
        pick.pop_back();
      }
    };
    rec(1);
  }
  for (const std::vector<int>& subset : subsets) {
    std::vector<Mat<F>> gens;
    for (int idx : subset) gens.push_back(t.mats[static_cast<std::size_t>(idx - 1)]);
    DensityCertificate cert = certify_zariski_density(gens, word_budget);
    if (cert.dense()) out.push_back({subset, std::move(cert)});
  }
  return out;
}

}  // namespace autrep
