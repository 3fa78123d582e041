#pragma once

#include "autrep/rep_tuple.hpp"
#include "autrep/spectra.hpp"
#include "autrep/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace autrep {

/// Proper nonempty subset of the eigenvalue list summing to zero, if any
/// (1-based indices). The one-parameter trace obstruction requires none.
template <class F>
std::optional<std::vector<int>> zero_partial_sum(const std::vector<F>& lambda) {
  const std::size_t d = lambda.size();
  if (d > 24) throw std::invalid_argument("eigenvalue list too long for subset scan");
  for (std::uint64_t mask = 1; mask + 1 < (1ull << d); ++mask) {
    F sum = Ring<F>::zero();
    for (std::size_t i = 0; i < d; ++i)
      if (mask & (1ull << i)) sum += lambda[i];
    if (Ring<F>::is_zero(sum)) {
      std::vector<int> subset;
      for (std::size_t i = 0; i < d; ++i)
        if (mask & (1ull << i)) subset.push_back(static_cast<int>(i + 1));
      return subset;
    }
  }
  return std::nullopt;
}

/// True iff char_poly(x) = t^d - c: every middle coefficient vanishes.
template <class F>
bool monomial_type_check(const Mat<F>& x) {
  Poly<F> p = char_poly(x);
  for (std::size_t k = 1; k < x.dim(); ++k)
    if (!Ring<F>::is_zero(p.coeff(k))) return false;
  return true;
}

template <class F>
struct OneParamReport {
  bool traces_vanish = false;        // tr(x A^k) = 0 for k = 1..d-1
  std::size_t first_failing_power = 0;  // when !traces_vanish
  F failing_trace = Ring<F>::zero();
  bool monomial_conclusion = false;  // char_poly(x) = t^d - c
  Poly<F> x_char_poly;
};

/// Necessary trace conditions for x H subset x^G with H = {e^{tA}},
/// A = diag(lambda): differentiating the constant trace gives
/// tr(x A^k) = 0, and the wedge-power variants force the characteristic
/// polynomial of x down to t^d - c. Throws when the partial-sum
/// hypothesis on the eigenvalues fails (no verdict in that case).
template <class F>
OneParamReport<F> one_param_obstruction(const Mat<F>& x, const std::vector<F>& lambda) {
  const std::size_t d = x.dim();
  if (lambda.size() != d) throw std::invalid_argument("eigenvalue count != dim");
  F total = Ring<F>::zero();
  for (const F& l : lambda) total += l;
  if (!Ring<F>::is_zero(total))
    throw std::invalid_argument("eigenvalues of a traceless generator must sum to 0");
  if (auto bad = zero_partial_sum(lambda)) {
    std::string subset;
    for (int i : *bad) subset += (subset.empty() ? "" : ",") + std::to_string(i);
    throw std::invalid_argument("partial-sum hypothesis fails on subset {" + subset + "}");
  }

  OneParamReport<F> report;
  report.traces_vanish = true;
  std::vector<F> powers = lambda;  // lambda_i^k
  for (std::size_t k = 1; k < d; ++k) {
    F trace = Ring<F>::zero();
    for (std::size_t i = 0; i < d; ++i) trace += x.at(i, i) * powers[i];
    if (!Ring<F>::is_zero(trace) && report.traces_vanish) {
      report.traces_vanish = false;
      report.first_failing_power = k;
      report.failing_trace = trace;
    }
    for (std::size_t i = 0; i < d; ++i) powers[i] *= lambda[i];
  }
  report.x_char_poly = char_poly(x);
  report.monomial_conclusion = monomial_type_check(x);
  return report;
}

/// Pair (H, x): either explicit generators of H or the diagonal
/// one-parameter family h(t) = diag(t^{k_1}, ..., t^{k_d}).
template <class F>
struct CosetInstance {
  Mat<F> x;
  std::vector<Mat<F>> h_gens;         // generated-subgroup form
  std::vector<long long> exponents;   // one-parameter form (sum must be 0)

  bool one_param() const { return !exponents.empty(); }

  Mat<F> family_at(const Rational& t) const {
    if (t == 0) throw std::invalid_argument("family evaluation at t=0");
    Mat<F> h(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
      h.at(i, i) = Ring<F>::from_rational(rat_pow(t, exponents[i]));
    return h;
  }

  void validate() const {
    if (one_param()) {
      if (exponents.size() != x.dim())
        throw std::invalid_argument("exponent count != dim");
      long long sum = 0;
      for (long long e : exponents) sum += e;
      if (sum != 0) throw std::invalid_argument("exponents must sum to 0");
    }
  }
};

/// Which conjugacy invariant the sampled check verifies. InvariantFactors
/// is complete over the coefficient field; CharPolySquarefree certifies
/// conjugacy over C for matrices with squarefree characteristic polynomial;
/// CharPolyOnly is the bare necessary condition.
enum class ConjugacyLevel { InvariantFactors, CharPolySquarefree, CharPolyOnly };

inline const char* to_string(ConjugacyLevel level) {
  switch (level) {
    case ConjugacyLevel::InvariantFactors: return "invariant-factors";
    case ConjugacyLevel::CharPolySquarefree: return "char-poly+squarefree";
    default: return "char-poly";
  }
}

struct CosetVerdict {
  enum class Status { Consistent, Refuted };
  enum class Reason { ConjugacyInvariantMismatch, EigenvalueOneFailure };

  Status status = Status::Consistent;
  std::size_t sampled = 0;
  ConjugacyLevel level = ConjugacyLevel::InvariantFactors;
  // refutation data
  std::size_t witness_index = 0;           // position in the sample list
  std::optional<Rational> witness_t;       // one-parameter instances
  Reason reason = Reason::ConjugacyInvariantMismatch;

  bool consistent() const { return status == Status::Consistent; }
};

/// Sampled necessary conditions for x H subset x^G: each sampled h must
/// leave the chosen conjugacy invariant of x h equal to that of x, and
/// when x is unipotent (the x^G = unipotent-class case) every h must have
/// eigenvalue 1. Refutes on the first failing sample.
template <class F>
CosetVerdict coset_sample_check(const CosetInstance<F>& inst,
                                const std::vector<Mat<F>>& sample_elements,
                                const std::vector<Rational>& sample_ts,
                                ConjugacyLevel level = ConjugacyLevel::InvariantFactors) {
  static_assert(Ring<F>::is_field);
  inst.validate();
  CosetVerdict verdict;
  verdict.level = level;

  const Poly<F> x_char = char_poly(inst.x);
  const bool x_unipotent = is_unipotent(inst.x);
  std::vector<Poly<F>> x_invariants;
  if (level == ConjugacyLevel::InvariantFactors) x_invariants = invariant_factors(inst.x);

  auto matches = [&](const Mat<F>& xh) {
    switch (level) {
      case ConjugacyLevel::InvariantFactors:
        return invariant_factors(xh) == x_invariants;
      case ConjugacyLevel::CharPolySquarefree: {
        Poly<F> p = char_poly(xh);
        return p == x_char && is_squarefree(p);
      }
      default:
        return char_poly(xh) == x_char;
    }
  };

  auto run_sample = [&](const Mat<F>& h, std::size_t index,
                        const std::optional<Rational>& t) {
    if (!matches(inst.x * h)) {
      verdict.status = CosetVerdict::Status::Refuted;
      verdict.reason = CosetVerdict::Reason::ConjugacyInvariantMismatch;
      verdict.witness_index = index;
      verdict.witness_t = t;
      return false;
    }
    if (x_unipotent && !has_eigenvalue_one(h)) {
      verdict.status = CosetVerdict::Status::Refuted;
      verdict.reason = CosetVerdict::Reason::EigenvalueOneFailure;
      verdict.witness_index = index;
      verdict.witness_t = t;
      return false;
    }
    ++verdict.sampled;
    return true;
  };

  if (inst.one_param()) {
    for (std::size_t k = 0; k < sample_ts.size(); ++k) {
      if (!run_sample(inst.family_at(sample_ts[k]), k, sample_ts[k])) return verdict;
    }
  } else {
    for (std::size_t k = 0; k < sample_elements.size(); ++k) {
      if (!run_sample(sample_elements[k], k, std::nullopt)) return verdict;
    }
  }
  return verdict;
}

template <class F>
struct EigenvalueOneAudit {
  std::optional<ReducedWord> violation;  // word image without eigenvalue 1
  std::size_t words_checked = 0;
};

/// Enumerate words in the generators of H up to the budget; any image
/// without eigenvalue 1 certifies (by the eigenvalue-1 proposition, read
/// contrapositively) that no x exists with x H inside the unipotent class.
template <class F>
EigenvalueOneAudit<F> eigenvalue_one_audit(const std::vector<Mat<F>>& h_gens,
                                           int word_budget) {
  static_assert(Ring<F>::is_field);
  if (h_gens.empty()) throw std::invalid_argument("no generators");
  EigenvalueOneAudit<F> audit;
  RepTuple<F> t{std::vector<Mat<F>>(h_gens)};
  TupleEvaluator<F> eval(t);
  const std::vector<int> letters = signed_letters(static_cast<int>(h_gens.size()));
  std::vector<ReducedWord> queue;
  ReducedWord e;
  e.rank = static_cast<int>(h_gens.size());
  queue.push_back(e);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ReducedWord w = queue[head];
    if (!w.is_identity()) {
      ++audit.words_checked;
      if (!has_eigenvalue_one(eval(w))) {
        audit.violation = w;
        return audit;
      }
    }
    if (static_cast<int>(w.length()) >= word_budget) continue;
    for (int l : letters) {
      if (!w.letters.empty() && w.letters.back() == -l) continue;
      ReducedWord next = w;
      next.letters.push_back(l);
      queue.push_back(std::move(next));
    }
  }
  return audit;
}

}  // namespace autrep
