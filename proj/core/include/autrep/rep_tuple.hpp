#pragma once

#include "autrep/linalg.hpp"
#include "autrep/matrix.hpp"
#include "autrep/words.hpp"

#include <vector>

namespace autrep {

/// Point of Hom(F_n, GL_d) ~ GL_d^n under a fixed basis: an n-tuple of
/// invertible matrices over a shared exact ring.
template <class R>
struct RepTuple {
  std::size_t rank = 0;
  std::size_t dim = 0;
  std::vector<Mat<R>> mats;

  RepTuple() = default;
  explicit RepTuple(std::vector<Mat<R>> ms) : rank(ms.size()), mats(std::move(ms)) {
    if (mats.empty()) throw std::invalid_argument("empty tuple");
    dim = mats[0].dim();
    for (const Mat<R>& m : mats) {
      if (m.dim() != dim) throw std::invalid_argument("mixed dimensions in tuple");
      if (Ring<R>::is_zero(det(m))) throw std::invalid_argument("singular tuple entry");
    }
  }
};

namespace detail {
template <class R>
Mat<R> tuple_inverse(const Mat<R>& m) {
  if constexpr (Ring<R>::is_field) {
    return inverse(m);
  } else {
    return inverse_adjugate(m);
  }
}
}  // namespace detail

/// Word evaluator with cached generator inverses.
template <class R>
class TupleEvaluator {
 public:
  explicit TupleEvaluator(const RepTuple<R>& t) : t_(&t) {
    inv_.reserve(t.mats.size());
    for (const Mat<R>& m : t.mats) inv_.push_back(detail::tuple_inverse(m));
  }

  Mat<R> operator()(const ReducedWord& w) const {
    if (w.rank != static_cast<int>(t_->rank))
      throw std::invalid_argument("word rank != tuple rank");
    Mat<R> acc = Mat<R>::identity(t_->dim);
    for (int letter : w.letters) {
      const Mat<R>& g =
          letter > 0 ? t_->mats[static_cast<std::size_t>(letter - 1)]
                     : inv_[static_cast<std::size_t>(-letter - 1)];
      acc = acc * g;
    }
    return acc;
  }

  const Mat<R>& generator_inverse(std::size_t i) const { return inv_[i]; }

 private:
  const RepTuple<R>* t_;
  std::vector<Mat<R>> inv_;
};

/// The Nielsen action specialized to matrix tuples.
template <class R>
RepTuple<R> act_on_rep(const Automorphism& a, const RepTuple<R>& t) {
  auto mul = [](const Mat<R>& x, const Mat<R>& y) { return x * y; };
  auto inv = [](const Mat<R>& x) { return detail::tuple_inverse(x); };
  return RepTuple<R>(act_on_tuple(a, t.mats, mul, inv));
}

}  // namespace autrep
