#pragma once

#include "autrep/linalg.hpp"
#include "autrep/matrix.hpp"
#include "autrep/poly.hpp"

#include <cstdint>
#include <string>

namespace autrep {

/// Exact order classification of an invertible matrix over Q or Q(i).
struct OrderVerdict {
  enum class Kind { Finite, Infinite };
  enum class InfiniteWitness { NontrivialUnipotentPower, PowerNotUnipotent };

  Kind kind = Kind::Infinite;
  std::uint64_t order = 0;  // Finite only
  InfiniteWitness witness = InfiniteWitness::PowerNotUnipotent;

  bool finite() const { return kind == Kind::Finite; }
  std::string witness_tag() const {
    return witness == InfiniteWitness::NontrivialUnipotentPower
               ? "power L is nontrivial unipotent"
               : "power L not unipotent";
  }
};

/// True iff (m-I)^d = 0, equivalently char_poly(m) = (x-1)^d. Both routes
/// are computed and must agree (the mismatch throw is a self-check, not a
/// reachable verdict). Over the Laurent ring a true verdict is symbolic:
/// it holds for every evaluation t != 0.
template <class R>
bool is_unipotent(const Mat<R>& m) {
  const std::size_t d = m.dim();
  Mat<R> shifted = m - Mat<R>::identity(d);
  bool nilpotent = shifted.pow(d).is_zero();
  bool char_route = char_poly(m) == unipotent_char_poly<R>(d);
  if (nilpotent != char_route)
    throw std::logic_error("unipotence routes disagree (arithmetic bug)");
  return nilpotent;
}

/// Regular unipotent: a single Jordan block, i.e. rank(m - I) = d - 1.
template <class F>
bool is_regular_unipotent(const Mat<F>& m) {
  static_assert(Ring<F>::is_field);
  if (!is_unipotent(m)) return false;
  return rank(m - Mat<F>::identity(m.dim())) == m.dim() - 1;
}

/// char_poly(m) vanishes at 1.
template <class F>
bool has_eigenvalue_one(const Mat<F>& m) {
  static_assert(Ring<F>::is_field);
  return Ring<F>::is_zero(char_poly(m).evaluate(Ring<F>::one()));
}

/// L(d) = lcm{ n : phi(n) <= B } with B = d over Q and B = 2d over Q(i):
/// a matrix of finite order over the ring satisfies m^L = I, because each
/// eigenvalue is a root of unity whose primitive order n has phi(n) <= B.
std::uint64_t cyclotomic_exponent(std::size_t d, bool gaussian_ring);

namespace detail {
OrderVerdict classify_from_power(std::uint64_t L, bool power_is_identity,
                                 bool power_is_unipotent);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
}  // namespace detail

/// Finite iff m^L = I; the finite branch reports the exact multiplicative
/// order (the smallest divisor k of L with m^k = I).
template <class F>
OrderVerdict classify_order(const Mat<F>& m) {
  static_assert(Ring<F>::is_field);
  if (Ring<F>::is_zero(det(m))) throw std::domain_error("classify_order: singular matrix");
  const bool gaussian = !std::is_same_v<F, Rational>;
  const std::uint64_t L = cyclotomic_exponent(m.dim(), gaussian);
  Mat<F> p = m.pow(L);
  if (!p.is_identity())
    return detail::classify_from_power(L, false, is_unipotent(p));

  OrderVerdict v;
  v.kind = OrderVerdict::Kind::Finite;
  std::uint64_t k = L;
  for (std::uint64_t q : detail::prime_factors(L)) {
    while (k % q == 0 && m.pow(k / q).is_identity()) k /= q;
  }
  v.order = k;
  return v;
}

}  // namespace autrep
