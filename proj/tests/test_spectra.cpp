#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "autrep/contraction.hpp"
#include "autrep/spectra.hpp"

#include "helpers.hpp"

#include <numeric>

using namespace autrep;

namespace {

RatMat jordan_block(std::size_t d) {
  RatMat m = RatMat::identity(d);
  for (std::size_t i = 0; i + 1 < d; ++i) m.at(i, i + 1) = 1;
  return m;
}

LaurentMat larsen_product() {
  LaurentMat u = to_laurent(rat_mat(3, {0, 1, 3, 0, 3, 8, -1, 0, 0}));
  LaurentMat h(3);
  h.at(0, 0) = Laurent::t(1);
  h.at(1, 1) = Laurent(1);
  h.at(2, 2) = Laurent::t(-1);
  return u * h;
}

// Independent oracle for the cyclotomic exponent: enumerate n with
// phi(n) <= bound directly.
std::uint64_t phi_oracle(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1 ? 1 : 0;
  return count;
}

std::uint64_t exponent_oracle(std::uint64_t bound, std::uint64_t scan_to) {
  std::uint64_t L = 1;
  for (std::uint64_t n = 1; n <= scan_to; ++n)
    if (phi_oracle(n) <= bound) L = std::lcm(L, n);
  return L;
}

template <class F>
std::uint64_t brute_force_order(const Mat<F>& m, std::uint64_t limit) {
  Mat<F> p = Mat<F>::identity(m.dim());
  for (std::uint64_t k = 1; k <= limit; ++k) {
    p = p * m;
    if (p.is_identity()) return k;
  }
  return 0;  // no order found up to the limit
}

GaussMat random_gaussian_monomial(Rng& rng, std::size_t d) {
  std::vector<std::size_t> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = i;
  for (std::size_t i = d; i-- > 1;) std::swap(perm[i], perm[rng.below(i + 1)]);
  static const Gaussian units[] = {Gaussian(1), Gaussian(-1),
                                   Gaussian(Rational(0), Rational(1)),
                                   Gaussian(Rational(0), Rational(-1))};
  GaussMat m(d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, perm[i]) = units[rng.below(4)];
  return m;
}

RatMat random_signed_permutation(Rng& rng, std::size_t d) {
  std::vector<std::size_t> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = i;
  for (std::size_t i = d; i-- > 1;) std::swap(perm[i], perm[rng.below(i + 1)]);
  RatMat m(d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, perm[i]) = rng.below(2) ? 1 : -1;
  return m;
}

}  // namespace

TEST_CASE("is_unipotent examples") {
  CHECK(is_unipotent(RatMat::identity(3)));
  CHECK_FALSE(is_unipotent(rat_mat_q(2, {Rational(2), 0, 0, Rational(1, 2)})));
  CHECK(is_unipotent(jordan_block(4)));

  // the coset product at a concrete parameter value
  GaussMat uh2 = evaluate_at(larsen_product(), Gaussian(2));
  CHECK(is_unipotent(uh2));

  // symbolic verdict over the Laurent ring: unipotent for every t != 0
  CHECK(is_unipotent(larsen_product()));

  // a genuinely t-dependent family is not symbolically unipotent
  LaurentMat dep(2);
  dep.at(0, 0) = Laurent(1);
  dep.at(0, 1) = Laurent::t(1);
  dep.at(1, 1) = Laurent(1);
  dep.at(1, 0) = Laurent::t(1);
  CHECK_FALSE(is_unipotent(dep));
}

TEST_CASE("is_regular_unipotent examples") {
  CHECK(is_regular_unipotent(jordan_block(3)));
  CHECK_FALSE(is_regular_unipotent(RatMat::identity(2)));

  RatMat j2_plus_fixed = RatMat::identity(3);
  j2_plus_fixed.at(0, 1) = 1;  // J2(1) + 1x1 block
  CHECK_FALSE(is_regular_unipotent(j2_plus_fixed));

  Rng rng(41);
  RatMat g = testutil::random_invertible(rng, 3);
  CHECK(is_regular_unipotent(g * jordan_block(3) * inverse(g)));
}

TEST_CASE("has_eigenvalue_one examples") {
  RatMat fam = rat_mat_q(3, {Rational(3), 0, 0, 0, 1, 0, 0, 0, Rational(1, 3)});
  CHECK(has_eigenvalue_one(fam));
  CHECK_FALSE(has_eigenvalue_one(rat_mat(2, {2, 0, 0, 3})));
  CHECK(has_eigenvalue_one(jordan_block(4)));
}

TEST_CASE("cyclotomic exponent against the enumeration oracle") {
  CHECK(exponent_oracle(3, 18) == 12);
  CHECK(cyclotomic_exponent(3, false) == 12);
  CHECK(exponent_oracle(2, 8) == 12);
  CHECK(cyclotomic_exponent(2, false) == 12);
  CHECK(exponent_oracle(4, 32) == 120);
  CHECK(cyclotomic_exponent(2, true) == 120);
  for (std::size_t d = 1; d <= 6; ++d) {
    CHECK(cyclotomic_exponent(d, false) == exponent_oracle(d, 2 * d * d));
    CHECK(cyclotomic_exponent(d, true) == exponent_oracle(2 * d, 8 * d * d));
  }
}

TEST_CASE("classify_order examples") {
  RatMat minus_i = rat_mat(2, {-1, 0, 0, -1});
  OrderVerdict v = classify_order(minus_i);
  REQUIRE(v.finite());
  CHECK(v.order == 2);

  RatMat fib = rat_mat(2, {2, 1, 1, 1});
  OrderVerdict w = classify_order(fib);
  CHECK_FALSE(w.finite());
  CHECK_FALSE(fib.pow(12).is_identity());
  CHECK(w.witness_tag() == "power L not unipotent");

  OrderVerdict j = classify_order(jordan_block(2));
  CHECK_FALSE(j.finite());
  CHECK(j.witness == OrderVerdict::InfiniteWitness::NontrivialUnipotentPower);

  CHECK_THROWS(classify_order(RatMat(2)));
}

TEST_CASE("classify_order agrees with brute force on monomial corpora") {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t d = 2 + rng.below(4);
    RatMat m = random_signed_permutation(rng, d);
    std::uint64_t L = cyclotomic_exponent(d, false);
    std::uint64_t brute = brute_force_order(m, L);
    OrderVerdict v = classify_order(m);
    REQUIRE(v.finite());
    CHECK(v.order == brute);
    CHECK(L % v.order == 0);
    CHECK(m.pow(v.order).is_identity());
  }
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 2 + rng.below(3);
    GaussMat m = random_gaussian_monomial(rng, d);
    std::uint64_t L = cyclotomic_exponent(d, true);
    std::uint64_t brute = brute_force_order(m, L);
    OrderVerdict v = classify_order(m);
    REQUIRE(v.finite());
    CHECK(v.order == brute);
    CHECK(L % v.order == 0);
  }
  // scaling one entry kills finiteness; brute force agrees (finds nothing)
  RatMat m = random_signed_permutation(rng, 3);
  m.at(0, 0) = m.at(0, 0) * 2;
  for (std::size_t j = 0; j < 3; ++j) m.at(0, j) = m.at(0, j) * 2;
  OrderVerdict v = classify_order(m);
  CHECK_FALSE(v.finite());
  CHECK(brute_force_order(m, cyclotomic_exponent(3, false)) == 0);
}

TEST_CASE("contraction certificate: spectral gap found") {
  FMat g(2);
  g.at(0, 0) = 10;
  g.at(1, 1) = 0.1;
  auto cert = contraction_certificate(g, 500);
  REQUIRE(cert.has_value());
  CHECK(cert->r2 <= 0.05);
  CHECK(cert->r2 < cert->r1);
  CHECK(std::fabs(std::fabs(cert->center[0]) - 1.0) < 1e-6);
  CHECK(std::fabs(cert->center[1]) < 1e-6);
  CHECK(cert->sample_count >= 64);

  // determinism per seed
  auto again = contraction_certificate(g, 500);
  REQUIRE(again.has_value());
  CHECK(again->r1 == cert->r1);
  CHECK(again->r2 == cert->r2);
}

TEST_CASE("contraction certificate: isometries and parabolics refused") {
  FMat id(3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK_FALSE(contraction_certificate(id, 2000).has_value());

  FMat j2(2);
  j2.at(0, 0) = 1;
  j2.at(0, 1) = 1;
  j2.at(1, 1) = 1;
  CHECK_FALSE(contraction_certificate(j2, 2000).has_value());

  FMat rot(2);  // rotation by 0.7: complex spectrum, no dominant direction
  rot.at(0, 0) = std::cos(0.7);
  rot.at(0, 1) = -std::sin(0.7);
  rot.at(1, 0) = std::sin(0.7);
  rot.at(1, 1) = std::cos(0.7);
  CHECK_FALSE(contraction_certificate(rot, 2000).has_value());
}

TEST_CASE("contraction certificates are sound on a random corpus") {
  Rng rng(43);
  int issued = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 2 + rng.below(3);
    RatMat m = testutil::random_invertible(rng, d);
    auto cert = contraction_certificate(to_float(m), 300, 1000 + trial);
    if (!cert) continue;
    ++issued;
    CHECK_FALSE(is_unipotent(m));  // zero false positives
  }
  CHECK(issued > 5);

  // unipotent shadows never earn a certificate
  for (int trial = 0; trial < 10; ++trial) {
    RatMat u = testutil::random_unitriangular(rng, 3);
    RatMat g = testutil::random_invertible(rng, 3);
    RatMat conj = g * u * inverse(g);
    CHECK_FALSE(contraction_certificate(to_float(conj), 300, trial).has_value());
  }
}

TEST_CASE("contraction works with a negative dominant eigenvalue") {
  FMat g(2);
  g.at(0, 0) = -10;
  g.at(1, 1) = 0.1;
  auto cert = contraction_certificate(g, 500);
  REQUIRE(cert.has_value());
  CHECK(cert->r2 < cert->r1);
  CHECK(std::fabs(std::fabs(cert->center[0]) - 1.0) < 1e-6);
}

TEST_CASE("cyclotomic exponent in dimension 1") {
  CHECK(cyclotomic_exponent(1, false) == 2);   // only +-1
  CHECK(cyclotomic_exponent(1, true) == 12);   // phi(n) <= 2
  OrderVerdict v = classify_order(rat_mat(1, {-1}));
  REQUIRE(v.finite());
  CHECK(v.order == 2);
}
