#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "autrep/examples.hpp"
#include "autrep/linalg.hpp"
#include "autrep/rep_tuple.hpp"
#include "autrep/spectra.hpp"

using namespace autrep;

TEST_CASE("unipotent coset instance: symbolic identities") {
  CosetInstance<Rational> inst = build_unipotent_coset();
  LaurentMat xh = to_laurent(inst.x) * symbolic_diagonal_family(inst.exponents);
  CHECK(det(xh) == Laurent(1));
  CHECK(xh.trace() == Laurent(3));
  CHECK((xh * xh).trace() == Laurent(3));
  CHECK(char_poly(xh) == unipotent_char_poly<Laurent>(3));
  CHECK(is_unipotent(xh));
  CHECK(is_unipotent(inst.x * inst.family_at(2)));
  CHECK(is_unipotent(inst.x * inst.family_at(-1)));
  CHECK(is_unipotent(inst.x * inst.family_at(Rational(7, 2))));
  CHECK_THROWS(inst.family_at(0));
}

TEST_CASE("semisimple coset instance: invariants independent of t") {
  CosetInstance<Rational> inst = build_semisimple_coset();
  CHECK(inst.x.trace() == Rational(-4));
  CHECK(det(inst.x) == Rational(1));
  CHECK(has_eigenvalue_one(inst.x));

  LaurentMat xb = to_laurent(inst.x) * symbolic_diagonal_family(inst.exponents);
  Poly<Laurent> cp = char_poly(xb);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(cp.coeff(k).is_constant());

  auto factors = invariant_factors(inst.x);
  REQUIRE_FALSE(factors.empty());
  CHECK(is_squarefree(factors.back()));
  CHECK_FALSE(is_unipotent(inst.x));
}

TEST_CASE("affine torsion group: construction facts") {
  AffineTorsionGroup g = build_affine_torsion_group();
  CHECK(g.projection_group.size() == 8);

  // relations of the quaternion rotations
  RatMat minus_id = RatMat::identity(4);
  for (std::size_t i = 0; i < 4; ++i) minus_id.at(i, i) = -1;
  CHECK(g.rot1 * g.rot1 == minus_id);
  CHECK(g.rot2 * g.rot2 == minus_id);
  CHECK(g.rot1 * g.rot2 == minus_id * (g.rot2 * g.rot1));

  // orthogonality and free action
  for (const RatMat& m : g.projection_group) {
    CHECK(m.transpose() * m == RatMat::identity(4));
    if (m != RatMat::identity(4)) CHECK_FALSE(has_eigenvalue_one(m));
  }

  CHECK(affine_order(g.g1) == 4);
  CHECK(affine_order(g.g2) == 4);

  AffineIsometry shift = g.g1 * g.g1 * g.g2 * g.g2;
  CHECK(shift.linear_part() == RatMat::identity(4));
  CHECK(shift.translation_part() == std::vector<Rational>{-2, 0, 0, 0});
  CHECK(affine_order(shift, 100) == 0);
}

TEST_CASE("affine torsion group: x1*x2 projects to an order-4 rotation") {
  AffineTorsionGroup g = build_affine_torsion_group();
  AffineIsometry prod = g.g1 * g.g2;
  std::uint64_t order = affine_order(prod);
  CHECK(order == 4);
  CHECK(order % 8 != 0);  // divides 8
  CHECK(8 % order == 0);
  RatMat rot = prod.linear_part();
  CHECK(rot == g.rot1 * g.rot2);
}

TEST_CASE("primitive audit: all finite orders at modest length") {
  TorsionAuditReport report = affine_primitive_audit(5, 4000);
  CHECK(report.ok());
  CHECK(report.primitives_checked > 100);
  CHECK_FALSE(report.order_histogram.empty());
  // all orders observed divide 8
  for (const auto& [order, count] : report.order_histogram) {
    CHECK(8 % order == 0);
    CHECK(count > 0);
  }
}

TEST_CASE("verify_worked_examples: every assertion passes") {
  auto checks = verify_worked_examples(5, 4000);
  REQUIRE(checks.size() >= 15);
  for (const CheckResult& c : checks) {
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
}
