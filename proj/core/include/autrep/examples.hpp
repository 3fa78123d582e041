#pragma once

#include "autrep/cosets.hpp"
#include "autrep/matrix.hpp"
#include "autrep/words.hpp"

#include <map>
#include <string>
#include <vector>

namespace autrep {

/// The diagonal family diag(t^{k_1}, ..., t^{k_d}) over the Laurent ring.
LaurentMat symbolic_diagonal_family(const std::vector<long long>& exponents);

/// A coset of the diagonal torus consisting of unipotent elements:
/// x = [[0,1,3],[0,3,8],[-1,0,0]] with h(t) = diag(t,1,t^{-1}).
/// Construction self-checks det(xh) = 1, tr(xh) = tr((xh)^2) = 3.
CosetInstance<Rational> build_unipotent_coset();

/// Two conjugate semisimple elements whose products x b^n stay conjugate:
/// x = [[0,-1,2],[0,-4,15/2],[2,0,0]] with b(t) = diag(t,1,t^{-1}).
/// Construction self-checks tr(x) = -4, det(x) = 1, eigenvalue 1.
CosetInstance<Rational> build_semisimple_coset();

/// Affine isometry of R^d as a (d+1)x(d+1) homogeneous rational matrix;
/// the linear part must be exactly orthogonal.
struct AffineIsometry {
  RatMat homogeneous;  // [[A, b],[0, 1]]

  static AffineIsometry rotation_about(const RatMat& linear,
                                       const std::vector<Rational>& center);

  std::size_t space_dim() const { return homogeneous.dim() - 1; }
  RatMat linear_part() const;
  std::vector<Rational> translation_part() const;

  friend AffineIsometry operator*(const AffineIsometry& a, const AffineIsometry& b) {
    return {a.homogeneous * b.homogeneous};
  }
  friend bool operator==(const AffineIsometry& a, const AffineIsometry& b) {
    return a.homogeneous == b.homogeneous;
  }
};

/// An infinite group of isometries of R^4 generated by two rotations whose
/// primitive words all have finite order. The rotation parts multiply like
/// the quaternions i and j (left multiplication on H = R^4); that group of
/// order 8 needs both generators, and it acts freely on S^3, so every
/// nontrivially-projecting isometry in the group has a fixed point.
struct AffineTorsionGroup {
  AffineIsometry g1;  // rotates like i about p1 = 0
  AffineIsometry g2;  // rotates like j about p2 = e1
  RatMat rot1;        // left multiplication by i on R^4
  RatMat rot2;        // left multiplication by j
  std::vector<RatMat> projection_group;  // closure of {rot1, rot2}, 8 elements
};

AffineTorsionGroup build_affine_torsion_group();

/// Exact multiplicative order of an affine isometry, or 0 when no power
/// up to `limit` is the identity.
std::uint64_t affine_order(const AffineIsometry& g, std::uint64_t limit = 64);

struct TorsionAuditReport {
  std::size_t primitives_checked = 0;
  bool truncated = false;
  std::map<std::uint64_t, std::size_t> order_histogram;
  std::vector<ReducedWord> failures;  // primitive images of infinite order

  bool ok() const { return failures.empty(); }
};

/// Evaluate every enumerated primitive of F_2 on (g1, g2) and verify each
/// image has finite order: the rotation part is nontrivial (the projection
/// group is not cyclic), it has no eigenvalue 1, hence a unique fixed
/// point, and the order equals the rotation part's order -- checked by
/// direct exact powers.
TorsionAuditReport affine_primitive_audit(int max_len, std::size_t budget = 20000);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Every stated assertion of the three constructions, as hard exact checks.
std::vector<CheckResult> verify_worked_examples(int audit_max_len = 8,
                                                std::size_t audit_budget = 20000);

}  // namespace autrep
