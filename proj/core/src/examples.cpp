#include "autrep/examples.hpp"

#include "autrep/linalg.hpp"
#include "autrep/poly.hpp"
#include "autrep/puscan.hpp"
#include "autrep/rep_tuple.hpp"
#include "autrep/spectra.hpp"

#include <sstream>

namespace autrep {

LaurentMat symbolic_diagonal_family(const std::vector<long long>& exponents) {
  LaurentMat h(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) h.at(i, i) = Laurent::t(exponents[i]);
  return h;
}

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("construction self-check failed: ") + what);
}

}  // namespace

CosetInstance<Rational> build_unipotent_coset() {
  CosetInstance<Rational> inst{rat_mat(3, {0, 1, 3, 0, 3, 8, -1, 0, 0}), {}, {1, 0, -1}};
  LaurentMat xh = to_laurent(inst.x) * symbolic_diagonal_family(inst.exponents);
  require(det(xh) == Laurent(1), "det(xh) = 1");
  require(xh.trace() == Laurent(3), "tr(xh) = 3");
  require((xh * xh).trace() == Laurent(3), "tr((xh)^2) = 3");
  return inst;
}

CosetInstance<Rational> build_semisimple_coset() {
  CosetInstance<Rational> inst{
      rat_mat_q(3, {0, -1, 2, 0, -4, Rational(15, 2), 2, 0, 0}), {}, {1, 0, -1}};
  require(inst.x.trace() == Rational(-4), "tr(x) = -4");
  require(det(inst.x) == Rational(1), "det(x) = 1");
  require(has_eigenvalue_one(inst.x), "x has eigenvalue 1");
  LaurentMat xb = to_laurent(inst.x) * symbolic_diagonal_family(inst.exponents);
  require(det(xb).is_constant(), "det(xb) is t-free");
  require(xb.trace().is_constant(), "tr(xb) is t-free");
  require((xb * xb).trace().is_constant(), "tr((xb)^2) is t-free");
  return inst;
}

AffineIsometry AffineIsometry::rotation_about(const RatMat& linear,
                                              const std::vector<Rational>& center) {
  const std::size_t d = linear.dim();
  if (center.size() != d) throw std::invalid_argument("center dimension mismatch");
  if (linear.transpose() * linear != RatMat::identity(d))
    throw std::invalid_argument("linear part is not orthogonal");
  RatMat h(d + 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) h.at(i, j) = linear.at(i, j);
  // translation (I - A) c keeps c fixed
  for (std::size_t i = 0; i < d; ++i) {
    Rational b = center[i];
    for (std::size_t j = 0; j < d; ++j) b -= linear.at(i, j) * center[j];
    h.at(i, d) = b;
  }
  h.at(d, d) = 1;
  return {std::move(h)};
}

RatMat AffineIsometry::linear_part() const {
  const std::size_t d = space_dim();
  RatMat a(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a.at(i, j) = homogeneous.at(i, j);
  return a;
}

std::vector<Rational> AffineIsometry::translation_part() const {
  const std::size_t d = space_dim();
  std::vector<Rational> b(d);
  for (std::size_t i = 0; i < d; ++i) b[i] = homogeneous.at(i, d);
  return b;
}

namespace {

// Left multiplication by i and j on H = R^4 in the basis (1, i, j, k).
RatMat left_mult_i() {
  return rat_mat(4, {0, -1, 0, 0,
                     1, 0, 0, 0,
                     0, 0, 0, -1,
                     0, 0, 1, 0});
}

RatMat left_mult_j() {
  return rat_mat(4, {0, 0, -1, 0,
                     0, 0, 0, 1,
                     1, 0, 0, 0,
                     0, -1, 0, 0});
}

}  // namespace

AffineTorsionGroup build_affine_torsion_group() {
  AffineTorsionGroup g;
  g.rot1 = left_mult_i();
  g.rot2 = left_mult_j();

  // closure of the rotation parts
  std::vector<RatMat> group{RatMat::identity(4)};
  auto known = [&](const RatMat& m) {
    for (const RatMat& have : group)
      if (have == m) return true;
    return false;
  };
  for (std::size_t head = 0; head < group.size(); ++head) {
    for (const RatMat* gen : {&g.rot1, &g.rot2}) {
      RatMat next = group[head] * *gen;
      if (!known(next)) group.push_back(next);
    }
  }
  g.projection_group = std::move(group);
  require(g.projection_group.size() == 8, "projection group has order 8");
  for (const RatMat& m : g.projection_group) {
    if (m == RatMat::identity(4)) continue;
    require(!has_eigenvalue_one(m), "free action on the unit sphere");
  }

  std::vector<Rational> p1(4, 0);
  std::vector<Rational> p2(4, 0);
  p2[0] = 1;
  g.g1 = AffineIsometry::rotation_about(g.rot1, p1);
  g.g2 = AffineIsometry::rotation_about(g.rot2, p2);
  return g;
}

std::uint64_t affine_order(const AffineIsometry& g, std::uint64_t limit) {
  RatMat p = RatMat::identity(g.homogeneous.dim());
  for (std::uint64_t k = 1; k <= limit; ++k) {
    p = p * g.homogeneous;
    if (p.is_identity()) return k;
  }
  return 0;
}

TorsionAuditReport affine_primitive_audit(int max_len, std::size_t budget) {
  AffineTorsionGroup g = build_affine_torsion_group();
  TorsionAuditReport report;
  std::vector<ReducedWord> prims = sorted_primitives(2, max_len, budget, &report.truncated);

  RepTuple<Rational> affine{{g.g1.homogeneous, g.g2.homogeneous}};
  RepTuple<Rational> linear{{g.rot1, g.rot2}};
  TupleEvaluator<Rational> eval_affine(affine);
  TupleEvaluator<Rational> eval_linear(linear);

  for (const ReducedWord& w : prims) {
    ++report.primitives_checked;
    AffineIsometry img{eval_affine(w)};
    RatMat rot = img.linear_part();
    require(rot == eval_linear(w), "projection is a homomorphism");

    std::uint64_t order = affine_order(img);
    bool good = order != 0;
    if (good && rot != RatMat::identity(4)) {
      // fixed-point mechanism: nontrivial rotation part without
      // eigenvalue 1, order equal to the rotation order
      std::uint64_t rot_order = 0;
      RatMat p = RatMat::identity(4);
      for (std::uint64_t k = 1; k <= 8 && rot_order == 0; ++k) {
        p = p * rot;
        if (p.is_identity()) rot_order = k;
      }
      good = !has_eigenvalue_one(rot) && rot_order == order;
    } else if (good) {
      good = img.homogeneous.is_identity();  // pure nonzero translation is infinite
    }
    if (!good) {
      report.failures.push_back(w);
    } else {
      ++report.order_histogram[order];
    }
  }
  return report;
}

namespace {

void add_check(std::vector<CheckResult>& out, const std::string& name, bool pass,
               std::string detail = "") {
  out.push_back({name, pass, std::move(detail)});
}

}  // namespace

std::vector<CheckResult> verify_worked_examples(int audit_max_len,
                                                std::size_t audit_budget) {
  std::vector<CheckResult> checks;

  // -- unipotent coset of the diagonal torus --
  {
    CosetInstance<Rational> inst = build_unipotent_coset();
    LaurentMat xh = to_laurent(inst.x) * symbolic_diagonal_family(inst.exponents);
    add_check(checks, "unipotent-coset/det", det(xh) == Laurent(1));
    add_check(checks, "unipotent-coset/trace", xh.trace() == Laurent(3));
    add_check(checks, "unipotent-coset/trace-square", (xh * xh).trace() == Laurent(3));
    Poly<Laurent> cp = char_poly(xh);
    add_check(checks, "unipotent-coset/char-poly-(x-1)^3",
              cp == unipotent_char_poly<Laurent>(3));
    add_check(checks, "unipotent-coset/symbolic-unipotent", is_unipotent(xh));
    bool samples_ok = true;
    for (const Rational& t : {Rational(2), Rational(3), Rational(5), Rational(-1),
                              Rational(7, 2)}) {
      if (!is_unipotent(inst.x * inst.family_at(t))) samples_ok = false;
    }
    add_check(checks, "unipotent-coset/samples-unipotent", samples_ok,
              "t in {2,3,5,-1,7/2}");
  }

  // -- conjugate semisimple pair --
  {
    CosetInstance<Rational> inst = build_semisimple_coset();
    add_check(checks, "semisimple-pair/trace", inst.x.trace() == Rational(-4));
    add_check(checks, "semisimple-pair/det", det(inst.x) == Rational(1));
    add_check(checks, "semisimple-pair/eigenvalue-one", has_eigenvalue_one(inst.x));
    LaurentMat xb = to_laurent(inst.x) * symbolic_diagonal_family(inst.exponents);
    add_check(checks, "semisimple-pair/det-t-free", det(xb).is_constant());
    add_check(checks, "semisimple-pair/trace-t-free", xb.trace().is_constant());
    add_check(checks, "semisimple-pair/trace-square-t-free",
              (xb * xb).trace().is_constant());
    Poly<Laurent> cp = char_poly(xb);
    bool cp_const = true;
    for (std::size_t k = 0; k <= 3; ++k)
      if (!cp.coeff(k).is_constant()) cp_const = false;
    add_check(checks, "semisimple-pair/char-poly-t-free", cp_const);
    std::vector<Poly<Rational>> factors = invariant_factors(inst.x);
    add_check(checks, "semisimple-pair/min-poly-squarefree",
              !factors.empty() && is_squarefree(factors.back()));
  }

  // -- affine torsion group --
  {
    AffineTorsionGroup g = build_affine_torsion_group();
    add_check(checks, "affine-torsion/projection-order-8",
              g.projection_group.size() == 8);
    bool free_action = true;
    for (const RatMat& m : g.projection_group)
      if (m != RatMat::identity(4) && has_eigenvalue_one(m)) free_action = false;
    add_check(checks, "affine-torsion/free-action", free_action);

    add_check(checks, "affine-torsion/g1-order-4", affine_order(g.g1) == 4);
    std::vector<Rational> p1(4, 0);
    RatMat h = g.g1.homogeneous;
    bool fixes = true;
    for (std::size_t i = 0; i < 4; ++i) {
      Rational img = h.at(i, 4);
      for (std::size_t j = 0; j < 4; ++j) img += h.at(i, j) * p1[j];
      if (img != p1[i]) fixes = false;
    }
    add_check(checks, "affine-torsion/g1-fixes-center", fixes);

    AffineIsometry shift = g.g1 * g.g1 * g.g2 * g.g2;
    bool translation = shift.linear_part() == RatMat::identity(4);
    std::vector<Rational> b = shift.translation_part();
    bool expected = b == std::vector<Rational>{-2, 0, 0, 0};
    add_check(checks, "affine-torsion/g1^2g2^2-translation", translation && expected,
              "translation by 2(p1 - p2)");
    bool never_identity = true;
    RatMat p = RatMat::identity(5);
    for (int k = 1; k <= 100; ++k) {
      p = p * shift.homogeneous;
      if (p.is_identity()) never_identity = false;
    }
    add_check(checks, "affine-torsion/translation-infinite-order", never_identity,
              "powers up to 100 plus nonzero translation with identity rotation");

    TorsionAuditReport audit = affine_primitive_audit(audit_max_len, audit_budget);
    std::ostringstream detail;
    detail << audit.primitives_checked << " primitives, orders:";
    for (const auto& [order, count] : audit.order_histogram)
      detail << " " << order << "x" << count;
    add_check(checks, "affine-torsion/primitive-audit", audit.ok(), detail.str());
  }

  return checks;
}

}  // namespace autrep
