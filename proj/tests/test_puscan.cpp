#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "autrep/puscan.hpp"

#include "helpers.hpp"

using namespace autrep;

namespace {

RatMat jordan(std::size_t d) {
  RatMat m = RatMat::identity(d);
  for (std::size_t i = 0; i + 1 < d; ++i) m.at(i, i + 1) = 1;
  return m;
}

RepTuple<Rational> conjugated_unitriangular_tuple(Rng& rng, std::size_t d, std::size_t n,
                                                  bool regular = false) {
  RatMat g = testutil::random_invertible(rng, d);
  RatMat ginv = inverse(g);
  std::vector<RatMat> mats;
  for (std::size_t k = 0; k < n; ++k)
    mats.push_back(g * testutil::random_unitriangular(rng, d, regular) * ginv);
  return RepTuple<Rational>(std::move(mats));
}

}  // namespace

TEST_CASE("scan: unipotent tuples have no witness") {
  Rng rng(61);
  std::vector<RatMat> mats;
  for (int k = 0; k < 3; ++k) mats.push_back(testutil::random_unitriangular(rng, 3));
  RepTuple<Rational> t(std::move(mats));
  ScanReport<Rational> r = scan_primitives(t, 4, 3000);
  CHECK(r.all_unipotent());
  CHECK(r.tested > 50);
}

TEST_CASE("scan: a basis letter witnesses immediately") {
  RepTuple<Rational> t{{jordan(2), rat_mat_q(2, {Rational(2), 0, 0, Rational(1, 2)})}};
  ScanReport<Rational> r = scan_primitives(t, 3, 5000);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == normalize(2, {2}));
  CHECK(r.witness_char_poly ==
        Poly<Rational>({Rational(1), Rational(-5, 2), Rational(1)}));
}

TEST_CASE("scan snapshot: the coset tuple at t=2,3") {
  // Evaluations of the one-parameter coset instance at two parameters.
  RatMat u = rat_mat(3, {0, 1, 3, 0, 3, 8, -1, 0, 0});
  auto h = [](Rational t) {
    return rat_mat_q(3, {t, 0, 0, 0, 1, 0, 0, 0, Rational(1) / t});
  };
  RepTuple<Rational> t{{u * h(2), u * h(3)}};

  // oracle: brute-force evaluation of every primitive of length <= 3
  std::vector<ReducedWord> prims = sorted_primitives(2, 3, 3000);
  TupleEvaluator<Rational> eval(t);
  std::optional<ReducedWord> expect;
  for (const ReducedWord& w : prims) {
    if (!is_unipotent(eval(w))) {
      expect = w;
      break;
    }
  }
  REQUIRE(expect.has_value());  // the generators are unipotent, the mix is not

  ScanReport<Rational> r = scan_primitives(t, 3, 3000);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == *expect);
  // regression snapshot: first witness in scan order
  CHECK(format_word(*r.witness) == "x1*x2");
}

TEST_CASE("scan: nielsen retry pulls witnesses back") {
  RepTuple<Rational> t{{jordan(2), rat_mat_q(2, {Rational(2), 0, 0, Rational(1, 2)})}};
  // max_len 0 impossible; use a length-1 scan on a tuple whose basis
  // letters are unipotent but whose products are not.
  RatMat lower = rat_mat(2, {1, 0, 1, 1});
  RepTuple<Rational> tricky{{jordan(2), lower}};
  ScanReport<Rational> direct = scan_primitives(tricky, 1, 1000);
  CHECK(direct.all_unipotent());  // both letters unipotent
  ScanReport<Rational> retried = scan_primitives(tricky, 1, 1000, 8, 99);
  if (retried.witness.has_value()) {
    CHECK(retried.via_nielsen_retry);
    TupleEvaluator<Rational> eval(tricky);
    CHECK_FALSE(is_unipotent(eval(*retried.witness)));
  }
}

TEST_CASE("kolchin: conjugated unitriangular tuples round trip") {
  Rng rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t d = 2 + rng.below(4);  // up to 5
    RepTuple<Rational> t = conjugated_unitriangular_tuple(rng, d, 3);
    KolchinResult<Rational> r = kolchin_triangularize(t);
    REQUIRE(r.ok());
    REQUIRE(r.flag.has_value());
    RatMat b = r.flag->basis_change;
    RatMat binv = inverse(b);
    for (const RatMat& m : t.mats) {
      RatMat tm = binv * m * b;
      for (std::size_t i = 0; i < d; ++i) {
        CHECK(tm.at(i, i) == 1);
        for (std::size_t j = 0; j < i; ++j) CHECK(tm.at(i, j) == 0);
      }
    }
    CHECK(r.flag->signature.size() == d);
  }
}

TEST_CASE("kolchin: non-unipotent generator yields a witness") {
  RepTuple<Rational> t{{jordan(3), rat_mat_q(3, {Rational(2), 0, 0, 0, Rational(1, 2), 0, 0, 0, 1})}};
  KolchinResult<Rational> r = kolchin_triangularize(t);
  REQUIRE(r.status == KolchinResult<Rational>::Status::Witness);
  CHECK(r.failure_stage == 0);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == normalize(2, {2}));
  TupleEvaluator<Rational> eval(t);
  CHECK_FALSE(is_unipotent(eval(*r.witness)));
}

TEST_CASE("kolchin: single jordan block uses the standard chain") {
  RepTuple<Rational> t{{jordan(3)}};
  KolchinResult<Rational> r = kolchin_triangularize(t);
  REQUIRE(r.ok());
  // J3 is already unitriangular; the recovered flag must also work.
  RatMat b = r.flag->basis_change;
  CHECK(detail::is_unitriangular(inverse(b) * jordan(3) * b));
}

TEST_CASE("kolchin and scan never contradict on random corpora") {
  Rng rng(63);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t d = 2 + rng.below(2);
    bool genuine = trial % 2 == 0;
    RepTuple<Rational> t = [&] {
      if (genuine) return conjugated_unitriangular_tuple(rng, d, 3);
      std::vector<RatMat> mats;
      for (int k = 0; k < 3; ++k) {
        RatMat g = testutil::random_invertible(rng, d);
        mats.push_back(g * testutil::random_unitriangular(rng, d, true) * inverse(g));
      }
      return RepTuple<Rational>(std::move(mats));
    }();
    static const std::vector<ReducedWord> shared = sorted_primitives(3, 5, 6000);
    ScanReport<Rational> scan = scan_primitives_over(t, shared);
    KolchinResult<Rational> kol = kolchin_triangularize(t);
    if (scan.all_unipotent()) CHECK(kol.ok());
    if (!kol.ok()) CHECK(scan.witness.has_value());
  }
}

TEST_CASE("regular_invariant_subspace: kernel chain of a block") {
  RatMat j3 = jordan(3);
  auto v1 = regular_invariant_subspace(j3, 1);
  REQUIRE(v1.size() == 1);
  CHECK(v1[0][0] != 0);
  CHECK(v1[0][1] == 0);
  CHECK(v1[0][2] == 0);

  auto v2 = regular_invariant_subspace(j3, 2);
  REQUIRE(v2.size() == 2);
  for (const auto& v : v2) CHECK(v[2] == 0);

  CHECK_THROWS(regular_invariant_subspace(RatMat::identity(3), 1));
  CHECK_THROWS(regular_invariant_subspace(j3, 3));
}

TEST_CASE("regular_invariant_subspace: equivariance under conjugation") {
  Rng rng(64);
  RatMat g = testutil::random_invertible(rng, 3);
  RatMat conj = g * jordan(3) * inverse(g);
  auto v1 = regular_invariant_subspace(conj, 1);
  REQUIRE(v1.size() == 1);
  // the fixed line is g * e1
  Vec<Rational> ge1(3);
  for (std::size_t i = 0; i < 3; ++i) ge1[i] = g.at(i, 0);
  SpanBasis<Rational> span(3);
  span.insert(ge1);
  CHECK(span.contains(v1[0]));

  // chain nesting
  auto v2 = regular_invariant_subspace(conj, 2);
  SpanBasis<Rational> span2(3);
  for (const auto& v : v2) span2.insert(v);
  CHECK(span2.contains(v1[0]));

  // full chain of a conjugated 4-block
  RatMat j4 = RatMat::identity(4);
  for (std::size_t i = 0; i + 1 < 4; ++i) j4.at(i, i + 1) = 1;
  RatMat g4 = testutil::random_invertible(rng, 4);
  RatMat c4 = g4 * j4 * inverse(g4);
  for (std::size_t k = 1; k + 1 < 4; ++k) {
    auto lower = regular_invariant_subspace(c4, k);
    auto upper = regular_invariant_subspace(c4, k + 1);
    SpanBasis<Rational> up(4);
    for (const auto& v : upper) up.insert(v);
    for (const auto& v : lower) CHECK(up.contains(v));
  }
}

TEST_CASE("good position detection") {
  Rng rng(65);
  RatMat g = testutil::random_invertible(rng, 3);
  RepTuple<Rational> generic{{jordan(3), g * jordan(3) * inverse(g)}};
  GoodPositionReport good = good_position_check(generic);
  CHECK(good.good);

  RepTuple<Rational> same{{jordan(3), jordan(3)}};
  GoodPositionReport bad = good_position_check(same);
  CHECK_FALSE(bad.good);
  CHECK(bad.i == 1);
  CHECK(bad.j == 2);
  CHECK(bad.k == 1);

  RatMat j2 = jordan(2);
  RepTuple<Rational> pair{{j2, j2.transpose()}};
  CHECK(good_position_check(pair).good);

  RepTuple<Rational> mixed{{jordan(3), RatMat::identity(3)}};
  CHECK_THROWS(good_position_check(mixed));
}

TEST_CASE("orbit_span examples and invariance") {
  Vec<Rational> e1{1, 0};
  Vec<Rational> e2{0, 1};

  auto fixed = orbit_span<Rational>({RatMat::identity(2)}, e1, 2);
  CHECK(fixed.basis.size() == 1);
  CHECK_FALSE(fixed.cap_exceeded);

  auto full = orbit_span<Rational>({jordan(2)}, e2, 2);
  CHECK(full.basis.size() == 2);

  auto eigen = orbit_span<Rational>({rat_mat(2, {2, 0, 0, 3})}, e1, 2);
  CHECK(eigen.basis.size() == 1);

  Rng rng(66);
  for (int k = 0; k < 10; ++k) {
    RatMat a = testutil::random_rat_mat(rng, 4);
    RatMat b = testutil::random_rat_mat(rng, 4);
    Vec<Rational> v;
    for (int i = 0; i < 4; ++i) v.push_back(testutil::random_rational(rng));
    auto r = orbit_span<Rational>({a, b}, v, 4);  // cap = d never truncates
    SpanBasis<Rational> span(4);
    for (const auto& row : r.basis) span.insert(row);
    for (const auto& row : r.basis) {
      for (const RatMat& g : {a, b}) {
        Vec<Rational> img(4, 0);
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) img[i] += g.at(i, j) * row[j];
        CHECK(span.contains(img));
      }
    }
  }
}

TEST_CASE("kolchin over the gaussian rationals") {
  Rng rng(67);
  GaussMat g(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      g.at(i, j) = Gaussian(testutil::random_rational(rng), testutil::random_rational(rng));
  REQUIRE_FALSE(Ring<Gaussian>::is_zero(det(g)));
  GaussMat gi = inverse(g);
  std::vector<GaussMat> mats;
  for (int k = 0; k < 2; ++k) {
    GaussMat u = GaussMat::identity(3);
    u.at(0, 1) = Gaussian(testutil::random_rational(rng), testutil::random_rational(rng));
    u.at(1, 2) = Gaussian(testutil::random_rational(rng));
    u.at(0, 2) = Gaussian(Rational(0), Rational(1));
    mats.push_back(g * u * gi);
  }
  RepTuple<Gaussian> t(std::move(mats));
  KolchinResult<Gaussian> r = kolchin_triangularize(t);
  REQUIRE(r.ok());
  GaussMat b = r.flag->basis_change;
  GaussMat binv = inverse(b);
  for (const GaussMat& m : t.mats) {
    GaussMat tm = binv * m * b;
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(tm.at(i, i) == Gaussian(1));
      for (std::size_t j = 0; j < i; ++j) CHECK(tm.at(i, j) == Gaussian(0));
    }
  }
}

TEST_CASE("orbit_span flags a cap overflow") {
  // J2 moves e2 across the whole plane; cap 0 cannot hold the orbit
  Vec<Rational> e2{0, 1};
  auto r = orbit_span<Rational>({jordan(2)}, e2, 0);
  CHECK(r.cap_exceeded);
}

TEST_CASE("scan evaluates laurent tuples with unit determinants") {
  LaurentMat a(2);
  a.at(0, 0) = Laurent::t(1);
  a.at(1, 1) = Laurent::t(-1);
  LaurentMat b = LaurentMat::identity(2);
  b.at(0, 1) = Laurent::t(2);
  RepTuple<Laurent> t{{a, b}};
  ScanReport<Laurent> r = scan_primitives(t, 2, 500);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == normalize(2, {1}));  // the diagonal letter itself

  // inverse letters evaluate through the adjugate inverse
  TupleEvaluator<Laurent> eval(t);
  ReducedWord w = normalize(2, {-1, 2, 1});
  LaurentMat img = eval(w);
  CHECK(det(img).is_unit());
}
