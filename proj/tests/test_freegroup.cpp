#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "autrep/linalg.hpp"
#include "autrep/words.hpp"

#include "helpers.hpp"

#include <algorithm>
#include <set>

using namespace autrep;

namespace {

ReducedWord w(int rank, std::vector<int> letters) { return normalize(rank, letters); }

auto mat_mul = [](const RatMat& a, const RatMat& b) { return a * b; };
auto mat_inv = [](const RatMat& a) { return inverse(a); };

RatMat eval_on(const ReducedWord& word, const std::vector<RatMat>& t) {
  return evaluate_word(word, t, RatMat::identity(t[0].dim()), mat_mul, mat_inv);
}

}  // namespace

TEST_CASE("normalize cancels and is idempotent") {
  CHECK(w(2, {1, -1}).is_identity());
  CHECK(w(2, {1, 2, -2, 1}) == w(2, {1, 1}));
  CHECK(w(2, {1, -2}).letters == std::vector<int>{1, -2});
  CHECK_THROWS_AS(normalize(2, {3}), std::out_of_range);
  CHECK_THROWS_AS(normalize(2, {0}), std::out_of_range);

  Rng rng(31);
  for (int k = 0; k < 200; ++k) {
    std::vector<int> letters;
    for (int l = 0; l < 12; ++l) {
      int v = static_cast<int>(rng.int_in(1, 3));
      letters.push_back(rng.below(2) ? v : -v);
    }
    ReducedWord once = normalize(3, letters);
    CHECK(normalize(3, once.letters) == once);
    for (std::size_t p = 0; p + 1 < once.letters.size(); ++p)
      CHECK(once.letters[p] != -once.letters[p + 1]);
  }
}

TEST_CASE("word literal syntax") {
  ReducedWord word = parse_word("x1*x2^-1*x1", 2);
  CHECK(word.letters == std::vector<int>{1, -2, 1});
  CHECK(format_word(word) == "x1*x2^-1*x1");
  CHECK(parse_word("1", 3).is_identity());
  CHECK(format_word(w(2, {})) == "1");
  CHECK(parse_word("x2^3", 2).letters == std::vector<int>{2, 2, 2});
  CHECK_THROWS(parse_word("y1", 2));
  CHECK_THROWS(parse_word("x9", 2));
}

TEST_CASE("apply_automorphism basis substitutions") {
  Automorphism a{2, {NielsenMove::right(1, 2, 1)}};
  CHECK(apply_automorphism(a, w(2, {2})) == w(2, {2, 1}));

  Automorphism inv1{2, {NielsenMove::invert(1)}};
  CHECK(apply_automorphism(inv1, w(2, {1})) == w(2, {-1}));

  Automorphism empty{2, {}};
  ReducedWord any = w(2, {1, -2, 1, 1});
  CHECK(apply_automorphism(empty, any) == any);

  Automorphism left{2, {NielsenMove::left(2, 1, -1)}};
  CHECK(apply_automorphism(left, w(2, {1})) == w(2, {-2, 1}));
  // x1^-1 -> (x2^-1 x1)^-1 = x1^-1 x2
  CHECK(apply_automorphism(left, w(2, {-1})) == w(2, {-1, 2}));
}

TEST_CASE("automorphism followed by its inverse restores words") {
  Rng rng(32);
  for (int k = 0; k < 50; ++k) {
    Automorphism a = random_automorphism(3, 8, rng.next());
    Automorphism back = a.inverse();
    std::vector<int> letters;
    for (int l = 0; l < 6; ++l) {
      int v = static_cast<int>(rng.int_in(1, 3));
      letters.push_back(rng.below(2) ? v : -v);
    }
    ReducedWord word = normalize(3, letters);
    CHECK(apply_automorphism(back, apply_automorphism(a, word)) == word);
  }
}

TEST_CASE("act_on_tuple kind conventions") {
  Rng rng(33);
  RatMat A = testutil::random_invertible(rng, 2);
  RatMat B = testutil::random_invertible(rng, 2);
  RatMat C = testutil::random_invertible(rng, 2);

  std::vector<RatMat> t{A, B, C};
  auto r = act_on_tuple(Automorphism{3, {NielsenMove::right(1, 2, 1)}}, t, mat_mul, mat_inv);
  CHECK(r[0] == A);
  CHECK(r[1] == B * A);
  CHECK(r[2] == C);

  auto twice = act_on_tuple(
      Automorphism{3, {NielsenMove::invert(3), NielsenMove::invert(3)}}, t, mat_mul, mat_inv);
  CHECK(twice == t);

  std::vector<RatMat> p{A, B};
  auto l = act_on_tuple(Automorphism{2, {NielsenMove::left(2, 1, -1)}}, p, mat_mul, mat_inv);
  CHECK(l[0] == inverse(B) * A);
  CHECK(l[1] == B);

  CHECK_THROWS(act_on_tuple(Automorphism{3, {}}, p, mat_mul, mat_inv));
}

TEST_CASE("action is by bijections") {
  Rng rng(34);
  for (int k = 0; k < 25; ++k) {
    std::vector<RatMat> t;
    for (int c = 0; c < 3; ++c) t.push_back(testutil::random_invertible(rng, 3));
    Automorphism a = random_automorphism(3, 10, rng.next());
    auto moved = act_on_tuple(a, t, mat_mul, mat_inv);
    CHECK(act_on_tuple(a.inverse(), moved, mat_mul, mat_inv) == t);
  }
}

TEST_CASE("word images and tuple moves are compatible") {
  // evaluate(apply(a, w), t) == evaluate(w, act(a.reversed(), t)):
  // substitution composes contravariantly with the coordinate moves.
  Rng rng(35);
  for (int k = 0; k < 25; ++k) {
    std::vector<RatMat> t;
    for (int c = 0; c < 3; ++c) t.push_back(testutil::random_invertible(rng, 3));
    Automorphism a = random_automorphism(3, 7, rng.next());
    std::vector<int> letters;
    for (int l = 0; l < 5; ++l) {
      int v = static_cast<int>(rng.int_in(1, 3));
      letters.push_back(rng.below(2) ? v : -v);
    }
    ReducedWord word = normalize(3, letters);
    RatMat lhs = eval_on(apply_automorphism(a, word), t);
    RatMat rhs = eval_on(word, act_on_tuple(a.reversed(), t, mat_mul, mat_inv));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("primitive enumeration: basis letters at length 1") {
  PrimitiveEnumeration en(3, 1, 10000);
  std::set<std::vector<int>> got;
  for (const ReducedWord& word : en.words()) got.insert(word.letters);
  std::set<std::vector<int>> expect = {{1}, {2}, {3}, {-1}, {-2}, {-3}};
  CHECK(got == expect);
}

TEST_CASE("primitive enumeration: rank 2, length 2") {
  PrimitiveEnumeration en(2, 2, 20000);
  std::set<std::vector<int>> got;
  for (const ReducedWord& word : en.words()) got.insert(word.letters);
  CHECK(got.count({1, 2}) == 1);
  CHECK(got.count({1, 1}) == 0);  // proper powers are never primitive
  CHECK(got.count({2, 2}) == 0);
  // closed under inversion
  for (const ReducedWord& word : en.words())
    CHECK(got.count(word_inverse(word).letters) == 1);
}

TEST_CASE("primitive histories reproduce the words from x1") {
  PrimitiveEnumeration en(3, 4, 4000);
  ReducedWord x1 = normalize(3, {1});
  REQUIRE(en.words().size() > 20);
  for (std::size_t k = 0; k < en.words().size(); k += 7) {
    Automorphism a = en.history(k);
    CHECK(apply_automorphism(a, x1) == en.words()[k]);
  }
}

TEST_CASE("primitive enumeration budget truncation is flagged") {
  PrimitiveEnumeration tight(3, 6, 5);
  CHECK(tight.truncated());
  // basis letters survive any budget
  std::set<std::vector<int>> got;
  for (const ReducedWord& word : tight.words()) got.insert(word.letters);
  for (int i = 1; i <= 3; ++i) {
    CHECK(got.count({i}) == 1);
    CHECK(got.count({-i}) == 1);
  }
}

TEST_CASE("random_automorphism determinism and spread") {
  CHECK(random_automorphism(3, 0, 7).moves.empty());
  Automorphism a = random_automorphism(4, 20, 99);
  Automorphism b = random_automorphism(4, 20, 99);
  REQUIRE(a.moves.size() == b.moves.size());
  for (std::size_t k = 0; k < a.moves.size(); ++k) CHECK(a.moves[k] == b.moves[k]);

  Automorphism c = random_automorphism(4, 20, 1);
  Automorphism d = random_automorphism(4, 20, 2);
  bool differ = false;
  for (std::size_t k = 0; k < c.moves.size(); ++k)
    if (!(c.moves[k] == d.moves[k])) differ = true;
  CHECK(differ);

  // every legal move index decodes and re-encodes within range
  for (int idx = 0; idx < nielsen_move_count(3); ++idx) {
    NielsenMove m = nielsen_move_at(3, idx);
    CHECK(m.j >= 1);
    CHECK(m.j <= 3);
  }
  CHECK_THROWS(nielsen_move_at(3, nielsen_move_count(3)));
}
