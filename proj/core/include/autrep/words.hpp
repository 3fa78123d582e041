#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace autrep {

/// Freely reduced word in F_n. Letters are signed 1-based generator
/// indices: +k is x_k, -k is x_k^{-1}. No adjacent pair cancels.
struct ReducedWord {
  int rank = 0;
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  bool is_identity() const { return letters.empty(); }

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.rank == b.rank && a.letters == b.letters;
  }
  friend bool operator!=(const ReducedWord& a, const ReducedWord& b) { return !(a == b); }
  friend bool operator<(const ReducedWord& a, const ReducedWord& b) {
    return a.letters < b.letters;
  }
};

/// Free reduction; the unique normal form. Idempotent.
ReducedWord normalize(int rank, const std::vector<int>& letters);

ReducedWord word_inverse(const ReducedWord& w);
ReducedWord word_concat(const ReducedWord& a, const ReducedWord& b);

/// CLI literal syntax: "x1*x2^-1*x1"; empty word is "1".
ReducedWord parse_word(const std::string& text, int rank);
std::string format_word(const ReducedWord& w);

/// Elementary Nielsen transformation. For RightMultiply/LeftMultiply the
/// target generator j is multiplied by generator i^sign; Invert flips j.
struct NielsenMove {
  enum class Kind { RightMultiply, LeftMultiply, Invert };
  Kind kind = Kind::Invert;
  int i = 0;  // source (unused for Invert)
  int j = 0;  // target
  int sign = 1;

  static NielsenMove right(int i, int j, int sign) { return make(Kind::RightMultiply, i, j, sign); }
  static NielsenMove left(int i, int j, int sign) { return make(Kind::LeftMultiply, i, j, sign); }
  static NielsenMove invert(int j) {
    NielsenMove m;
    m.kind = Kind::Invert;
    m.j = j;
    return m;
  }

  NielsenMove inverse() const {
    NielsenMove m = *this;
    if (kind != Kind::Invert) m.sign = -sign;
    return m;
  }

  friend bool operator==(const NielsenMove& a, const NielsenMove& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j &&
           (a.kind == Kind::Invert || a.sign == b.sign);
  }

 private:
  static NielsenMove make(Kind k, int i, int j, int sign) {
    if (i == j) throw std::invalid_argument("nielsen move requires i != j");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    NielsenMove m;
    m.kind = k;
    m.i = i;
    m.j = j;
    m.sign = sign;
    return m;
  }
};

/// Automorphism of F_n as an ordered Nielsen move sequence; moves apply
/// left to right (moves[0] acts first).
struct Automorphism {
  int rank = 0;
  std::vector<NielsenMove> moves;

  /// Reversed sequence of inverse moves: composing after (or before)
  /// the original restores every word and every tuple.
  Automorphism inverse() const {
    Automorphism a;
    a.rank = rank;
    a.moves.reserve(moves.size());
    for (std::size_t k = moves.size(); k-- > 0;) a.moves.push_back(moves[k].inverse());
    return a;
  }

  /// Same moves in reverse order, not inverted. Evaluation identity:
  /// evaluate(apply_automorphism(a, w), t) == evaluate(w, act_on_tuple(a.reversed(), t)).
  Automorphism reversed() const {
    Automorphism a;
    a.rank = rank;
    a.moves.assign(moves.rbegin(), moves.rend());
    return a;
  }

  void check_indices() const;
};

/// Image of w under the basis substitution (x_j -> x_j x_i^s, etc.)
/// obtained by applying the move sequence left to right.
ReducedWord apply_automorphism(const Automorphism& a, const ReducedWord& w);

/// Uniform random move sequence; deterministic per seed.
Automorphism random_automorphism(int rank, int length, std::uint64_t seed);

/// Signed letters in canonical order x1, x1^-1, x2, x2^-1, ...
inline std::vector<int> signed_letters(int rank) {
  std::vector<int> out;
  out.reserve(2 * static_cast<std::size_t>(rank));
  for (int k = 1; k <= rank; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

/// Word comparison by (length, canonical letter order); the scan and
/// witness-search order throughout.
inline bool word_order_less(const ReducedWord& a, const ReducedWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t k = 0; k < a.letters.size(); ++k) {
    int la = a.letters[k], lb = b.letters[k];
    int ka = 2 * std::abs(la) + (la < 0 ? 1 : 0);
    int kb = 2 * std::abs(lb) + (lb < 0 ? 1 : 0);
    if (ka != kb) return ka < kb;
  }
  return false;
}

/// Total number of distinct elementary moves in rank n.
int nielsen_move_count(int rank);
/// Fixed enumeration of the moves (decode index in [0, nielsen_move_count)).
NielsenMove nielsen_move_at(int rank, int index);

/// One move applied to a tuple over any group: exactly one coordinate
/// changes (g_j <- g_j g_i^s, g_j <- g_i^s g_j, or g_j <- g_j^{-1}).
template <class G, class Mul, class Inv>
void act_move(const NielsenMove& m, std::vector<G>& t, Mul&& mul, Inv&& inv) {
  const std::size_t j = static_cast<std::size_t>(m.j - 1);
  if (m.j < 1 || j >= t.size()) throw std::invalid_argument("move target out of range");
  switch (m.kind) {
    case NielsenMove::Kind::Invert:
      t[j] = inv(t[j]);
      break;
    case NielsenMove::Kind::RightMultiply: {
      const std::size_t i = static_cast<std::size_t>(m.i - 1);
      if (m.i < 1 || i >= t.size()) throw std::invalid_argument("move source out of range");
      t[j] = m.sign > 0 ? mul(t[j], t[i]) : mul(t[j], inv(t[i]));
      break;
    }
    case NielsenMove::Kind::LeftMultiply: {
      const std::size_t i = static_cast<std::size_t>(m.i - 1);
      if (m.i < 1 || i >= t.size()) throw std::invalid_argument("move source out of range");
      t[j] = m.sign > 0 ? mul(t[i], t[j]) : mul(inv(t[i]), t[j]);
      break;
    }
  }
}

/// Moves applied left to right; a bijection of tuples (apply a.inverse()
/// to undo).
template <class G, class Mul, class Inv>
std::vector<G> act_on_tuple(const Automorphism& a, std::vector<G> t, Mul&& mul, Inv&& inv) {
  if (t.size() != static_cast<std::size_t>(a.rank))
    throw std::invalid_argument("tuple length != automorphism rank");
  a.check_indices();
  for (const NielsenMove& m : a.moves) act_move(m, t, mul, inv);
  return t;
}

/// Substitute x_k -> t[k-1] and multiply out.
template <class G, class Mul, class Inv>
G evaluate_word(const ReducedWord& w, const std::vector<G>& t, const G& identity, Mul&& mul,
                Inv&& inv) {
  if (t.size() != static_cast<std::size_t>(w.rank))
    throw std::invalid_argument("tuple length != word rank");
  G acc = identity;
  for (int letter : w.letters) {
    const G& g = t[static_cast<std::size_t>(std::abs(letter) - 1)];
    acc = letter > 0 ? mul(acc, g) : mul(acc, inv(g));
  }
  return acc;
}

/// Sound primitive enumeration: breadth-first orbit of the standard basis
/// tuple under elementary moves, harvesting every coordinate. Words longer
/// than max_len are discarded; the queue is capped by `budget` (hitting the
/// cap sets `truncated`). Every emitted word carries a reconstructible move
/// history certifying primitivity.
class PrimitiveEnumeration {
 public:
  PrimitiveEnumeration(int rank, int max_len, std::size_t budget);

  int rank() const { return rank_; }
  bool truncated() const { return truncated_; }
  const std::vector<ReducedWord>& words() const { return words_; }

  /// Automorphism a with apply_automorphism(a, x1) == words()[idx].
  Automorphism history(std::size_t idx) const;

 private:
  struct State {
    std::vector<ReducedWord> images;
    long long parent = -1;
    NielsenMove via;
  };

  void harvest(long long state_idx, std::set<std::vector<int>>& emitted);
  std::vector<NielsenMove> path_moves(long long state_idx) const;

  int rank_;
  int max_len_;
  bool truncated_ = false;
  std::vector<State> states_;
  std::vector<ReducedWord> words_;
  struct Origin {
    long long state;
    int coord;      // 1-based harvested coordinate
    bool inverted;  // emitted as inverse of the coordinate image
  };
  std::vector<Origin> origins_;
};

}  // namespace autrep
