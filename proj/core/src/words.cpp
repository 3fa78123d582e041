#include "autrep/words.hpp"

#include "autrep/rng.hpp"

#include <cctype>
#include <cstdlib>

namespace autrep {

namespace {

void check_letter(int rank, int letter) {
  int idx = std::abs(letter);
  if (letter == 0 || idx > rank)
    throw std::out_of_range("letter index " + std::to_string(letter) +
                            " outside 1.." + std::to_string(rank));
}

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

}  // namespace

ReducedWord normalize(int rank, const std::vector<int>& letters) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  ReducedWord w;
  w.rank = rank;
  w.letters.reserve(letters.size());
  for (int l : letters) {
    check_letter(rank, l);
    push_reduced(w.letters, l);
  }
  return w;
}

ReducedWord word_inverse(const ReducedWord& w) {
  ReducedWord out;
  out.rank = w.rank;
  out.letters.reserve(w.letters.size());
  for (std::size_t k = w.letters.size(); k-- > 0;) out.letters.push_back(-w.letters[k]);
  return out;
}

ReducedWord word_concat(const ReducedWord& a, const ReducedWord& b) {
  if (a.rank != b.rank) throw std::invalid_argument("word rank mismatch");
  ReducedWord out = a;
  for (int l : b.letters) push_reduced(out.letters, l);
  return out;
}

ReducedWord parse_word(const std::string& text, int rank) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s == "1") return normalize(rank, {});
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'x')
      throw std::invalid_argument("expected 'x' at offset " + std::to_string(pos) +
                                  " in '" + text + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos)
      throw std::invalid_argument("missing generator index at offset " +
                                  std::to_string(start) + " in '" + text + "'");
    int idx = std::stoi(s.substr(start, pos - start));
    long long exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      std::size_t estart = pos;
      if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (estart == pos)
        throw std::invalid_argument("missing exponent at offset " +
                                    std::to_string(estart) + " in '" + text + "'");
      exp = std::stoll(s.substr(estart, pos - estart));
    }
    int letter = exp >= 0 ? idx : -idx;
    for (long long k = 0; k < std::llabs(exp); ++k) letters.push_back(letter);
    if (pos < s.size()) {
      if (s[pos] != '*')
        throw std::invalid_argument("expected '*' at offset " + std::to_string(pos) +
                                    " in '" + text + "'");
      ++pos;
    }
  }
  return normalize(rank, letters);
}

std::string format_word(const ReducedWord& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k > 0) out += "*";
    int l = w.letters[k];
    out += "x" + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

void Automorphism::check_indices() const {
  for (const NielsenMove& m : moves) {
    if (m.j < 1 || m.j > rank || (m.kind != NielsenMove::Kind::Invert && (m.i < 1 || m.i > rank)))
      throw std::out_of_range("nielsen move index outside 1.." + std::to_string(rank));
  }
}

ReducedWord apply_automorphism(const Automorphism& a, const ReducedWord& w) {
  if (a.rank != w.rank) throw std::invalid_argument("automorphism/word rank mismatch");
  a.check_indices();
  std::vector<int> cur = w.letters;
  std::vector<int> next;
  for (const NielsenMove& m : a.moves) {
    next.clear();
    for (int l : cur) {
      int idx = std::abs(l);
      if (idx != m.j) {
        push_reduced(next, l);
        continue;
      }
      switch (m.kind) {
        case NielsenMove::Kind::Invert:
          push_reduced(next, -l);
          break;
        case NielsenMove::Kind::RightMultiply:
          // x_j -> x_j x_i^s ; x_j^-1 -> x_i^-s x_j^-1
          if (l > 0) {
            push_reduced(next, l);
            push_reduced(next, m.sign > 0 ? m.i : -m.i);
          } else {
            push_reduced(next, m.sign > 0 ? -m.i : m.i);
            push_reduced(next, l);
          }
          break;
        case NielsenMove::Kind::LeftMultiply:
          // x_j -> x_i^s x_j ; x_j^-1 -> x_j^-1 x_i^-s
          if (l > 0) {
            push_reduced(next, m.sign > 0 ? m.i : -m.i);
            push_reduced(next, l);
          } else {
            push_reduced(next, l);
            push_reduced(next, m.sign > 0 ? -m.i : m.i);
          }
          break;
      }
    }
    std::swap(cur, next);
  }
  ReducedWord out;
  out.rank = w.rank;
  out.letters = std::move(cur);
  return out;
}

int nielsen_move_count(int rank) {
  // R and L with both signs over ordered pairs, plus one inversion per index.
  return 4 * rank * (rank - 1) + rank;
}

NielsenMove nielsen_move_at(int rank, int index) {
  const int pairs = rank * (rank - 1);
  if (index < 0 || index >= nielsen_move_count(rank))
    throw std::out_of_range("move index out of range");
  if (index < 4 * pairs) {
    int block = index / pairs;  // 0: R+, 1: R-, 2: L+, 3: L-
    int p = index % pairs;
    int i = p / (rank - 1) + 1;
    int rem = p % (rank - 1);
    int j = rem + 1 + (rem + 1 >= i ? 1 : 0);
    int sign = (block % 2 == 0) ? 1 : -1;
    return block < 2 ? NielsenMove::right(i, j, sign) : NielsenMove::left(i, j, sign);
  }
  return NielsenMove::invert(index - 4 * pairs + 1);
}

Automorphism random_automorphism(int rank, int length, std::uint64_t seed) {
  if (rank < 2) throw std::invalid_argument("rank must be at least 2");
  if (length < 0) throw std::invalid_argument("length must be nonnegative");
  Rng rng(seed);
  Automorphism a;
  a.rank = rank;
  a.moves.reserve(static_cast<std::size_t>(length));
  const int count = nielsen_move_count(rank);
  for (int k = 0; k < length; ++k)
    a.moves.push_back(nielsen_move_at(rank, static_cast<int>(rng.below(count))));
  return a;
}

}  // namespace autrep
