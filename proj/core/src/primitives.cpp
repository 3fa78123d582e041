#include "autrep/words.hpp"

#include <set>

namespace autrep {

namespace {

// Three elementary moves sending (tuple semantics) slot 1 to the previous
// content of slot c: (a, b) -> (ab, b) -> (ab, a^-1) -> (b, a^-1).
std::vector<NielsenMove> bring_to_front(int c) {
  return {NielsenMove::right(c, 1, 1), NielsenMove::right(1, c, -1),
          NielsenMove::left(c, 1, 1)};
}

std::vector<int> tuple_key(const std::vector<ReducedWord>& images) {
  std::vector<int> key;
  for (const ReducedWord& w : images) {
    key.insert(key.end(), w.letters.begin(), w.letters.end());
    key.push_back(0);
  }
  return key;
}

}  // namespace

PrimitiveEnumeration::PrimitiveEnumeration(int rank, int max_len, std::size_t budget)
    : rank_(rank), max_len_(max_len) {
  if (rank < 2) throw std::invalid_argument("rank must be at least 2");
  if (max_len < 1) throw std::invalid_argument("max_len must be positive");
  if (budget < 1) budget = 1;

  auto mul = [](const ReducedWord& a, const ReducedWord& b) { return word_concat(a, b); };
  auto inv = [](const ReducedWord& a) { return word_inverse(a); };

  State root;
  for (int k = 1; k <= rank; ++k) {
    ReducedWord w;
    w.rank = rank;
    w.letters = {k};
    root.images.push_back(std::move(w));
  }
  states_.push_back(std::move(root));

  std::set<std::vector<int>> seen_states;
  seen_states.insert(tuple_key(states_[0].images));
  std::set<std::vector<int>> emitted;

  const int move_total = nielsen_move_count(rank);
  for (std::size_t idx = 0; idx < states_.size(); ++idx) {
    harvest(static_cast<long long>(idx), emitted);
    for (int mi = 0; mi < move_total; ++mi) {
      NielsenMove m = nielsen_move_at(rank, mi);
      std::vector<ReducedWord> next = states_[idx].images;
      act_move(m, next, mul, inv);
      std::size_t min_len = next[0].length();
      for (const ReducedWord& w : next) min_len = std::min(min_len, w.length());
      if (min_len > static_cast<std::size_t>(max_len)) continue;
      std::vector<int> key = tuple_key(next);
      if (seen_states.count(key)) continue;
      if (states_.size() >= budget) {
        truncated_ = true;
        continue;
      }
      seen_states.insert(std::move(key));
      State s;
      s.images = std::move(next);
      s.parent = static_cast<long long>(idx);
      s.via = m;
      states_.push_back(std::move(s));
    }
  }

  // Close the emitted set under inversion (a basis coordinate stays a
  // basis coordinate after inverting it).
  const std::size_t base_count = words_.size();
  for (std::size_t k = 0; k < base_count; ++k) {
    ReducedWord w = word_inverse(words_[k]);
    if (emitted.insert(w.letters).second) {
      Origin o = origins_[k];
      o.inverted = !o.inverted;
      words_.push_back(std::move(w));
      origins_.push_back(o);
    }
  }
}

void PrimitiveEnumeration::harvest(long long state_idx, std::set<std::vector<int>>& emitted) {
  const State& s = states_[static_cast<std::size_t>(state_idx)];
  for (int c = 1; c <= rank_; ++c) {
    const ReducedWord& w = s.images[static_cast<std::size_t>(c - 1)];
    if (w.length() > static_cast<std::size_t>(max_len_) || w.is_identity()) continue;
    if (!emitted.insert(w.letters).second) continue;
    words_.push_back(w);
    origins_.push_back(Origin{state_idx, c, false});
  }
}

std::vector<NielsenMove> PrimitiveEnumeration::path_moves(long long state_idx) const {
  std::vector<NielsenMove> rev;
  for (long long k = state_idx; k > 0; k = states_[static_cast<std::size_t>(k)].parent)
    rev.push_back(states_[static_cast<std::size_t>(k)].via);
  return {rev.rbegin(), rev.rend()};
}

Automorphism PrimitiveEnumeration::history(std::size_t idx) const {
  if (idx >= words_.size()) throw std::out_of_range("word index");
  const Origin& o = origins_[idx];
  std::vector<NielsenMove> tuple_path = path_moves(o.state);
  if (o.coord != 1) {
    for (const NielsenMove& m : bring_to_front(o.coord)) tuple_path.push_back(m);
  }
  if (o.inverted) tuple_path.push_back(NielsenMove::invert(1));
  Automorphism a;
  a.rank = rank_;
  a.moves.assign(tuple_path.rbegin(), tuple_path.rend());
  return a;
}

}  // namespace autrep
