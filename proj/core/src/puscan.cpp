#include "autrep/puscan.hpp"

namespace autrep {

std::vector<ReducedWord> sorted_primitives(int rank, int max_len, std::size_t budget,
                                           bool* truncated) {
  PrimitiveEnumeration en(rank, max_len, budget);
  if (truncated) *truncated = en.truncated();
  std::vector<ReducedWord> words = en.words();
  std::sort(words.begin(), words.end(), word_order_less);
  return words;
}

}  // namespace autrep
