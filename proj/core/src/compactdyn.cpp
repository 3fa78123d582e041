#include "autrep/compactdyn.hpp"

#include "autrep/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace autrep {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

Quat random_unit(Rng& rng) {
  for (;;) {
    Quat q{rng.gauss(), rng.gauss(), rng.gauss(), rng.gauss()};
    double n = q.norm();
    if (n > 1e-12) return {q.w / n, q.x / n, q.y / n, q.z / n};
  }
}

Quat q_mul(const Quat& a, const Quat& b) { return a * b; }
Quat q_inv(const Quat& a) { return a.conj(); }

double tuple_distance(const std::vector<Quat>& a, const std::vector<Quat>& b) {
  double worst = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, su2_distance(a[k], b[k]));
  return worst;
}

}  // namespace

std::vector<Quat> haar_sample(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Quat> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_unit(rng));
  return out;
}

double haar_trace_cdf(double s) {
  if (s <= -2) return 0;
  if (s >= 2) return 1;
  double half = s / 2;
  return 0.5 + (std::asin(half) + half * std::sqrt(1 - half * half)) / kPi;
}

double ks_distance(std::vector<double> samples, double (*cdf)(double)) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double worst = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double f = cdf(samples[i]);
    worst = std::max(worst, std::fabs((i + 1) / n - f));
    worst = std::max(worst, std::fabs(f - i / n));
  }
  return worst;
}

WalkReport nielsen_walk(const std::vector<Quat>& initial, std::size_t steps,
                        std::uint64_t seed, std::size_t burn_in,
                        const std::vector<Quat>* target) {
  const int rank = static_cast<int>(initial.size());
  if (rank < 3) throw std::invalid_argument("nielsen_walk needs rank >= 3");

  WalkReport report;
  report.seed = seed;
  report.steps = steps;
  report.burn_in = std::min(burn_in, steps);

  Rng rng(seed);
  std::vector<Quat> tuple = initial;
  const int move_total = nielsen_move_count(rank);

  auto record = [&](std::size_t) {
    report.trace_samples.push_back(tuple[0].trace());
    std::vector<double> row;
    row.reserve(tuple.size());
    for (const Quat& q : tuple) row.push_back(q.trace());
    report.coordinate_traces.push_back(std::move(row));
    if (target) {
      double dist = tuple_distance(tuple, *target);
      if (!report.min_target_distance || dist < *report.min_target_distance)
        report.min_target_distance = dist;
    }
  };

  record(0);  // step 0: initial tuple
  for (std::size_t s = 1; s <= steps; ++s) {
    NielsenMove m = nielsen_move_at(rank, static_cast<int>(rng.below(move_total)));
    act_move(m, tuple, q_mul, q_inv);
    record(s);
  }

  std::vector<double> tail(report.trace_samples.begin() +
                               static_cast<long>(report.burn_in),
                           report.trace_samples.end());
  if (!tail.empty()) report.ks_distance = ks_distance(std::move(tail), haar_trace_cdf);
  return report;
}

namespace {

struct TableEntry {
  Quat value;
  std::vector<int> letters;  // signed indices into the letter alphabet
};

// All reduced words up to max_len over the given letter values
// (letters come in inverse pairs: alphabet[2k] * alphabet[2k+1] = 1).
void build_words(const std::vector<Quat>& alphabet, int max_len, std::size_t cap,
                 std::vector<TableEntry>& out) {
  out.clear();
  out.push_back({Quat::identity(), {}});
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (int a = 0; a < static_cast<int>(alphabet.size()); ++a) {
        if (!out[k].letters.empty()) {
          int last = out[k].letters.back();
          if ((last ^ 1) == a) continue;  // cancels the previous letter
        }
        if (out.size() >= cap) return;
        TableEntry next;
        next.value = out[k].value * alphabet[static_cast<std::size_t>(a)];
        next.letters = out[k].letters;
        next.letters.push_back(a);
        out.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
}

}  // namespace

MinimalityResult minimality_probe(const std::vector<Quat>& start,
                                  const std::vector<Quat>& target, double epsilon,
                                  std::size_t move_budget) {
  const int rank = static_cast<int>(start.size());
  if (rank < 3) throw std::invalid_argument("minimality_probe needs rank >= 3");
  if (start.size() != target.size()) throw std::invalid_argument("tuple size mismatch");

  MinimalityResult result;
  std::vector<Quat> cur = start;

  auto apply_and_record = [&](const NielsenMove& m) {
    act_move(m, cur, q_mul, q_inv);
    result.moves.push_back(m);
  };

  // Phase 1: greedy descent over single moves.
  // 1e-7 floor: the acos metric cannot resolve distances below ~1.5e-8.
  constexpr double kResolution = 1e-7;
  const double stop_at = std::max(epsilon * 0.5, kResolution);
  const int move_total = nielsen_move_count(rank);
  double best = tuple_distance(cur, target);
  while (result.moves.size() < move_budget && best > kResolution) {
    int best_move = -1;
    double best_score = best - 1e-12;
    for (int mi = 0; mi < move_total; ++mi) {
      std::vector<Quat> trial = cur;
      act_move(nielsen_move_at(rank, mi), trial, q_mul, q_inv);
      double score = tuple_distance(trial, target);
      if (score < best_score) {
        best_score = score;
        best_move = mi;
      }
    }
    if (best_move < 0) break;
    apply_and_record(nielsen_move_at(rank, best_move));
    best = best_score;
  }

  // Phase 2: fix each coordinate by a left-multiplication word in the
  // others (meet-in-the-middle over half-length tables).
  for (int j = 1; j <= rank && best > stop_at; ++j) {
    std::size_t jj = static_cast<std::size_t>(j - 1);
    double here = su2_distance(cur[jj], target[jj]);
    if (here < kResolution) continue;

    // alphabet: values of the other coordinates and inverses, paired.
    std::vector<Quat> alphabet;
    std::vector<NielsenMove> letter_moves;
    for (int i = 1; i <= rank; ++i) {
      if (i == j) continue;
      alphabet.push_back(cur[static_cast<std::size_t>(i - 1)]);
      letter_moves.push_back(NielsenMove::left(i, j, 1));
      alphabet.push_back(cur[static_cast<std::size_t>(i - 1)].conj());
      letter_moves.push_back(NielsenMove::left(i, j, -1));
    }

    int half_len = 7;
    while (half_len > 1 &&
           2 * static_cast<std::size_t>(half_len) > move_budget - result.moves.size())
      --half_len;
    std::vector<TableEntry> table;
    build_words(alphabet, half_len, 8000, table);

    // want w ~ target_j * cur_j^{-1}, w = u * v; maximize the dot product
    // (equivalent to minimizing the geodesic distance, no acos needed)
    Quat m = target[jj] * cur[jj].conj();
    double best_dot = std::cos(here);
    const TableEntry* bu = nullptr;
    const TableEntry* bv = nullptr;
    for (const TableEntry& u : table) {
      Quat need = u.value.conj() * m;
      for (const TableEntry& v : table) {
        double d = dot(v.value, need);
        if (d > best_dot) {
          best_dot = d;
          bu = &u;
          bv = &v;
        }
      }
    }
    if (!bu) continue;
    double improved = std::acos(std::min(1.0, best_dot));
    if (!(improved < here)) continue;  // strict improvement only
    std::vector<int> word = bu->letters;
    word.insert(word.end(), bv->letters.begin(), bv->letters.end());
    if (word.empty()) continue;
    if (result.moves.size() + word.size() > move_budget) continue;
    // w * g_j applies the letters right-to-left as left multiplications
    for (std::size_t k = word.size(); k-- > 0;)
      apply_and_record(letter_moves[static_cast<std::size_t>(word[k])]);
    best = tuple_distance(cur, target);
  }

  // Replay verification: the returned moves really achieve the distance.
  std::vector<Quat> replay = start;
  for (const NielsenMove& m : result.moves) act_move(m, replay, q_mul, q_inv);
  result.distance = tuple_distance(replay, target);
  return result;
}

PairDensityReport pair_density_probe(const Quat& a, const Quat& b, int word_len,
                                     double epsilon) {
  if (word_len < 1) throw std::invalid_argument("word_len must be positive");
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");

  PairDensityReport report;
  const double volume_factor = 40.0;
  std::size_t net_size = static_cast<std::size_t>(volume_factor / (epsilon * epsilon * epsilon));
  net_size = std::max<std::size_t>(128, std::min<std::size_t>(8192, net_size));
  static constexpr std::uint64_t kNetSeed = 0x4e455431;  // fixed net
  std::vector<Quat> net = haar_sample(net_size, kNetSeed);
  report.net_size = net_size;

  std::vector<std::size_t> unhit(net_size);
  for (std::size_t k = 0; k < net_size; ++k) unhit[k] = k;
  const double cos_eps = std::cos(epsilon);

  std::vector<Quat> alphabet{a, a.conj(), b, b.conj()};
  // DFS over reduced words, maintaining the product.
  struct Frame {
    int next_letter = 0;
    int last = -1;
    Quat value;
  };
  std::vector<Frame> stack;
  stack.push_back({0, -1, Quat::identity()});

  auto mark = [&](const Quat& value) {
    ++report.words_tried;
    for (std::size_t k = 0; k < unhit.size();) {
      if (dot(net[unhit[k]], value) >= cos_eps) {
        unhit[k] = unhit.back();
        unhit.pop_back();
      } else {
        ++k;
      }
    }
  };

  mark(Quat::identity());
  while (!stack.empty() && !unhit.empty()) {
    Frame& f = stack.back();
    if (f.next_letter >= 4 || static_cast<int>(stack.size()) > word_len) {
      stack.pop_back();
      continue;
    }
    int letter = f.next_letter++;
    if (f.last >= 0 && (f.last ^ 1) == letter) continue;
    Quat value = f.value * alphabet[static_cast<std::size_t>(letter)];
    mark(value);
    if (static_cast<int>(stack.size()) < word_len)
      stack.push_back({0, letter, value});
  }

  report.coverage =
      1.0 - static_cast<double>(unhit.size()) / static_cast<double>(net_size);
  return report;
}

}  // namespace autrep
