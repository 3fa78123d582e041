#pragma once

#include "autrep/quaternion.hpp"
#include "autrep/words.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace autrep {

/// i.i.d. Haar (uniform) samples on SU(2) = S^3; deterministic per seed.
std::vector<Quat> haar_sample(std::size_t count, std::uint64_t seed);

/// CDF of the trace 2w under Haar measure (semicircle on [-2,2]).
double haar_trace_cdf(double s);

/// Kolmogorov-Smirnov distance between samples and a CDF.
double ks_distance(std::vector<double> samples, double (*cdf)(double));

struct WalkReport {
  std::uint64_t seed = 0;
  std::size_t steps = 0;
  std::size_t burn_in = 0;
  std::vector<double> trace_samples;               // tr(g_1), one entry per step
  std::vector<std::vector<double>> coordinate_traces;  // per step: tr(g_1..g_n)
  double ks_distance = 0;  // trace law vs Haar after burn-in
  std::optional<double> min_target_distance;
};

/// Random Nielsen walk on SU(2)^n: each step applies a uniformly random
/// elementary move. Records the trace path and its KS distance from the
/// Haar trace law after burn-in; optionally tracks the closest approach
/// (max-coordinate distance) to a target tuple.
WalkReport nielsen_walk(const std::vector<Quat>& initial, std::size_t steps,
                        std::uint64_t seed, std::size_t burn_in = 1000,
                        const std::vector<Quat>* target = nullptr);

struct MinimalityResult {
  double distance = 0;  // max-coordinate distance achieved, replay-verified
  std::vector<NielsenMove> moves;
};

/// Steer the tuple toward the target with elementary moves: a greedy
/// single-move phase plus, per coordinate, a left-multiplication word
/// search in the other coordinates (meet-in-the-middle). `move_budget`
/// caps the length of the returned move sequence. The result distance is
/// recomputed by replaying the moves from the start tuple.
MinimalityResult minimality_probe(const std::vector<Quat>& start,
                                  const std::vector<Quat>& target, double epsilon,
                                  std::size_t move_budget);

struct PairDensityReport {
  double coverage = 0;        // fraction of the net within epsilon of a word image
  std::size_t net_size = 0;
  std::size_t words_tried = 0;
};

/// Evaluate all reduced words in a, b up to word_len and report the
/// fraction of a fixed quasi-uniform net of SU(2) hit within epsilon
/// (1.0 = fully epsilon-dense at this budget). The net is a seeded Haar
/// sample of size ~ 40/eps^3 under a fixed internal seed.
PairDensityReport pair_density_probe(const Quat& a, const Quat& b, int word_len,
                                     double epsilon);

}  // namespace autrep
