#pragma once

#include "autrep/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace autrep {

/// Small dense floating matrix, the shadow of an exact one.
struct FMat {
  std::size_t dim = 0;
  std::vector<double> e;

  FMat() = default;
  explicit FMat(std::size_t d) : dim(d), e(d * d, 0.0) {}
  double& at(std::size_t i, std::size_t j) { return e[i * dim + j]; }
  double at(std::size_t i, std::size_t j) const { return e[i * dim + j]; }
};

FMat to_float(const RatMat& m);

/// Certificate that g maps the Fubini-Study ball B(center, r1) into
/// B(center, r2) with r2 < r1. By the projective fixed-point argument this
/// implies g is not unipotent. The radii come from an exact operator-norm
/// bound at the numerically found dominant direction; `margin` records the
/// slack between that bound and the sampled boundary images, and
/// `sample_count` how many boundary points corroborated it.
struct ContractionCertificate {
  std::vector<double> center;
  double r1 = 0;
  double r2 = 0;
  int sample_count = 0;
  double margin = 0;
};

/// Power-iteration search for the certificate; deterministic per seed.
/// NotFound (nullopt) is not evidence of unipotence.
std::optional<ContractionCertificate> contraction_certificate(const FMat& g,
                                                              int search_budget,
                                                              std::uint64_t seed = 7);

}  // namespace autrep
