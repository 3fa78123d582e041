#include "autrep/spectra.hpp"

#include <numeric>

namespace autrep {

namespace {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

std::uint64_t cyclotomic_exponent(std::size_t d, bool gaussian_ring) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  const std::uint64_t bound = gaussian_ring ? 2 * d : d;
  // phi(n) >= sqrt(n/2), so phi(n) <= B forces n <= 2B^2.
  std::uint64_t L = 1;
  for (std::uint64_t n = 1; n <= 2 * bound * bound; ++n) {
    if (euler_phi(n) <= bound) L = std::lcm(L, n);
  }
  return L;
}

namespace detail {

OrderVerdict classify_from_power(std::uint64_t, bool power_is_identity,
                                 bool power_is_unipotent) {
  OrderVerdict v;
  if (power_is_identity) {
    v.kind = OrderVerdict::Kind::Finite;
    return v;
  }
  v.kind = OrderVerdict::Kind::Infinite;
  v.witness = power_is_unipotent ? OrderVerdict::InfiniteWitness::NontrivialUnipotentPower
                                 : OrderVerdict::InfiniteWitness::PowerNotUnipotent;
  return v;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

}  // namespace autrep
