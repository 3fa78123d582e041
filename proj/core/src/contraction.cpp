#include "autrep/contraction.hpp"

#include "autrep/rng.hpp"

#include <cmath>

namespace autrep {

namespace {

using Vecd = std::vector<double>;

Vecd matvec(const FMat& m, const Vecd& v) {
  Vecd out(m.dim, 0.0);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

double dot(const Vecd& a, const Vecd& b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double norm(const Vecd& v) { return std::sqrt(dot(v, v)); }

void normalize(Vecd& v) {
  double n = norm(v);
  if (n > 0)
    for (double& x : v) x /= n;
}

/// Angle between the lines spanned by unit vectors a and b.
double line_angle(const Vecd& a, const Vecd& b) {
  double c = std::fabs(dot(a, b));
  if (c > 1.0) c = 1.0;
  return std::acos(c);
}

/// Spectral norm via power iteration on m^T m.
double op_norm(const FMat& m, Rng& rng, int iters = 120) {
  Vecd v(m.dim);
  for (double& x : v) x = rng.gauss();
  normalize(v);
  FMat mt(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) mt.at(i, j) = m.at(j, i);
  double lam = 0;
  for (int k = 0; k < iters; ++k) {
    Vecd w = matvec(mt, matvec(m, v));
    lam = norm(w);
    if (lam == 0) return 0;
    for (std::size_t t = 0; t < v.size(); ++t) v[t] = w[t] / lam;
  }
  return std::sqrt(lam) * (1 + 1e-9) + 1e-300;
}

}  // namespace

FMat to_float(const RatMat& m) {
  FMat out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      out.at(i, j) = static_cast<double>(m.at(i, j));
  return out;
}

std::optional<ContractionCertificate> contraction_certificate(const FMat& g,
                                                              int search_budget,
                                                              std::uint64_t seed) {
  const std::size_t d = g.dim;
  if (d < 2 || search_budget <= 0) return std::nullopt;
  Rng rng(seed);

  // Dominant projective direction by power iteration. No convergence
  // heuristics: if the direction is bad the bound below simply fails.
  Vecd x(d);
  for (double& v : x) v = rng.gauss();
  normalize(x);
  const int iters = std::min(4000, 100 + search_budget);
  for (int k = 0; k < iters; ++k) {
    Vecd w = matvec(g, x);
    double n = norm(w);
    if (!(n > 0) || !std::isfinite(n)) return std::nullopt;
    for (std::size_t t = 0; t < d; ++t) x[t] = w[t] / n;
  }

  // g x = lambda x + e with e _|_ x, exactly (up to rounding).
  Vecd gx = matvec(g, x);
  double lambda = dot(x, gx);
  Vecd e(d);
  for (std::size_t t = 0; t < d; ++t) e[t] = gx[t] - lambda * x[t];
  double enorm = norm(e) * (1 + 1e-9) + 1e-300;
  double alam = std::fabs(lambda);

  double gnorm = op_norm(g, rng);
  // P = I - x x^T applied after g.
  FMat pg(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      double v = g.at(i, j);
      for (std::size_t t = 0; t < d; ++t) v -= x[i] * x[t] * g.at(t, j);
      pg.at(i, j) = v;
    }
  double m = op_norm(pg, rng);

  // For p = cos(r) x + sin(r) u on the boundary sphere:
  //   sin d(g p, x) <= (cos r |e| + sin r M) / (cos r |lambda| - sin r |g|).
  static const double radii[] = {0.5,  0.4,  0.3,  0.25, 0.2,  0.15,
                                 0.1,  0.07, 0.05, 0.03, 0.02, 0.01};
  for (double r1 : radii) {
    double c = std::cos(r1), s = std::sin(r1);
    double denom = c * alam - s * gnorm;
    if (denom <= 0) continue;
    double bound = (c * enorm + s * m) / denom;
    if (!(bound < std::sin(r1))) continue;
    double r2a = std::asin(std::min(1.0, bound));
    if (!(r2a < r1 * (1 - 1e-9))) continue;

    // Corroborate by sampling the boundary sphere of B(x, r1).
    int samples = std::min(512, std::max(64, search_budget));
    double dmax = 0;
    bool clean = true;
    for (int k = 0; k < samples && clean; ++k) {
      Vecd u(d);
      for (double& v : u) v = rng.gauss();
      double ux = dot(u, x);
      for (std::size_t t = 0; t < d; ++t) u[t] -= ux * x[t];
      normalize(u);
      Vecd p(d);
      for (std::size_t t = 0; t < d; ++t) p[t] = c * x[t] + s * u[t];
      Vecd gp = matvec(g, p);
      normalize(gp);
      double dist = line_angle(gp, x);
      dmax = std::max(dmax, dist);
      if (dist > r2a * (1 + 1e-6) + 1e-12) clean = false;  // bound violated: bug guard
    }
    if (!clean) continue;

    ContractionCertificate cert;
    cert.center = x;
    cert.r1 = r1;
    cert.r2 = r2a;
    cert.sample_count = samples;
    cert.margin = r2a - dmax;
    return cert;
  }
  return std::nullopt;
}

}  // namespace autrep
