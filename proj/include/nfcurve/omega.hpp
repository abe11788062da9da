#pragma once

// The region Omega(t, lambda) inside [-1/2, 1/2]^(2D+1) whose doubled volume
// is the limiting gap distribution, for any t > 0.
//
// Coordinates are (x, y_{-D+1}, ..., y_D) with x >= 0. A point belongs to
// Omega when, for every j != 0, y_j avoids the closed interval
//   [y_0 + (j - lambda) t / (4x),  y_0 + j t / (4x)].

#include <cstdint>
#include <span>

namespace nfcurve {

/// Unique D >= 1 with 2/D < t <= 2/(D-1); D = 1 means t > 2.
int interference_order(double t);

struct OmegaSpec {
  double t;
  double lambda;
  int D;

  /// D is derived from t.
  OmegaSpec(double t, double lambda);

  /// Number of y coordinates, 2D (j = -D+1..D, including y_0).
  int y_count() const { return 2 * D; }
};

/// y[k] holds y_{k-D+1}; y_0 sits at index D-1. x = 0 is handled by taking
/// the limit x -> 0+ of the forbidden intervals.
bool omega_contains(const OmegaSpec& spec, double x, std::span<const double> y);

struct VolumeEstimate {
  double estimate = 0;   // of 2 * mu(Omega)
  double std_error = 0;  // binomial
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t accepted = 0;
};

/// Monte Carlo over x in (0, 1/2], y in [-1/2, 1/2)^(2D). Each sample draws its
/// coordinates from a counter-based stream keyed by (seed, sample index), so
/// the result is independent of `threads` (0 = hardware concurrency).
VolumeEstimate omega_volume(double t, double lambda, std::uint64_t samples, std::uint64_t seed,
                            unsigned threads = 0);

/// 2 * mu(Omega) for any t > 0 as an iterated integral: for fixed (x, y_0)
/// the y_j constraints are independent, so the inner integrand is a product of
/// clipped complement lengths. The y_0 integral is exact per polynomial piece,
/// the x integral adaptive Gauss-Kronrod between kink locations.
double omega_section_integral(double t, double lambda);

/// The D = 1 quadrature cross-check. Requires t > 2.
double omega_volume_quadrature(double t, double lambda);

/// Uniform double in [0, 1) from stream (key, counter). Exposed for tests.
double counter_uniform(std::uint64_t key, std::uint64_t counter);

}  // namespace nfcurve
