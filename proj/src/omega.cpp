#include "nfcurve/omega.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nfcurve/arith.hpp"

namespace nfcurve {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// c * s where s may be +inf: the x -> 0+ limit, with 0 * inf = 0.
double scaled(double c, double s) { return c == 0.0 ? 0.0 : c * s; }

// Length of [lo, hi] inside [-1/2, 1/2].
double clipped_length(double lo, double hi) {
  return std::max(0.0, std::min(hi, 0.5) - std::max(lo, -0.5));
}

}  // namespace

double counter_uniform(std::uint64_t key, std::uint64_t counter) {
  std::uint64_t z = mix64(key + (counter + 1) * kGolden);
  return static_cast<double>(z >> 11) * 0x1p-53;
}

int interference_order(double t) {
  require(t > 0.0 && std::isfinite(t), "t > 0");
  if (t > 2.0) return 1;
  int D = static_cast<int>(std::floor(2.0 / t)) + 1;
  while (!(2.0 / D < t)) ++D;
  while (D > 2 && !(t <= 2.0 / (D - 1))) --D;
  return D;
}

OmegaSpec::OmegaSpec(double t_, double lambda_) : t(t_), lambda(lambda_), D(interference_order(t_)) {
  require(lambda >= 0.0 && std::isfinite(lambda), "lambda >= 0");
}

bool omega_contains(const OmegaSpec& spec, double x, std::span<const double> y) {
  require(static_cast<int>(y.size()) == spec.y_count(), "y has 2D coordinates");
  require(x >= 0.0 && x <= 0.5, "x in [0, 1/2]");
  for (double v : y) require(v >= -0.5 && v <= 0.5, "coordinates in [-1/2, 1/2]");
  const double s = x == 0.0 ? std::numeric_limits<double>::infinity() : spec.t / (4.0 * x);
  const double y0 = y[static_cast<std::size_t>(spec.D - 1)];
  for (int j = -spec.D + 1; j <= spec.D; ++j) {
    if (j == 0) continue;
    const double lo = y0 + scaled(j - spec.lambda, s);
    const double hi = y0 + scaled(j, s);
    const double yj = y[static_cast<std::size_t>(j + spec.D - 1)];
    if (lo <= yj && yj <= hi) return false;
  }
  return true;
}

VolumeEstimate omega_volume(double t, double lambda, std::uint64_t samples, std::uint64_t seed,
                            unsigned threads) {
  require(samples >= 10000, "samples >= 10^4");
  const OmegaSpec spec(t, lambda);
  const int dims = 1 + spec.y_count();
  const std::uint64_t key = mix64(seed);

  auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<double> y(static_cast<std::size_t>(spec.y_count()));
    std::uint64_t hits = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t base = i * static_cast<std::uint64_t>(dims);
      // 1 - u lies in (0, 1], keeping x off the singular slice x = 0.
      const double x = 0.5 * (1.0 - counter_uniform(key, base));
      for (int k = 0; k < spec.y_count(); ++k) {
        y[static_cast<std::size_t>(k)] = counter_uniform(key, base + 1 + static_cast<std::uint64_t>(k)) - 0.5;
      }
      if (omega_contains(spec, x, y)) ++hits;
    }
    return hits;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, samples));
  std::vector<std::uint64_t> partial(threads, 0);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = samples * w / threads;
      const std::uint64_t end = samples * (w + 1) / threads;
      workers.emplace_back([&, w, begin, end] { partial[w] = count_range(begin, end); });
    }
  }
  VolumeEstimate est;
  est.samples = samples;
  est.seed = seed;
  for (auto c : partial) est.accepted += c;
  // Box volume 1/2 times the factor 2 cancel: 2 mu = acceptance rate.
  const double p = static_cast<double>(est.accepted) / static_cast<double>(samples);
  est.estimate = p;
  est.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return est;
}

double omega_section_integral(double t, double lambda) {
  const OmegaSpec spec(t, lambda);
  const int D = spec.D;

  // Offsets c with interval endpoints y_0 + c * s.
  std::vector<double> offsets = {0.0};
  for (int j = -D + 1; j <= D; ++j) {
    if (j == 0) continue;
    offsets.push_back(j - lambda);
    offsets.push_back(static_cast<double>(j));
  }

  // Inner integrand is piecewise polynomial in y_0 of degree <= 2D - 1.
  auto inner = [&](double x) {
    const double s = t / (4.0 * x);
    std::vector<double> cuts = {-0.5, 0.5};
    for (double c : offsets) {
      for (double edge : {-0.5, 0.5}) {
        double b = edge - c * s;
        if (b > -0.5 && b < 0.5) cuts.push_back(b);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    auto integrand = [&](double y0) {
      double prod = 1.0;
      for (int j = -D + 1; j <= D; ++j) {
        if (j == 0) continue;
        prod *= 1.0 - clipped_length(y0 + (j - lambda) * s, y0 + j * s);
      }
      return prod;
    };
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      if (cuts[k + 1] > cuts[k]) {
        total += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, cuts[k], cuts[k + 1], 0);
      }
    }
    return total;
  };

  // Kinks in x appear where two endpoint offsets are exactly one box width apart.
  std::vector<double> xcuts = {0.0, 0.5};
  for (double c1 : offsets) {
    for (double c2 : offsets) {
      double x = t * std::abs(c1 - c2) / 4.0;
      if (x > 0.0 && x < 0.5) xcuts.push_back(x);
    }
  }
  std::sort(xcuts.begin(), xcuts.end());
  // Merge cuts that differ only by rounding; slivers stall the adaptive rule.
  xcuts.erase(std::unique(xcuts.begin(), xcuts.end(), [](double a, double b) { return b - a < 1e-12; }),
              xcuts.end());
  xcuts.back() = 0.5;

  double total = 0.0;
  for (std::size_t k = 0; k + 1 < xcuts.size(); ++k) {
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(inner, xcuts[k], xcuts[k + 1], 15, 1e-11);
  }
  return 2.0 * total;
}

double omega_volume_quadrature(double t, double lambda) {
  require(t > 2.0, "t > 2 (D = 1)");
  return omega_section_integral(t, lambda);
}

}  // namespace nfcurve
