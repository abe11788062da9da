#include "nfcurve/experiments.hpp"

#include <cmath>

#include "nfcurve/limitdist.hpp"
#include "nfcurve/modcurve.hpp"
#include "nfcurve/parallel.hpp"

namespace nfcurve {

SupDistance sup_distance(const std::vector<double>& a, const std::vector<double>& b,
                         const std::vector<double>& lambdas) {
  require(a.size() == b.size() && a.size() == lambdas.size() && !a.empty(), "curves share a nonempty grid");
  SupDistance out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double d = std::abs(a[k] - b[k]);
    if (d > out.distance) {
      out.distance = d;
      out.argmax_lambda = lambdas[k];
    }
  }
  return out;
}

std::vector<double> empirical_curve(i64 q, i64 h, const Rational& t, const LambdaGrid& grid) {
  auto gaps = normalized_gaps(angle_sequence(build_curve(q, h), t));
  auto lambdas = grid.values();
  return empirical_G(gaps, lambdas);
}

std::vector<double> limit_curve(double t, const LambdaGrid& grid) {
  std::vector<double> out;
  for (double l : grid.values()) out.push_back(limit_G(t, l));
  return out;
}

std::vector<DistanceReport> convergence_scan(const Rational& t, i64 h, const std::vector<i64>& primes,
                                             const LambdaGrid& grid, unsigned threads) {
  require(!primes.empty(), "primes nonempty");
  require(t.to_double() >= 1.0, "t >= 1 (closed form available)");
  for (i64 p : primes) {
    require(is_prime(static_cast<u64>(p)), "all moduli prime");
    require(p > std::abs(h) && h != 0, "p > |h| > 0");
  }
  const auto lambdas = grid.values();
  const auto reference = limit_curve(t.to_double(), grid);
  return parallel_map<DistanceReport>(primes.size(), threads, [&](std::size_t i) {
    auto d = sup_distance(empirical_curve(primes[i], h, t, grid), reference, lambdas);
    return DistanceReport{primes[i], h, t, "limit", d.distance, d.argmax_lambda, true};
  });
}

std::vector<DistanceReport> h_independence(const Rational& t, i64 p, const std::vector<i64>& hs,
                                           const LambdaGrid& grid, unsigned threads) {
  require(is_prime(static_cast<u64>(p)), "p prime");
  for (i64 h : hs) require(mod_floor(h, p) != 0, "h != 0 mod p");
  const auto lambdas = grid.values();
  auto curves = parallel_map<std::vector<double>>(hs.size(), threads,
                                                  [&](std::size_t i) { return empirical_curve(p, hs[i], t, grid); });
  std::vector<DistanceReport> out;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      auto d = sup_distance(curves[i], curves[j], lambdas);
      out.push_back({p, hs[i], t, "h=" + std::to_string(hs[j]), d.distance, d.argmax_lambda, true});
    }
  }
  return out;
}

CompositeContrast composite_contrast(const std::vector<i64>& qs, const Rational& t, i64 h,
                                     const LambdaGrid& grid, unsigned threads) {
  require(t.to_double() >= 1.0, "t >= 1 (closed form available)");
  CompositeContrast out;
  std::vector<i64> odd;
  for (i64 q : qs) (q % 2 == 0 ? out.skipped_even : odd).push_back(q);
  const auto lambdas = grid.values();
  const auto reference = limit_curve(t.to_double(), grid);
  auto curves = parallel_map<std::vector<double>>(odd.size(), threads,
                                                  [&](std::size_t i) { return empirical_curve(odd[i], h, t, grid); });
  std::vector<std::size_t> primes;
  for (std::size_t i = 0; i < odd.size(); ++i) {
    bool prime = is_prime(static_cast<u64>(odd[i]));
    if (prime) primes.push_back(i);
    auto d = sup_distance(curves[i], reference, lambdas);
    out.to_limit.push_back({odd[i], h, t, "limit", d.distance, d.argmax_lambda, prime});
  }
  for (std::size_t a = 0; a < primes.size(); ++a) {
    for (std::size_t b = a + 1; b < primes.size(); ++b) {
      auto d = sup_distance(curves[primes[a]], curves[primes[b]], lambdas);
      out.prime_pairs.push_back(
          {odd[primes[a]], h, t, "q=" + std::to_string(odd[primes[b]]), d.distance, d.argmax_lambda, true});
    }
  }
  return out;
}

double equidistribution_check(i64 p, i64 h, const Rational& t) {
  require(is_prime(static_cast<u64>(p)), "p prime");
  auto u = normalized_positions(angle_sequence(build_curve(p, h), t));
  return ks_uniform(u);
}

std::vector<ExpLimitReport> exponential_limit_scan(i64 p, i64 h, const std::vector<Rational>& ts,
                                                   const LambdaGrid& grid, unsigned threads) {
  require(is_prime(static_cast<u64>(p)), "p prime");
  const i64 J = (p - 1) / 2;
  for (const auto& t : ts) require(static_cast<i128>(t.num) * J > t.den, "t > 1/J");
  const auto lambdas = grid.values();
  std::vector<double> expo;
  for (double l : lambdas) expo.push_back(std::exp(-l));
  return parallel_map<ExpLimitReport>(ts.size(), threads, [&](std::size_t i) {
    const auto& t = ts[i];
    auto curve = empirical_curve(p, h, t, grid);
    ExpLimitReport r;
    auto d = sup_distance(curve, expo, lambdas);
    r.to_exp = {p, h, t, "exp", d.distance, d.argmax_lambda, true};
    if (t.to_double() >= 1.0) {
      auto dl = sup_distance(curve, limit_curve(t.to_double(), grid), lambdas);
      r.to_limit = DistanceReport{p, h, t, "limit", dl.distance, dl.argmax_lambda, true};
    }
    return r;
  });
}

}  // namespace nfcurve
