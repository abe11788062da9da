#pragma once

// Scans that compare empirical gap distributions with each other, with the
// closed form, and with exp(-lambda).

#include <optional>
#include <string>
#include <vector>

#include "nfcurve/angles.hpp"
#include "nfcurve/arith.hpp"

namespace nfcurve {

struct SupDistance {
  double distance = 0;
  double argmax_lambda = 0;
};

/// max_k |a[k] - b[k]| over a shared grid; ties keep the first lambda.
SupDistance sup_distance(const std::vector<double>& a, const std::vector<double>& b,
                         const std::vector<double>& lambdas);

struct DistanceReport {
  i64 q = 0;
  i64 h = 0;
  Rational t;
  std::string reference;  // "limit", "exp", "h=<k>", "q=<k>"
  double sup_distance = 0;
  double argmax_lambda = 0;
  bool q_prime = true;
};

/// G* of A(q, h) seen from t, on the grid.
std::vector<double> empirical_curve(i64 q, i64 h, const Rational& t, const LambdaGrid& grid);

/// limit_G(t, .) on the grid; t >= 1.
std::vector<double> limit_curve(double t, const LambdaGrid& grid);

std::vector<DistanceReport> convergence_scan(const Rational& t, i64 h, const std::vector<i64>& primes,
                                             const LambdaGrid& grid, unsigned threads = 0);

/// Pairwise distances between G* for every pair (h_i, h_j), i < j.
std::vector<DistanceReport> h_independence(const Rational& t, i64 p, const std::vector<i64>& hs,
                                           const LambdaGrid& grid, unsigned threads = 0);

struct CompositeContrast {
  std::vector<DistanceReport> to_limit;  // one per odd q
  std::vector<DistanceReport> prime_pairs;
  std::vector<i64> skipped_even;         // centered representatives undefined
};

CompositeContrast composite_contrast(const std::vector<i64>& qs, const Rational& t, i64 h,
                                     const LambdaGrid& grid, unsigned threads = 0);

/// KS statistic of normalized angles of A(p, h) against U[0, 1].
double equidistribution_check(i64 p, i64 h, const Rational& t);

struct ExpLimitReport {
  DistanceReport to_exp;
  std::optional<DistanceReport> to_limit;  // when t >= 1
};

std::vector<ExpLimitReport> exponential_limit_scan(i64 p, i64 h, const std::vector<Rational>& ts,
                                                   const LambdaGrid& grid, unsigned threads = 0);

}  // namespace nfcurve
