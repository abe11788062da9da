#pragma once

// Brute-force exponential sums and box counts over F_p for tuples of
// fractional-linear maps r(x) = (a + b x) / (c + e x).

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nfcurve/arith.hpp"

namespace nfcurve {

struct FracLinear {
  i64 a, b, c, e;  // residues mod p, e != 0

  i64 pole(i64 p) const;  // -c / e
  /// Value at x, or nullopt at the pole.
  std::optional<i64> operator()(i64 x, i64 p) const;
};

struct FracLinearTuple {
  i64 p = 0;
  std::vector<FracLinear> functions;

  std::size_t d() const { return functions.size(); }
  /// Validates primality of p, degrees, and pairwise distinct poles.
  void validate() const;
  std::vector<i64> poles() const;
};

/// x -> r(x + j) for j = -D+1..D where r(m) = m (1 - h m)^{-1}; d = 2D.
FracLinearTuple neighbor_flip_tuple(i64 p, i64 h, int D);

/// Sum over non-pole x mod p of e((a x + sum_j b_j r_j(x)) / p).
std::complex<double> complete_sum(const FracLinearTuple& tuple, i64 a, std::span<const i64> b);

/// Inclusive integer interval inside [0, p-1].
struct Interval {
  i64 lo;
  i64 hi;
  i64 length() const { return hi - lo + 1; }
  bool contains(i64 v) const { return lo <= v && v <= hi; }
};

std::complex<double> incomplete_sum(const FracLinearTuple& tuple, i64 a, std::span<const i64> b,
                                    const Interval& range);

struct BoxSpec {
  Interval domain;             // for x
  std::vector<Interval> ranges;  // one per function
};

struct BoxCount {
  i64 count = 0;
  double main_term = 0;         // |J| prod |J_k| / p^d
  double normalized_error = 0;  // (count - main) / (sqrt(p) log^{d+1} p)
};

BoxCount box_count(const FracLinearTuple& tuple, const BoxSpec& box);

}  // namespace nfcurve
