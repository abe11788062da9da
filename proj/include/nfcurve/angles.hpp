#pragma once

// Observer angles towards a curve and the empirical gap distribution.
//
// The observer sits at (-t J^2, 0). A point (x, y) is seen at the signed angle
// atan(y / (x + t J^2)). Ordering is decided by exact slope comparison so it
// never depends on rounding; angle values are computed in double afterwards.
// Observer-collinear points share one angle and contribute a zero gap.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nfcurve/arith.hpp"
#include "nfcurve/modcurve.hpp"

namespace nfcurve {

struct ObserverFrame {
  Rational t;
  i64 J = 0;

  /// Throws unless t > 1/J (observer strictly left of [-J, J]^2).
  ObserverFrame(Rational t, i64 J);

  double distance() const;  // t * J^2
};

struct AngleSequence {
  std::vector<double> angles;  // ascending
  /// order[k] is the index (into the source point list) of the k-th angle.
  std::vector<std::size_t> order;
  double alpha_min = 0;
  double alpha_max = 0;
  double delta_av = 0;

  std::size_t size() const { return angles.size(); }

  /// Sequence over given angle values (sorted here); used for synthetic fans.
  static AngleSequence from_angles(std::vector<double> angles);
};

/// Normalized gaps (alpha_{j+1} - alpha_j) / delta_av, plus a sorted copy for
/// fast distribution queries.
class GapSample {
 public:
  explicit GapSample(std::vector<double> gaps);

  const std::vector<double>& gaps() const { return gaps_; }
  const std::vector<double>& sorted() const { return sorted_; }
  std::size_t size() const { return gaps_.size(); }
  double mean() const;

 private:
  std::vector<double> gaps_;
  std::vector<double> sorted_;
};

struct LambdaGrid {
  double lo = 0.0;
  double hi = 4.0;
  double step = 0.01;

  /// lo + k*step for k = 0..round((hi-lo)/step).
  std::vector<double> values() const;
  LambdaGrid refined() const { return {lo, hi, step / 2}; }
  /// Parses "lo:hi:step".
  static LambdaGrid parse(const std::string& text);
};

/// Exact-order angle sequence; t is a rational.
AngleSequence angle_sequence(const CurvePointSet& points, const Rational& t);

/// Floating-point path: order by computed angle (ties by point order).
AngleSequence angle_sequence(const CurvePointSet& points, double t);

GapSample normalized_gaps(const AngleSequence& seq);

/// Fraction of gaps >= lambda.
double empirical_G(const GapSample& gaps, double lambda);

std::vector<double> empirical_G(const GapSample& gaps, std::span<const double> lambdas);

struct PointGap {
  Point point;
  std::optional<double> gap;  // empty for the angularly last point
};

/// Normalized gap from each point to its angular successor, in input order.
std::vector<PointGap> gap_per_point(const CurvePointSet& points, const Rational& t);

/// (alpha_j - alpha_min) / (alpha_max - alpha_min), ascending.
std::vector<double> normalized_positions(const AngleSequence& seq);

/// Two-sided Kolmogorov-Smirnov statistic of sorted samples against U[0,1].
double ks_uniform(std::span<const double> sorted_samples);

}  // namespace nfcurve
