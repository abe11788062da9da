#include "nfcurve/angles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace nfcurve {

ObserverFrame::ObserverFrame(Rational t_, i64 J_) : t(t_), J(J_) {
  require(J >= 1, "J >= 1");
  require(t.num > 0, "t > 0");
  require(static_cast<i128>(t.num) * J > t.den, "t > 1/J");
}

double ObserverFrame::distance() const {
  return t.to_double() * static_cast<double>(J) * static_cast<double>(J);
}

namespace {

void finish(AngleSequence& seq) {
  if (seq.angles.empty()) return;
  seq.alpha_min = seq.angles.front();
  seq.alpha_max = seq.angles.back();
  seq.delta_av = seq.angles.size() > 1
                     ? (seq.alpha_max - seq.alpha_min) / static_cast<double>(seq.angles.size() - 1)
                     : 0.0;
}

}  // namespace

AngleSequence AngleSequence::from_angles(std::vector<double> angles) {
  AngleSequence seq;
  seq.order.resize(angles.size());
  std::iota(seq.order.begin(), seq.order.end(), std::size_t{0});
  std::stable_sort(seq.order.begin(), seq.order.end(),
                   [&](std::size_t a, std::size_t b) { return angles[a] < angles[b]; });
  seq.angles.reserve(angles.size());
  for (auto i : seq.order) seq.angles.push_back(angles[i]);
  finish(seq);
  return seq;
}

AngleSequence angle_sequence(const CurvePointSet& points, const Rational& t) {
  require(points.centered, "points centered");
  require(!points.points.empty(), "points nonempty");
  ObserverFrame frame(t, points.J);

  // Slope of (x, y) is y*den / (den*x + num*J^2); the denominator is positive.
  const i128 offset = static_cast<i128>(t.num) * points.J * points.J;
  {
    long double bound = static_cast<long double>(points.J) *
                        (static_cast<long double>(t.den) * points.J + static_cast<long double>(offset));
    require(bound < 0x1p125L, "exact slope comparison fits in 128 bits");
  }
  const auto& pts = points.points;
  std::vector<i128> denom(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) denom[i] = static_cast<i128>(t.den) * pts[i].x + offset;

  // y_a / d_a < y_b / d_b  <=>  y_a * d_b < y_b * d_a  (both d positive).
  auto cmp = [&](std::size_t a, std::size_t b) {
    return static_cast<i128>(pts[a].y) * denom[b] < static_cast<i128>(pts[b].y) * denom[a];
  };
  auto same = [&](std::size_t a, std::size_t b) {
    return static_cast<i128>(pts[a].y) * denom[b] == static_cast<i128>(pts[b].y) * denom[a];
  };

  AngleSequence seq;
  seq.order.resize(pts.size());
  std::iota(seq.order.begin(), seq.order.end(), std::size_t{0});
  std::stable_sort(seq.order.begin(), seq.order.end(), cmp);

  seq.angles.resize(pts.size());
  const double den = static_cast<double>(t.den);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    auto i = seq.order[k];
    if (k > 0 && same(seq.order[k - 1], i)) {
      seq.angles[k] = seq.angles[k - 1];
    } else {
      seq.angles[k] = std::atan2(static_cast<double>(pts[i].y) * den, static_cast<double>(denom[i]));
    }
  }
  finish(seq);
  return seq;
}

AngleSequence angle_sequence(const CurvePointSet& points, double t) {
  require(points.centered, "points centered");
  require(!points.points.empty(), "points nonempty");
  require(t * static_cast<double>(points.J) > 1.0, "t > 1/J");
  const double dist = t * static_cast<double>(points.J) * static_cast<double>(points.J);
  std::vector<double> raw;
  raw.reserve(points.size());
  for (const auto& p : points.points) {
    raw.push_back(std::atan2(static_cast<double>(p.y), static_cast<double>(p.x) + dist));
  }
  return AngleSequence::from_angles(std::move(raw));
}

GapSample::GapSample(std::vector<double> gaps) : gaps_(std::move(gaps)), sorted_(gaps_) {
  std::sort(sorted_.begin(), sorted_.end());
}

double GapSample::mean() const {
  if (gaps_.empty()) return 0.0;
  // Kahan summation.
  double sum = 0.0, c = 0.0;
  for (double g : gaps_) {
    double y = g - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum / static_cast<double>(gaps_.size());
}

std::vector<double> LambdaGrid::values() const {
  require(step > 0.0, "grid step > 0");
  require(hi >= lo, "grid hi >= lo");
  auto n = static_cast<std::size_t>(std::llround((hi - lo) / step));
  std::vector<double> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = lo + static_cast<double>(k) * step;
  return out;
}

LambdaGrid LambdaGrid::parse(const std::string& text) {
  auto a = text.find(':');
  auto b = a == std::string::npos ? std::string::npos : text.find(':', a + 1);
  if (b == std::string::npos) throw PreconditionError("grid format lo:hi:step");
  LambdaGrid g;
  try {
    g.lo = std::stod(text.substr(0, a));
    g.hi = std::stod(text.substr(a + 1, b - a - 1));
    g.step = std::stod(text.substr(b + 1));
  } catch (const std::logic_error&) {
    throw PreconditionError("grid format lo:hi:step");
  }
  require(g.lo >= 0.0, "grid lo >= 0");
  require(g.step > 0.0, "grid step > 0");
  require(g.hi >= g.lo, "grid hi >= lo");
  return g;
}

GapSample normalized_gaps(const AngleSequence& seq) {
  require(seq.size() >= 2, "n >= 2");
  std::vector<double> gaps(seq.size() - 1);
  if (seq.delta_av == 0.0) {
    // Every point collinear with the observer: all gaps are zero.
    return GapSample(std::move(gaps));
  }
  for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
    gaps[j] = (seq.angles[j + 1] - seq.angles[j]) / seq.delta_av;
  }
  return GapSample(std::move(gaps));
}

double empirical_G(const GapSample& gaps, double lambda) {
  require(lambda >= 0.0, "lambda >= 0");
  require(gaps.size() > 0, "gaps nonempty");
  const auto& s = gaps.sorted();
  auto below = std::lower_bound(s.begin(), s.end(), lambda) - s.begin();
  return static_cast<double>(static_cast<std::ptrdiff_t>(s.size()) - below) / static_cast<double>(s.size());
}

std::vector<double> empirical_G(const GapSample& gaps, std::span<const double> lambdas) {
  std::vector<double> out;
  out.reserve(lambdas.size());
  for (double l : lambdas) out.push_back(empirical_G(gaps, l));
  return out;
}

std::vector<PointGap> gap_per_point(const CurvePointSet& points, const Rational& t) {
  auto seq = angle_sequence(points, t);
  std::vector<PointGap> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i].point = points.points[i];
  if (seq.size() < 2) return out;
  auto gaps = normalized_gaps(seq);
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) out[seq.order[k]].gap = gaps.gaps()[k];
  return out;
}

std::vector<double> normalized_positions(const AngleSequence& seq) {
  std::vector<double> out(seq.size());
  double span = seq.alpha_max - seq.alpha_min;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    out[k] = span > 0 ? (seq.angles[k] - seq.alpha_min) / span : 0.0;
  }
  return out;
}

double ks_uniform(std::span<const double> sorted_samples) {
  const double n = static_cast<double>(sorted_samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
    const double u = std::clamp(sorted_samples[i], 0.0, 1.0);
    const double di = static_cast<double>(i);
    d = std::max({d, (di + 1) / n - u, u - di / n});
  }
  return d;
}

}  // namespace nfcurve
