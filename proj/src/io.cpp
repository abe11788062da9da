#include "nfcurve/io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace nfcurve::io {

std::string fmt_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_points_csv(std::ostream& os, const CurvePointSet& set) {
  os << "q,h,centered\n" << set.q << ',' << set.h << ',' << (set.centered ? "true" : "false") << '\n';
  os << "x,y\n";
  for (const auto& p : set.points) os << p.x << ',' << p.y << '\n';
}

ordered_json points_metadata(const CurvePointSet& set) {
  return {{"q", set.q}, {"h", set.h}, {"J", set.J}, {"count", set.size()}, {"centered", set.centered}};
}

void write_gap_grid_csv(std::ostream& os, const std::vector<double>& lambdas, const std::vector<double>& G) {
  os << "lambda,G_emp\n";
  for (std::size_t k = 0; k < lambdas.size(); ++k) os << fmt_double(lambdas[k]) << ',' << fmt_double(G[k]) << '\n';
}

void write_point_gaps_csv(std::ostream& os, const std::vector<PointGap>& gaps) {
  os << "x,y,gap\n";
  for (const auto& g : gaps) {
    os << g.point.x << ',' << g.point.y << ',';
    if (g.gap) os << fmt_double(*g.gap);
    os << '\n';
  }
}

ordered_json run_header(const CurvePointSet& set, const Rational& t, const AngleSequence& seq) {
  return {{"q", set.q},
          {"h", set.h},
          {"t", t.str()},
          {"J", set.J},
          {"n", seq.size()},
          {"alpha_min", seq.alpha_min},
          {"alpha_max", seq.alpha_max},
          {"delta_av", seq.delta_av}};
}

void write_limit_csv(std::ostream& os, double t, const std::vector<double>& lambdas) {
  os << "lambda,G_limit,g_limit,region\n";
  for (double l : lambdas) {
    double g = l == 1.0 ? std::numeric_limits<double>::infinity() : limit_density(t, l);
    os << fmt_double(l) << ',' << fmt_double(limit_G(t, l)) << ',' << fmt_double(g) << ','
       << region_name(classify_region(t, l)) << '\n';
  }
}

void write_tiles_csv(std::ostream& os, const std::vector<Tile>& tiles) {
  os << "t,lambda,region\n";
  for (const auto& tile : tiles) {
    os << fmt_double(tile.t) << ',' << fmt_double(tile.lambda) << ',' << region_name(tile.region) << '\n';
  }
}

void write_omega_header(std::ostream& os) { os << "t,lambda,D,samples,seed,estimate,std_error\n"; }

void write_omega_row(std::ostream& os, double t, double lambda, int D, const VolumeEstimate& est) {
  os << fmt_double(t) << ',' << fmt_double(lambda) << ',' << D << ',' << est.samples << ',' << est.seed << ','
     << fmt_double(est.estimate) << ',' << fmt_double(est.std_error) << '\n';
}

void write_sums_csv(std::ostream& os, const std::vector<SumRow>& rows) {
  std::size_t d = rows.empty() ? 0 : rows.front().b.size();
  os << "p,d,a";
  for (std::size_t k = 1; k <= d; ++k) os << ",b" << k;
  os << ",re,im,bound_ratio\n";
  for (const auto& r : rows) {
    os << r.p << ',' << r.b.size() << ',' << r.a;
    for (auto v : r.b) os << ',' << v;
    os << ',' << fmt_double(r.value.real()) << ',' << fmt_double(r.value.imag()) << ','
       << fmt_double(std::abs(r.value) / std::sqrt(static_cast<double>(r.p))) << '\n';
  }
}

void write_boxes_csv(std::ostream& os, const std::vector<BoxRow>& rows) {
  os << "p,d,count,main_term,normalized_error\n";
  for (const auto& r : rows) {
    os << r.p << ',' << r.d << ',' << r.box.count << ',' << fmt_double(r.box.main_term) << ','
       << fmt_double(r.box.normalized_error) << '\n';
  }
}

ordered_json to_json(const DistanceReport& r) {
  return {{"q", r.q},
          {"h", r.h},
          {"t", r.t.str()},
          {"reference", r.reference},
          {"q_prime", r.q_prime},
          {"sup_distance", r.sup_distance},
          {"argmax_lambda", r.argmax_lambda}};
}

}  // namespace nfcurve::io
