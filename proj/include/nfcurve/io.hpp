#pragma once

// CSV and JSON renderings of every module's outputs. CSV uses '.' as the
// decimal separator, '\n' line endings, and 17 significant digits.

#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nfcurve/angles.hpp"
#include "nfcurve/experiments.hpp"
#include "nfcurve/expsum.hpp"
#include "nfcurve/limitdist.hpp"
#include "nfcurve/modcurve.hpp"
#include "nfcurve/omega.hpp"

namespace nfcurve::io {

using nlohmann::ordered_json;

std::string fmt_double(double v);

/// `q,h,centered` block with one value row, then `x,y` rows.
void write_points_csv(std::ostream& os, const CurvePointSet& set);
ordered_json points_metadata(const CurvePointSet& set);

void write_gap_grid_csv(std::ostream& os, const std::vector<double>& lambdas, const std::vector<double>& G);
/// `x,y,gap`; the gap field is empty for the angularly last point.
void write_point_gaps_csv(std::ostream& os, const std::vector<PointGap>& gaps);
ordered_json run_header(const CurvePointSet& set, const Rational& t, const AngleSequence& seq);

/// `lambda,G_limit,g_limit,region`; g at lambda = 1 is written as inf.
void write_limit_csv(std::ostream& os, double t, const std::vector<double>& lambdas);
void write_tiles_csv(std::ostream& os, const std::vector<Tile>& tiles);

void write_omega_header(std::ostream& os);
void write_omega_row(std::ostream& os, double t, double lambda, int D, const VolumeEstimate& est);

struct SumRow {
  i64 p;
  i64 a;
  std::vector<i64> b;
  std::complex<double> value;
};
/// `p,d,a,b1..bd,re,im,bound_ratio` with bound_ratio = |S| / sqrt(p).
void write_sums_csv(std::ostream& os, const std::vector<SumRow>& rows);

struct BoxRow {
  i64 p;
  std::size_t d;
  BoxCount box;
};
void write_boxes_csv(std::ostream& os, const std::vector<BoxRow>& rows);

ordered_json to_json(const DistanceReport& r);

}  // namespace nfcurve::io
