#pragma once

// Closed-form limiting gap distribution G(t, lambda) and density
// g = -dG/dlambda for t >= 1.
//
// The (t, lambda) half-strip [1, inf) x [0, inf) is tiled into regions, each
// with its own elementary expression. For t >= 2 there are four pieces
// (ONE, C2, C3, ZERO); for 1 <= t < 2 the pieces are H1..H7 and ZERO. All of
// them live in one coefficient table from which both values and derivatives
// are generated.

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace nfcurve {

enum class RegionId { ONE, C2, C3, ZERO, H1, H2, H3, H4, H5, H6, H7 };

std::string_view region_name(RegionId id);

/// Raised by limit_density at lambda = 1, where the density has a log spike.
class SingularPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One piece of the tiling on the lambda axis for a fixed t. The first piece
/// is closed on the right ([0, hi]); later ones are [lo, hi).
struct RegionSpan {
  RegionId id;
  double lo;
  double hi;  // +inf for the trailing ZERO piece
};

/// Pieces for a fixed t >= 1, in lambda order. Degenerate pieces (lo == hi)
/// are kept so thresholds are always listed.
std::vector<RegionSpan> region_spans(double t);

RegionId classify_region(double t, double lambda);

/// The raw branch formula, evaluated wherever its logs are defined. Used for
/// continuity checks across tile boundaries.
double branch_value(RegionId id, double t, double lambda);
double branch_derivative(RegionId id, double t, double lambda);

double limit_G(double t, double lambda);

/// -dG/dlambda. Throws SingularPoint at lambda == 1.
double limit_density(double t, double lambda);

enum class Side { Left, Right };

/// Derivative limit from one side, using the branch active on that side.
/// Infinite at lambda == 1.
double limit_density_one_sided(double t, double lambda, Side side);

struct Tile {
  double t;
  double lambda;
  RegionId region;
};

std::vector<Tile> tile_map(std::span<const double> t_grid, std::span<const double> lambda_grid);

/// Integral of G(t, .) over [0, 1 + 2/t] by adaptive Gauss-Kronrod per piece.
/// Equals the mean normalized gap, 1.
double limit_G_integral(double t);

}  // namespace nfcurve
