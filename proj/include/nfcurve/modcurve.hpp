#pragma once

#include <map>
#include <vector>

#include "nfcurve/arith.hpp"

namespace nfcurve {

struct Point {
  i64 x = 0;
  i64 y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Integer points of a neighbor-flips curve. When `centered`, coordinates are
/// in [-J, J]; otherwise in [0, q-1]. Points are sorted by (y, x).
struct CurvePointSet {
  i64 q = 0;
  i64 h = 0;  // reduced into [0, q-1]
  i64 J = 0;  // (q-1)/2
  bool centered = true;
  /// h == 0 mod q: the diagonal curve, excluded from the limit theorem.
  bool diagonal = false;
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
};

/// {([n]^-1, [n+h]^-1) : gcd(n,q) = gcd(n+h,q) = 1} with centered representatives.
CurvePointSet build_curve(i64 q, i64 h);

/// Same residues as build_curve but with representatives in [0, q-1].
CurvePointSet build_nf_curve(i64 q, i64 h);

/// NF(q, h) for every h in [0, q-1].
std::map<i64, CurvePointSet> nf_union(i64 q);

/// #{n mod q : gcd(n,q) = gcd(n+h,q) = 1} computed from the factorization of q.
i64 curve_cardinality(i64 q, i64 h);

}  // namespace nfcurve
