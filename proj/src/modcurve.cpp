#include "nfcurve/modcurve.hpp"

#include <algorithm>

namespace nfcurve {

namespace {

void check_modulus(i64 q) {
  require(q >= 3, "q >= 3");
  require(q % 2 == 1, "q odd");
  require(q <= kMaxModulus, "q <= 2^61");
}

CurvePointSet build(i64 q, i64 h, bool centered_reps) {
  check_modulus(q);
  CurvePointSet set;
  set.q = q;
  set.h = mod_floor(h, q);
  set.J = (q - 1) / 2;
  set.centered = centered_reps;
  set.diagonal = set.h == 0;
  for (i64 n = 0; n < q; ++n) {
    auto a = mod_inverse(n, q);
    if (!a) continue;
    auto b = mod_inverse(n + set.h, q);
    if (!b) continue;
    if (centered_reps) {
      set.points.push_back({centered(*a, q), centered(*b, q)});
    } else {
      set.points.push_back({*a, *b});
    }
  }
  std::sort(set.points.begin(), set.points.end(),
            [](const Point& l, const Point& r) { return l.y != r.y ? l.y < r.y : l.x < r.x; });
  return set;
}

}  // namespace

CurvePointSet build_curve(i64 q, i64 h) { return build(q, h, true); }

CurvePointSet build_nf_curve(i64 q, i64 h) { return build(q, h, false); }

std::map<i64, CurvePointSet> nf_union(i64 q) {
  check_modulus(q);
  std::map<i64, CurvePointSet> out;
  for (i64 h = 0; h < q; ++h) out.emplace(h, build_nf_curve(q, h));
  return out;
}

i64 curve_cardinality(i64 q, i64 h) {
  check_modulus(q);
  h = mod_floor(h, q);
  // Multiplicative over prime powers p^k: p^(k-1) * (p-1 if p | h else p-2).
  i64 count = 1;
  i64 rest = q;
  for (i64 p = 3; p * p <= rest; p += 2) {
    if (rest % p != 0) continue;
    i64 pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    count *= (pk / p) * (h % p == 0 ? p - 1 : p - 2);
  }
  if (rest > 1) count *= (h % rest == 0 ? rest - 1 : rest - 2);
  return count;
}

}  // namespace nfcurve
