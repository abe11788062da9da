#include "nfcurve/limitdist.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nfcurve/arith.hpp"

namespace nfcurve {

namespace {

// a0 + a1 * lambda
struct Linear {
  double a0;
  double a1;
  double operator()(double l) const { return a0 + a1 * l; }
};

// coef * t^tp * lambda^lp, optionally times log(2/t)
struct Monomial {
  double coef;
  int tp;
  int lp;
  bool log_two_over_t = false;
};

// coef * t^tp * mult(lambda) * log(arg(lambda))
struct LogTerm {
  double coef;
  int tp;
  Linear mult;
  Linear arg;
};

// coef * t^tp / den(lambda)
struct RecipTerm {
  double coef;
  int tp;
  Linear den;
};

struct Branch {
  RegionId id;
  double scale;
  std::vector<Monomial> mono;
  std::vector<LogTerm> logs;
  std::vector<RecipTerm> recips;
};

// log(2/(t*(1-l))) and friends are split as log(2/t) - log(1-l).
const std::array<Branch, 11>& branch_table() {
  static const std::array<Branch, 11> table = {{
      {RegionId::ONE, 1.0, {{1, 0, 0}}, {}, {}},
      {RegionId::C2,
       1.0 / 8,
       {{4, 0, 0}, {1, 2, 0}, {-2, 2, 1}, {1, 2, 2}, {4, 1, 0, true}, {-4, 1, 1, true}},
       {{-4, 1, {1, -1}, {1, -1}}},
       {}},
      {RegionId::C3,
       1.0 / 8,
       {{4, 0, 0}, {-1, 2, 0}, {2, 2, 1}, {-1, 2, 2}, {4, 1, 0, true}, {-4, 1, 1, true}},
       {{4, 1, {-1, 1}, {-1, 1}}},
       {}},
      {RegionId::ZERO, 1.0, {}, {}, {}},
      {RegionId::H1,
       1.0 / 2,
       {{2, 0, 0}, {-1, 2, 1}, {-2, 1, 1, true}},
       {{-1, 1, {1, -1}, {1, -1}}, {1, 1, {1, 1}, {1, 1}}},
       {}},
      {RegionId::H2,
       1.0 / 8,
       {{4, 0, 0}, {1, 2, 0}, {-2, 2, 1}, {1, 2, 2}, {4, 1, 0, true}, {-4, 1, 1, true}},
       {{-4, 1, {1, -1}, {1, -1}}},
       {}},
      {RegionId::H3,
       1.0 / 48,
       {{8, 0, 0},
        {12, 1, 0},
        {6, 2, 0},
        {4, 3, 0},
        {-24, 1, 1},
        {12, 2, 1},
        {-12, 3, 1},
        {-6, 2, 2},
        {9, 3, 2},
        {-2, 3, 3},
        {48, 1, 0, true},
        {-24, 1, 1, true}},
       {{-24, 1, {1, -1}, {1, -1}}, {-24, 1, {1, 0}, {2, -1}}},
       {}},
      {RegionId::H4,
       1.0 / 48,
       {{8, 0, 0}, {-12, 1, 0}, {6, 2, 0}, {-1, 3, 0}, {12, 2, 1}, {-6, 2, 2}, {48, 1, 0, true}, {-24, 1, 1, true}},
       {{24, 1, {-1, 1}, {-1, 1}}},
       {}},
      {RegionId::H5,
       1.0 / 576,
       {{144, 0, 0},
        {-80, 1, 0},
        {-144, 2, 0},
        {-12, 3, 0},
        {27, 4, 0},
        {8, 1, 1},
        {216, 2, 1},
        {54, 3, 1},
        {-54, 4, 1},
        {-72, 2, 2},
        {-36, 3, 2},
        {36, 4, 2},
        {6, 3, 3},
        {-10, 4, 3},
        {1, 4, 4},
        {384, 1, 0, true},
        {-240, 1, 1, true}},
       {{48, 1, {4, -1}, {3, -1}}, {288, 1, {-1, 1}, {-1, 1}}},
       {}},
      {RegionId::H6,
       1.0 / 576,
       {{144, 0, 0},
        {-416, 1, 0},
        {-432, 2, 0},
        {-108, 3, 0},
        {-13, 4, 0},
        {152, 1, 1},
        {504, 2, 1},
        {198, 3, 1},
        {34, 4, 1},
        {-144, 2, 2},
        {-108, 3, 2},
        {-30, 4, 2},
        {18, 3, 3},
        {10, 4, 3},
        {-1, 4, 4},
        {384, 1, 0, true},
        {-240, 1, 1, true}},
       {{-48, 1, {8, -5}, {-1, 1}}},
       {{48, 1, {-1, 1}}}},
      {RegionId::H7,
       1.0 / 48,
       {{32, 0, 0},
        {12, 1, 0},
        {4, 3, 0},
        {-24, 1, 1},
        {-12, 3, 1},
        {-12, 2, 2},
        {9, 3, 2},
        {-2, 3, 3},
        {24, 1, 0, true},
        {-48, 1, 1, true}},
       {{-24, 1, {1, -1}, {1, -1}}, {-24, 1, {1, 0}, {2, -1}}, {24, 1, {1, 1}, {1, 1}}},
       {}},
  }};
  return table;
}

const Branch& branch(RegionId id) {
  const auto& table = branch_table();
  return table[static_cast<std::size_t>(id)];
}

// mult is a multiple of arg: mult*log(arg) -> 0 as arg -> 0.
bool removable(const LogTerm& term) { return term.mult.a0 * term.arg.a1 == term.mult.a1 * term.arg.a0; }

double ipow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void check_domain(double t, double lambda) {
  require(t >= 1.0, "t >= 1 (no closed form below; use the omega module)");
  require(lambda >= 0.0, "lambda >= 0");
}

}  // namespace

std::string_view region_name(RegionId id) {
  static constexpr std::array<std::string_view, 11> names = {"ONE", "C2", "C3", "ZERO", "H1", "H2",
                                                             "H3",  "H4", "H5", "H6",   "H7"};
  return names[static_cast<std::size_t>(id)];
}

std::vector<RegionSpan> region_spans(double t) {
  require(t >= 1.0, "t >= 1 (no closed form below; use the omega module)");
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double s = 2.0 / t;
  if (t >= 2.0) {
    return {{RegionId::ONE, 0.0, 1 - s}, {RegionId::C2, 1 - s, 1.0}, {RegionId::C3, 1.0, 1 + s}, {RegionId::ZERO, 1 + s, inf}};
  }
  std::vector<RegionSpan> spans;
  if (t >= 4.0 / 3.0) {
    spans = {{RegionId::H1, 0.0, s - 1}, {RegionId::H2, s - 1, 2 - s}, {RegionId::H3, 2 - s, 1.0}};
  } else {
    spans = {{RegionId::H1, 0.0, 2 - s}, {RegionId::H7, 2 - s, s - 1}, {RegionId::H3, s - 1, 1.0}};
  }
  spans.push_back({RegionId::H4, 1.0, 3 - s});
  spans.push_back({RegionId::H5, 3 - s, 2.0});
  spans.push_back({RegionId::H6, 2.0, 1 + s});
  spans.push_back({RegionId::ZERO, 1 + s, inf});
  return spans;
}

RegionId classify_region(double t, double lambda) {
  check_domain(t, lambda);
  auto spans = region_spans(t);
  if (lambda <= spans.front().hi) return spans.front().id;
  for (std::size_t k = 1; k < spans.size(); ++k) {
    if (lambda < spans[k].hi) return spans[k].id;
  }
  return RegionId::ZERO;
}

double branch_value(RegionId id, double t, double lambda) {
  const Branch& b = branch(id);
  const double log2t = std::log(2.0 / t);
  double sum = 0.0;
  for (const auto& m : b.mono) {
    double v = m.coef * ipow(t, m.tp) * ipow(lambda, m.lp);
    sum += m.log_two_over_t ? v * log2t : v;
  }
  for (const auto& term : b.logs) {
    const double arg = term.arg(lambda);
    if (arg == 0.0 && removable(term)) continue;
    sum += term.coef * ipow(t, term.tp) * term.mult(lambda) * std::log(arg);
  }
  for (const auto& term : b.recips) sum += term.coef * ipow(t, term.tp) / term.den(lambda);
  return b.scale * sum;
}

double branch_derivative(RegionId id, double t, double lambda) {
  const Branch& b = branch(id);
  const double log2t = std::log(2.0 / t);
  double sum = 0.0;
  for (const auto& m : b.mono) {
    if (m.lp == 0) continue;
    double v = m.coef * ipow(t, m.tp) * m.lp * ipow(lambda, m.lp - 1);
    sum += m.log_two_over_t ? v * log2t : v;
  }
  for (const auto& term : b.logs) {
    const double arg = term.arg(lambda);
    const double c = term.coef * ipow(t, term.tp);
    // d/dl [mult * log(arg)] = mult' * log(arg) + mult * arg' / arg
    double second = removable(term) ? (term.arg.a1 != 0.0 ? term.mult.a1 / term.arg.a1 : term.mult.a0 / term.arg.a0) * term.arg.a1
                                    : term.mult(lambda) * term.arg.a1 / arg;
    double first = term.mult.a1 == 0.0 ? 0.0 : term.mult.a1 * std::log(arg);
    sum += c * (first + second);
  }
  for (const auto& term : b.recips) {
    const double den = term.den(lambda);
    sum -= term.coef * ipow(t, term.tp) * term.den.a1 / (den * den);
  }
  return b.scale * sum;
}

double limit_G(double t, double lambda) {
  check_domain(t, lambda);
  return std::clamp(branch_value(classify_region(t, lambda), t, lambda), 0.0, 1.0);
}

double limit_density(double t, double lambda) {
  check_domain(t, lambda);
  if (lambda == 1.0) throw SingularPoint("density is singular at lambda = 1");
  return -branch_derivative(classify_region(t, lambda), t, lambda);
}

double limit_density_one_sided(double t, double lambda, Side side) {
  check_domain(t, lambda);
  auto spans = region_spans(t);
  RegionId id = RegionId::ZERO;
  for (const auto& span : spans) {
    if (span.lo == span.hi) continue;
    bool inside = side == Side::Left ? (span.lo < lambda && lambda <= span.hi) : (span.lo <= lambda && lambda < span.hi);
    if (inside) {
      id = span.id;
      break;
    }
  }
  if (side == Side::Left && lambda == 0.0) id = spans.front().id;
  if (lambda == 1.0 && id != RegionId::ONE && id != RegionId::ZERO) {
    return std::numeric_limits<double>::infinity();
  }
  return -branch_derivative(id, t, lambda);
}

std::vector<Tile> tile_map(std::span<const double> t_grid, std::span<const double> lambda_grid) {
  std::vector<Tile> out;
  out.reserve(t_grid.size() * lambda_grid.size());
  for (double t : t_grid) {
    for (double l : lambda_grid) out.push_back({t, l, classify_region(t, l)});
  }
  return out;
}

double limit_G_integral(double t) {
  require(t >= 1.0, "t >= 1 (no closed form below; use the omega module)");
  using boost::math::quadrature::gauss_kronrod;
  double total = 0.0;
  for (const auto& span : region_spans(t)) {
    if (span.id == RegionId::ZERO || span.hi <= span.lo) continue;
    auto f = [&](double l) { return branch_value(span.id, t, l); };
    total += gauss_kronrod<double, 31>::integrate(f, span.lo, span.hi, 15, 1e-11);
  }
  return total;
}

}  // namespace nfcurve
