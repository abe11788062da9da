#include "nfcurve/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace nfcurve {

i64 FracLinear::pole(i64 p) const {
  auto inv = mod_inverse(e, p);
  require(inv.has_value(), "denominator degree 1 (e != 0 mod p)");
  return mod_floor(-mulmod(c, *inv, p), p);
}

std::optional<i64> FracLinear::operator()(i64 x, i64 p) const {
  auto inv = mod_inverse(c + mulmod(e, x, p), p);
  if (!inv) return std::nullopt;
  return mulmod(mod_floor(a + mulmod(b, x, p), p), *inv, p);
}

void FracLinearTuple::validate() const {
  require(p >= 2 && is_prime(static_cast<u64>(p)), "p prime");
  require(!functions.empty(), "d >= 1");
  std::set<i64> seen;
  for (const auto& f : functions) {
    require(mod_floor(f.e, p) != 0, "denominator degree 1 (e != 0 mod p)");
    // Reduced: the numerator must not vanish at the pole.
    auto pole = f.pole(p);
    require(mod_floor(f.a + mulmod(f.b, pole, p), p) != 0, "reduced (numerator nonzero at pole)");
    require(seen.insert(pole).second, "distinct poles");
  }
}

std::vector<i64> FracLinearTuple::poles() const {
  std::vector<i64> out;
  for (const auto& f : functions) out.push_back(f.pole(p));
  return out;
}

FracLinearTuple neighbor_flip_tuple(i64 p, i64 h, int D) {
  require(p >= 3 && is_prime(static_cast<u64>(p)), "p prime");
  require(mod_floor(h, p) != 0, "p does not divide h");
  require(D >= 1, "D >= 1");
  require(2 * static_cast<i64>(D) < p, "2D < p");
  // r(m + j) = (m + j) / ((1 - h j) - h m)
  FracLinearTuple tuple;
  tuple.p = p;
  for (int j = -D + 1; j <= D; ++j) {
    tuple.functions.push_back({mod_floor(j, p), 1, mod_floor(1 - mulmod(h, j, p), p), mod_floor(-h, p)});
  }
  tuple.validate();
  return tuple;
}

namespace {

// e(k/p) for k = 0..p-1, with exact argument reduction.
std::vector<std::complex<double>> roots_of_unity(i64 p) {
  std::vector<std::complex<double>> table(static_cast<std::size_t>(p));
  for (i64 k = 0; k < p; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p);
    table[static_cast<std::size_t>(k)] = {std::cos(theta), std::sin(theta)};
  }
  return table;
}

std::complex<double> sum_over(const FracLinearTuple& tuple, i64 a, std::span<const i64> b, i64 lo, i64 hi) {
  require(b.size() == tuple.d(), "b has d entries");
  const i64 p = tuple.p;
  auto roots = roots_of_unity(p);
  std::complex<double> sum = 0.0;
  for (i64 x = lo; x <= hi; ++x) {
    i64 phase = mulmod(a, x, p);
    bool pole = false;
    for (std::size_t k = 0; k < tuple.d(); ++k) {
      auto r = tuple.functions[k](x, p);
      if (!r) {
        pole = true;
        break;
      }
      phase = mod_floor(phase + mulmod(b[k], *r, p), p);
    }
    if (!pole) sum += roots[static_cast<std::size_t>(phase)];
  }
  return sum;
}

}  // namespace

std::complex<double> complete_sum(const FracLinearTuple& tuple, i64 a, std::span<const i64> b) {
  tuple.validate();
  return sum_over(tuple, a, b, 0, tuple.p - 1);
}

std::complex<double> incomplete_sum(const FracLinearTuple& tuple, i64 a, std::span<const i64> b,
                                    const Interval& range) {
  tuple.validate();
  require(range.lo >= 0 && range.hi < tuple.p && range.lo <= range.hi, "interval nonempty inside [0, p-1]");
  return sum_over(tuple, a, b, range.lo, range.hi);
}

BoxCount box_count(const FracLinearTuple& tuple, const BoxSpec& box) {
  tuple.validate();
  const i64 p = tuple.p;
  require(box.ranges.size() == tuple.d(), "one range per function");
  auto check = [p](const Interval& iv) {
    require(iv.lo >= 0 && iv.hi < p && iv.lo <= iv.hi, "interval nonempty inside [0, p-1]");
  };
  check(box.domain);
  for (const auto& iv : box.ranges) check(iv);

  BoxCount out;
  for (i64 x = box.domain.lo; x <= box.domain.hi; ++x) {
    bool inside = true;
    for (std::size_t k = 0; k < tuple.d() && inside; ++k) {
      auto r = tuple.functions[k](x, p);
      inside = r && box.ranges[k].contains(*r);
    }
    if (inside) ++out.count;
  }
  double main = static_cast<double>(box.domain.length());
  for (const auto& iv : box.ranges) main *= static_cast<double>(iv.length()) / static_cast<double>(p);
  out.main_term = main;
  const double logp = std::log(static_cast<double>(p));
  out.normalized_error = (static_cast<double>(out.count) - main) /
                         (std::sqrt(static_cast<double>(p)) * std::pow(logp, static_cast<double>(tuple.d() + 1)));
  return out;
}

}  // namespace nfcurve
