#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "nfcurve/arith.hpp"
#include "nfcurve/expsum.hpp"

using namespace nfcurve;

namespace {

// Oracle for r(m + j) with r(m) = m / (1 - h m), by trial inversion.
std::optional<i64> r_brute(i64 m, i64 j, i64 h, i64 p) {
  const i64 num = mod_floor(m + j, p);
  const i64 den = mod_floor(1 - h * (m + j), p);
  for (i64 k = 1; k < p; ++k) {
    if (den * k % p == 1) return num * k % p;
  }
  return std::nullopt;
}

std::complex<double> e_p(i64 v, i64 p) {
  const double theta = 2 * std::numbers::pi * static_cast<double>(mod_floor(v, p)) / static_cast<double>(p);
  return {std::cos(theta), std::sin(theta)};
}

std::complex<double> sum_brute(i64 p, i64 h, int D, i64 a, const std::vector<i64>& b, Interval range) {
  std::complex<double> s = 0;
  for (i64 x = range.lo; x <= range.hi; ++x) {
    i64 phase = a * x;
    bool pole = false;
    for (int j = -D + 1, k = 0; j <= D; ++j, ++k) {
      auto r = r_brute(x, j, h, p);
      if (!r) {
        pole = true;
        break;
      }
      phase += b[static_cast<std::size_t>(k)] * *r;
    }
    if (!pole) s += e_p(phase, p);
  }
  return s;
}

i64 box_brute(i64 p, i64 h, int D, const BoxSpec& box) {
  i64 count = 0;
  for (i64 x = box.domain.lo; x <= box.domain.hi; ++x) {
    bool ok = true;
    for (int j = -D + 1, k = 0; j <= D && ok; ++j, ++k) {
      auto r = r_brute(x, j, h, p);
      ok = r && box.ranges[static_cast<std::size_t>(k)].contains(*r);
    }
    count += ok;
  }
  return count;
}

Interval random_interval(std::mt19937_64& rng, i64 p) {
  i64 a = static_cast<i64>(rng() % static_cast<u64>(p));
  i64 b = static_cast<i64>(rng() % static_cast<u64>(p));
  if (a > b) std::swap(a, b);
  return {a, b};
}

}  // namespace

TEST_CASE("neighbor_flip_tuple examples") {
  auto t7 = neighbor_flip_tuple(7, 1, 1);
  REQUIRE(t7.d() == 2);
  // j = 1: (m + 1) / (-m), pole at m = 0.
  CHECK(t7.functions[1].pole(7) == 0);
  for (i64 m = 1; m < 7; ++m) CHECK(t7.functions[1](m, 7) == r_brute(m, 1, 1, 7));
  CHECK_FALSE(t7.functions[1](0, 7).has_value());

  auto t11 = neighbor_flip_tuple(11, 2, 2);
  REQUIRE(t11.d() == 4);
  auto poles = t11.poles();
  CHECK(std::set<i64>(poles.begin(), poles.end()).size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    const i64 j = static_cast<i64>(k) - 1;
    CHECK(mulmod(2, poles[k] + j, 11) == 1);
  }

  CHECK_THROWS_AS(neighbor_flip_tuple(5, 1, 3), PreconditionError);
  CHECK_THROWS_AS(neighbor_flip_tuple(7, 14, 1), PreconditionError);
  CHECK_THROWS_AS(neighbor_flip_tuple(9, 1, 1), PreconditionError);
}

TEST_CASE("tuple functions agree with the trial-inversion oracle") {
  for (i64 p : {13, 101, 211}) {
    for (i64 h : {1, 3, 7}) {
      auto tuple = neighbor_flip_tuple(p, h, 2);
      for (int k = 0; k < 4; ++k) {
        for (i64 m = 0; m < p; ++m) CHECK(tuple.functions[static_cast<std::size_t>(k)](m, p) == r_brute(m, k - 1, h, p));
      }
    }
  }
}

TEST_CASE("validate rejects malformed tuples") {
  FracLinearTuple bad{9, {{0, 1, 1, 1}}};
  CHECK_THROWS_AS(bad.validate(), PreconditionError);
  FracLinearTuple no_pole{7, {{0, 1, 1, 0}}};
  CHECK_THROWS_AS(no_pole.validate(), PreconditionError);
  FracLinearTuple same_pole{7, {{0, 1, 1, 1}, {2, 1, 1, 1}}};
  CHECK_THROWS_AS(same_pole.validate(), PreconditionError);
  FracLinearTuple constant{7, {{2, 2, 1, 1}}};  // (2 + 2x)/(1 + x) = 2
  CHECK_THROWS_AS(constant.validate(), PreconditionError);
}

TEST_CASE("complete_sum with zero frequencies counts non-poles") {
  for (i64 p : {7, 101, 1009}) {
    for (int D : {1, 2}) {
      auto tuple = neighbor_flip_tuple(p, 1, D);
      std::vector<i64> b(tuple.d(), 0);
      auto s = complete_sum(tuple, 0, b);
      CHECK(s.real() == doctest::Approx(static_cast<double>(p - 2 * D)).epsilon(1e-12));
      CHECK(std::abs(s.imag()) <= 1e-9);
      // a != 0: minus the pole terms of a vanishing full geometric sum.
      std::complex<double> poles = 0;
      for (i64 x : tuple.poles()) poles += e_p(3 * x, p);
      CHECK(std::abs(complete_sum(tuple, 3, b) + poles) <= 1e-9);
    }
  }
}

TEST_CASE("complete_sum for p = 7 matches the six-term evaluation") {
  auto tuple = neighbor_flip_tuple(7, 1, 1);
  std::vector<i64> b = {0, 1};
  auto s = complete_sum(tuple, 0, b);
  CHECK(std::abs(s - sum_brute(7, 1, 1, 0, b, {0, 6})) <= 1e-12);
  CHECK(std::abs(s) <= 4 * 2 * std::sqrt(7.0));
}

TEST_CASE("complete_sum matches the brute-force oracle and conjugate symmetry") {
  std::mt19937_64 rng(21);
  for (i64 p : {101, 211}) {
    for (int D : {1, 2}) {
      auto tuple = neighbor_flip_tuple(p, 2, D);
      for (int k = 0; k < 20; ++k) {
        i64 a = static_cast<i64>(rng() % static_cast<u64>(p));
        std::vector<i64> b(tuple.d()), nb(tuple.d());
        for (std::size_t i = 0; i < b.size(); ++i) {
          b[i] = static_cast<i64>(rng() % static_cast<u64>(p));
          nb[i] = mod_floor(-b[i], p);
        }
        auto s = complete_sum(tuple, a, b);
        CHECK(std::abs(s - sum_brute(p, 2, D, a, b, {0, p - 1})) <= 1e-9);
        CHECK(std::abs(complete_sum(tuple, mod_floor(-a, p), nb) - std::conj(s)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("complete sums obey the square-root bound") {
  std::mt19937_64 rng(33);
  for (i64 p : {101, 211, 1009}) {
    for (int D : {1, 2}) {
      auto tuple = neighbor_flip_tuple(p, 1, D);
      const double bound = 4.0 * static_cast<double>(tuple.d()) * std::sqrt(static_cast<double>(p));
      for (int k = 0; k < 200; ++k) {
        i64 a = static_cast<i64>(rng() % static_cast<u64>(p));
        std::vector<i64> b(tuple.d());
        for (auto& v : b) v = static_cast<i64>(rng() % static_cast<u64>(p));
        b[static_cast<std::size_t>(k) % b.size()] = 1 + static_cast<i64>(rng() % static_cast<u64>(p - 1));
        CHECK(std::abs(complete_sum(tuple, a, b)) <= bound);
      }
    }
  }
}

TEST_CASE("incomplete_sum basics") {
  auto tuple = neighbor_flip_tuple(211, 1, 1);
  std::vector<i64> b = {5, 17};
  CHECK(std::abs(incomplete_sum(tuple, 4, b, {0, 210}) - complete_sum(tuple, 4, b)) <= 1e-9);
  CHECK(std::abs(incomplete_sum(tuple, 4, b, {10, 80}) - sum_brute(211, 1, 1, 4, b, {10, 80})) <= 1e-9);

  // Pure geometric sum when b = 0; add back the excluded poles.
  const i64 p = 1009;
  auto big = neighbor_flip_tuple(p, 1, 1);
  std::vector<i64> zero = {0, 0};
  for (i64 a : {1, 7, 500, 1008}) {
    Interval J{100, 700};
    std::complex<double> poles = 0;
    for (i64 x : big.poles()) {
      if (J.contains(x)) poles += e_p(a * x, p);
    }
    const double frac = static_cast<double>(a) / static_cast<double>(p);
    const double dist = std::min(frac, 1 - frac);
    const double bound = std::min(static_cast<double>(J.length()), 1.0 / (2 * dist));
    CHECK(std::abs(incomplete_sum(big, a, zero, J) + poles) <= bound + 1e-9);
  }
}

TEST_CASE("incomplete sums obey the sqrt(p) log p bound") {
  std::mt19937_64 rng(44);
  for (i64 p : {101, 211, 1009}) {
    for (int D : {1, 2}) {
      auto tuple = neighbor_flip_tuple(p, 1, D);
      const double bound = 8.0 * static_cast<double>(tuple.d()) * std::sqrt(static_cast<double>(p)) *
                           std::log(static_cast<double>(p));
      for (int k = 0; k < 50; ++k) {
        std::vector<i64> b(tuple.d());
        for (auto& v : b) v = 1 + static_cast<i64>(rng() % static_cast<u64>(p - 1));
        i64 a = static_cast<i64>(rng() % static_cast<u64>(p));
        CHECK(std::abs(incomplete_sum(tuple, a, b, random_interval(rng, p))) <= bound);
      }
    }
  }
}

TEST_CASE("box_count trivial and small cases") {
  FracLinearTuple single{101, {{0, 1, 1, 100}}};  // x / (1 - x)
  single.validate();
  auto full = box_count(single, {{0, 100}, {{0, 100}}});
  CHECK(full.count == 100);
  CHECK(full.main_term == doctest::Approx(101.0));

  auto tuple = neighbor_flip_tuple(101, 1, 1);
  FracLinearTuple one{101, {tuple.functions[1]}};
  BoxSpec half{{0, 50}, {{0, 50}}};
  i64 expected = 0;
  for (i64 x = 0; x <= 50; ++x) {
    auto r = r_brute(x, 1, 1, 101);
    expected += r && *r <= 50;
  }
  auto c = box_count(one, half);
  CHECK(c.count == expected);
  CHECK(c.main_term == doctest::Approx(51.0 * 51.0 / 101.0));
  CHECK(std::isfinite(c.normalized_error));
}

TEST_CASE("box_count equals the double-loop oracle") {
  std::mt19937_64 rng(55);
  for (i64 p : {101, 211, 1009, 2003}) {
    for (int D : {1, 2}) {
      auto tuple = neighbor_flip_tuple(p, 1, D);
      for (int k = 0; k < 10; ++k) {
        BoxSpec box{random_interval(rng, p), {}};
        for (std::size_t i = 0; i < tuple.d(); ++i) box.ranges.push_back(random_interval(rng, p));
        auto c = box_count(tuple, box);
        CHECK(c.count == box_brute(p, 1, D, box));
        double main = static_cast<double>(box.domain.length());
        for (auto& r : box.ranges) main *= static_cast<double>(r.length()) / static_cast<double>(p);
        CHECK(c.main_term == doctest::Approx(main).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("normalized box errors stay bounded across p") {
  std::mt19937_64 rng(66);
  for (i64 p : {211, 1009, 5003, 10007}) {
    auto tuple = neighbor_flip_tuple(p, 1, 1);
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      BoxSpec box{random_interval(rng, p), {random_interval(rng, p), random_interval(rng, p)}};
      worst = std::max(worst, std::abs(box_count(tuple, box).normalized_error));
    }
    CHECK_MESSAGE(worst <= 5.0, "p=" << p);
  }
}
