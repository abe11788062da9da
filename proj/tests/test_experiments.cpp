#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "nfcurve/experiments.hpp"
#include "nfcurve/limitdist.hpp"

using namespace nfcurve;

namespace {

const LambdaGrid kGrid{};

double max_distance(const std::vector<DistanceReport>& reports) {
  double m = 0;
  for (auto& r : reports) m = std::max(m, r.sup_distance);
  return m;
}

}  // namespace

TEST_CASE("sup_distance on hand-made curves") {
  std::vector<double> ls = {0.0, 0.5, 1.0, 1.5};
  auto d = sup_distance({1.0, 0.8, 0.5, 0.1}, {1.0, 0.7, 0.6, 0.1}, ls);
  CHECK(d.distance == doctest::Approx(0.1));
  CHECK(d.argmax_lambda == 0.5);  // tie keeps the first
  auto zero = sup_distance({0.3, 0.2}, {0.3, 0.2}, {0.0, 1.0});
  CHECK(zero.distance == 0.0);
  CHECK_THROWS_AS(sup_distance({1.0}, {1.0, 2.0}, {0.0, 1.0}), PreconditionError);
}

TEST_CASE("empirical and limit curves live on the grid") {
  auto emp = empirical_curve(1009, 1, Rational(2), kGrid);
  auto lim = limit_curve(2.0, kGrid);
  CHECK(emp.size() == kGrid.values().size());
  CHECK(lim.size() == emp.size());
  CHECK(emp.front() == 1.0);
  CHECK(lim.front() == doctest::Approx(1.0));
  for (double v : emp) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("convergence_scan examples") {
  auto fig3 = convergence_scan(Rational(69, 25), 1, {10007}, kGrid);
  REQUIRE(fig3.size() == 1);
  CHECK(fig3[0].sup_distance <= 0.02);
  CHECK(fig3[0].reference == "limit");
  CHECK(fig3[0].q == 10007);

  auto fig6 = convergence_scan(Rational(29, 20), 1, {8009}, kGrid);
  CHECK(fig6[0].sup_distance <= 0.02);

  auto trend = convergence_scan(Rational(69, 25), 1, {1009, 3001, 10007}, kGrid);
  REQUIRE(trend.size() == 3);
  CHECK(trend[2].sup_distance <= trend[0].sup_distance);
  for (auto& r : trend) {
    CHECK(r.sup_distance >= 0.0);
    CHECK(r.sup_distance <= 1.0);
  }

  CHECK_THROWS_AS(convergence_scan(Rational(2), 1, {1001}, kGrid), PreconditionError);
  CHECK_THROWS_AS(convergence_scan(Rational(1, 2), 1, {1009}, kGrid), PreconditionError);
  CHECK_THROWS_AS(convergence_scan(Rational(2), 2000, {1009}, kGrid), PreconditionError);
}

TEST_CASE("convergence_scan is independent of thread count") {
  auto a = convergence_scan(Rational(3, 2), 2, {1009, 2003, 3001}, kGrid, 1);
  auto b = convergence_scan(Rational(3, 2), 2, {1009, 2003, 3001}, kGrid, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].q == b[k].q);
    CHECK(a[k].sup_distance == b[k].sup_distance);
    CHECK(a[k].argmax_lambda == b[k].argmax_lambda);
  }
}

TEST_CASE("h_independence examples") {
  auto pair = h_independence(Rational(3, 2), 7883, {2, 64}, kGrid);
  REQUIRE(pair.size() == 1);
  CHECK(pair[0].sup_distance <= 0.05);

  auto triple = h_independence(Rational(69, 25), 10007, {1, 2, 500}, kGrid);
  CHECK(triple.size() == 3);
  CHECK(max_distance(triple) <= 0.03);

  auto same = h_independence(Rational(2), 1009, {5, 5}, kGrid);
  CHECK(same[0].sup_distance == 0.0);

  CHECK_THROWS_AS(h_independence(Rational(2), 1009, {1, 1009}, kGrid), PreconditionError);
  CHECK_THROWS_AS(h_independence(Rational(2), 1001, {1, 2}, kGrid), PreconditionError);
}

TEST_CASE("composite_contrast examples") {
  auto c = composite_contrast({7879, 7880, 7881, 7882, 7883}, Rational(3, 2), 2, kGrid);
  CHECK(c.skipped_even == std::vector<i64>{7880, 7882});
  REQUIRE(c.to_limit.size() == 3);
  bool composite_far = false;
  for (auto& r : c.to_limit) {
    if (r.q_prime) {
      CHECK_MESSAGE(r.sup_distance <= 0.05, "q=" << r.q);
    } else if (r.sup_distance > 0.05) {
      composite_far = true;
    }
  }
  CHECK(composite_far);
  REQUIRE(c.prime_pairs.size() == 1);
  CHECK(c.prime_pairs[0].sup_distance <= 0.05);

  auto primes_only = composite_contrast({1009, 1013}, Rational(2), 1, kGrid);
  CHECK(primes_only.to_limit.size() == 2);
  CHECK(primes_only.skipped_even.empty());
}

TEST_CASE("equidistribution_check examples") {
  CHECK(equidistribution_check(10007, 1, Rational(69, 25)) <= 0.02);
  const double small = equidistribution_check(101, 1, Rational(69, 25));
  CHECK(small <= 0.15);
  CHECK(small > equidistribution_check(10007, 1, Rational(69, 25)));
  CHECK_THROWS_AS(equidistribution_check(1001, 1, Rational(2)), PreconditionError);
}

TEST_CASE("exponential_limit_scan") {
  const std::vector<Rational> ts = {Rational(10), Rational(9, 5), Rational(9, 8), Rational(1, 2), Rational(1, 9)};
  auto scan = exponential_limit_scan(9973, 1, ts, kGrid);
  REQUIRE(scan.size() == 5);
  for (std::size_t k = 1; k < scan.size(); ++k) {
    CHECK(scan[k].to_exp.sup_distance < scan[k - 1].to_exp.sup_distance);
  }
  CHECK(scan[0].to_exp.sup_distance > 0.2);
  REQUIRE(scan[0].to_limit.has_value());
  CHECK(scan[0].to_limit->sup_distance <= 0.02);
  CHECK(scan[0].to_exp.reference == "exp");
  CHECK_FALSE(scan[3].to_limit.has_value());
  CHECK_FALSE(scan[4].to_limit.has_value());

  // Keeps approaching exp(-lambda) below the scanned range.
  auto closer = exponential_limit_scan(9973, 1, {Rational(1, 20), Rational(1, 100)}, kGrid);
  CHECK(closer[0].to_exp.sup_distance < scan[4].to_exp.sup_distance);
  CHECK(closer[1].to_exp.sup_distance < closer[0].to_exp.sup_distance);

  CHECK_THROWS_AS(exponential_limit_scan(101, 1, {Rational(1, 60)}, kGrid), PreconditionError);
}

TEST_CASE("grid refinement moves distances by at most 0.005") {
  struct Config {
    i64 p, h;
    Rational t;
  };
  for (auto c : {Config{10007, 1, Rational(69, 25)}, Config{8009, 1, Rational(29, 20)},
                 Config{8009, 1, Rational(28, 25)}}) {
    auto coarse = convergence_scan(c.t, c.h, {c.p}, kGrid);
    auto fine = convergence_scan(c.t, c.h, {c.p}, kGrid.refined());
    CHECK_MESSAGE(std::abs(coarse[0].sup_distance - fine[0].sup_distance) <= 0.005, "p=" << c.p);
  }
}
