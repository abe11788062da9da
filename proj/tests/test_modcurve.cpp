#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "nfcurve/arith.hpp"
#include "nfcurve/modcurve.hpp"

using namespace nfcurve;

namespace {

// Oracle: inverse by trial multiplication, independent of extended Euclid.
i64 brute_inverse(i64 n, i64 q) {
  n = mod_floor(n, q);
  for (i64 k = 1; k < q; ++k) {
    if (n * k % q == 1) return k;
  }
  return -1;
}

std::set<Point> brute_curve(i64 q, i64 h, bool centered_reps) {
  std::set<Point> out;
  for (i64 n = 0; n < q; ++n) {
    if (std::gcd(n, q) != 1 || std::gcd(mod_floor(n + h, q), q) != 1) continue;
    i64 a = brute_inverse(n, q), b = brute_inverse(n + h, q);
    if (centered_reps) {
      a = a > (q - 1) / 2 ? a - q : a;
      b = b > (q - 1) / 2 ? b - q : b;
    }
    out.insert({a, b});
  }
  return out;
}

std::set<Point> as_set(const CurvePointSet& s) { return {s.points.begin(), s.points.end()}; }

}  // namespace

TEST_CASE("mod_inverse_centered examples") {
  CHECK(mod_inverse_centered(1, 7) == 1);
  CHECK(mod_inverse_centered(2, 7) == -3);
  CHECK(mod_inverse_centered(6, 7) == -1);
}

TEST_CASE("mod_inverse_centered rejects non-units and even moduli") {
  CHECK_FALSE(mod_inverse_centered(3, 9).has_value());
  CHECK_FALSE(mod_inverse_centered(0, 7).has_value());
  CHECK_THROWS_AS(mod_inverse_centered(1, 8), PreconditionError);
}

TEST_CASE("mod_inverse works near 2^61") {
  const i64 q = (i64{1} << 61) - 1;  // Mersenne prime
  for (i64 n : {i64{2}, i64{3}, q - 2, i64{123456789012345}}) {
    auto inv = mod_inverse(n, q);
    REQUIRE(inv.has_value());
    CHECK(mulmod(n, *inv, q) == 1);
  }
}

TEST_CASE("is_prime against trial division") {
  for (u64 n = 0; n < 5000; ++n) {
    bool trial = n >= 2;
    for (u64 d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    CHECK_MESSAGE(is_prime(n) == trial, n);
  }
  CHECK(is_prime((1ull << 61) - 1));
  CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
  CHECK(is_prime(18446744073709551557ull));
}

TEST_CASE("Rational parsing is exact") {
  CHECK(Rational::parse("2.76") == Rational(69, 25));
  CHECK(Rational::parse("9/5") == Rational(9, 5));
  CHECK(Rational::parse("1/9") == Rational(1, 9));
  CHECK(Rational::parse("10") == Rational(10));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("1.45") == Rational(29, 20));
  CHECK_THROWS_AS(Rational::parse("abc"), PreconditionError);
  CHECK_THROWS_AS(Rational::parse("1/0"), PreconditionError);
}

TEST_CASE("build_curve(7,1) matches the hand enumeration") {
  auto c = build_curve(7, 1);
  std::set<Point> expected = {{1, -3}, {-3, -2}, {-2, 2}, {2, 3}, {3, -1}};
  CHECK(as_set(c) == expected);
  CHECK(c.size() == 5);
  CHECK(c.J == 3);
  CHECK_FALSE(c.diagonal);
  // sorted by second coordinate
  CHECK(std::is_sorted(c.points.begin(), c.points.end(), [](auto& a, auto& b) { return a.y < b.y; }));
}

TEST_CASE("h = 0 mod p gives the diagonal") {
  for (i64 p : {7, 101, 1009}) {
    auto c = build_curve(p, p);
    CHECK(c.diagonal);
    CHECK(c.size() == static_cast<std::size_t>(p - 1));
    for (auto& pt : c.points) CHECK(pt.x == pt.y);
  }
}

TEST_CASE("composite moduli cardinalities") {
  // n in {1, 4, 7}: n and n+1 both prime to 9
  CHECK(build_curve(9, 1).size() == 3);
  CHECK(curve_cardinality(9, 1) == 3);
  // n in {1, 4, 8, 11, 13, 14}
  CHECK(build_nf_curve(15, 3).size() == 6);
  CHECK(curve_cardinality(15, 3) == 6);
}

TEST_CASE("even modulus rejected") {
  CHECK_THROWS_AS(build_curve(10, 1), PreconditionError);
  CHECK_THROWS_AS(build_nf_curve(10, 1), PreconditionError);
  CHECK_THROWS_AS(build_curve(1, 0), PreconditionError);
}

TEST_CASE("build_nf_curve raw representatives") {
  auto d = build_nf_curve(7, 0);
  std::set<Point> diag;
  for (i64 k = 1; k <= 6; ++k) diag.insert({k, k});
  CHECK(as_set(d) == diag);

  // Same residues as the centered curve, different representatives.
  auto nf = build_nf_curve(7, 1);
  std::set<Point> reduced;
  for (auto& p : build_curve(7, 1).points) reduced.insert({mod_floor(p.x, 7), mod_floor(p.y, 7)});
  CHECK(as_set(nf) == reduced);
  for (auto& p : nf.points) {
    CHECK(p.x >= 0);
    CHECK(p.x <= 6);
  }
}

TEST_CASE("brute-force oracle equivalence for all odd q <= 101") {
  for (i64 q = 3; q <= 101; q += 2) {
    for (i64 h : {i64{0}, i64{1}, i64{2}, q / 2, q - 1, i64{-3}}) {
      auto c = build_curve(q, h);
      CHECK_MESSAGE(as_set(c) == brute_curve(q, h, true), "q=" << q << " h=" << h);
      CHECK(c.size() == static_cast<std::size_t>(curve_cardinality(q, h)));
      CHECK(as_set(build_nf_curve(q, mod_floor(h, q))) == brute_curve(q, h, false));
    }
  }
}

TEST_CASE("curve invariants: ranges, distinct x, round trip") {
  for (i64 q : {45, 97, 105, 221, 1001}) {
    for (i64 h : {1, 5, 12}) {
      auto c = build_curve(q, h);
      std::set<i64> xs;
      for (auto& p : c.points) {
        CHECK(std::abs(p.x) <= c.J);
        CHECK(std::abs(p.y) <= c.J);
        xs.insert(p.x);
        auto n = mod_inverse(p.x, q);
        REQUIRE(n.has_value());
        CHECK(mulmod(*n + h, p.y, q) == 1);
      }
      CHECK(xs.size() == c.size());
    }
  }
}

TEST_CASE("N(p,h) = p - 2 for random primes and shifts") {
  std::mt19937_64 rng(7);
  std::vector<i64> primes;
  for (i64 n = 5; n < 3000; n += 2) {
    if (is_prime(static_cast<u64>(n))) primes.push_back(n);
  }
  for (int k = 0; k < 50; ++k) {
    i64 p = primes[rng() % primes.size()];
    i64 h = 1 + static_cast<i64>(rng() % static_cast<u64>(p - 1));
    CHECK(build_curve(p, h).size() == static_cast<std::size_t>(p - 2));
  }
}

TEST_CASE("nf_union partitions the unit pairs") {
  for (i64 q = 3; q <= 301; q += 2) {
    auto all = nf_union(q);
    CHECK(all.size() == static_cast<std::size_t>(q));
    std::set<Point> seen;
    std::size_t total = 0;
    for (auto& [h, set] : all) {
      total += set.size();
      seen.insert(set.points.begin(), set.points.end());
    }
    CHECK_MESSAGE(seen.size() == total, "overlap for q=" << q);  // disjoint
    i64 phi = 0;
    for (i64 a = 1; a < q; ++a) phi += std::gcd(a, q) == 1;
    CHECK(static_cast<i64>(total) == phi * phi);
    for (auto& p : seen) {
      CHECK(std::gcd(p.x, q) == 1);
      CHECK(std::gcd(p.y, q) == 1);
    }
  }
  CHECK(nf_union(7).size() == 7);
}
