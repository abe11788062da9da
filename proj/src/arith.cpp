#include "nfcurve/arith.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

namespace nfcurve {

i64 powmod(i64 base, u64 exp, i64 m) {
  i64 result = 1 % m;
  base = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1u) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1u;
  }
  return result;
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

std::optional<i64> mod_inverse(i64 n, i64 q) {
  require(q >= 2, "q >= 2");
  require(q <= kMaxModulus, "q <= 2^61");
  // Extended Euclid on (n mod q, q); coefficients stay bounded by q.
  i64 old_r = mod_floor(n, q), r = q;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 quot = old_r / r;
    i64 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  return mod_floor(old_s, q);
}

std::optional<i64> mod_inverse_centered(i64 n, i64 q) {
  require(q >= 3 && q % 2 == 1, "q >= 3 odd");
  auto inv = mod_inverse(n, q);
  if (!inv) return std::nullopt;
  return centered(*inv, q);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  auto mul = [n](u64 a, u64 b) {
    return static_cast<u64>(static_cast<u128>(a) * b % n);
  };
  auto pow = [&](u64 a, u64 e) {
    u64 r = 1;
    while (e > 0) {
      if (e & 1u) r = mul(r, a);
      a = mul(a, a);
      e >>= 1u;
    }
    return r;
  };
  // These twelve bases are deterministic for n < 3.3e24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Rational::Rational(i64 n, i64 d) {
  require(d != 0, "denominator != 0");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i64 g = std::gcd(n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

namespace {

i64 parse_int(std::string_view s) {
  i64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw PreconditionError("not a rational number: " + std::string(s));
  }
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text));
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = text.substr(dot + 1);
  if (frac_part.size() > 17 || frac_part.find_first_not_of("0123456789") != std::string_view::npos) {
    throw PreconditionError("not a rational number: " + std::string(text));
  }
  bool negative = !int_part.empty() && int_part.front() == '-';
  if (negative || (!int_part.empty() && int_part.front() == '+')) int_part.remove_prefix(1);
  i64 whole = int_part.empty() ? 0 : parse_int(int_part);
  i64 scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  i64 frac = frac_part.empty() ? 0 : parse_int(frac_part);
  require(whole <= (INT64_MAX - frac) / scale, "rational literal fits in 64 bits");
  i64 n = whole * scale + frac;
  return Rational(negative ? -n : n, scale);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
}

}  // namespace nfcurve
