#pragma once

// Exact integer arithmetic shared by every module: modular products in
// 128-bit, extended-Euclid inverses, Miller-Rabin, and exact rationals.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nfcurve {

using i64 = std::int64_t;
using u64 = std::uint64_t;
__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

/// Raised when an input violates a documented precondition. The message is
/// the violated condition, verbatim, so the CLI can echo it.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool condition, const char* what) {
  if (!condition) throw PreconditionError(what);
}

/// Largest modulus accepted by the modular routines (products fit in 128 bits).
inline constexpr i64 kMaxModulus = i64{1} << 61;

/// Least nonnegative residue of a mod m (m > 0).
constexpr i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

/// Representative of a mod q in [-(q-1)/2, (q-1)/2]; q odd.
constexpr i64 centered(i64 a, i64 q) {
  i64 r = mod_floor(a, q);
  return r > (q - 1) / 2 ? r - q : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
  i128 r = static_cast<i128>(mod_floor(a, m)) * mod_floor(b, m) % m;
  return static_cast<i64>(r);
}

i64 powmod(i64 base, u64 exp, i64 m);

i64 gcd(i64 a, i64 b);

/// Inverse of n modulo q in [0, q-1], or nullopt when gcd(n, q) > 1.
std::optional<i64> mod_inverse(i64 n, i64 q);

/// Inverse of n modulo odd q in the centered range, or nullopt when n is not
/// a unit. Throws PreconditionError for even q or q < 3.
std::optional<i64> mod_inverse_centered(i64 n, i64 q);

/// Deterministic for all 64-bit inputs.
bool is_prime(u64 n);

/// Exact rational with positive denominator, always reduced.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  Rational() = default;
  Rational(i64 n, i64 d = 1);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  /// Accepts "3", "-2.76", "9/5", "1/9". Decimals are exact: "2.76" -> 69/25.
  static Rational parse(std::string_view text);

  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

bool operator<(const Rational& a, const Rational& b);
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

}  // namespace nfcurve
