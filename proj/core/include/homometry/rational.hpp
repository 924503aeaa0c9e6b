#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace homometry {

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// All atom positions and lattice spacings are rationals. Arithmetic is
/// checked: any intermediate that does not fit in 64 bits raises
/// std::overflow_error instead of wrapping.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Largest integer <= *this.
  std::int64_t floor() const;
  /// Smallest integer >= *this.
  std::int64_t ceil() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  /// "p/q" (always with the slash, e.g. "3/1").
  std::string str() const;
  /// Accepts "p/q", "p" or a terminating decimal such as "0.25".
  static Rat parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat abs(const Rat& r);
/// Greatest common divisor of two positive rationals: the largest g with a/g and b/g integers.
Rat gcd(const Rat& a, const Rat& b);
/// Least common multiple of two positive rationals.
Rat lcm(const Rat& a, const Rat& b);
/// x mod m in [0, m) for m > 0.
Rat mod(const Rat& x, const Rat& m);
/// a / b as an integer; throws std::invalid_argument if b does not divide a.
std::int64_t exact_quotient(const Rat& a, const Rat& b);

}  // namespace homometry
