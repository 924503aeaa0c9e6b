#include "homometry/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace homometry {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Rat: multiplication overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Rat: addition overflow");
  return out;
}

std::int64_t parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("Rat: cannot parse integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Rat::Rat(std::int64_t num) : num_(num), den_(1) {}

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  if (den < 0) {
    if (num == INT64_MIN || den == INT64_MIN) throw std::overflow_error("Rat: negation overflow");
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rat::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rat::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rat Rat::operator-() const {
  if (num_ == INT64_MIN) throw std::overflow_error("Rat: negation overflow");
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  const std::int64_t g = std::gcd(den_, o.den_);
  const std::int64_t lhs = checked_mul(num_, o.den_ / g);
  const std::int64_t rhs = checked_mul(o.num_, den_ / g);
  *this = Rat(checked_add(lhs, rhs), checked_mul(den_, o.den_ / g));
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  const std::int64_t g1 = std::gcd(num_, o.den_);
  const std::int64_t g2 = std::gcd(o.num_, den_);
  const std::int64_t n = checked_mul(g1 ? num_ / g1 : 0, g2 ? o.num_ / g2 : 0);
  const std::int64_t d = checked_mul(den_ / (g2 ? g2 : 1), o.den_ / (g1 ? g1 : 1));
  *this = Rat(n, d);
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
  return *this *= Rat(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    const bool negative = !whole.empty() && whole.front() == '-';
    if (frac.size() > 17) throw std::invalid_argument("Rat: too many decimal digits");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    if (f < 0) throw std::invalid_argument("Rat: malformed decimal");
    return Rat(w) + Rat(f, scale) * Rat(negative ? -1 : 1);
  }
  return Rat(parse_int(text));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.num() < 0 ? -r : r; }

Rat gcd(const Rat& a, const Rat& b) {
  if (a.is_zero()) return abs(b);
  if (b.is_zero()) return abs(a);
  // gcd(p1/q1, p2/q2) = gcd(p1, p2) / lcm(q1, q2) for reduced fractions.
  const std::int64_t n = std::gcd(a.num(), b.num());
  const std::int64_t d = checked_mul(a.den() / std::gcd(a.den(), b.den()), b.den());
  return Rat(n, d);
}

Rat lcm(const Rat& a, const Rat& b) {
  if (a.is_zero() || b.is_zero()) return Rat(0);
  const std::int64_t an = a.num() < 0 ? -a.num() : a.num();
  const std::int64_t bn = b.num() < 0 ? -b.num() : b.num();
  const std::int64_t n = checked_mul(an / std::gcd(an, bn), bn);
  return Rat(n, std::gcd(a.den(), b.den()));
}

Rat mod(const Rat& x, const Rat& m) {
  if (m.num() <= 0) throw std::invalid_argument("Rat mod: modulus must be positive");
  const Rat q = x / m;
  return x - m * Rat(q.floor());
}

std::int64_t exact_quotient(const Rat& a, const Rat& b) {
  const Rat q = a / b;
  if (!q.is_integer()) throw std::invalid_argument("exact_quotient: " + a.str() + " is not a multiple of " + b.str());
  return q.num();
}

}  // namespace homometry
