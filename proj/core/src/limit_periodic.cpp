#include "homometry/limit_periodic.hpp"

#include <cmath>
#include <numbers>

namespace homometry {

namespace {

// Largest n for which the lattice Z/(2*4^n) still has 64-bit denominators.
constexpr int kMaxLevel = 30;

std::uint64_t pow4(int n) { return std::uint64_t{1} << (2 * n); }

std::uint64_t magnitude(std::int64_t k) {
  return k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
}

// k mod m in [0, m) for unsigned modulus.
std::uint64_t residue(std::int64_t k, std::uint64_t m) {
  const __int128 r = static_cast<__int128>(k) % static_cast<__int128>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

bool in_level(std::int64_t k, int n) {
  const std::uint64_t q = pow4(n);
  const std::uint64_t modulus = 2 * q;
  const std::uint64_t r = residue(k, modulus);
  return r == q - 1 || r == modulus - (q - 1);
}

double gaussian(double x, double center, double sigma) {
  const double t = (x - center) / sigma;
  return std::exp(-0.5 * t * t);
}

// |g^(xi)| for the unnormalized Gaussian of width sigma.
double gaussian_hat_abs(double xi, double sigma) {
  const double a = std::numbers::pi * sigma * xi;
  return sigma * std::sqrt(2.0 * std::numbers::pi) * std::exp(-2.0 * a * a);
}

// sum_j |g^(j/h - f)| over all integers j, by walking outwards from the nearest j.
double dual_sum(double inv_h, double f, double sigma) {
  const double reach = 6.2 / sigma;  // |g^| < 1e-300 beyond this
  if (reach / inv_h > 1e6) return HUGE_VAL;
  const auto j0 = static_cast<std::int64_t>(std::llround(f / inv_h));
  double total = gaussian_hat_abs(static_cast<double>(j0) * inv_h - f, sigma);
  for (std::int64_t d = 1;; ++d) {
    const double lo = gaussian_hat_abs(static_cast<double>(j0 - d) * inv_h - f, sigma);
    const double hi = gaussian_hat_abs(static_cast<double>(j0 + d) * inv_h - f, sigma);
    total += lo + hi;
    if (static_cast<double>(d) * inv_h > reach + std::abs(f - static_cast<double>(j0) * inv_h)) break;
  }
  return total;
}

}  // namespace

std::string_view to_string(PdSet s) { return s == PdSet::Delta ? "delta" : "lambda"; }

std::optional<PdSet> parse_pd_set(std::string_view name) {
  if (name == "delta" || name == "Delta" || name == "pd_delta") return PdSet::Delta;
  if (name == "lambda" || name == "Lambda" || name == "pd_lambda") return PdSet::Lambda;
  return std::nullopt;
}

bool pd_member(std::int64_t k) { return pd_level(k).has_value(); }

std::optional<int> pd_level(std::int64_t k) {
  if (residue(k, 2) == 0) return 0;
  const std::uint64_t mag = magnitude(k);
  // A hit at level n needs |k| >= 4^n - 1.
  for (int n = 1; n <= kMaxLevel && pow4(n) - 1 <= mag; ++n) {
    if (in_level(k, n)) return n;
  }
  return std::nullopt;
}

bool pd_lambda_member(std::int64_t k) {
  // Members of level n satisfy |k| >= 4^n - 1 or k = -4^n - 1.
  for (int n = 0; n <= kMaxLevel && pow4(n) <= magnitude(k) + 2; ++n) {
    const std::uint64_t q = pow4(n);
    if (residue(k, 2 * q) == q - 1) return true;
  }
  return false;
}

std::vector<std::int64_t> pd_enumerate(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("pd_enumerate: need lo <= hi");
  std::vector<std::int64_t> out;
  for (std::int64_t k = lo;; ++k) {
    if (pd_member(k)) out.push_back(k);
    if (k == hi) break;
  }
  return out;
}

std::vector<std::int64_t> pd_delta_n(int n, std::int64_t lo, std::int64_t hi) {
  if (n < 1) throw std::invalid_argument("pd_delta_n: need n >= 1");
  if (lo > hi) throw std::invalid_argument("pd_delta_n: need lo <= hi");
  if (n > kMaxLevel) return {};
  std::vector<std::int64_t> out;
  for (std::int64_t k = lo;; ++k) {
    if (residue(k, 2) != 0 && in_level(k, n)) out.push_back(k);
    if (k == hi) break;
  }
  return out;
}

double ModulatedComb::weight_at_index(std::int64_t m) const {
  const Rat turns = spacing * frequency;
  const std::uint64_t q = static_cast<std::uint64_t>(turns.den());
  const __int128 p_m = static_cast<__int128>(turns.num()) * m;
  __int128 r = p_m % static_cast<__int128>(q);
  if (r < 0) r += q;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q);
  return amplitude * std::cos(angle);
}

PeriodicComb ModulatedComb::expand() const {
  const std::int64_t period = (spacing * frequency).den();
  PeriodicComb out{spacing, std::vector<CAmp>(static_cast<std::size_t>(period))};
  for (std::int64_t m = 0; m < period; ++m) out.weights[static_cast<std::size_t>(m)] = weight_at_index(m);
  return out;
}

FormalCombSeries pd_formal_fourier(double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("pd_formal_fourier: eps must be >= 0");
  FormalCombSeries s;
  s.head = scale(lattice_comb(Rat(1, 2)), 0.5);
  s.damping = eps;
  s.rule.name = "pd-delta";
  s.rule.formula = "sum_{n>=1} cos(2 pi (4^n - 1) x) / (4 + eps)^n delta_{Z/(2*4^n)}";
  s.rule.term = [](int n, double damping) {
    if (n < 1 || n > kMaxLevel) throw std::out_of_range("pd term index out of range");
    const auto q = static_cast<std::int64_t>(pow4(n));
    return ModulatedComb{Rat(1, 2 * q), Rat(q - 1), std::pow(4.0 + damping, -n)};
  };
  return s;
}

FormalCombSeries with_damping(FormalCombSeries s, double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("with_damping: eps must be >= 0");
  s.damping = eps;
  return s;
}

MixedMeasure series_partial_sum(const FormalCombSeries& s, int n_terms, const Options& opt) {
  if (n_terms < 0) throw std::invalid_argument("series_partial_sum: need N >= 0");
  MixedMeasure sum = s.head;
  for (int n = 1; n <= n_terms; ++n) {
    PeriodicComb c = s.term(n).expand();
    for (auto& w : c.weights) w *= s.term_scale;
    sum.combs.push_back(std::move(c));
  }
  return canonicalize(std::move(sum), opt);
}

double total_variation(const MixedMeasure& m, const Rat& a, const Rat& b, const Options& opt) {
  const Restriction r = restrict(m, a, b, opt);
  double tv = std::abs(m.lebesgue) * (b - a).to_double();
  for (const auto& atom : r.atoms) tv += std::abs(atom.weight);
  return tv;
}

CAmp pair_with_gaussian(const MixedMeasure& m, double center, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("pair_with_gaussian: sigma must be positive");
  const double reach = 12.0 * sigma;
  CAmp total = m.lebesgue * sigma * std::sqrt(2.0 * std::numbers::pi);
  for (const auto& c : m.combs) {
    const double a = c.spacing.to_double();
    const auto lo = static_cast<std::int64_t>(std::ceil((center - reach) / a));
    const auto hi = static_cast<std::int64_t>(std::floor((center + reach) / a));
    for (std::int64_t k = lo; k <= hi; ++k) total += c.at_index(k) * gaussian(static_cast<double>(k) * a, center, sigma);
  }
  for (const auto& atom : m.finite) {
    const double x = atom.position.to_double();
    if (std::abs(x - center) <= reach) total += atom.weight * gaussian(x, center, sigma);
  }
  return total;
}

CAmp pair_with_gaussian(const FormalCombSeries& s, double center, double sigma) {
  CAmp total = pair_with_gaussian(s.head, center, sigma);
  const double reach = 12.0 * sigma;
  for (int n = 1;; ++n) {
    if (n > kMaxLevel) {
      throw NonConvergent("Gaussian pairing not certified after " + std::to_string(kMaxLevel) +
                          " terms (sigma " + std::to_string(sigma) + ")");
    }
    const ModulatedComb t = s.term(n);
    const double h = t.spacing.to_double();
    const double f = t.frequency.to_double();
    const double bound = std::abs(s.term_scale) * std::abs(t.amplitude) / h * dual_sum(1.0 / h, f, sigma);
    if (bound < 1e-15) break;

    const auto lo = static_cast<std::int64_t>(std::ceil((center - reach) / h));
    const auto hi = static_cast<std::int64_t>(std::floor((center + reach) / h));
    if (hi - lo > 200'000'000) {
      throw NonConvergent("Gaussian pairing term " + std::to_string(n) + " needs too many atoms");
    }
    double term = 0.0;
    for (std::int64_t k = lo; k <= hi; ++k) {
      term += t.weight_at_index(k) * gaussian(static_cast<double>(k) * h, center, sigma);
    }
    total += s.term_scale * term;
  }
  return total;
}

}  // namespace homometry
